#include "modfo/print.hpp"

#include <sstream>

namespace modfo {

namespace {

// Precedence levels, loosest first: iff 0, implies 1, or 2, and 3,
// not/quantifier 4, atom 5.
int prec(const Formula& f) {
  if (f.as_atom() || f.as_equals()) return 5;
  if (f.as_not() || f.as_quantified()) return 4;
  switch (f.as_binary()->op) {
    case Conn::Iff: return 0;
    case Conn::Implies: return 1;
    case Conn::Or: return 2;
    case Conn::And: return 3;
  }
  return 0;
}

void emit_term(std::ostream& out, const Term& t, bool right_of_mod) {
  if (const auto* v = t.as_var()) {
    out << v->name;
    return;
  }
  if (const auto* l = t.as_lit()) {
    out << l->value;
    return;
  }
  const auto* a = t.as_app();
  if (a->args.size() != 2) {
    out << a->function << '(';
    for (std::size_t i = 0; i < a->args.size(); ++i) {
      if (i) out << ", ";
      emit_term(out, a->args[i], false);
    }
    out << ')';
    return;
  }
  // mod chains are left-associative, so only a right operand needs parens.
  if (right_of_mod) out << '(';
  emit_term(out, a->args[0], false);
  out << ' ' << a->function << ' ';
  emit_term(out, a->args[1], true);
  if (right_of_mod) out << ')';
}

bool infix_relation(const std::string& name) { return name == "<" || name == "divides"; }

void emit(std::ostream& out, const Formula& f, int required, bool tail);

void emit_inner(std::ostream& out, const Formula& f, bool tail) {
  if (const auto* a = f.as_atom()) {
    if (infix_relation(a->relation)) {
      emit_term(out, a->args[0], false);
      out << ' ' << a->relation << ' ';
      emit_term(out, a->args[1], false);
    } else {
      out << a->relation << '(';
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (i) out << ", ";
        emit_term(out, a->args[i], false);
      }
      out << ')';
    }
    return;
  }
  if (const auto* e = f.as_equals()) {
    emit_term(out, e->lhs, false);
    out << " = ";
    emit_term(out, e->rhs, false);
    return;
  }
  if (const auto* n = f.as_not()) {
    out << "not (";
    emit(out, n->body, 0, true);
    out << ')';
    return;
  }
  if (const auto* b = f.as_binary()) {
    switch (b->op) {
      case Conn::Iff:
        emit(out, b->lhs, 0, false);
        out << " <-> ";
        emit(out, b->rhs, 1, tail);
        return;
      case Conn::Implies:
        emit(out, b->lhs, 2, false);
        out << " -> ";
        emit(out, b->rhs, 1, tail);
        return;
      case Conn::Or:
        emit(out, b->lhs, 2, false);
        out << " or ";
        emit(out, b->rhs, 3, tail);
        return;
      case Conn::And:
        emit(out, b->lhs, 3, false);
        out << " & ";
        emit(out, b->rhs, 4, tail);
        return;
    }
  }
  const auto* q = f.as_quantified();
  out << (q->quant == Quant::Forall ? "forall " : "exists ") << q->var << ". ";
  emit(out, q->body, 0, true);
}

void emit(std::ostream& out, const Formula& f, int required, bool tail) {
  // A quantifier body extends as far right as possible, so a quantified
  // subformula needs parens whenever more tokens follow it.
  bool parens = prec(f) < required || (f.as_quantified() && !tail);
  if (parens) {
    out << '(';
    emit_inner(out, f, true);
    out << ')';
  } else {
    emit_inner(out, f, tail);
  }
}

}  // namespace

std::string print(const Term& t) {
  std::ostringstream out;
  emit_term(out, t, false);
  return out.str();
}

std::string print(const Formula& f) {
  std::ostringstream out;
  emit(out, f, 0, true);
  return out.str();
}

}  // namespace modfo
