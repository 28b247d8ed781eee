#include "modfo/formula.hpp"

#include <algorithm>

#include "modfo/error.hpp"

namespace modfo {

Formula Formula::atom(std::string relation, std::vector<Term> args) {
  return Formula(std::make_shared<const Node>(Atom{std::move(relation), std::move(args)}));
}

Formula Formula::equals(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(Equals{std::move(lhs), std::move(rhs)}));
}

Formula Formula::negation(Formula body) {
  return Formula(std::make_shared<const Node>(Not{std::move(body)}));
}

Formula Formula::binary(Conn op, Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Binary{op, std::move(lhs), std::move(rhs)}));
}

Formula Formula::quantified(Quant q, std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Quantified{q, std::move(var), std::move(body)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_.get() == b.node_.get()) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.index() != y.index()) return false;
  if (const auto* at = std::get_if<Formula::Atom>(&x)) {
    const auto& bt = std::get<Formula::Atom>(y);
    return at->relation == bt.relation && at->args == bt.args;
  }
  if (const auto* eq = std::get_if<Formula::Equals>(&x)) {
    const auto& be = std::get<Formula::Equals>(y);
    return eq->lhs == be.lhs && eq->rhs == be.rhs;
  }
  if (const auto* nt = std::get_if<Formula::Not>(&x)) {
    return nt->body == std::get<Formula::Not>(y).body;
  }
  if (const auto* bn = std::get_if<Formula::Binary>(&x)) {
    const auto& bb = std::get<Formula::Binary>(y);
    return bn->op == bb.op && bn->lhs == bb.lhs && bn->rhs == bb.rhs;
  }
  const auto& qa = std::get<Formula::Quantified>(x);
  const auto& qb = std::get<Formula::Quantified>(y);
  return qa.quant == qb.quant && qa.var == qb.var && qa.body == qb.body;
}

Measure measure(const Formula& f) {
  if (const auto* a = f.as_atom()) {
    std::uint64_t n = 1;
    for (const auto& t : a->args) n += t.node_count();
    return {n, 0};
  }
  if (const auto* e = f.as_equals()) {
    return {1 + e->lhs.node_count() + e->rhs.node_count(), 0};
  }
  if (const auto* n = f.as_not()) {
    Measure m = measure(n->body);
    return {m.nodes + 1, m.quantifier_depth};
  }
  if (const auto* b = f.as_binary()) {
    Measure l = measure(b->lhs);
    Measure r = measure(b->rhs);
    return {l.nodes + r.nodes + 1, std::max(l.quantifier_depth, r.quantifier_depth)};
  }
  const auto* q = f.as_quantified();
  Measure m = measure(q->body);
  return {m.nodes + 1, m.quantifier_depth + 1};
}

std::uint64_t count_quantifiers(const Formula& f) {
  if (f.as_atom() || f.as_equals()) return 0;
  if (const auto* n = f.as_not()) return count_quantifiers(n->body);
  if (const auto* b = f.as_binary()) return count_quantifiers(b->lhs) + count_quantifiers(b->rhs);
  return 1 + count_quantifiers(f.as_quantified()->body);
}

void check_well_formed(const Term& t, const Signature& sig) {
  if (t.is_lit() && !sig.allows_literals())
    throw Error("literal in literal-free signature " + sig.name());
  if (const auto* a = t.as_app()) {
    const SymbolInfo* fn = sig.function(a->function);
    if (!fn) throw Error("unknown function symbol " + a->function + " in signature " + sig.name());
    if (fn->arity != a->args.size())
      throw Error("function " + a->function + " expects " + std::to_string(fn->arity) +
                  " arguments, got " + std::to_string(a->args.size()));
    for (const auto& arg : a->args) check_well_formed(arg, sig);
  }
}

void check_well_formed(const Formula& f, const Signature& sig) {
  if (const auto* a = f.as_atom()) {
    const SymbolInfo* rel = sig.relation(a->relation);
    if (!rel) throw Error("unknown relation symbol " + a->relation + " in signature " + sig.name());
    if (rel->arity != a->args.size())
      throw Error("relation " + a->relation + " expects " + std::to_string(rel->arity) +
                  " arguments, got " + std::to_string(a->args.size()));
    for (const auto& arg : a->args) check_well_formed(arg, sig);
    return;
  }
  if (const auto* e = f.as_equals()) {
    check_well_formed(e->lhs, sig);
    check_well_formed(e->rhs, sig);
    return;
  }
  if (const auto* n = f.as_not()) return check_well_formed(n->body, sig);
  if (const auto* b = f.as_binary()) {
    check_well_formed(b->lhs, sig);
    check_well_formed(b->rhs, sig);
    return;
  }
  check_well_formed(f.as_quantified()->body, sig);
}

}  // namespace modfo
