#include "modfo/structure.hpp"

#include <numeric>

#include "modfo/error.hpp"
#include "modfo/print.hpp"

namespace modfo {

std::uint64_t mod_op(std::uint64_t x, std::uint64_t y) { return y == 0 ? x : x % y; }

namespace {

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t bound) {
  if (bound < lo) return {};
  std::vector<std::uint64_t> out(bound - lo + 1);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

Structure make_mod() {
  Structure s;
  s.name = "mod";
  s.signature = mod_signature();
  s.universe = [](std::uint64_t) { return true; };
  s.enumerate = [](std::uint64_t bound) { return range(0, bound); };
  s.functions["mod"] = [](std::uint64_t x, std::uint64_t y) { return mod_op(x, y); };
  return s;
}

bool divides_nat(std::uint64_t d, std::uint64_t n) { return n == 0 || (d != 0 && n % d == 0); }

Structure make_posdiv() {
  Structure s;
  s.name = "posdiv";
  s.signature = posdiv_signature();
  s.universe = [](std::uint64_t v) { return v >= 1; };
  s.enumerate = [](std::uint64_t bound) { return range(1, bound); };
  s.relations["<"] = [](std::uint64_t a, std::uint64_t b) { return a < b; };
  s.relations["divides"] = divides_nat;
  return s;
}

Structure make_natfull() {
  Structure s;
  s.name = "natfull";
  s.signature = natfull_signature();
  s.universe = [](std::uint64_t v) { return v >= 1; };
  s.enumerate = [](std::uint64_t bound) { return range(1, bound); };
  s.relations["<"] = [](std::uint64_t a, std::uint64_t b) { return a < b; };
  s.relations["divides"] = divides_nat;
  s.relations["succ"] = [](std::uint64_t x, std::uint64_t y) { return x == y + 1; };
  return s;
}

// Scoped bindings as a stack: innermost binding of a name wins. Avoids map
// churn in the quantifier loop.
struct Env {
  std::vector<std::pair<std::string, std::uint64_t>> entries;

  std::uint64_t lookup(const std::string& name) const {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
      if (it->first == name) return it->second;
    throw EvalError("unbound variable " + name);
  }
};

struct Evaluator {
  const Structure& s;
  std::uint64_t bound;
  std::uint64_t visited = 0;
  std::vector<std::uint64_t> domain_;
  bool domain_ready = false;

  // Quantifier-free formulas never touch the domain, so build it on demand.
  const std::vector<std::uint64_t>& domain() {
    if (!domain_ready) {
      domain_ = s.enumerate(bound);
      domain_ready = true;
    }
    return domain_;
  }

  std::uint64_t term(const Term& t, const Env& env) {
    if (const auto* v = t.as_var()) return env.lookup(v->name);
    if (const auto* l = t.as_lit()) return l->value;
    const auto* a = t.as_app();
    auto fn = s.functions.find(a->function);
    if (fn == s.functions.end())
      throw EvalError("structure " + s.name + " has no function " + a->function);
    if (a->args.size() != 2)
      throw EvalError("function " + a->function + " applied to " +
                      std::to_string(a->args.size()) + " arguments");
    return fn->second(term(a->args[0], env), term(a->args[1], env));
  }

  bool formula(const Formula& f, Env& env) {
    if (const auto* a = f.as_atom()) {
      auto rel = s.relations.find(a->relation);
      if (rel == s.relations.end())
        throw EvalError("structure " + s.name + " has no relation " + a->relation);
      if (a->args.size() != 2)
        throw EvalError("relation " + a->relation + " applied to " +
                        std::to_string(a->args.size()) + " arguments");
      return rel->second(term(a->args[0], env), term(a->args[1], env));
    }
    if (const auto* e = f.as_equals()) return term(e->lhs, env) == term(e->rhs, env);
    if (const auto* n = f.as_not()) return !formula(n->body, env);
    if (const auto* b = f.as_binary()) {
      switch (b->op) {
        case Conn::And: return formula(b->lhs, env) && formula(b->rhs, env);
        case Conn::Or: return formula(b->lhs, env) || formula(b->rhs, env);
        case Conn::Implies: return !formula(b->lhs, env) || formula(b->rhs, env);
        case Conn::Iff: return formula(b->lhs, env) == formula(b->rhs, env);
      }
    }
    const auto* q = f.as_quantified();
    bool is_forall = q->quant == Quant::Forall;
    env.entries.emplace_back(q->var, 0);
    bool result = is_forall;
    for (std::uint64_t value : domain()) {
      env.entries.back().second = value;
      ++visited;
      bool v = formula(q->body, env);
      if (is_forall ? !v : v) {
        result = !is_forall;
        break;
      }
    }
    env.entries.pop_back();
    return result;
  }
};

}  // namespace

const Structure& builtin_mod() {
  static const Structure s = make_mod();
  return s;
}

const Structure& builtin_posdiv() {
  static const Structure s = make_posdiv();
  return s;
}

const Structure& builtin_natfull() {
  static const Structure s = make_natfull();
  return s;
}

const Structure* builtin_structure(std::string_view name) {
  if (name == "mod") return &builtin_mod();
  if (name == "posdiv") return &builtin_posdiv();
  if (name == "natfull") return &builtin_natfull();
  return nullptr;
}

EvalReport eval(const Formula& f, const Structure& s, const Assignment& assignment,
                std::uint64_t bound) {
  Evaluator ev{s, bound};
  Env env;
  env.entries.reserve(assignment.bindings.size() + 8);
  for (const auto& [name, value] : assignment.bindings) {
    if (!s.universe(value))
      throw EvalError("assignment binds " + name + " = " + std::to_string(value) +
                      " outside the universe of " + s.name);
    env.entries.emplace_back(name, value);
  }
  bool value = ev.formula(f, env);
  return {value, bound, ev.visited};
}

}  // namespace modfo
