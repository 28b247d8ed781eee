#include "modfo/interp.hpp"

#include <optional>
#include <sstream>

#include "modfo/error.hpp"
#include "modfo/parse.hpp"
#include "modfo/print.hpp"
#include "modfo/structure.hpp"

namespace modfo {

Formula zero_qf(const Term& t) {
  return Formula::equals(Term::app("mod", {t, t}), t);
}

Interpretation paper_interpretation() {
  Interpretation it;
  it.name = "paper";
  it.source = posdiv_signature();
  it.target = mod_signature();
  it.universe_var = "u";
  it.universe_formula = Formula::negation(zero_qf(Term::var("u")));
  Term a = Term::var("a");
  Term b = Term::var("b");
  // a < b iff a mod b = a.
  it.atom_map["<"] = {Formula::equals(Term::app("mod", {a, b}), a), {"a", "b"}};
  // b divides a iff a mod b is zero; the zero test stays quantifier-free.
  it.atom_map["divides"] = {zero_qf(Term::app("mod", {a, b})), {"b", "a"}};
  return it;
}

Interpretation identity_interpretation(const Signature& sig) {
  Interpretation it;
  it.name = "identity-" + sig.name();
  it.source = sig;
  it.target = sig;
  it.universe_var = "u";
  it.universe_formula = Formula::equals(Term::var("u"), Term::var("u"));
  for (const auto& rel : sig.relations()) {
    std::vector<std::string> params;
    std::vector<Term> args;
    for (unsigned i = 0; i < rel.arity; ++i) {
      params.push_back(std::string(1, static_cast<char>('a' + i)));
      args.push_back(Term::var(params.back()));
    }
    it.atom_map[rel.name] = {Formula::atom(rel.name, std::move(args)), std::move(params)};
  }
  return it;
}

namespace {

struct Translator {
  const Interpretation& interp;

  Formula go(const Formula& f) const {
    if (const auto* a = f.as_atom()) {
      auto rule = interp.atom_map.find(a->relation);
      if (rule == interp.atom_map.end())
        throw InterpError("interpretation " + interp.name + " has no mapping for relation " +
                          a->relation);
      if (rule->second.params.size() != a->args.size())
        throw InterpError("relation " + a->relation + " arity mismatch in interpretation " +
                          interp.name);
      std::vector<std::pair<std::string, Term>> subs;
      subs.reserve(a->args.size());
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!a->args[i].is_var())
          throw InterpError("non-variable argument " + print(a->args[i]) + " in atom " +
                            a->relation + "; expand definitions first");
        subs.emplace_back(rule->second.params[i], a->args[i]);
      }
      return substitute_all(rule->second.formula, subs);
    }
    if (const auto* e = f.as_equals()) {
      // Equality maps to equality. Terms pass through and must make sense in
      // the target language.
      check_well_formed(e->lhs, interp.target);
      check_well_formed(e->rhs, interp.target);
      return f;
    }
    if (const auto* n = f.as_not()) return Formula::negation(go(n->body));
    if (const auto* b = f.as_binary()) return Formula::binary(b->op, go(b->lhs), go(b->rhs));
    const auto* q = f.as_quantified();
    Formula guard = substitute(interp.universe_formula, interp.universe_var, Term::var(q->var));
    Formula body = go(q->body);
    Formula relativized = q->quant == Quant::Forall
                              ? Formula::implies(std::move(guard), std::move(body))
                              : Formula::conj(std::move(guard), std::move(body));
    return Formula::quantified(q->quant, q->var, std::move(relativized));
  }
};

}  // namespace

Formula translate(const Interpretation& interp, const Formula& f, VariablePool& pool) {
  pool.reserve_all(f);
  return Translator{interp}.go(f);
}

namespace {

bool term_contains_app(const Term& t, const std::string& fn) {
  if (const auto* a = t.as_app()) {
    if (a->function == fn) return true;
    for (const auto& arg : a->args)
      if (term_contains_app(arg, fn)) return true;
  }
  return false;
}

bool formula_contains_app(const Formula& f, const std::string& fn) {
  if (const auto* a = f.as_atom()) {
    for (const auto& t : a->args)
      if (term_contains_app(t, fn)) return true;
    return false;
  }
  if (const auto* e = f.as_equals())
    return term_contains_app(e->lhs, fn) || term_contains_app(e->rhs, fn);
  if (const auto* n = f.as_not()) return formula_contains_app(n->body, fn);
  if (const auto* b = f.as_binary())
    return formula_contains_app(b->lhs, fn) || formula_contains_app(b->rhs, fn);
  return formula_contains_app(f.as_quantified()->body, fn);
}

// Replaces the leftmost innermost application of `fn` by `w`, capturing its
// argument list. Argument subterms are searched before the application
// itself, so the captured arguments contain no further occurrence.
Term replace_innermost(const Term& t, const std::string& fn, const Term& w,
                       std::optional<std::vector<Term>>& captured, bool& done) {
  if (done) return t;
  const auto* a = t.as_app();
  if (!a) return t;
  std::vector<Term> args;
  args.reserve(a->args.size());
  for (const auto& arg : a->args) args.push_back(replace_innermost(arg, fn, w, captured, done));
  if (!done && a->function == fn) {
    captured = a->args;
    done = true;
    return w;
  }
  return Term::app(a->function, std::move(args));
}

struct Expander {
  const Definition& def;
  VariablePool& pool;

  Formula rewrite_atomic(const Formula& f) const {
    bool has = false;
    if (const auto* a = f.as_atom()) {
      for (const auto& t : a->args) has = has || term_contains_app(t, def.name);
    } else {
      const auto* e = f.as_equals();
      has = term_contains_app(e->lhs, def.name) || term_contains_app(e->rhs, def.name);
    }
    if (!has) return f;

    std::string w = pool.fresh("w");
    Term wvar = Term::var(w);
    std::optional<std::vector<Term>> captured;
    bool done = false;
    Formula reduced = [&] {
      if (const auto* a = f.as_atom()) {
        std::vector<Term> args;
        args.reserve(a->args.size());
        for (const auto& t : a->args)
          args.push_back(replace_innermost(t, def.name, wvar, captured, done));
        return Formula::atom(a->relation, std::move(args));
      }
      const auto* e = f.as_equals();
      Term lhs = replace_innermost(e->lhs, def.name, wvar, captured, done);
      Term rhs = replace_innermost(e->rhs, def.name, wvar, captured, done);
      return Formula::equals(std::move(lhs), std::move(rhs));
    }();

    if (captured->size() != def.arity)
      throw InterpError("defined function " + def.name + " expects " +
                        std::to_string(def.arity) + " arguments, got " +
                        std::to_string(captured->size()));
    std::vector<std::pair<std::string, Term>> subs;
    for (std::size_t i = 0; i < def.arity; ++i)
      subs.emplace_back(def.params[i], (*captured)[i]);
    subs.emplace_back(def.params.back(), wvar);
    Formula graph = substitute_all(def.graph, subs);
    return Formula::exists(std::move(w),
                           Formula::conj(std::move(graph), rewrite_atomic(reduced)));
  }

  Formula go(const Formula& f) const {
    if (f.as_atom() || f.as_equals()) return rewrite_atomic(f);
    if (const auto* n = f.as_not()) return Formula::negation(go(n->body));
    if (const auto* b = f.as_binary()) return Formula::binary(b->op, go(b->lhs), go(b->rhs));
    const auto* q = f.as_quantified();
    return Formula::quantified(q->quant, q->var, go(q->body));
  }
};

}  // namespace

Formula expand_definition(const Definition& def, const Formula& f, VariablePool& pool) {
  if (def.kind != DefKind::Function)
    throw InterpError("expand_definition needs a function definition, got relation " + def.name);
  if (def.params.size() != def.arity + 1)
    throw InterpError("function definition " + def.name + " needs " +
                      std::to_string(def.arity + 1) + " parameters (inputs then output)");
  if (formula_contains_app(def.graph, def.name))
    throw InterpError("cyclic definition: " + def.name + " occurs in its own graph formula");
  pool.reserve_all(f);
  pool.reserve_all(def.graph);
  return Expander{def, pool}.go(f);
}

Interpretation compose(const Interpretation& outer, const Interpretation& inner) {
  if (!(outer.target == inner.source))
    throw InterpError("cannot compose " + outer.name + " with " + inner.name +
                      ": target signature " + outer.target.name() +
                      " does not match source signature " + inner.source.name());
  Interpretation out;
  out.name = outer.name + ">>" + inner.name;
  out.source = outer.source;
  out.target = inner.target;
  out.universe_var = outer.universe_var;

  VariablePool pool;
  Formula outer_universe_in_target = translate(inner, outer.universe_formula, pool);
  Formula inner_universe = inner.universe_var == outer.universe_var
                               ? inner.universe_formula
                               : substitute(inner.universe_formula, inner.universe_var,
                                            Term::var(outer.universe_var));
  out.universe_formula =
      Formula::conj(std::move(outer_universe_in_target), std::move(inner_universe));

  for (const auto& [rel, rule] : outer.atom_map) {
    VariablePool entry_pool;
    out.atom_map[rel] = {translate(inner, rule.formula, entry_pool), rule.params};
  }
  return out;
}

namespace {

std::string param_list(const std::vector<std::string>& params) {
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i];
  }
  return out + ")";
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const Signature& builtin_signature_by_name(const std::string& name, int line_no) {
  if (const Structure* s = builtin_structure(name)) return s->signature;
  throw InterpError("manifest line " + std::to_string(line_no) + ": unknown structure " + name);
}

void require_exact_free_vars(const Formula& f, const std::vector<std::string>& params,
                             const std::string& what) {
  std::set<std::string> expected(params.begin(), params.end());
  if (expected.size() != params.size())
    throw InterpError(what + ": duplicate parameter name");
  if (free_vars(f) != expected)
    throw InterpError(what + ": free variables do not match the declared parameters");
}

}  // namespace

std::string write_manifest(const Interpretation& interp) {
  std::ostringstream out;
  out << "universe(" << interp.universe_var << ") := " << print(interp.universe_formula) << "\n";
  for (const auto& rel : interp.source.relations()) {
    auto rule = interp.atom_map.find(rel.name);
    if (rule == interp.atom_map.end())
      throw InterpError("interpretation " + interp.name + " has no mapping for relation " +
                        rel.name);
    out << rel.name << param_list(rule->second.params) << " := " << print(rule->second.formula)
        << "\n";
  }
  return out.str();
}

Interpretation read_manifest(const std::string& text, const std::string& name) {
  Interpretation it;
  it.name = name;
  it.source = posdiv_signature();
  it.target = mod_signature();
  bool saw_universe = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<std::tuple<std::string, std::vector<std::string>, std::string, int>> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("source:", 0) == 0) {
      it.source = builtin_signature_by_name(trim(line.substr(7)), line_no);
      continue;
    }
    if (line.rfind("target:", 0) == 0) {
      it.target = builtin_signature_by_name(trim(line.substr(7)), line_no);
      continue;
    }
    std::size_t open = line.find('(');
    std::size_t close = line.find(')', open == std::string::npos ? 0 : open);
    std::size_t def = line.find(":=", close == std::string::npos ? 0 : close);
    if (open == std::string::npos || close == std::string::npos || def == std::string::npos)
      throw InterpError("manifest line " + std::to_string(line_no) +
                        ": expected symbol(params) := formula");
    std::string symbol = trim(line.substr(0, open));
    std::vector<std::string> params;
    std::string inside = line.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= inside.size()) {
      std::size_t comma = inside.find(',', start);
      std::string p = trim(inside.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start));
      if (!p.empty()) params.push_back(p);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    entries.emplace_back(symbol, std::move(params), trim(line.substr(def + 2)), line_no);
  }

  for (const auto& [symbol, params, body, ln] : entries) {
    Formula f = [&, ln = ln] {
      try {
        return parse(body, it.target);
      } catch (const ParseError& e) {
        throw InterpError("manifest line " + std::to_string(ln) + ": " + e.what());
      }
    }();
    if (symbol == "universe") {
      if (params.size() != 1)
        throw InterpError("manifest line " + std::to_string(ln) +
                          ": universe takes exactly one parameter");
      require_exact_free_vars(f, params, "universe");
      it.universe_var = params[0];
      it.universe_formula = f;
      saw_universe = true;
      continue;
    }
    const SymbolInfo* rel = it.source.relation(symbol);
    if (!rel)
      throw InterpError("manifest line " + std::to_string(ln) + ": " + symbol +
                        " is not a relation of signature " + it.source.name());
    if (params.size() != rel->arity)
      throw InterpError("manifest line " + std::to_string(ln) + ": " + symbol + " expects " +
                        std::to_string(rel->arity) + " parameters");
    require_exact_free_vars(f, params, symbol);
    it.atom_map[symbol] = {f, params};
  }

  if (!saw_universe) throw InterpError("manifest is missing the universe formula");
  for (const auto& rel : it.source.relations())
    if (!it.atom_map.count(rel.name))
      throw InterpError("manifest is missing an entry for relation " + rel.name);
  return it;
}

}  // namespace modfo
