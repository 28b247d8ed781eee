#include "modfo/vars.hpp"

#include "modfo/error.hpp"

namespace modfo {

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (const auto* v = t.as_var()) {
    out.insert(v->name);
  } else if (const auto* a = t.as_app()) {
    for (const auto& arg : a->args) collect_term_vars(arg, out);
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (const auto* a = f.as_atom()) {
    std::set<std::string> vars;
    for (const auto& t : a->args) collect_term_vars(t, vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (const auto* e = f.as_equals()) {
    std::set<std::string> vars;
    collect_term_vars(e->lhs, vars);
    collect_term_vars(e->rhs, vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (const auto* n = f.as_not()) return collect_free(n->body, bound, out);
  if (const auto* b = f.as_binary()) {
    collect_free(b->lhs, bound, out);
    collect_free(b->rhs, bound, out);
    return;
  }
  const auto* q = f.as_quantified();
  bool was_bound = bound.count(q->var) > 0;
  bound.insert(q->var);
  collect_free(q->body, bound, out);
  if (!was_bound) bound.erase(q->var);
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  if (const auto* a = f.as_atom()) {
    for (const auto& t : a->args) collect_term_vars(t, out);
    return;
  }
  if (const auto* e = f.as_equals()) {
    collect_term_vars(e->lhs, out);
    collect_term_vars(e->rhs, out);
    return;
  }
  if (const auto* n = f.as_not()) return collect_all(n->body, out);
  if (const auto* b = f.as_binary()) {
    collect_all(b->lhs, out);
    collect_all(b->rhs, out);
    return;
  }
  const auto* q = f.as_quantified();
  out.insert(q->var);
  collect_all(q->body, out);
}

Term subst_term(const Term& t, const std::string& var, const Term& replacement) {
  if (const auto* v = t.as_var()) return v->name == var ? replacement : t;
  if (t.as_lit()) return t;
  const auto* a = t.as_app();
  std::vector<Term> args;
  args.reserve(a->args.size());
  for (const auto& arg : a->args) args.push_back(subst_term(arg, var, replacement));
  return Term::app(a->function, std::move(args));
}

// Smallest base_k, k >= 1, avoiding every name in `taken`.
std::string fresh_against(const std::string& base, const std::set<std::string>& taken) {
  for (std::uint64_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_names(const Term& t) { return free_vars(t); }

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
  if (const auto* a = f.as_atom()) {
    std::vector<Term> args;
    args.reserve(a->args.size());
    for (const auto& t : a->args) args.push_back(subst_term(t, var, replacement));
    return Formula::atom(a->relation, std::move(args));
  }
  if (const auto* e = f.as_equals()) {
    return Formula::equals(subst_term(e->lhs, var, replacement),
                           subst_term(e->rhs, var, replacement));
  }
  if (const auto* n = f.as_not()) return Formula::negation(substitute(n->body, var, replacement));
  if (const auto* b = f.as_binary()) {
    return Formula::binary(b->op, substitute(b->lhs, var, replacement),
                           substitute(b->rhs, var, replacement));
  }
  const auto* q = f.as_quantified();
  if (q->var == var) return f;  // var is shadowed below here
  std::set<std::string> body_free = free_vars(q->body);
  if (!body_free.count(var)) return f;  // no free occurrence to replace
  std::set<std::string> repl_free = free_vars(replacement);
  if (repl_free.count(q->var)) {
    // The binder would capture a variable of the replacement: rename it.
    std::set<std::string> taken = all_names(q->body);
    taken.insert(repl_free.begin(), repl_free.end());
    taken.insert(var);
    std::string renamed = fresh_against(q->var, taken);
    Formula body = substitute(q->body, q->var, Term::var(renamed));
    return Formula::quantified(q->quant, renamed, substitute(body, var, replacement));
  }
  return Formula::quantified(q->quant, q->var, substitute(q->body, var, replacement));
}

Formula substitute_all(const Formula& f,
                       const std::vector<std::pair<std::string, Term>>& subs) {
  // Route through unique temporaries so the pairs apply in parallel even when
  // a replacement mentions another substituted variable.
  std::set<std::string> taken = all_names(f);
  for (const auto& [v, t] : subs) {
    taken.insert(v);
    const auto names = all_names(t);
    taken.insert(names.begin(), names.end());
  }
  Formula staged = f;
  std::vector<std::string> temps;
  temps.reserve(subs.size());
  for (const auto& [v, t] : subs) {
    std::string temp = fresh_against("tmp", taken);
    taken.insert(temp);
    temps.push_back(temp);
    staged = substitute(staged, v, Term::var(temp));
  }
  for (std::size_t i = 0; i < subs.size(); ++i)
    staged = substitute(staged, temps[i], subs[i].second);
  return staged;
}

void VariablePool::reserve_all(const Formula& f) {
  const auto names = all_names(f);
  reserved_.insert(names.begin(), names.end());
}

std::string VariablePool::fresh(const std::string& base) {
  for (std::uint64_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (reserved_.insert(candidate).second) {
      ++issued_;
      return candidate;
    }
  }
}

}  // namespace modfo
