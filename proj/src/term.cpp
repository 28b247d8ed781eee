#include "modfo/term.hpp"

namespace modfo {

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Var{std::move(name)}));
}

Term Term::lit(std::uint64_t value) {
  return Term(std::make_shared<const Node>(Lit{value}));
}

Term Term::app(std::string function, std::vector<Term> args) {
  return Term(std::make_shared<const Node>(App{std::move(function), std::move(args)}));
}

std::uint64_t Term::node_count() const {
  if (const auto* a = as_app()) {
    std::uint64_t n = 1;
    for (const auto& arg : a->args) n += arg.node_count();
    return n;
  }
  return 1;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_.get() == b.node_.get()) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.index() != y.index()) return false;
  if (const auto* v = std::get_if<Term::Var>(&x)) return v->name == std::get<Term::Var>(y).name;
  if (const auto* l = std::get_if<Term::Lit>(&x)) return l->value == std::get<Term::Lit>(y).value;
  const auto& f = std::get<Term::App>(x);
  const auto& g = std::get<Term::App>(y);
  return f.function == g.function && f.args == g.args;
}

}  // namespace modfo
