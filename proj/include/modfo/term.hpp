#ifndef MODFO_TERM_HPP
#define MODFO_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace modfo {

// An immutable first-order term. Copies share the underlying node, so terms
// are cheap to pass by value and safe to share across threads.
class Term {
public:
  struct Var {
    std::string name;
  };
  struct Lit {
    std::uint64_t value = 0;
  };
  struct App {
    std::string function;
    std::vector<Term> args;
  };
  using Node = std::variant<Var, Lit, App>;

  static Term var(std::string name);
  static Term lit(std::uint64_t value);
  static Term app(std::string function, std::vector<Term> args);

  const Node& node() const { return *node_; }

  bool is_var() const { return std::holds_alternative<Var>(*node_); }
  bool is_lit() const { return std::holds_alternative<Lit>(*node_); }
  bool is_app() const { return std::holds_alternative<App>(*node_); }

  const Var* as_var() const { return std::get_if<Var>(node_.get()); }
  const Lit* as_lit() const { return std::get_if<Lit>(node_.get()); }
  const App* as_app() const { return std::get_if<App>(node_.get()); }

  std::uint64_t node_count() const;

  // Exact structural equality; variable names are compared verbatim.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace modfo

#endif
