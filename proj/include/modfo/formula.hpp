#ifndef MODFO_FORMULA_HPP
#define MODFO_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "modfo/signature.hpp"
#include "modfo/term.hpp"

namespace modfo {

enum class Conn { And, Or, Implies, Iff };
enum class Quant { Forall, Exists };

// An immutable first-order formula over a single-sorted signature. Copies
// share the underlying node.
class Formula {
public:
  struct Atom {
    std::string relation;
    std::vector<Term> args;
  };
  struct Equals {
    Term lhs;
    Term rhs;
  };
  struct Not;         // { Formula body; }
  struct Binary;      // { Conn op; Formula lhs, rhs; }
  struct Quantified;  // { Quant quant; std::string var; Formula body; }
  using Node = std::variant<Atom, Equals, Not, Binary, Quantified>;

  static Formula atom(std::string relation, std::vector<Term> args);
  static Formula equals(Term lhs, Term rhs);
  static Formula negation(Formula body);
  static Formula binary(Conn op, Formula lhs, Formula rhs);
  static Formula conj(Formula lhs, Formula rhs) { return binary(Conn::And, std::move(lhs), std::move(rhs)); }
  static Formula disj(Formula lhs, Formula rhs) { return binary(Conn::Or, std::move(lhs), std::move(rhs)); }
  static Formula implies(Formula lhs, Formula rhs) { return binary(Conn::Implies, std::move(lhs), std::move(rhs)); }
  static Formula iff(Formula lhs, Formula rhs) { return binary(Conn::Iff, std::move(lhs), std::move(rhs)); }
  static Formula quantified(Quant q, std::string var, Formula body);
  static Formula forall(std::string var, Formula body) { return quantified(Quant::Forall, std::move(var), std::move(body)); }
  static Formula exists(std::string var, Formula body) { return quantified(Quant::Exists, std::move(var), std::move(body)); }

  const Node& node() const;

  const Atom* as_atom() const;
  const Equals* as_equals() const;
  const Not* as_not() const;
  const Binary* as_binary() const;
  const Quantified* as_quantified() const;

  // Exact structural equality, no alpha-conversion: `forall x. x = x` and
  // `forall y. y = y` are different formulas.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Not {
  Formula body;
};
struct Formula::Binary {
  Conn op;
  Formula lhs;
  Formula rhs;
};
struct Formula::Quantified {
  Quant quant;
  std::string var;
  Formula body;
};

inline const Formula::Node& Formula::node() const { return *node_; }
inline const Formula::Atom* Formula::as_atom() const { return std::get_if<Atom>(node_.get()); }
inline const Formula::Equals* Formula::as_equals() const { return std::get_if<Equals>(node_.get()); }
inline const Formula::Not* Formula::as_not() const { return std::get_if<Not>(node_.get()); }
inline const Formula::Binary* Formula::as_binary() const { return std::get_if<Binary>(node_.get()); }
inline const Formula::Quantified* Formula::as_quantified() const { return std::get_if<Quantified>(node_.get()); }

struct Measure {
  std::uint64_t nodes = 0;             // all AST nodes, terms included
  std::uint64_t quantifier_depth = 0;  // maximum quantifier nesting

  friend bool operator==(const Measure&, const Measure&) = default;
};

Measure measure(const Formula& f);

std::uint64_t count_quantifiers(const Formula& f);

// Throws Error if an atom uses a symbol or arity the signature does not
// declare, or a literal appears in a literal-free signature.
void check_well_formed(const Formula& f, const Signature& sig);
void check_well_formed(const Term& t, const Signature& sig);

}  // namespace modfo

#endif
