#ifndef MODFO_INTERP_HPP
#define MODFO_INTERP_HPP

#include <map>
#include <string>
#include <vector>

#include "modfo/formula.hpp"
#include "modfo/signature.hpp"
#include "modfo/vars.hpp"

namespace modfo {

struct AtomRule {
  // Over the target signature; exactly the params occur free, in this order.
  Formula formula = Formula::equals(Term::var("a"), Term::var("a"));
  std::vector<std::string> params;
};

// A one-dimensional definitional interpretation of the source language in
// the target language: a universe formula with one designated free variable
// plus a defining formula per source relation symbol. Equality always maps
// to equality.
struct Interpretation {
  std::string name;
  Signature source;
  Signature target;
  Formula universe_formula = Formula::equals(Term::var("u"), Term::var("u"));
  std::string universe_var = "u";
  std::map<std::string, AtomRule, std::less<>> atom_map;
};

// Zero(t): the quantifier-free zero test `t mod t = t`.
Formula zero_qf(const Term& t);

// The interpretation of (ℕ₊, <, divides) inside (ℕ, mod):
//   universe(u)   := not (u mod u = u)
//   <(a, b)       := a mod b = a
//   divides(b, a) := (a mod b) mod (a mod b) = a mod b
Interpretation paper_interpretation();

// Maps every atom and the universe to themselves (universe `u = u`).
Interpretation identity_interpretation(const Signature& sig);

// Compiles a source formula into the target language: atoms are replaced by
// their defining formulas with arguments substituted capture-avoidingly,
// and quantifiers are relativized (∀x.φ becomes ∀x.(U(x) → φ'), ∃x.φ becomes
// ∃x.(U(x) ∧ φ')). Relation atoms must have variable arguments; formulas
// with defined function symbols must be flattened first.
Formula translate(const Interpretation& interp, const Formula& f, VariablePool& pool);

enum class DefKind { Function, Relation };

// A candidate definition of a symbol by a graph formula. For functions the
// parameter list is (inputs..., output); for relations it is the relation's
// argument list. `arity` is the defined symbol's own arity.
struct Definition {
  std::string name;
  DefKind kind = DefKind::Relation;
  unsigned arity = 2;
  std::vector<std::string> params;
  Formula graph = Formula::equals(Term::var("x"), Term::var("x"));
  Signature over;
};

// Eliminates a defined function symbol from a formula: each application
// f(t...) inside an atom is replaced, innermost first, by a fresh variable w
// with `exists w. (graph(t..., w) & atom[w/f(t...)])` wrapped at the atom
// position. The result contains no occurrence of the defined symbol.
Formula expand_definition(const Definition& def, const Formula& f, VariablePool& pool);

// inner ∘ outer: requires outer.target = inner.source. The result translates
// like applying outer then inner; its universe is
// translate(inner, outer.universe) ∧ inner.universe and its atom map is
// outer's map translated through inner.
Interpretation compose(const Interpretation& outer, const Interpretation& inner);

// Text manifest: one `symbol(params) := formula` line for the universe and
// each atom-map entry, in declared source-signature order.
std::string write_manifest(const Interpretation& interp);

// Reads a manifest. Blank lines and `#` comments are skipped. Optional
// `source: <name>` / `target: <name>` directives pick builtin signatures;
// the defaults are posdiv and mod.
Interpretation read_manifest(const std::string& text, const std::string& name);

}  // namespace modfo

#endif
