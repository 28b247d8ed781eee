#ifndef MODFO_STRUCTURE_HPP
#define MODFO_STRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modfo/formula.hpp"
#include "modfo/signature.hpp"

namespace modfo {

// The remainder operation with the total-definition convention n mod 0 = n.
std::uint64_t mod_op(std::uint64_t x, std::uint64_t y);

struct Assignment {
  std::map<std::string, std::uint64_t> bindings;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct EvalReport {
  bool value = false;
  std::uint64_t bound = 0;
  // Values enumerated at quantifiers, summed over every quantifier entry
  // (not complete tuples). Short-circuiting stops the count early.
  std::uint64_t assignments_visited = 0;
};

// An interpreted structure over an initial segment of the naturals. All
// tables are immutable after construction; evaluation is pure.
struct Structure {
  std::string name;
  Signature signature;
  std::function<bool(std::uint64_t)> universe;
  // Ordered elements of universe ∩ [0, bound].
  std::function<std::vector<std::uint64_t>(std::uint64_t)> enumerate;
  std::map<std::string, std::function<std::uint64_t(std::uint64_t, std::uint64_t)>, std::less<>> functions;
  std::map<std::string, std::function<bool(std::uint64_t, std::uint64_t)>, std::less<>> relations;
};

// (ℕ, mod): every natural, one binary function.
const Structure& builtin_mod();

// (ℕ₊, <, divides): positive naturals, strict order and divisibility.
const Structure& builtin_posdiv();

// (ℕ₊, <, divides, succ): the oracle structure; succ(x, y) iff x = y + 1.
const Structure& builtin_natfull();

// Lookup by stable CLI identifier ("mod", "posdiv", "natfull"); null if none.
const Structure* builtin_structure(std::string_view name);

// Bounded Tarskian evaluation: quantifiers range over s.enumerate(bound),
// equality is value equality, ∃ stops at the first witness and ∀ at the
// first refutation. Requires free_vars(f) ⊆ assignment and every binding in
// the structure's universe.
EvalReport eval(const Formula& f, const Structure& s, const Assignment& assignment,
                std::uint64_t bound);

}  // namespace modfo

#endif
