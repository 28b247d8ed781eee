#ifndef MODFO_VERIFY_HPP
#define MODFO_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modfo/corpus.hpp"
#include "modfo/formula.hpp"
#include "modfo/interp.hpp"
#include "modfo/prng.hpp"
#include "modfo/structure.hpp"

namespace modfo {

// A reproducible disagreement between two evaluation routes. `translated`
// holds the second formula of a formula pair; `native_relation` names the
// oracle relation when the right side is a native table.
struct Counterexample {
  std::string kind;  // "differential" | "definition" | "lemma"
  Formula formula;
  std::optional<Formula> translated;
  std::optional<std::string> native_relation;
  Assignment assignment;
  std::uint64_t bound = 0;
  bool left_value = false;
  bool right_value = false;
  std::string left_description;
  std::string right_description;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> iteration;
};

// Single-line JSON with the stable key order
// kind, formula, translated, assignment, bound, left, right, seed, iteration.
std::string to_json_line(const Counterexample& c);

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 1000;
  unsigned max_quantifier_depth = 3;
  unsigned max_nodes = 25;
  std::uint64_t bound = 20;
  Signature signature = posdiv_signature();
};

// Deterministic closed-sentence generator. One SplitMix64 stream drives the
// whole sentence sequence; sentences with an unused quantified variable are
// discarded and the stream continues. Draw order per node: category roll
// over the viable subset of the weight table (atom 35, not 10, and 15,
// or 15, implies 10, quantifier 15, in that fixed order), then
//   atom:       relation index (declared order, equality last), then each
//               argument variable index over the scope
//   binary:     left-budget roll, left subtree, right subtree
//   quantifier: kind roll (0 = forall), then the body; the variable is named
//               x<scope-depth>
Formula generate_sentence(SplitMix64& rng, const FuzzConfig& cfg);

struct LemmaReport {
  bool pass = false;
  std::uint64_t bound = 0;
  std::uint64_t pairs = 0;
  std::vector<Counterexample> violations;
};

// Exhaustively compares the three remainder characterizations (zero, order,
// divisibility — the full forms with their zero case splits) against native
// arithmetic for every pair in [0, bound]². Violations come out sorted by
// (x, y, item).
LemmaReport check_lemma(std::uint64_t bound, unsigned jobs = 1);

struct ZeroFormReport {
  bool pass = false;
  std::uint64_t max_value = 0;
  std::vector<Counterexample> violations;
};

// For every x ≤ max_value checks (x = 0) ⇔ (x mod x = x) ⇔ the bounded
// existential zero form evaluated at bound x (and at a fixed larger bound
// for small x).
ZeroFormReport check_zero_forms(std::uint64_t max_value);

struct FuzzReport {
  std::uint64_t agreements = 0;
  std::uint64_t sentences = 0;
  std::vector<Counterexample> counterexamples;
};

// Differential fuzzing: for each generated sentence φ compares eval on src
// against eval of translate(φ) on tgt at the same bound. Iterations are
// independent; with jobs > 1 the sentences are still generated sequentially
// and results merge in iteration order.
FuzzReport fuzz_differential(const Interpretation& interp, const Structure& src,
                             const Structure& tgt, const FuzzConfig& cfg,
                             unsigned jobs = 1);

struct DefinitionReport {
  bool pass = false;
  std::uint64_t tuples_checked = 0;
  std::optional<Counterexample> counterexample;  // lexicographically first
};

// Compares a candidate definition against a native oracle relation for all
// argument tuples in [1, bound]^arity, in lexicographic order, evaluating
// the graph formula on the natfull oracle structure at the same bound.
DefinitionReport check_definition(const Definition& def, const std::string& oracle_relation,
                                  std::uint64_t bound);

struct ShrinkContext {
  const Interpretation& interp;
  const Structure& src;
  const Structure& tgt;
};

// Greedy minimization of a differential counterexample. Moves, tried in
// pre-order position and listed order: replace a conjunction/disjunction by
// either operand; strip a quantifier, binding its variable to each universe
// element via the assignment; replace a subformula by a canonical true
// (`v = v`) or false (`not (v = v)`) over the smallest in-scope variable.
// Every move is re-validated; node count never increases. Non-differential
// counterexamples are returned unchanged.
Counterexample shrink(const Counterexample& c, const ShrinkContext& ctx);

struct StabilityReport {
  std::vector<std::pair<std::uint64_t, bool>> values;  // (bound, truth)
  bool stable = false;
};

// Evaluates a closed formula at each bound and reports whether the verdict
// is the same across the whole list. Bounded truth is a testing device, not
// a statement about the unbounded structure.
StabilityReport stability(const Formula& f, const Structure& s,
                          const std::vector<std::uint64_t>& bounds);

// The documented broken atom maps used to make sure the differential fuzzer
// can actually catch a wrong interpretation:
//   order-rhs       <(a, b) := a mod b = b
//   divides-swapped divides(b, a) := (b mod a) mod (b mod a) = b mod a
//   universe-zero   universe(u) := u mod u = u
const std::vector<std::pair<std::string, Interpretation>>& corrupted_interpretations();

}  // namespace modfo

#endif
