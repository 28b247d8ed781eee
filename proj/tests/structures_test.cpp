#include "doctest.h"

#include "modfo/corpus.hpp"
#include "modfo/error.hpp"
#include "modfo/parse.hpp"
#include "modfo/prng.hpp"
#include "modfo/structure.hpp"
#include "modfo/verify.hpp"

using namespace modfo;

namespace {

Assignment assign(std::initializer_list<std::pair<const char*, std::uint64_t>> xs) {
  Assignment a;
  for (const auto& [k, v] : xs) a.bindings[k] = v;
  return a;
}

}  // namespace

TEST_CASE("remainder convention") {
  CHECK(mod_op(5, 2) == 1);
  CHECK(mod_op(5, 3) == 2);
  CHECK(mod_op(6, 3) == 0);
  CHECK(mod_op(7, 0) == 7);
  CHECK(mod_op(0, 0) == 0);
  for (std::uint64_t n = 0; n <= 100; ++n) CHECK(mod_op(n, 0) == n);
}

TEST_CASE("remainder identities up to 10^4") {
  std::uint64_t bad = 0;
  for (std::uint64_t x = 0; x <= 10000; ++x) {
    if (mod_op(x, x) != 0) ++bad;  // holds at 0 too, by the convention
    // mod(x, x) = x exactly when x = 0
    if ((mod_op(x, x) == x) != (x == 0)) ++bad;
  }
  for (std::uint64_t y = 1; y <= 10000; ++y) {
    for (std::uint64_t x = 0; x <= 10000; ++x) {
      std::uint64_t r = mod_op(x, y);
      if (r >= y) ++bad;
      if (x != (x / y) * y + r) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("enumerators stay inside the universe and the bound") {
  for (const char* name : {"mod", "posdiv", "natfull"}) {
    const Structure& s = *builtin_structure(name);
    for (std::uint64_t bound : {0, 1, 7, 40}) {
      std::uint64_t previous = 0;
      bool first = true;
      for (std::uint64_t v : s.enumerate(bound)) {
        CHECK(s.universe(v));
        CHECK(v <= bound);
        if (!first) CHECK(previous < v);  // strictly increasing
        previous = v;
        first = false;
      }
    }
  }
}

TEST_CASE("builtin structures") {
  const Structure& pos = builtin_posdiv();
  CHECK(pos.relations.at("<")(2, 5));
  CHECK(!pos.relations.at("<")(5, 2));
  CHECK(pos.relations.at("divides")(3, 6));
  CHECK(!pos.relations.at("divides")(4, 6));
  CHECK(pos.enumerate(4) == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(!pos.universe(0));

  const Structure& nat = builtin_natfull();
  CHECK(nat.relations.at("succ")(2, 1));
  CHECK(!nat.relations.at("succ")(3, 1));
  CHECK(!nat.relations.at("succ")(1, 1));

  const Structure& mod = builtin_mod();
  CHECK(mod.enumerate(3) == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(mod.universe(0));

  CHECK(builtin_structure("posdiv") == &pos);
  CHECK(builtin_structure("nope") == nullptr);
}

TEST_CASE("bounded evaluation") {
  const Structure& mod = builtin_mod();
  const Structure& pos = builtin_posdiv();

  CHECK(eval(parse("forall y. y mod y = y mod y", mod.signature), mod, {}, 50).value);

  Formula zero = parse("exists y. y mod y = x", mod.signature);
  CHECK(eval(zero, mod, assign({{"x", 0}}), 50).value);
  CHECK(!eval(zero, mod, assign({{"x", 7}}), 50).value);

  // bounded truth differs from truth in the infinite structure: the top
  // element has no witness
  CHECK(!eval(parse("forall a. exists b. a < b", pos.signature), pos, {}, 30).value);

  SUBCASE("short-circuit visit counts") {
    EvalReport witness_first = eval(zero, mod, assign({{"x", 0}}), 50);
    CHECK(witness_first.assignments_visited == 1);  // y = 0 witnesses immediately
    EvalReport full_scan = eval(zero, mod, assign({{"x", 7}}), 50);
    CHECK(full_scan.assignments_visited == 51);
    CHECK(full_scan.bound == 50);
  }

  SUBCASE("determinism") {
    EvalReport a = eval(zero, mod, assign({{"x", 3}}), 40);
    EvalReport b = eval(zero, mod, assign({{"x", 3}}), 40);
    CHECK(a.value == b.value);
    CHECK(a.assignments_visited == b.assignments_visited);
    CHECK(a.bound == b.bound);
  }
}

TEST_CASE("evaluation errors") {
  const Structure& mod = builtin_mod();
  const Structure& pos = builtin_posdiv();
  CHECK_THROWS_AS(eval(parse("x mod x = x", mod.signature), mod, {}, 10), EvalError);
  CHECK_THROWS_AS(eval(parse("x < y", pos.signature), mod, assign({{"x", 1}, {"y", 2}}), 10),
                  EvalError);
  CHECK_THROWS_AS(eval(parse("x < x", pos.signature), pos, assign({{"x", 0}}), 10), EvalError);
}

TEST_CASE("visited totals stay within the enumeration cap") {
  // Each quantifier node at nesting level k is entered at most u^(k-1) times
  // and enumerates at most u values per entry, so the total is bounded by
  // (number of quantifier nodes) * u^depth.
  const Structure& pos = builtin_posdiv();
  FuzzConfig cfg;
  cfg.max_quantifier_depth = 3;
  cfg.max_nodes = 16;
  SplitMix64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Formula f = generate_sentence(rng, cfg);
    std::uint64_t bound = 4 + rng.below(4);
    std::uint64_t u = bound;  // |universe ∩ [1, bound]|
    std::uint64_t cap = count_quantifiers(f);
    for (std::uint64_t k = 0; k < measure(f).quantifier_depth; ++k) cap *= u;
    CHECK(eval(f, pos, {}, bound).assignments_visited <= cap);
  }
}

TEST_CASE("existential truth is monotone in the bound for quantifier-free bodies") {
  const Structure& pos = builtin_posdiv();
  const Structure& mod = builtin_mod();
  SplitMix64 rng(7);
  FuzzConfig cfg;
  cfg.max_quantifier_depth = 1;
  cfg.max_nodes = 12;
  int exists_seen = 0;
  for (int i = 0; i < 400; ++i) {
    Formula f = generate_sentence(rng, cfg);
    const auto* q = f.as_quantified();
    if (!q || q->quant != Quant::Exists || measure(q->body).quantifier_depth != 0) continue;
    ++exists_seen;
    for (std::uint64_t bound = 2; bound <= 8; bound += 3) {
      if (eval(f, pos, {}, bound).value) CHECK(eval(f, pos, {}, bound + 5).value);
    }
    FuzzConfig mod_cfg = cfg;
    mod_cfg.signature = mod.signature;
    Formula g = generate_sentence(rng, mod_cfg);
    const auto* qg = g.as_quantified();
    if (qg && qg->quant == Quant::Exists && measure(qg->body).quantifier_depth == 0) {
      if (eval(g, mod, {}, 4).value) CHECK(eval(g, mod, {}, 12).value);
    }
  }
  CHECK(exists_seen > 20);
}
