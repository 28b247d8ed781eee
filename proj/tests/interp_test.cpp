#include "doctest.h"

#include <map>
#include <set>
#include <string>

#include "modfo/corpus.hpp"
#include "modfo/error.hpp"
#include "modfo/interp.hpp"
#include "modfo/parse.hpp"
#include "modfo/print.hpp"
#include "modfo/prng.hpp"
#include "modfo/structure.hpp"
#include "modfo/verify.hpp"
#include "test_gen.hpp"

using namespace modfo;

namespace {

Formula over_mod(const std::string& text) { return parse(text, mod_signature()); }
Formula over_pos(const std::string& text) { return parse(text, posdiv_signature()); }

Formula translate_paper(const std::string& text) {
  VariablePool pool;
  return translate(paper_interpretation(), over_pos(text), pool);
}

}  // namespace

TEST_CASE("the interpretation's defining formulas") {
  Interpretation it = paper_interpretation();
  CHECK(it.source == posdiv_signature());
  CHECK(it.target == mod_signature());
  CHECK(it.universe_formula == over_mod("not (u mod u = u)"));
  CHECK(it.atom_map.at("<").formula == over_mod("a mod b = a"));
  CHECK(it.atom_map.at("<").params == std::vector<std::string>{"a", "b"});
  CHECK(it.atom_map.at("divides").formula == over_mod("(a mod b) mod (a mod b) = a mod b"));
  CHECK(it.atom_map.at("divides").params == std::vector<std::string>{"b", "a"});
}

TEST_CASE("the quantifier-free zero form agrees with zero, exhaustively") {
  // Oracle for the choice of `t mod t = t` as the zero test.
  for (std::uint64_t t = 0; t <= 10000; ++t) {
    REQUIRE((mod_op(t, t) == t) == (t == 0));
  }
  CHECK(zero_qf(Term::var("t")) == over_mod("t mod t = t"));
}

TEST_CASE("atom translation") {
  CHECK(translate_paper("x < y") == over_mod("x mod y = x"));
  // arguments land in the divisor/dividend slots by position
  CHECK(translate_paper("y divides x") == over_mod("(x mod y) mod (x mod y) = x mod y"));
  CHECK(translate_paper("x divides y") == over_mod("(y mod x) mod (y mod x) = y mod x"));
  // parameter collisions are handled in parallel
  CHECK(translate_paper("b < a") == over_mod("b mod a = b"));
  CHECK(translate_paper("a < b & b < a") == over_mod("a mod b = a & b mod a = b"));
}

TEST_CASE("quantifier relativization") {
  Formula got = translate_paper("forall a. exists b. a < b");
  Formula expected =
      over_mod("forall a. not (a mod a = a) -> (exists b. not (b mod b = b) & a mod b = a)");
  CHECK(got == expected);
  CHECK(print(got) ==
        "forall a. not (a mod a = a) -> exists b. not (b mod b = b) & a mod b = a");

  // both sides agree under bounded evaluation
  for (std::uint64_t bound : {5, 10, 20, 30}) {
    bool src = eval(over_pos("forall a. exists b. a < b"), builtin_posdiv(), {}, bound).value;
    bool tgt = eval(got, builtin_mod(), {}, bound).value;
    CHECK(src == tgt);
  }

  CHECK(free_vars(translate_paper("exists b. a < b")) == std::set<std::string>{"a"});
}

TEST_CASE("atom-level soundness over the positive grid") {
  // Exact agreement of the simplified proof-body atoms on [1, 1000]^2.
  Formula order = translate_paper("a < b");
  Formula divis = translate_paper("b divides a");  // b | a
  const Structure& mod = builtin_mod();
  Assignment at;
  at.bindings["a"] = 1;
  at.bindings["b"] = 1;
  std::uint64_t bad = 0;
  for (std::uint64_t a = 1; a <= 1000; ++a) {
    at.bindings["a"] = a;
    for (std::uint64_t b = 1; b <= 1000; ++b) {
      at.bindings["b"] = b;
      if (eval(order, mod, at, 0).value != (a < b)) ++bad;
      if (eval(divis, mod, at, 0).value != (a % b == 0)) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("translation preserves bounded truth at every listed bound") {
  Interpretation paper = paper_interpretation();
  SplitMix64 rng(31);
  FuzzConfig cfg;
  std::map<std::string, std::string> image;  // sentence -> translation
  std::set<std::string> images;
  for (int i = 0; i < 100; ++i) {
    Formula f = generate_sentence(rng, cfg);
    VariablePool pool;
    Formula t = translate(paper, f, pool);
    CHECK(free_vars(t) == free_vars(f));
    for (std::uint64_t bound : {5, 10, 20, 30}) {
      CHECK(eval(f, builtin_posdiv(), {}, bound).value ==
            eval(t, builtin_mod(), {}, bound).value);
    }
    // injective on structurally distinct inputs
    auto [it, inserted] = image.emplace(print(f), print(t));
    if (inserted)
      CHECK(images.insert(print(t)).second);
    else
      CHECK(it->second == print(t));
  }
}

TEST_CASE("translation errors") {
  Interpretation it = paper_interpretation();
  VariablePool pool;
  CHECK_THROWS_AS(translate(it, Formula::atom("succ", {Term::var("x"), Term::var("y")}), pool),
                  InterpError);
  Formula bad_arg = Formula::atom("<", {Term::app("mod", {Term::var("x"), Term::var("y")}),
                                        Term::var("z")});
  CHECK_THROWS_AS(translate(it, bad_arg, pool), InterpError);
}

TEST_CASE("identity interpretation preserves bounded truth") {
  Interpretation id = identity_interpretation(posdiv_signature());
  SplitMix64 rng(11);
  FuzzConfig cfg;
  cfg.count = 1;
  for (int i = 0; i < 100; ++i) {
    Formula f = generate_sentence(rng, cfg);
    VariablePool pool;
    Formula g = translate(id, f, pool);
    CHECK(free_vars(g).empty());
    for (std::uint64_t bound : {5, 12}) {
      CHECK(eval(f, builtin_posdiv(), {}, bound).value ==
            eval(g, builtin_posdiv(), {}, bound).value);
    }
  }
  // terms (and literals, when the signature has them) pass through equalities
  Signature lit_sig("lit", {{"<", 2}}, {}, true);
  Interpretation lit_id = identity_interpretation(lit_sig);
  VariablePool pool;
  Formula f = parse("forall x. x = 3 -> exists y. x < y", lit_sig);
  Formula g = translate(lit_id, f, pool);
  CHECK(free_vars(g).empty());
  for (std::uint64_t bound : {5, 9}) {
    CHECK(eval(f, builtin_posdiv(), {}, bound).value ==
          eval(g, builtin_posdiv(), {}, bound).value);
  }
}

TEST_CASE("expanding a defined function symbol") {
  Signature chain("chain", {{"<", 2}, {"Succ", 2}}, {}, false);
  // Succ(y, w) reads: w is the successor of y.
  Definition succ_fn{"S", DefKind::Function, 1, {"y", "w"},
                     Formula::atom("Succ", {Term::var("y"), Term::var("w")}), chain};

  SUBCASE("single application") {
    Formula f = Formula::atom("<", {Term::app("S", {Term::var("y")}), Term::var("z")});
    VariablePool pool;
    Formula got = expand_definition(succ_fn, f, pool);
    CHECK(got == parse("exists w_1. Succ(y, w_1) & w_1 < z", chain));
  }
  SUBCASE("nested applications, innermost first") {
    Formula f = Formula::equals(Term::app("S", {Term::app("S", {Term::var("y")})}), Term::var("z"));
    VariablePool pool;
    Formula got = expand_definition(succ_fn, f, pool);
    CHECK(got == parse("exists w_1. Succ(y, w_1) & (exists w_2. Succ(w_1, w_2) & w_2 = z)", chain));
    CHECK(print(got).find("S(") == std::string::npos);  // defined symbol is gone
  }
  SUBCASE("formulas without the symbol are unchanged") {
    Formula f = parse("forall q. q < z", chain);
    VariablePool pool;
    CHECK(expand_definition(succ_fn, f, pool) == f);
  }
  SUBCASE("cyclic definitions are rejected") {
    Definition cyclic{"S", DefKind::Function, 1, {"y", "w"},
                      Formula::equals(Term::app("S", {Term::var("y")}), Term::var("w")), chain};
    VariablePool pool;
    CHECK_THROWS_AS(expand_definition(cyclic, parse("q < z", chain), pool), InterpError);
  }
  SUBCASE("relation definitions are not expandable") {
    Definition rel{"R", DefKind::Relation, 2, {"a", "b"}, parse("a < b", chain), chain};
    VariablePool pool;
    CHECK_THROWS_AS(expand_definition(rel, parse("q < z", chain), pool), InterpError);
  }
}

TEST_CASE("composition") {
  Interpretation paper = paper_interpretation();

  SUBCASE("signature mismatch") {
    CHECK_THROWS_AS(compose(paper, paper), InterpError);
  }

  SUBCASE("identity laws, up to bounded truth") {
    Interpretation left = compose(identity_interpretation(posdiv_signature()), paper);
    Interpretation right = compose(paper, identity_interpretation(mod_signature()));
    CHECK(left.source == posdiv_signature());
    CHECK(left.target == mod_signature());
    SplitMix64 rng(5);
    FuzzConfig cfg;
    for (int i = 0; i < 60; ++i) {
      Formula f = generate_sentence(rng, cfg);
      VariablePool p1, p2, p3;
      bool direct = eval(translate(paper, f, p1), builtin_mod(), {}, 12).value;
      CHECK(eval(translate(left, f, p2), builtin_mod(), {}, 12).value == direct);
      CHECK(eval(translate(right, f, p3), builtin_mod(), {}, 12).value == direct);
    }
  }

  SUBCASE("two-step chain agrees with step-by-step translation") {
    Signature chain("chain", {{"<", 2}, {"Succ", 2}}, {}, false);
    Interpretation outer;
    outer.name = "chain-to-posdiv";
    outer.source = chain;
    outer.target = posdiv_signature();
    outer.universe_var = "u";
    outer.universe_formula = Formula::equals(Term::var("u"), Term::var("u"));
    outer.atom_map.insert_or_assign(
        "<", AtomRule{over_pos("a < b"), {"a", "b"}});
    outer.atom_map.insert_or_assign(
        "Succ", AtomRule{over_pos("a < b & forall z. a < z -> z = b or b < z"), {"a", "b"}});

    Interpretation composed = compose(outer, paper);
    CHECK(composed.source == chain);
    CHECK(composed.target == mod_signature());

    SplitMix64 rng(17);
    FuzzConfig cfg;
    cfg.signature = chain;
    for (int i = 0; i < 100; ++i) {
      Formula f = generate_sentence(rng, cfg);
      VariablePool p1, p2, p3;
      Formula one_shot = translate(composed, f, p1);
      Formula stepwise = translate(paper, translate(outer, f, p2), p3);
      CHECK(eval(one_shot, builtin_mod(), {}, 20).value ==
            eval(stepwise, builtin_mod(), {}, 20).value);
    }

    // the displayed open formula, across assignments
    Formula open = parse("exists x. Succ(y, x)", chain);
    for (std::uint64_t y = 1; y <= 20; ++y) {
      Assignment a;
      a.bindings["y"] = y;
      VariablePool p1, p2, p3;
      CHECK(eval(translate(composed, open, p1), builtin_mod(), a, 20).value ==
            eval(translate(paper, translate(outer, open, p2), p3), builtin_mod(), a, 20).value);
    }
  }
}

TEST_CASE("manifest round-trip") {
  Interpretation paper = paper_interpretation();
  std::string manifest = write_manifest(paper);
  CHECK(manifest ==
        "universe(u) := not (u mod u = u)\n"
        "<(a, b) := a mod b = a\n"
        "divides(b, a) := a mod b mod (a mod b) = a mod b\n");

  Interpretation reread = read_manifest(manifest, "reread");
  CHECK(reread.universe_formula == paper.universe_formula);
  CHECK(reread.universe_var == paper.universe_var);
  CHECK(reread.atom_map.at("<").formula == paper.atom_map.at("<").formula);
  CHECK(reread.atom_map.at("divides").formula == paper.atom_map.at("divides").formula);
  CHECK(reread.atom_map.at("divides").params == paper.atom_map.at("divides").params);

  SUBCASE("directives and comments") {
    Interpretation id = read_manifest(
        "# identity over posdiv\n"
        "source: posdiv\n"
        "target: posdiv\n"
        "\n"
        "universe(v) := v = v\n"
        "<(a, b) := a < b\n"
        "divides(d, n) := d divides n\n",
        "id");
    VariablePool pool;
    Formula f = over_pos("forall a. exists b. a < b");
    CHECK(eval(translate(id, f, pool), builtin_posdiv(), {}, 9).value ==
          eval(f, builtin_posdiv(), {}, 9).value);
  }

  SUBCASE("rejects bad manifests") {
    CHECK_THROWS_AS(read_manifest("<(a, b) := a mod b = a\n", "m"), InterpError);  // no universe
    CHECK_THROWS_AS(read_manifest("universe(u) := not (u mod u = u)\n", "m"),
                    InterpError);  // missing relations
    CHECK_THROWS_AS(
        read_manifest("universe(u) := not (u mod u = u)\n"
                      "<(a, b) := a mod a = a\n"  // b unused
                      "divides(b, a) := a mod b mod (a mod b) = a mod b\n",
                      "m"),
        InterpError);
    CHECK_THROWS_AS(read_manifest("garbage\n", "m"), InterpError);
    CHECK_THROWS_AS(read_manifest("source: nowhere\nuniverse(u) := u = u\n", "m"), InterpError);
  }
}
