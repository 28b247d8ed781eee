#include "modfo/verify.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "modfo/error.hpp"
#include "modfo/print.hpp"
#include "modfo/vars.hpp"

namespace modfo {

namespace {

constexpr std::uint64_t kBoundCap = 1ull << 32;

void check_bound_cap(std::uint64_t bound) {
  if (bound > kBoundCap)
    throw VerifyError("bound " + std::to_string(bound) + " exceeds the 2^32 cap");
}

// Splits [0, total) into roughly equal chunks and runs the worker on each,
// in parallel when jobs > 1. Chunk results keep their index so callers can
// merge deterministically.
void run_chunked(std::uint64_t total, unsigned jobs,
                 const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& worker) {
  jobs = std::max(1u, jobs);
  if (total == 0) return;
  std::uint64_t chunks = std::min<std::uint64_t>(jobs, total);
  if (chunks == 1) {
    worker(0, total, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  std::uint64_t per = total / chunks;
  std::uint64_t extra = total % chunks;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t len = per + (c < extra ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&worker, begin, end, c] { worker(begin, end, c); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace

std::string to_json_line(const Counterexample& c) {
  nlohmann::ordered_json j;
  j["kind"] = c.kind;
  j["formula"] = print(c.formula);
  if (c.translated)
    j["translated"] = print(*c.translated);
  else if (c.native_relation)
    j["translated"] = *c.native_relation;
  else
    j["translated"] = nullptr;
  nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
  for (const auto& [name, value] : c.assignment.bindings) assignment[name] = value;
  j["assignment"] = std::move(assignment);
  j["bound"] = c.bound;
  j["left"] = c.left_value;
  j["right"] = c.right_value;
  if (c.seed)
    j["seed"] = *c.seed;
  else
    j["seed"] = nullptr;
  if (c.iteration)
    j["iteration"] = *c.iteration;
  else
    j["iteration"] = nullptr;
  return j.dump();
}

namespace {

// Node-category weights, in fixed order: atom, not, and, or, implies,
// quantifier. Rolls are taken over the viable subset only.
constexpr std::uint64_t kWeights[6] = {35, 10, 15, 15, 10, 15};

struct SentenceGen {
  SplitMix64& rng;
  std::vector<std::string> scope;
  std::vector<const SymbolInfo*> rels;

  SentenceGen(SplitMix64& rng, const Signature& sig) : rng(rng) {
    for (const auto& r : sig.relations())
      if (r.arity == 2) rels.push_back(&r);
  }

  std::uint64_t min_nodes() const { return scope.empty() ? 4 : 3; }

  Formula gen(std::uint64_t budget, unsigned qleft) {
    const std::uint64_t m = min_nodes();
    bool viable[6];
    viable[0] = !scope.empty() && budget >= 3;
    viable[1] = budget >= 1 + m;
    viable[2] = viable[3] = viable[4] = budget >= 1 + 2 * m;
    viable[5] = qleft >= 1 && budget >= 4;
    std::uint64_t total = 0;
    for (int i = 0; i < 6; ++i)
      if (viable[i]) total += kWeights[i];
    if (total == 0)
      throw VerifyError("fuzz configuration cannot produce a sentence (budget too small)");
    std::uint64_t roll = rng.below(total);
    int cat = 0;
    for (;; ++cat) {
      if (!viable[cat]) continue;
      if (roll < kWeights[cat]) break;
      roll -= kWeights[cat];
    }
    switch (cat) {
      case 0: {
        std::uint64_t rel = rng.below(rels.size() + 1);  // equality comes last
        Term a = Term::var(scope[rng.below(scope.size())]);
        Term b = Term::var(scope[rng.below(scope.size())]);
        if (rel == rels.size()) return Formula::equals(std::move(a), std::move(b));
        return Formula::atom(rels[rel]->name, {std::move(a), std::move(b)});
      }
      case 1:
        return Formula::negation(gen(budget - 1, qleft));
      case 2:
      case 3:
      case 4: {
        std::uint64_t rest = budget - 1;
        std::uint64_t left_cap = m + rng.below(rest - 2 * m + 1);
        Formula lhs = gen(left_cap, qleft);
        std::uint64_t right_cap = rest - measure(lhs).nodes;
        Formula rhs = gen(right_cap, qleft);
        Conn op = cat == 2 ? Conn::And : cat == 3 ? Conn::Or : Conn::Implies;
        return Formula::binary(op, std::move(lhs), std::move(rhs));
      }
      default: {
        Quant q = rng.below(2) == 0 ? Quant::Forall : Quant::Exists;
        std::string var = "x" + std::to_string(scope.size());
        scope.push_back(var);
        Formula body = gen(budget - 1, qleft - 1);
        scope.pop_back();
        return Formula::quantified(q, std::move(var), std::move(body));
      }
    }
  }
};

bool quantified_vars_used(const Formula& f) {
  if (f.as_atom() || f.as_equals()) return true;
  if (const auto* n = f.as_not()) return quantified_vars_used(n->body);
  if (const auto* b = f.as_binary())
    return quantified_vars_used(b->lhs) && quantified_vars_used(b->rhs);
  const auto* q = f.as_quantified();
  return free_vars(q->body).count(q->var) > 0 && quantified_vars_used(q->body);
}

}  // namespace

Formula generate_sentence(SplitMix64& rng, const FuzzConfig& cfg) {
  if (cfg.max_nodes < 4 || cfg.max_quantifier_depth < 1)
    throw VerifyError("fuzz configuration needs max_nodes >= 4 and max_quantifier_depth >= 1");
  SentenceGen gen(rng, cfg.signature);
  for (;;) {
    Formula f = gen.gen(cfg.max_nodes, cfg.max_quantifier_depth);
    if (quantified_vars_used(f)) return f;  // else discard and continue the stream
  }
}

namespace {

bool divides_nat(std::uint64_t d, std::uint64_t n) { return n == 0 || (d != 0 && n % d == 0); }

}  // namespace

LemmaReport check_lemma(std::uint64_t bound, unsigned jobs) {
  if (bound < 2) throw VerifyError("check_lemma needs bound >= 2");
  check_bound_cap(bound);
  const Structure& mod = builtin_mod();
  const Formula zero_x = zero_qf(Term::var("x"));
  const Formula order = corpus_find("lemma2_full")->formula;
  const Formula divis = corpus_find("lemma3_full")->formula;

  std::uint64_t rows = bound + 1;
  std::vector<std::vector<Counterexample>> results(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(std::max(1u, jobs), rows)));

  run_chunked(rows, jobs, [&](std::uint64_t x0, std::uint64_t x1, std::size_t chunk) {
    auto& out = results[chunk];
    Assignment a;
    a.bindings["x"] = 0;
    a.bindings["y"] = 0;
    auto record = [&](const Formula& f, const char* native, std::uint64_t x, std::uint64_t y,
                      bool formula_value, bool native_value, bool x_only) {
      Assignment at;
      at.bindings["x"] = x;
      if (!x_only) at.bindings["y"] = y;
      out.push_back(Counterexample{.kind = "lemma",
                                   .formula = f,
                                   .native_relation = native,
                                   .assignment = std::move(at),
                                   .bound = bound,
                                   .left_value = formula_value,
                                   .right_value = native_value,
                                   .left_description = "formula evaluation on mod",
                                   .right_description = "native arithmetic"});
    };
    for (std::uint64_t x = x0; x < x1; ++x) {
      a.bindings["x"] = x;
      for (std::uint64_t y = 0; y <= bound; ++y) {
        a.bindings["y"] = y;
        bool zf = eval(zero_x, mod, a, bound).value;
        if (zf != (x == 0)) record(zero_x, "zero", x, y, zf, x == 0, true);
        bool of = eval(order, mod, a, bound).value;
        if (of != (x < y)) record(order, "<", x, y, of, x < y, false);
        bool df = eval(divis, mod, a, bound).value;
        if (df != divides_nat(y, x)) record(divis, "divides", x, y, df, divides_nat(y, x), false);
      }
    }
  });

  LemmaReport report;
  report.bound = bound;
  report.pairs = rows * rows;
  for (auto& chunk : results)
    for (auto& c : chunk) report.violations.push_back(std::move(c));
  report.pass = report.violations.empty();
  return report;
}

ZeroFormReport check_zero_forms(std::uint64_t max_value) {
  check_bound_cap(max_value);
  const Structure& mod = builtin_mod();
  const Formula qf = zero_qf(Term::var("x"));
  const Formula& existential = corpus_find("lemma1_exists")->formula;

  ZeroFormReport report;
  report.max_value = max_value;
  Assignment a;
  a.bindings["x"] = 0;
  for (std::uint64_t x = 0; x <= max_value; ++x) {
    a.bindings["x"] = x;
    bool native = x == 0;
    bool qf_value = eval(qf, mod, a, 0).value;
    // Any bound >= x works for the existential form; use the smallest, plus a
    // larger spot check for small x.
    bool ex_value = eval(existential, mod, a, x).value;
    bool ex_large = x <= 200 ? eval(existential, mod, a, 1000).value : ex_value;
    if (qf_value != native || ex_value != native || ex_large != native) {
      Assignment at;
      at.bindings["x"] = x;
      report.violations.push_back(
          Counterexample{.kind = "lemma",
                         .formula = qf_value != native ? qf : existential,
                         .native_relation = "zero",
                         .assignment = std::move(at),
                         .bound = x,
                         .left_value = qf_value != native ? qf_value : ex_value,
                         .right_value = native,
                         .left_description = "formula evaluation on mod",
                         .right_description = "native arithmetic"});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

FuzzReport fuzz_differential(const Interpretation& interp, const Structure& src,
                             const Structure& tgt, const FuzzConfig& cfg, unsigned jobs) {
  if (!(cfg.signature == src.signature))
    throw VerifyError("fuzz signature does not match the source structure");
  if (!(interp.source == src.signature))
    throw VerifyError("interpretation " + interp.name + " does not start from " + src.name);
  check_bound_cap(cfg.bound);

  // The sentence stream is sequential by definition; only evaluation fans out.
  SplitMix64 rng(cfg.seed);
  std::vector<Formula> sentences;
  sentences.reserve(cfg.count);
  for (std::uint64_t i = 0; i < cfg.count; ++i) sentences.push_back(generate_sentence(rng, cfg));

  std::vector<std::vector<Counterexample>> results(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(std::max(1u, jobs), std::max<std::uint64_t>(1, cfg.count))));
  run_chunked(cfg.count, jobs, [&](std::uint64_t b, std::uint64_t e, std::size_t chunk) {
    auto& out = results[chunk];
    const Assignment empty;
    for (std::uint64_t i = b; i < e; ++i) {
      VariablePool pool;
      Formula translated = translate(interp, sentences[i], pool);
      bool left = eval(sentences[i], src, empty, cfg.bound).value;
      bool right = eval(translated, tgt, empty, cfg.bound).value;
      if (left != right) {
        out.push_back(Counterexample{.kind = "differential",
                                     .formula = sentences[i],
                                     .translated = std::move(translated),
                                     .bound = cfg.bound,
                                     .left_value = left,
                                     .right_value = right,
                                     .left_description = "eval on " + src.name,
                                     .right_description = "translated eval on " + tgt.name,
                                     .seed = cfg.seed,
                                     .iteration = i});
      }
    }
  });

  FuzzReport report;
  report.sentences = cfg.count;
  for (auto& chunk : results)
    for (auto& c : chunk) report.counterexamples.push_back(std::move(c));
  report.agreements = cfg.count - report.counterexamples.size();
  return report;
}

DefinitionReport check_definition(const Definition& def, const std::string& oracle_relation,
                                  std::uint64_t bound) {
  const Structure& oracle = builtin_natfull();
  auto rel = oracle.relations.find(oracle_relation);
  if (rel == oracle.relations.end())
    throw VerifyError("natfull has no relation named " + oracle_relation);
  const SymbolInfo* info = oracle.signature.relation(oracle_relation);
  if (info->arity != def.params.size())
    throw VerifyError("definition " + def.name + " has " + std::to_string(def.params.size()) +
                      " parameters but oracle " + oracle_relation + " has arity " +
                      std::to_string(info->arity));
  try {
    check_well_formed(def.graph, oracle.signature);
  } catch (const Error& e) {
    throw VerifyError("definition " + def.name + " is not over the oracle language: " + e.what());
  }
  if (bound < 1) throw VerifyError("check_definition needs bound >= 1");
  check_bound_cap(bound);

  DefinitionReport report;
  Assignment a;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    for (std::uint64_t y = 1; y <= bound; ++y) {
      a.bindings[def.params[0]] = x;
      a.bindings[def.params[1]] = y;
      ++report.tuples_checked;
      bool left = eval(def.graph, oracle, a, bound).value;
      bool right = rel->second(x, y);
      if (left != right) {
        Assignment at;
        at.bindings[def.params[0]] = x;
        at.bindings[def.params[1]] = y;
        report.counterexample =
            Counterexample{.kind = "definition",
                           .formula = def.graph,
                           .native_relation = oracle_relation,
                           .assignment = std::move(at),
                           .bound = bound,
                           .left_value = left,
                           .right_value = right,
                           .left_description = "bounded evaluation of " + def.name + " on natfull",
                           .right_description = "native relation " + oracle_relation};
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

namespace {

struct ShrinkCand {
  Formula formula;
  std::optional<std::pair<std::string, std::uint64_t>> binding;
};

// Candidates in deterministic order: moves at each node come before moves in
// its children (pre-order), and at one node the order is conjunct/disjunct
// drops, quantifier strips (ascending universe value), then the canonical
// true/false replacements.
void collect_cands(const Formula& f, std::vector<std::string>& scope,
                   const std::vector<std::uint64_t>& domain, std::vector<ShrinkCand>& out,
                   const std::function<Formula(Formula)>& rebuild) {
  if (const auto* b = f.as_binary(); b && (b->op == Conn::And || b->op == Conn::Or)) {
    out.push_back({rebuild(b->lhs), std::nullopt});
    out.push_back({rebuild(b->rhs), std::nullopt});
  }
  if (const auto* q = f.as_quantified()) {
    for (std::uint64_t value : domain)
      out.push_back({rebuild(q->body), std::make_pair(q->var, value)});
  }
  if (!scope.empty()) {
    const std::string& v = *std::min_element(scope.begin(), scope.end());
    Formula truth = Formula::equals(Term::var(v), Term::var(v));
    if (!(f == truth)) out.push_back({rebuild(truth), std::nullopt});
    Formula falsity = Formula::negation(truth);
    if (!(f == falsity)) out.push_back({rebuild(falsity), std::nullopt});
  }

  if (const auto* n = f.as_not()) {
    collect_cands(n->body, scope, domain, out,
                  [&](Formula g) { return rebuild(Formula::negation(std::move(g))); });
  } else if (const auto* b2 = f.as_binary()) {
    collect_cands(b2->lhs, scope, domain, out, [&](Formula g) {
      return rebuild(Formula::binary(b2->op, std::move(g), b2->rhs));
    });
    collect_cands(b2->rhs, scope, domain, out, [&](Formula g) {
      return rebuild(Formula::binary(b2->op, b2->lhs, std::move(g)));
    });
  } else if (const auto* q2 = f.as_quantified()) {
    scope.push_back(q2->var);
    collect_cands(q2->body, scope, domain, out, [&](Formula g) {
      return rebuild(Formula::quantified(q2->quant, q2->var, std::move(g)));
    });
    scope.pop_back();
  }
}

}  // namespace

Counterexample shrink(const Counterexample& c, const ShrinkContext& ctx) {
  if (c.kind != "differential" || !c.translated) return c;

  auto eval_pair = [&](const Formula& f, const Assignment& a) {
    VariablePool pool;
    Formula translated = translate(ctx.interp, f, pool);
    bool left = eval(f, ctx.src, a, c.bound).value;
    bool right = eval(translated, ctx.tgt, a, c.bound).value;
    return std::tuple<bool, bool, Formula>(left, right, std::move(translated));
  };

  auto [left, right, translated] = eval_pair(c.formula, c.assignment);
  if (left != c.left_value || right != c.right_value || left == right)
    throw VerifyError("counterexample does not reproduce at bound " + std::to_string(c.bound));

  Formula current = c.formula;
  Assignment assignment = c.assignment;
  const std::vector<std::uint64_t> domain = ctx.src.enumerate(c.bound);

  bool progressed = true;
  while (progressed) {
    progressed = false;
    std::vector<ShrinkCand> cands;
    std::vector<std::string> scope;
    for (const auto& [name, value] : assignment.bindings) scope.push_back(name);
    collect_cands(current, scope, domain, cands, [](Formula g) { return g; });
    std::uint64_t current_nodes = measure(current).nodes;
    for (auto& cand : cands) {
      if (measure(cand.formula).nodes >= current_nodes) continue;
      Assignment next = assignment;
      if (cand.binding) next.bindings[cand.binding->first] = cand.binding->second;
      bool l, r;
      std::optional<Formula> t;
      try {
        auto [cl, cr, ct] = eval_pair(cand.formula, next);
        l = cl;
        r = cr;
        t = std::move(ct);
      } catch (const Error&) {
        continue;  // move produced an unevaluable candidate; skip it
      }
      if (l == r) continue;
      current = std::move(cand.formula);
      assignment = std::move(next);
      translated = std::move(*t);
      left = l;
      right = r;
      progressed = true;
      break;
    }
  }

  Counterexample out = c;
  out.formula = std::move(current);
  out.translated = std::move(translated);
  out.assignment = std::move(assignment);
  out.left_value = left;
  out.right_value = right;
  return out;
}

StabilityReport stability(const Formula& f, const Structure& s,
                          const std::vector<std::uint64_t>& bounds) {
  if (!free_vars(f).empty()) throw VerifyError("stability needs a closed formula");
  StabilityReport report;
  for (std::uint64_t b : bounds) {
    check_bound_cap(b);
    report.values.emplace_back(b, eval(f, s, Assignment{}, b).value);
  }
  report.stable = true;
  for (const auto& [b, v] : report.values) report.stable = report.stable && v == report.values.front().second;
  return report;
}

const std::vector<std::pair<std::string, Interpretation>>& corrupted_interpretations() {
  static const std::vector<std::pair<std::string, Interpretation>> mutants = [] {
    std::vector<std::pair<std::string, Interpretation>> out;
    Term a = Term::var("a");
    Term b = Term::var("b");

    Interpretation order_rhs = paper_interpretation();
    order_rhs.name = "order-rhs";
    order_rhs.atom_map["<"] = {Formula::equals(Term::app("mod", {a, b}), b), {"a", "b"}};
    out.emplace_back(order_rhs.name, std::move(order_rhs));

    Interpretation divides_swapped = paper_interpretation();
    divides_swapped.name = "divides-swapped";
    divides_swapped.atom_map["divides"] = {zero_qf(Term::app("mod", {b, a})), {"b", "a"}};
    out.emplace_back(divides_swapped.name, std::move(divides_swapped));

    Interpretation universe_zero = paper_interpretation();
    universe_zero.name = "universe-zero";
    universe_zero.universe_formula = zero_qf(Term::var("u"));
    out.emplace_back(universe_zero.name, std::move(universe_zero));
    return out;
  }();
  return mutants;
}

}  // namespace modfo
