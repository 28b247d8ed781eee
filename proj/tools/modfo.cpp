// modfo — bounded first-order checks for the remainder structure and its
// order/divisibility interpretation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "modfo/corpus.hpp"
#include "modfo/error.hpp"
#include "modfo/interp.hpp"
#include "modfo/parse.hpp"
#include "modfo/print.hpp"
#include "modfo/structure.hpp"
#include "modfo/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct FormulaInput {
  std::string inline_text;
  std::string file;

  std::string text() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw modfo::Error("cannot open " + file);
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
    if (inline_text == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      return buf.str();
    }
    if (inline_text.empty()) throw modfo::Error("no formula given (argument, --file, or -)");
    return inline_text;
  }
};

modfo::Assignment parse_assign(const std::string& spec) {
  modfo::Assignment a;
  if (spec.empty()) return a;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw modfo::Error("bad --assign entry '" + item + "', expected name=value");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      a.bindings[name] = v;
    } catch (const std::exception&) {
      throw modfo::Error("bad --assign value '" + value + "' for " + name);
    }
  }
  return a;
}

const modfo::Structure& structure_by_name(const std::string& name) {
  if (const modfo::Structure* s = modfo::builtin_structure(name)) return *s;
  throw modfo::Error("unknown structure " + name + " (expected mod, posdiv, or natfull)");
}

modfo::Interpretation load_interpretation(const std::string& spec) {
  if (spec == "paper") return modfo::paper_interpretation();
  std::ifstream in(spec);
  if (!in) throw modfo::Error("cannot open interpretation manifest " + spec);
  std::ostringstream buf;
  buf << in.rdbuf();
  return modfo::read_manifest(buf.str(), spec);
}

void emit_counterexamples(const std::vector<modfo::Counterexample>& cexs, bool json) {
  for (const auto& c : cexs) {
    if (json)
      std::cout << modfo::to_json_line(c) << "\n";
    else
      std::cout << "counterexample: " << modfo::to_json_line(c) << "\n";
  }
}

int cmd_parse(const FormulaInput& input, const std::string& sig_name, bool json) {
  const modfo::Signature& sig = structure_by_name(sig_name).signature;
  modfo::Formula f = modfo::parse(input.text(), sig);
  modfo::Measure m = modfo::measure(f);
  if (json) {
    ordered_json j;
    j["command"] = "parse";
    j["signature"] = sig.name();
    j["formula"] = modfo::print(f);
    j["free"] = modfo::free_vars(f);
    j["nodes"] = m.nodes;
    j["depth"] = m.quantifier_depth;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << modfo::print(f) << "\n";
  }
  return 0;
}

int cmd_eval(const FormulaInput& input, const std::string& structure, std::uint64_t bound,
             const std::string& assign, bool json) {
  if (bound > (1ull << 32))
    throw modfo::Error("bound " + std::to_string(bound) + " exceeds the 2^32 cap");
  const modfo::Structure& s = structure_by_name(structure);
  modfo::Formula f = modfo::parse(input.text(), s.signature);
  modfo::Assignment a = parse_assign(assign);
  modfo::EvalReport report = modfo::eval(f, s, a, bound);
  if (json) {
    ordered_json j;
    j["command"] = "eval";
    j["structure"] = s.name;
    j["formula"] = modfo::print(f);
    j["bound"] = report.bound;
    j["value"] = report.value;
    j["visited"] = report.assignments_visited;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (report.value ? "true" : "false") << "\n";
  }
  return report.value ? 0 : 1;
}

int cmd_translate(const FormulaInput& input, const std::string& interp_spec, bool json) {
  modfo::Interpretation interp = load_interpretation(interp_spec);
  modfo::Formula f = modfo::parse(input.text(), interp.source);
  modfo::VariablePool pool;
  modfo::Formula translated = modfo::translate(interp, f, pool);
  if (json) {
    ordered_json j;
    j["command"] = "translate";
    j["interp"] = interp.name;
    j["input"] = modfo::print(f);
    j["translated"] = modfo::print(translated);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << modfo::print(translated) << "\n";
  }
  return 0;
}

int cmd_check_lemma(std::uint64_t bound, unsigned jobs, bool json) {
  modfo::LemmaReport report = modfo::check_lemma(bound, jobs);
  emit_counterexamples(report.violations, json);
  if (json) {
    ordered_json j;
    j["command"] = "check-lemma";
    j["bound"] = report.bound;
    j["pairs"] = report.pairs;
    j["items"] = 3;
    j["pass"] = report.pass;
    j["violations"] = report.violations.size();
    std::cout << j.dump() << "\n";
  } else if (report.pass) {
    std::cout << "pass: 3 lemma items, " << report.pairs << " pairs\n";
  } else {
    std::cout << "FAIL: " << report.violations.size() << " violations over " << report.pairs
              << " pairs\n";
  }
  return report.pass ? 0 : 1;
}

int cmd_fuzz(const modfo::FuzzConfig& cfg, bool mutate, unsigned jobs, bool json) {
  const modfo::Structure& src = modfo::builtin_posdiv();
  const modfo::Structure& tgt = modfo::builtin_mod();
  bool found = false;
  if (mutate) {
    for (const auto& [name, interp] : modfo::corrupted_interpretations()) {
      modfo::FuzzReport report = modfo::fuzz_differential(interp, src, tgt, cfg, jobs);
      std::vector<modfo::Counterexample> shown;
      if (!report.counterexamples.empty()) {
        found = true;
        modfo::ShrinkContext ctx{interp, src, tgt};
        shown.push_back(modfo::shrink(report.counterexamples.front(), ctx));
      }
      emit_counterexamples(shown, json);
      if (json) {
        ordered_json j;
        j["command"] = "fuzz";
        j["mutant"] = name;
        j["seed"] = cfg.seed;
        j["sentences"] = report.sentences;
        j["agreements"] = report.agreements;
        j["counterexamples"] = report.counterexamples.size();
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "mutant " << name << ": "
                  << (report.counterexamples.empty()
                          ? "NOT caught"
                          : "caught at iteration " +
                                std::to_string(*report.counterexamples.front().iteration))
                  << " (" << report.agreements << "/" << report.sentences << " agreements)\n";
      }
    }
  } else {
    modfo::Interpretation interp = modfo::paper_interpretation();
    modfo::FuzzReport report = modfo::fuzz_differential(interp, src, tgt, cfg, jobs);
    found = !report.counterexamples.empty();
    emit_counterexamples(report.counterexamples, json);
    if (json) {
      ordered_json j;
      j["command"] = "fuzz";
      j["interp"] = interp.name;
      j["seed"] = cfg.seed;
      j["sentences"] = report.sentences;
      j["agreements"] = report.agreements;
      j["counterexamples"] = report.counterexamples.size();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "agreements: " << report.agreements << "/" << report.sentences
                << ", counterexamples: " << report.counterexamples.size() << "\n";
    }
  }
  return found ? 1 : 0;
}

int cmd_defcheck(const std::string& name, const FormulaInput& formula, const std::string& oracle,
                 std::uint64_t bound, bool json) {
  modfo::Definition def = [&] {
    if (!name.empty()) {
      const modfo::CorpusEntry* entry = modfo::corpus_find(name);
      if (!entry) throw modfo::Error("no corpus entry named " + name);
      return modfo::corpus_definition(*entry);
    }
    modfo::Formula f = modfo::parse(formula.text(), modfo::posdiv_signature());
    auto free = modfo::free_vars(f);
    modfo::Definition d{"formula", modfo::DefKind::Relation, static_cast<unsigned>(free.size()),
                        {free.begin(), free.end()}, f, modfo::posdiv_signature()};
    return d;
  }();
  modfo::DefinitionReport report = modfo::check_definition(def, oracle, bound);
  if (report.counterexample) {
    std::vector<modfo::Counterexample> cexs{*report.counterexample};
    emit_counterexamples(cexs, json);
  }
  if (json) {
    ordered_json j;
    j["command"] = "defcheck";
    j["definition"] = def.name;
    j["oracle"] = oracle;
    j["bound"] = bound;
    j["tuples"] = report.tuples_checked;
    j["pass"] = report.pass;
    std::cout << j.dump() << "\n";
  } else if (report.pass) {
    std::cout << "pass: " << def.name << " matches " << oracle << " on " << report.tuples_checked
              << " tuples\n";
  } else {
    std::cout << "FAIL: " << def.name << " disagrees with " << oracle << "\n";
  }
  return report.pass ? 0 : 1;
}

int cmd_corpus_list(bool json) {
  for (const auto& e : modfo::corpus()) {
    if (json) {
      ordered_json j;
      j["name"] = e.name;
      j["params"] = e.params;
      j["signature"] = e.signature.name();
      j["formula"] = modfo::print(e.formula);
      j["note"] = e.note;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << e.name << "(";
      for (std::size_t i = 0; i < e.params.size(); ++i)
        std::cout << (i ? ", " : "") << e.params[i];
      std::cout << ") [" << e.signature.name() << "] := " << modfo::print(e.formula) << "  # "
                << e.note << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modfo — bounded first-order checks for the remainder structure"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned jobs = 1;
  app.add_flag("--json", json, "machine output, one JSON object per line");
  app.add_option("--jobs", jobs, "worker threads for check/fuzz grids")
      ->envname("MODFO_JOBS")
      ->capture_default_str();

  FormulaInput parse_input;
  std::string parse_sig = "posdiv";
  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse_cmd->add_option("formula", parse_input.inline_text, "formula text, or - for stdin");
  parse_cmd->add_option("--file", parse_input.file, "read the formula from a file");
  parse_cmd->add_option("--sig", parse_sig, "signature: mod, posdiv, or natfull")
      ->capture_default_str();

  FormulaInput eval_input;
  std::string eval_structure;
  std::uint64_t eval_bound = 100;
  std::string eval_assign;
  auto* eval_cmd = app.add_subcommand("eval", "bounded evaluation on a builtin structure");
  eval_cmd->add_option("formula", eval_input.inline_text, "formula text, or - for stdin");
  eval_cmd->add_option("--file", eval_input.file, "read the formula from a file");
  eval_cmd->add_option("--structure", eval_structure, "mod, posdiv, or natfull")->required();
  eval_cmd->add_option("--bound", eval_bound, "quantifier bound")->capture_default_str();
  eval_cmd->add_option("--assign", eval_assign, "free-variable values, e.g. x=3,y=5");

  FormulaInput translate_input;
  std::string translate_interp = "paper";
  auto* translate_cmd =
      app.add_subcommand("translate", "compile a source formula into the target language");
  translate_cmd->add_option("formula", translate_input.inline_text, "formula text, or - for stdin");
  translate_cmd->add_option("--file", translate_input.file, "read the formula from a file");
  translate_cmd->add_option("--interp", translate_interp, "paper, or a manifest file")
      ->capture_default_str();

  std::uint64_t check_bound = 100;
  auto* check_cmd = app.add_subcommand("check", "exhaustive checks");
  check_cmd->require_subcommand(1);
  auto* lemma_cmd =
      check_cmd->add_subcommand("lemma", "verify the three remainder characterizations");
  lemma_cmd->add_option("--bound", check_bound, "check all pairs in [0, bound]^2")
      ->capture_default_str();

  modfo::FuzzConfig fuzz_cfg;
  fuzz_cfg.bound = 100;
  bool fuzz_mutate = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "differential fuzzing of the translation");
  fuzz_cmd->add_option("--seed", fuzz_cfg.seed, "PRNG seed")->capture_default_str();
  fuzz_cmd->add_option("--count", fuzz_cfg.count, "number of sentences")->capture_default_str();
  fuzz_cmd->add_option("--depth", fuzz_cfg.max_quantifier_depth, "max quantifier depth")
      ->capture_default_str();
  fuzz_cmd->add_option("--max-nodes", fuzz_cfg.max_nodes, "max sentence size")
      ->capture_default_str();
  fuzz_cmd->add_option("--bound", fuzz_cfg.bound, "evaluation bound")->capture_default_str();
  fuzz_cmd->add_flag("--mutate", fuzz_mutate,
                     "run the documented corrupted interpretations instead of the real one");

  std::string def_name;
  FormulaInput def_formula;
  std::string def_oracle;
  std::uint64_t def_bound = 100;
  auto* def_cmd = app.add_subcommand("defcheck", "check a candidate definition against an oracle");
  def_cmd->add_option("--definition", def_name, "corpus entry name");
  def_cmd->add_option("--formula", def_formula.inline_text, "definition formula over posdiv");
  def_cmd->add_option("--oracle", def_oracle, "oracle relation in natfull: <, divides, succ")
      ->required();
  def_cmd->add_option("--bound", def_bound, "check all tuples in [1, bound]^arity")
      ->capture_default_str();

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in formulas");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list_cmd = corpus_cmd->add_subcommand("list", "list the corpus entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(parse_input, parse_sig, json);
    if (eval_cmd->parsed()) return cmd_eval(eval_input, eval_structure, eval_bound, eval_assign, json);
    if (translate_cmd->parsed()) return cmd_translate(translate_input, translate_interp, json);
    if (check_cmd->parsed() && lemma_cmd->parsed()) return cmd_check_lemma(check_bound, jobs, json);
    if (fuzz_cmd->parsed()) return cmd_fuzz(fuzz_cfg, fuzz_mutate, jobs, json);
    if (def_cmd->parsed()) {
      if (def_name.empty() == def_formula.inline_text.empty())
        throw modfo::Error("defcheck needs exactly one of --definition or --formula");
      return cmd_defcheck(def_name, def_formula, def_oracle, def_bound, json);
    }
    if (corpus_cmd->parsed() && corpus_list_cmd->parsed()) return cmd_corpus_list(json);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "error: unknown failure\n";
    return 2;
  }
}
