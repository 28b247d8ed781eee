#include "modfo/corpus.hpp"

#include "modfo/parse.hpp"

namespace modfo {

namespace {

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  const Signature& pos = posdiv_signature();
  const Signature& mod = mod_signature();
  // Successor candidates over the order; succ_paper is the displayed formula
  // verbatim, succ_fixed swaps the roles of x and y in the guard. Parameter
  // order (x, y) matches the oracle relation succ(x, y), i.e. x = y + 1.
  out.push_back({"succ_paper",
                 {"x", "y"},
                 pos,
                 parse("y < x & forall z. x < z -> z = y or y < z", pos),
                 "successor candidate as displayed"});
  out.push_back({"succ_fixed",
                 {"x", "y"},
                 pos,
                 parse("y < x & forall z. y < z -> z = x or x < z", pos),
                 "corrected successor candidate"});
  out.push_back({"lemma1_exists",
                 {"x"},
                 mod,
                 parse("exists y. y mod y = x", mod),
                 "existential zero test"});
  out.push_back({"lemma2_full",
                 {"x", "y"},
                 mod,
                 parse("x mod x = x & not (y mod y = y) or "
                       "not (x mod x = x) & not (y mod y = y) & x mod y = x",
                       mod),
                 "x < y in terms of mod, zero cases split"});
  out.push_back({"lemma3_full",
                 {"y", "x"},
                 mod,
                 parse("x mod x = x or not (x mod x = x) & (x mod y) mod (x mod y) = x mod y", mod),
                 "y divides x in terms of mod, zero cases split"});
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* corpus_find(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

Definition corpus_definition(const CorpusEntry& entry) {
  return Definition{entry.name, DefKind::Relation, static_cast<unsigned>(entry.params.size()),
                    entry.params, entry.formula, entry.signature};
}

}  // namespace modfo
