#ifndef MODFO_CORPUS_HPP
#define MODFO_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "modfo/formula.hpp"
#include "modfo/interp.hpp"
#include "modfo/signature.hpp"

namespace modfo {

// A named, citable formula. `params` lists the designated free variables in
// the order a checker binds them.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> params;
  Signature signature;
  Formula formula;
  std::string note;
};

// Built-in entries:
//   succ_paper(x, y)  — successor candidate exactly as displayed
//   succ_fixed(x, y)  — corrected successor candidate
//   lemma1_exists(x)  — existential zero test
//   lemma2_full(x, y) — order in terms of mod, with the zero case split
//   lemma3_full(y, x) — divisibility in terms of mod, with the zero case
const std::vector<CorpusEntry>& corpus();

const CorpusEntry* corpus_find(std::string_view name);

// View of an entry as a relation definition for the definition checker.
Definition corpus_definition(const CorpusEntry& entry);

}  // namespace modfo

#endif
