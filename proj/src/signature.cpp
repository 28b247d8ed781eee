#include "modfo/signature.hpp"

#include <set>

#include "modfo/error.hpp"

namespace modfo {

Signature::Signature(std::string name, std::vector<SymbolInfo> relations,
                     std::vector<SymbolInfo> functions, bool allows_literals)
    : name_(std::move(name)),
      relations_(std::move(relations)),
      functions_(std::move(functions)),
      allows_literals_(allows_literals) {
  std::set<std::string> seen;
  for (const auto& r : relations_) {
    if (r.arity < 1) throw Error("signature " + name_ + ": relation " + r.name + " has arity 0");
    if (!seen.insert(r.name).second) throw Error("signature " + name_ + ": duplicate symbol " + r.name);
  }
  for (const auto& f : functions_) {
    if (f.arity < 1) throw Error("signature " + name_ + ": function " + f.name + " has arity 0");
    if (!seen.insert(f.name).second) throw Error("signature " + name_ + ": duplicate symbol " + f.name);
  }
}

const SymbolInfo* Signature::relation(std::string_view name) const {
  for (const auto& r : relations_)
    if (r.name == name) return &r;
  return nullptr;
}

const SymbolInfo* Signature::function(std::string_view name) const {
  for (const auto& f : functions_)
    if (f.name == name) return &f;
  return nullptr;
}

bool Signature::has_symbol(std::string_view name) const {
  return relation(name) != nullptr || function(name) != nullptr;
}

const Signature& mod_signature() {
  static const Signature sig("mod", {}, {{"mod", 2}}, false);
  return sig;
}

const Signature& posdiv_signature() {
  static const Signature sig("posdiv", {{"<", 2}, {"divides", 2}}, {}, false);
  return sig;
}

const Signature& natfull_signature() {
  static const Signature sig("natfull", {{"<", 2}, {"divides", 2}, {"succ", 2}}, {}, false);
  return sig;
}

}  // namespace modfo
