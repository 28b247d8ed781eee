#ifndef MODFO_SIGNATURE_HPP
#define MODFO_SIGNATURE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace modfo {

struct SymbolInfo {
  std::string name;
  unsigned arity = 2;

  friend bool operator==(const SymbolInfo&, const SymbolInfo&) = default;
};

// A single-sorted first-order signature. Equality is a logical symbol and is
// available in every signature without being listed here.
class Signature {
public:
  Signature() = default;  // the empty signature
  Signature(std::string name, std::vector<SymbolInfo> relations,
            std::vector<SymbolInfo> functions, bool allows_literals);

  const std::string& name() const { return name_; }
  const std::vector<SymbolInfo>& relations() const { return relations_; }
  const std::vector<SymbolInfo>& functions() const { return functions_; }
  bool allows_literals() const { return allows_literals_; }

  const SymbolInfo* relation(std::string_view name) const;
  const SymbolInfo* function(std::string_view name) const;
  bool has_symbol(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

private:
  std::string name_;
  std::vector<SymbolInfo> relations_;
  std::vector<SymbolInfo> functions_;
  bool allows_literals_ = false;
};

// {mod}: one binary function symbol, no relation symbols, no literals.
const Signature& mod_signature();

// {<, divides}: two binary relation symbols, no literals. The surface atom
// `y divides x` states that y is a divisor of x.
const Signature& posdiv_signature();

// {<, divides, succ}: the oracle signature; succ(x, y) states x = y + 1.
const Signature& natfull_signature();

}  // namespace modfo

#endif
