#ifndef MODFO_VARS_HPP
#define MODFO_VARS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modfo/formula.hpp"
#include "modfo/term.hpp"

namespace modfo {

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);

// Every variable name occurring anywhere, free or bound.
std::set<std::string> all_names(const Term& t);
std::set<std::string> all_names(const Formula& f);

// Capture-avoiding substitution of `replacement` for free occurrences of
// `var`. Bound variables are renamed to `name_k` (smallest k) when a variable
// of the replacement would otherwise be captured.
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);

// Simultaneous substitution: all pairs are applied in parallel, so
// substitute_all(f, {{a, y}, {b, a}}) replaces the original occurrences of a
// and b independently.
Formula substitute_all(const Formula& f,
                       const std::vector<std::pair<std::string, Term>>& subs);

// Issues variable names distinct from every reserved and previously issued
// name. Fresh names have the shape `base_k` with the smallest viable k >= 1.
class VariablePool {
public:
  VariablePool() = default;
  explicit VariablePool(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

  void reserve(const std::string& name) { reserved_.insert(name); }
  void reserve_all(const Formula& f);

  std::string fresh(const std::string& base);

  const std::set<std::string>& reserved() const { return reserved_; }

private:
  std::set<std::string> reserved_;
  std::uint64_t issued_ = 0;  // total names handed out
};

}  // namespace modfo

#endif
