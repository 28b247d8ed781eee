#ifndef MODFO_PRINT_HPP
#define MODFO_PRINT_HPP

#include <string>

#include "modfo/formula.hpp"
#include "modfo/term.hpp"

namespace modfo {

// Prints a term/formula so that parsing the output over the same signature
// rebuilds a structurally identical tree. Parentheses follow precedence and
// are only inserted where reparsing would otherwise associate differently;
// the single cosmetic exception is that the argument of `not` is always
// parenthesized.
std::string print(const Term& t);
std::string print(const Formula& f);

}  // namespace modfo

#endif
