#ifndef MODFO_PARSE_HPP
#define MODFO_PARSE_HPP

#include <string_view>

#include "modfo/formula.hpp"
#include "modfo/signature.hpp"

namespace modfo {

// Parses a formula in the surface grammar:
//
//   formula := iff
//   iff     := impl ("<->" impl)*                  (left-assoc)
//   impl    := disj ("->" impl)?                   (right-assoc)
//   disj    := conj ("or" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "not" unary | "forall" var "." formula
//            | "exists" var "." formula | "(" formula ")" | atom
//   atom    := term ("=" | "<" | "divides") term
//            | relation "(" term {"," term} ")"
//   term    := factor ("mod" factor)*              (left-assoc)
//   factor  := var | natural-literal | "(" term ")"
//
// `mod` binds tighter than every relation. Quantifier bodies extend as far
// right as possible. Relation symbols outside the infix core (such as succ)
// use the prefix form. Symbols missing from `sig` are rejected, as are
// literals when the signature does not allow them.
//
// Throws ParseError with a 1-based line:column position on any failure.
Formula parse(std::string_view input, const Signature& sig);

}  // namespace modfo

#endif
