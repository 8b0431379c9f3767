#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lamup/errors.hpp"
#include "lamup/syntax.hpp"

// Recursive-descent parser for the ASCII grammar; the Unicode spellings
// of the operators are accepted as aliases.
//
//   ty     := "N" | ty "->" ty | "(" ty ")"
//   ctx    := "[]" | "[" ty ("," ty)* "]"
//   term   := "#" | term "^" | "\" term | term term | "zero" | "suc" term
//           | "(" term ":" ty ")" | "(" term ")"
//   subst  := "id" | subst "^" | subst "," term | "(" subst ")"
//
// Postfix "^" binds tightest, then application and "suc", then "\" whose
// body extends right, then ",".

namespace lamup {

TermPtr parse_term(std::string_view text);
SubstPtr parse_subst(std::string_view text);
TyPtr parse_type(std::string_view text);
Ctx parse_ctx(std::string_view text);

// CLI composition expressions: "s1 ; s2 ; ..." in application order.
std::vector<SubstPtr> parse_subst_chain(std::string_view text);

}  // namespace lamup
