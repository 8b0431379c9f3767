#pragma once

#include <string>

#include "lamup/syntax.hpp"

// Canonical printer. Output round-trips through the parser; the exact
// parenthesisation is fixed (lambda bodies and cons heads that are
// themselves lambdas or applications are parenthesised).

namespace lamup {

std::string print_term(const TermPtr& t);
std::string print_subst(const SubstPtr& s);
std::string print_ty(const TyPtr& ty);
std::string print_ctx(const Ctx& ctx);

namespace print_detail {
// Renders t as an application factor: atoms and weakening spines stay
// bare, anything that binds looser gets parentheses. Shared with the
// trace renderer.
std::string term_factor(const TermPtr& t);
std::string term_app(const TermPtr& t);
std::string subst_postfix(const SubstPtr& s);
std::string cons_head(const TermPtr& t);
}  // namespace print_detail

}  // namespace lamup
