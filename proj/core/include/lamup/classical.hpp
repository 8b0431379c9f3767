#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lamup/check.hpp"
#include "lamup/syntax.hpp"

// Ordinary de Bruijn calculus with numbered variables and shift-based
// substitution. Deliberately shares no machinery with the engine so it
// can serve as an independent oracle; it is written to be obviously
// correct rather than fast.

namespace lamup {

struct ClassicalTerm;
using CTermPtr = std::shared_ptr<const ClassicalTerm>;

struct ClassicalTerm {
  enum class Kind { Var, Lam, App, Zero, Suc };
  Kind kind;
  std::size_t index;  // Var
  CTermPtr a;         // Lam/Suc body, App function
  CTermPtr b;         // App argument
};

CTermPtr cvar(std::size_t index);
CTermPtr clam(CTermPtr body);
CTermPtr capp(CTermPtr fun, CTermPtr arg);
CTermPtr czero();
CTermPtr csuc(CTermPtr body);
bool equal(const CTermPtr& a, const CTermPtr& b);

// Denotation of a substitution src |= dst: one image per entry of dst,
// position i holding the replacement of de Bruijn index i, over src.
struct ParallelSubst {
  std::vector<CTermPtr> images;
};

bool equal(const ParallelSubst& a, const ParallelSubst& b);

// Adds `amount` to every variable with index >= cutoff. Negative amounts
// unshift; driving an index below zero is a ScopeError.
CTermPtr shift(const CTermPtr& t, long long amount, std::size_t cutoff = 0);

// Simultaneous substitution; ScopeError when a variable exceeds the
// environment.
CTermPtr psubst(const CTermPtr& t, const ParallelSubst& env);

// Weakenings become index shifts.
CTermPtr erase_term(const TypedTerm& m);
ParallelSubst erase_subst(const TypedSubst& s);

// Inverse direction: variables become weakening spines on variable zero,
// so the result is weakening-canonical. erase_term(embed(t, ...)) == t.
TypedTerm embed(const CTermPtr& t, const Ctx& ctx, const TyPtr& ty);

// Leftmost-outermost beta with single shift/unshift substitution.
CTermPtr classical_normalize(const CTermPtr& t, std::uint64_t step_limit = 1000000);

// `λ. body`, numbered variables, juxtaposed application.
std::string print_classical(const CTermPtr& t);
CTermPtr parse_classical(std::string_view text);

}  // namespace lamup
