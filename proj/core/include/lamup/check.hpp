#pragma once

#include "lamup/errors.hpp"
#include "lamup/syntax.hpp"

namespace lamup {

class TypedTerm;
class TypedSubst;

namespace detail {
// Reserved for the typechecker and the type-preserving engine operations.
TypedTerm seal_term(TermPtr term, Ctx ctx, TyPtr ty);
TypedSubst seal_subst(SubstPtr subst, Ctx src, Ctx dst);
}  // namespace detail

// A term carrying the judgement `ctx |- term : ty` it is known to satisfy.
// The carried term is annotation-free.
class TypedTerm {
 public:
  const TermPtr& term() const { return term_; }
  const Ctx& ctx() const { return ctx_; }
  const TyPtr& ty() const { return ty_; }

 private:
  TypedTerm(TermPtr term, Ctx ctx, TyPtr ty);
  friend TypedTerm detail::seal_term(TermPtr, Ctx, TyPtr);

  TermPtr term_;
  Ctx ctx_;
  TyPtr ty_;
};

// A substitution carrying `subst : src |= dst`: terms live over src and
// the variables of dst are being replaced.
class TypedSubst {
 public:
  const SubstPtr& subst() const { return subst_; }
  const Ctx& src() const { return src_; }
  const Ctx& dst() const { return dst_; }

 private:
  TypedSubst(SubstPtr subst, Ctx src, Ctx dst);
  friend TypedSubst detail::seal_subst(SubstPtr, Ctx, Ctx);

  SubstPtr subst_;
  Ctx src_;
  Ctx dst_;
};

// Checking mode. Accepts every well-typed raw term: bidirectional rules
// first, constraint-based reconstruction as a fallback for application
// heads that cannot be synthesized. Annotations `(M : T)` are verified
// and stripped.
TypedTerm check_term(const Ctx& ctx, const TyPtr& ty, const TermPtr& raw);

// Synthesis mode, best effort. Bare lambdas are not synthesizable.
TyPtr infer_term(const Ctx& ctx, const TermPtr& raw);

// infer_term plus a reconstruction fallback that accepts bare lambdas
// whenever they have a unique ground type. CLI default for omitted
// type annotations.
TyPtr infer_term_or_reconstruct(const Ctx& ctx, const TermPtr& raw);

TypedSubst check_subst(const Ctx& src, const Ctx& dst, const SubstPtr& raw);

// Recovers the replaced context of a raw substitution from its source
// context, synthesizing cons-head types (reconstruction allowed). Used
// by the CLI so only one context flag is needed.
Ctx infer_dst(const Ctx& src, const SubstPtr& raw);

}  // namespace lamup
