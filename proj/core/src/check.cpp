#include "lamup/check.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamup/print.hpp"

namespace lamup {

TypedTerm::TypedTerm(TermPtr term, Ctx ctx, TyPtr ty)
    : term_(std::move(term)), ctx_(std::move(ctx)), ty_(std::move(ty)) {}

TypedSubst::TypedSubst(SubstPtr subst, Ctx src, Ctx dst)
    : subst_(std::move(subst)), src_(std::move(src)), dst_(std::move(dst)) {}

namespace detail {
TypedTerm seal_term(TermPtr term, Ctx ctx, TyPtr ty) {
  return TypedTerm(std::move(term), std::move(ctx), std::move(ty));
}
TypedSubst seal_subst(SubstPtr subst, Ctx src, Ctx dst) {
  return TypedSubst(std::move(subst), std::move(src), std::move(dst));
}
}  // namespace detail

namespace {

std::string path_str(const std::vector<std::string>& path) {
  std::string out;
  for (const auto& step : path) {
    if (!out.empty()) out += ".";
    out += step;
  }
  return out;
}

struct PathStep {
  std::vector<std::string>& path;
  PathStep(std::vector<std::string>& p, const char* step) : path(p) { path.push_back(step); }
  ~PathStep() { path.pop_back(); }
};

// ---- constraint-based reconstruction (completeness backstop) ----
//
// Bidirectional checking cannot synthesize a bare lambda in application
// position, but such terms are well-typed and arise routinely once
// annotations are stripped or a beta redex is built. Reconstruction
// decides typability exactly: metavariables, structural unification,
// occurs check.

struct MTy;
using MPtr = std::shared_ptr<MTy>;

struct MTy {
  enum class K { Nat, Arrow, Var };
  K k;
  MPtr a, b;   // Arrow
  MPtr bound;  // Var: union-find binding
};

MPtr mnat() {
  static const MPtr instance = std::make_shared<MTy>(MTy{MTy::K::Nat, nullptr, nullptr, nullptr});
  return instance;
}
MPtr marrow(MPtr a, MPtr b) {
  return std::make_shared<MTy>(MTy{MTy::K::Arrow, std::move(a), std::move(b), nullptr});
}
MPtr mfresh() { return std::make_shared<MTy>(MTy{MTy::K::Var, nullptr, nullptr, nullptr}); }

MPtr mlift(const TyPtr& ty) {
  if (ty->kind == Ty::Kind::Nat) return mnat();
  return marrow(mlift(ty->dom), mlift(ty->cod));
}

MPtr resolve(MPtr t) {
  while (t->k == MTy::K::Var && t->bound) t = t->bound;
  return t;
}

bool occurs(const MPtr& var, MPtr t) {
  t = resolve(std::move(t));
  if (t == var) return true;
  if (t->k == MTy::K::Arrow) return occurs(var, t->a) || occurs(var, t->b);
  return false;
}

bool unify(MPtr x, MPtr y) {
  x = resolve(std::move(x));
  y = resolve(std::move(y));
  if (x == y) return true;
  if (x->k == MTy::K::Var) {
    if (occurs(x, y)) return false;
    x->bound = y;
    return true;
  }
  if (y->k == MTy::K::Var) return unify(std::move(y), std::move(x));
  if (x->k != y->k) return false;
  if (x->k == MTy::K::Nat) return true;
  return unify(x->a, y->a) && unify(x->b, y->b);
}

std::optional<TyPtr> to_ground(MPtr t) {
  t = resolve(std::move(t));
  switch (t->k) {
    case MTy::K::Nat:
      return nat();
    case MTy::K::Arrow: {
      auto a = to_ground(t->a);
      auto b = to_ground(t->b);
      if (!a || !b) return std::nullopt;
      return arrow(*a, *b);
    }
    case MTy::K::Var:
      return std::nullopt;
  }
  return std::nullopt;
}

struct ReconResult {
  MPtr ty;
  TermPtr stripped;
};

ReconResult recon(const std::vector<MPtr>& mctx, const TermPtr& t,
                  std::vector<std::string>& path) {
  switch (t->kind) {
    case Term::Kind::VarZ:
      if (mctx.empty()) throw EmptyContextError("variable zero", path_str(path));
      return {mctx.back(), t};
    case Term::Kind::Weaken: {
      if (mctx.empty()) throw EmptyContextError("weakening", path_str(path));
      PathStep step(path, "body");
      std::vector<MPtr> popped(mctx.begin(), mctx.end() - 1);
      ReconResult body = recon(popped, t->a, path);
      return {body.ty, body.stripped == t->a ? t : weaken(body.stripped)};
    }
    case Term::Kind::Lam: {
      MPtr dom = mfresh();
      std::vector<MPtr> extended = mctx;
      extended.push_back(dom);
      PathStep step(path, "body");
      ReconResult body = recon(extended, t->a, path);
      return {marrow(dom, body.ty), body.stripped == t->a ? t : lam(body.stripped)};
    }
    case Term::Kind::App: {
      ReconResult fun = [&] {
        PathStep step(path, "fun");
        return recon(mctx, t->a, path);
      }();
      ReconResult arg = [&] {
        PathStep step(path, "arg");
        return recon(mctx, t->b, path);
      }();
      MPtr cod = mfresh();
      if (!unify(fun.ty, marrow(arg.ty, cod))) {
        throw TypeMismatchError("a function type accepting the argument",
                                "an incompatible application", path_str(path));
      }
      bool same = fun.stripped == t->a && arg.stripped == t->b;
      return {cod, same ? t : app(fun.stripped, arg.stripped)};
    }
    case Term::Kind::Zero:
      return {mnat(), t};
    case Term::Kind::Suc: {
      PathStep step(path, "body");
      ReconResult body = recon(mctx, t->a, path);
      if (!unify(body.ty, mnat())) {
        throw TypeMismatchError("N", "a non-numeric body under suc", path_str(path));
      }
      return {mnat(), body.stripped == t->a ? t : suc(body.stripped)};
    }
    case Term::Kind::Annot: {
      PathStep step(path, "body");
      ReconResult body = recon(mctx, t->a, path);
      if (!unify(body.ty, mlift(t->ann))) {
        throw TypeMismatchError(print_ty(t->ann), "an incompatible annotated body",
                                path_str(path));
      }
      return {mlift(t->ann), body.stripped};
    }
  }
  throw Error(Error::Kind::TypeMismatch, "unreachable term kind");
}

std::vector<MPtr> lift_ctx(const Ctx& ctx) {
  std::vector<MPtr> out;
  out.reserve(ctx.size());
  for (const auto& ty : ctx.entries()) out.push_back(mlift(ty));
  return out;
}

TermPtr recon_check(const Ctx& ctx, const TyPtr& ty, const TermPtr& t,
                    std::vector<std::string>& path) {
  ReconResult res = recon(lift_ctx(ctx), t, path);
  if (!unify(res.ty, mlift(ty))) {
    throw TypeMismatchError(print_ty(ty), "an incompatible term", path_str(path));
  }
  return res.stripped;
}

struct GroundInfer {
  std::optional<TyPtr> ty;
  TermPtr stripped;
};

GroundInfer recon_infer(const Ctx& ctx, const TermPtr& t, std::vector<std::string>& path) {
  ReconResult res = recon(lift_ctx(ctx), t, path);
  return {to_ground(res.ty), res.stripped};
}

// ---- bidirectional rules ----

struct Inferred {
  TyPtr ty;
  TermPtr stripped;
};

TermPtr check_at(const Ctx& ctx, const TyPtr& ty, const TermPtr& t,
                 std::vector<std::string>& path);
Inferred infer_at(const Ctx& ctx, const TermPtr& t, std::vector<std::string>& path);

TermPtr check_at(const Ctx& ctx, const TyPtr& ty, const TermPtr& t,
                 std::vector<std::string>& path) {
  switch (t->kind) {
    case Term::Kind::VarZ: {
      if (ctx.empty()) throw EmptyContextError("variable zero", path_str(path));
      if (!equal(ctx.entry(0), ty)) {
        throw TypeMismatchError(print_ty(ty), print_ty(ctx.entry(0)), path_str(path));
      }
      return t;
    }
    case Term::Kind::Weaken: {
      if (ctx.empty()) throw EmptyContextError("weakening", path_str(path));
      PathStep step(path, "body");
      TermPtr body = check_at(ctx.popped(), ty, t->a, path);
      return body == t->a ? t : weaken(body);
    }
    case Term::Kind::Lam: {
      if (ty->kind != Ty::Kind::Arrow) {
        throw TypeMismatchError(print_ty(ty), "a lambda abstraction", path_str(path));
      }
      PathStep step(path, "body");
      TermPtr body = check_at(ctx.pushed(ty->dom), ty->cod, t->a, path);
      return body == t->a ? t : lam(body);
    }
    case Term::Kind::App: {
      Inferred fun;
      try {
        PathStep step(path, "fun");
        fun = infer_at(ctx, t->a, path);
      } catch (const CannotInferError&) {
        return recon_check(ctx, ty, t, path);
      }
      if (fun.ty->kind != Ty::Kind::Arrow) {
        PathStep step(path, "fun");
        throw NotAFunctionError(print_ty(fun.ty), path_str(path));
      }
      if (!equal(fun.ty->cod, ty)) {
        throw TypeMismatchError(print_ty(ty), print_ty(fun.ty->cod), path_str(path));
      }
      PathStep step(path, "arg");
      TermPtr arg = check_at(ctx, fun.ty->dom, t->b, path);
      bool same = fun.stripped == t->a && arg == t->b;
      return same ? t : app(fun.stripped, arg);
    }
    case Term::Kind::Zero: {
      if (ty->kind != Ty::Kind::Nat) {
        throw TypeMismatchError(print_ty(ty), "N", path_str(path));
      }
      return t;
    }
    case Term::Kind::Suc: {
      if (ty->kind != Ty::Kind::Nat) {
        throw TypeMismatchError(print_ty(ty), "N", path_str(path));
      }
      PathStep step(path, "body");
      TermPtr body = check_at(ctx, nat(), t->a, path);
      return body == t->a ? t : suc(body);
    }
    case Term::Kind::Annot: {
      if (!equal(t->ann, ty)) {
        throw TypeMismatchError(print_ty(ty), print_ty(t->ann), path_str(path));
      }
      return check_at(ctx, ty, t->a, path);
    }
  }
  throw Error(Error::Kind::TypeMismatch, "unreachable term kind");
}

Inferred infer_at(const Ctx& ctx, const TermPtr& t, std::vector<std::string>& path) {
  switch (t->kind) {
    case Term::Kind::VarZ:
      if (ctx.empty()) throw EmptyContextError("variable zero", path_str(path));
      return {ctx.entry(0), t};
    case Term::Kind::Weaken: {
      if (ctx.empty()) throw EmptyContextError("weakening", path_str(path));
      PathStep step(path, "body");
      Inferred body = infer_at(ctx.popped(), t->a, path);
      return {body.ty, body.stripped == t->a ? t : weaken(body.stripped)};
    }
    case Term::Kind::Lam:
      throw CannotInferError("unannotated lambda", path_str(path));
    case Term::Kind::App: {
      Inferred fun;
      try {
        PathStep step(path, "fun");
        fun = infer_at(ctx, t->a, path);
      } catch (const CannotInferError&) {
        GroundInfer g = recon_infer(ctx, t, path);
        if (!g.ty) {
          throw CannotInferError("application of an unannotated lambda", path_str(path));
        }
        return {*g.ty, g.stripped};
      }
      if (fun.ty->kind != Ty::Kind::Arrow) {
        PathStep step(path, "fun");
        throw NotAFunctionError(print_ty(fun.ty), path_str(path));
      }
      PathStep step(path, "arg");
      TermPtr arg = check_at(ctx, fun.ty->dom, t->b, path);
      bool same = fun.stripped == t->a && arg == t->b;
      return {fun.ty->cod, same ? t : app(fun.stripped, arg)};
    }
    case Term::Kind::Zero:
      return {nat(), t};
    case Term::Kind::Suc: {
      PathStep step(path, "body");
      TermPtr body = check_at(ctx, nat(), t->a, path);
      return {nat(), body == t->a ? t : suc(body)};
    }
    case Term::Kind::Annot: {
      PathStep step(path, "body");
      TermPtr body = check_at(ctx, t->ann, t->a, path);
      return {t->ann, body};
    }
  }
  throw Error(Error::Kind::TypeMismatch, "unreachable term kind");
}

SubstPtr check_subst_at(const Ctx& src, const Ctx& dst, const SubstPtr& s,
                        std::vector<std::string>& path) {
  switch (s->kind) {
    case Subst::Kind::Id:
      if (!(src == dst)) {
        throw ContextMismatchError("id requires equal contexts, got " + print_ctx(src) +
                                   " |= " + print_ctx(dst) +
                                   (path.empty() ? "" : " at " + path_str(path)));
      }
      return s;
    case Subst::Kind::Weaken: {
      if (src.empty()) throw EmptyContextError("substitution weakening", path_str(path));
      PathStep step(path, "sub");
      SubstPtr sub = check_subst_at(src.popped(), dst, s->sub, path);
      return sub == s->sub ? s : sweaken(sub);
    }
    case Subst::Kind::Cons: {
      if (dst.empty()) throw EmptyContextError("substitution cons", path_str(path));
      SubstPtr sub = [&] {
        PathStep step(path, "tail");
        return check_subst_at(src, dst.popped(), s->sub, path);
      }();
      TermPtr head = [&] {
        PathStep step(path, "head");
        return check_at(src, dst.entry(0), s->head, path);
      }();
      bool same = sub == s->sub && head == s->head;
      return same ? s : scons(sub, head);
    }
  }
  throw Error(Error::Kind::ContextMismatch, "unreachable substitution kind");
}

}  // namespace

TypedTerm check_term(const Ctx& ctx, const TyPtr& ty, const TermPtr& raw) {
  std::vector<std::string> path;
  TermPtr stripped = check_at(ctx, ty, raw, path);
  return detail::seal_term(std::move(stripped), ctx, ty);
}

TyPtr infer_term(const Ctx& ctx, const TermPtr& raw) {
  std::vector<std::string> path;
  return infer_at(ctx, raw, path).ty;
}

TyPtr infer_term_or_reconstruct(const Ctx& ctx, const TermPtr& raw) {
  std::vector<std::string> path;
  try {
    return infer_at(ctx, raw, path).ty;
  } catch (const CannotInferError&) {
    GroundInfer g = recon_infer(ctx, raw, path);
    if (!g.ty) throw;
    return *g.ty;
  }
}

TypedSubst check_subst(const Ctx& src, const Ctx& dst, const SubstPtr& raw) {
  std::vector<std::string> path;
  SubstPtr stripped = check_subst_at(src, dst, raw, path);
  return detail::seal_subst(std::move(stripped), src, dst);
}

Ctx infer_dst(const Ctx& src, const SubstPtr& raw) {
  switch (raw->kind) {
    case Subst::Kind::Id:
      return src;
    case Subst::Kind::Weaken: {
      if (src.empty()) throw EmptyContextError("substitution weakening", "");
      return infer_dst(src.popped(), raw->sub);
    }
    case Subst::Kind::Cons: {
      Ctx tail = infer_dst(src, raw->sub);
      TyPtr head;
      std::vector<std::string> path{"head"};
      try {
        head = infer_term(src, raw->head);
      } catch (const CannotInferError&) {
        GroundInfer g = recon_infer(src, raw->head, path);
        if (!g.ty) {
          throw CannotInferError("cons head needs an annotation", "head");
        }
        head = *g.ty;
      }
      return tail.pushed(std::move(head));
    }
  }
  throw Error(Error::Kind::ContextMismatch, "unreachable substitution kind");
}

}  // namespace lamup
