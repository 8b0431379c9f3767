#include "lamup/print.hpp"

namespace lamup {

namespace {

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

namespace print_detail {

std::string term_factor(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::VarZ:
      return "#";
    case Term::Kind::Zero:
      return "zero";
    case Term::Kind::Weaken:
      return term_factor(t->a) + "^";
    case Term::Kind::Annot:
      return "(" + print_term(t->a) + " : " + print_ty(t->ann) + ")";
    case Term::Kind::Lam:
    case Term::Kind::App:
    case Term::Kind::Suc:
      return paren(print_term(t));
  }
  return {};
}

std::string term_app(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::App: {
      std::string lhs = t->a->kind == Term::Kind::Lam ? paren(print_term(t->a)) : term_app(t->a);
      return lhs + " " + term_factor(t->b);
    }
    case Term::Kind::Suc:
      return "suc " + term_factor(t->a);
    default:
      return term_factor(t);
  }
}

std::string subst_postfix(const SubstPtr& s) {
  switch (s->kind) {
    case Subst::Kind::Id:
      return "id";
    case Subst::Kind::Weaken:
      return subst_postfix(s->sub) + "^";
    case Subst::Kind::Cons:
      return paren(print_subst(s));
  }
  return {};
}

std::string cons_head(const TermPtr& t) {
  if (t->kind == Term::Kind::Lam || t->kind == Term::Kind::App) return paren(print_term(t));
  return print_term(t);
}

}  // namespace print_detail

std::string print_term(const TermPtr& t) {
  if (t->kind == Term::Kind::Lam) {
    const TermPtr& body = t->a;
    bool wrap = body->kind == Term::Kind::Lam || body->kind == Term::Kind::App;
    return "\\ " + (wrap ? paren(print_term(body)) : print_term(body));
  }
  return print_detail::term_app(t);
}

std::string print_subst(const SubstPtr& s) {
  if (s->kind == Subst::Kind::Cons) {
    return print_subst(s->sub) + " , " + print_detail::cons_head(s->head);
  }
  return print_detail::subst_postfix(s);
}

std::string print_ty(const TyPtr& ty) {
  if (ty->kind == Ty::Kind::Nat) return "N";
  std::string dom =
      ty->dom->kind == Ty::Kind::Arrow ? paren(print_ty(ty->dom)) : print_ty(ty->dom);
  return dom + " -> " + print_ty(ty->cod);
}

std::string print_ctx(const Ctx& ctx) {
  if (ctx.empty()) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i > 0) out += ", ";
    out += print_ty(ctx.entries()[i]);
  }
  return out + "]";
}

}  // namespace lamup
