#include "lamup/syntax.hpp"

#include <utility>

namespace lamup {

TyPtr nat() {
  static const TyPtr instance = std::make_shared<Ty>(Ty{Ty::Kind::Nat, nullptr, nullptr});
  return instance;
}

TyPtr arrow(TyPtr dom, TyPtr cod) {
  return std::make_shared<Ty>(Ty{Ty::Kind::Arrow, std::move(dom), std::move(cod)});
}

bool equal(const TyPtr& a, const TyPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == Ty::Kind::Nat) return true;
  return equal(a->dom, b->dom) && equal(a->cod, b->cod);
}

Ctx Ctx::pushed(TyPtr ty) const {
  std::vector<TyPtr> out = entries_;
  out.push_back(std::move(ty));
  return Ctx(std::move(out));
}

Ctx Ctx::popped() const {
  std::vector<TyPtr> out(entries_.begin(), entries_.end() - 1);
  return Ctx(std::move(out));
}

bool operator==(const Ctx& a, const Ctx& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a.entries()[i], b.entries()[i])) return false;
  }
  return true;
}

namespace {
TermPtr mk(Term::Kind kind, TermPtr a = nullptr, TermPtr b = nullptr, TyPtr ann = nullptr) {
  return std::make_shared<Term>(Term{kind, std::move(a), std::move(b), std::move(ann)});
}
}  // namespace

TermPtr varz() {
  static const TermPtr instance = mk(Term::Kind::VarZ);
  return instance;
}

TermPtr weaken(TermPtr body) { return mk(Term::Kind::Weaken, std::move(body)); }
TermPtr lam(TermPtr body) { return mk(Term::Kind::Lam, std::move(body)); }
TermPtr app(TermPtr fun, TermPtr arg) { return mk(Term::Kind::App, std::move(fun), std::move(arg)); }

TermPtr zero() {
  static const TermPtr instance = mk(Term::Kind::Zero);
  return instance;
}

TermPtr suc(TermPtr body) { return mk(Term::Kind::Suc, std::move(body)); }
TermPtr annot(TermPtr body, TyPtr ty) {
  return mk(Term::Kind::Annot, std::move(body), nullptr, std::move(ty));
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::VarZ:
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Weaken:
    case Term::Kind::Lam:
    case Term::Kind::Suc:
      return equal(a->a, b->a);
    case Term::Kind::App:
      return equal(a->a, b->a) && equal(a->b, b->b);
    case Term::Kind::Annot:
      return equal(a->a, b->a) && equal(a->ann, b->ann);
  }
  return false;
}

SubstPtr sid() {
  static const SubstPtr instance =
      std::make_shared<Subst>(Subst{Subst::Kind::Id, nullptr, nullptr});
  return instance;
}

SubstPtr sweaken(SubstPtr sub) {
  return std::make_shared<Subst>(Subst{Subst::Kind::Weaken, std::move(sub), nullptr});
}

SubstPtr scons(SubstPtr sub, TermPtr head) {
  return std::make_shared<Subst>(Subst{Subst::Kind::Cons, std::move(sub), std::move(head)});
}

bool equal(const SubstPtr& a, const SubstPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Subst::Kind::Id:
      return true;
    case Subst::Kind::Weaken:
      return equal(a->sub, b->sub);
    case Subst::Kind::Cons:
      return equal(a->sub, b->sub) && equal(a->head, b->head);
  }
  return false;
}

std::size_t node_count(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::VarZ:
    case Term::Kind::Zero:
      return 1;
    case Term::Kind::Weaken:
    case Term::Kind::Lam:
    case Term::Kind::Suc:
    case Term::Kind::Annot:
      return 1 + node_count(t->a);
    case Term::Kind::App:
      return 1 + node_count(t->a) + node_count(t->b);
  }
  return 1;
}

std::size_t node_count(const SubstPtr& s) {
  switch (s->kind) {
    case Subst::Kind::Id:
      return 1;
    case Subst::Kind::Weaken:
      return 1 + node_count(s->sub);
    case Subst::Kind::Cons:
      return 1 + node_count(s->sub) + node_count(s->head);
  }
  return 1;
}

}  // namespace lamup
