#pragma once

#include <cstddef>
#include <memory>
#include <vector>

// Abstract syntax of the explicit-weakening calculus: simple types,
// contexts, de Bruijn terms with a weakening constructor, and
// substitutions built from identity, weakening and cons.

namespace lamup {

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

struct Ty {
  enum class Kind { Nat, Arrow };
  Kind kind;
  TyPtr dom;  // Arrow only
  TyPtr cod;  // Arrow only
};

TyPtr nat();
TyPtr arrow(TyPtr dom, TyPtr cod);
bool equal(const TyPtr& a, const TyPtr& b);

// A context is a finite sequence of types. The rightmost entry is de
// Bruijn index zero; entry(i) walks from the right.
class Ctx {
 public:
  Ctx() = default;
  explicit Ctx(std::vector<TyPtr> entries) : entries_(std::move(entries)) {}

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Type of de Bruijn index i. Precondition: i < size().
  const TyPtr& entry(std::size_t index) const {
    return entries_[entries_.size() - 1 - index];
  }

  Ctx pushed(TyPtr ty) const;
  Ctx popped() const;  // drops index 0; precondition: nonempty

  const std::vector<TyPtr>& entries() const { return entries_; }

 private:
  std::vector<TyPtr> entries_;  // leftmost (outermost) first
};

bool operator==(const Ctx& a, const Ctx& b);
inline bool operator!=(const Ctx& a, const Ctx& b) { return !(a == b); }

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Annot is surface syntax only: `(M : T)`. The typechecker erases it, so
// sealed terms and everything the engine touches use the six core kinds.
struct Term {
  enum class Kind { VarZ, Weaken, Lam, App, Zero, Suc, Annot };
  Kind kind;
  TermPtr a;  // Weaken/Lam/Suc/Annot body, App function
  TermPtr b;  // App argument
  TyPtr ann;  // Annot only
};

TermPtr varz();
TermPtr weaken(TermPtr body);
TermPtr lam(TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr zero();
TermPtr suc(TermPtr body);
TermPtr annot(TermPtr body, TyPtr ty);
bool equal(const TermPtr& a, const TermPtr& b);

struct Subst;
using SubstPtr = std::shared_ptr<const Subst>;

struct Subst {
  enum class Kind { Id, Weaken, Cons };
  Kind kind;
  SubstPtr sub;  // Weaken/Cons tail
  TermPtr head;  // Cons head
};

SubstPtr sid();
SubstPtr sweaken(SubstPtr sub);
SubstPtr scons(SubstPtr sub, TermPtr head);
bool equal(const SubstPtr& a, const SubstPtr& b);

std::size_t node_count(const TermPtr& t);
std::size_t node_count(const SubstPtr& s);

}  // namespace lamup
