#include "lamup/engine.hpp"

#include <memory>
#include <utility>

#include <nlohmann/json.hpp>

#include "lamup/classical.hpp"
#include "lamup/errors.hpp"
#include "lamup/print.hpp"

namespace lamup {

namespace {

// ---- display trees for whole-term trace snapshots ----
//
// Mirrors the term/substitution syntax plus nodes for instantiations and
// compositions that have not fired yet. Built only when a sink is given.

struct DTerm;
struct DSubst;
using DTermPtr = std::shared_ptr<const DTerm>;
using DSubstPtr = std::shared_ptr<const DSubst>;

struct DTerm {
  enum class Kind { Leaf, Weaken, Lam, App, Suc, Pending };
  Kind kind;
  TermPtr leaf;   // Leaf
  DTermPtr a, b;  // structure under construction
  TermPtr pm;     // Pending term
  SubstPtr ps;    // Pending substitution
};

struct DSubst {
  enum class Kind { Leaf, Weaken, Cons, PendingComp };
  Kind kind;
  SubstPtr leaf;  // Leaf
  DSubstPtr sub;  // Weaken/Cons
  DTermPtr head;  // Cons
  SubstPtr ca, cb;  // PendingComp operands (always fully evaluated)
};

DTermPtr dleaf(TermPtr t) {
  return std::make_shared<DTerm>(DTerm{DTerm::Kind::Leaf, std::move(t), nullptr, nullptr,
                                       nullptr, nullptr});
}
DTermPtr dweaken(DTermPtr a) {
  return std::make_shared<DTerm>(
      DTerm{DTerm::Kind::Weaken, nullptr, std::move(a), nullptr, nullptr, nullptr});
}
DTermPtr dlam(DTermPtr a) {
  return std::make_shared<DTerm>(
      DTerm{DTerm::Kind::Lam, nullptr, std::move(a), nullptr, nullptr, nullptr});
}
DTermPtr dapp(DTermPtr a, DTermPtr b) {
  return std::make_shared<DTerm>(
      DTerm{DTerm::Kind::App, nullptr, std::move(a), std::move(b), nullptr, nullptr});
}
DTermPtr dsuc(DTermPtr a) {
  return std::make_shared<DTerm>(
      DTerm{DTerm::Kind::Suc, nullptr, std::move(a), nullptr, nullptr, nullptr});
}
DTermPtr dpend(TermPtr m, SubstPtr s) {
  return std::make_shared<DTerm>(
      DTerm{DTerm::Kind::Pending, nullptr, nullptr, nullptr, std::move(m), std::move(s)});
}

DSubstPtr dsleaf(SubstPtr s) {
  return std::make_shared<DSubst>(
      DSubst{DSubst::Kind::Leaf, std::move(s), nullptr, nullptr, nullptr, nullptr});
}
DSubstPtr dsweaken(DSubstPtr sub) {
  return std::make_shared<DSubst>(
      DSubst{DSubst::Kind::Weaken, nullptr, std::move(sub), nullptr, nullptr, nullptr});
}
DSubstPtr dscons(DSubstPtr sub, DTermPtr head) {
  return std::make_shared<DSubst>(
      DSubst{DSubst::Kind::Cons, nullptr, std::move(sub), std::move(head), nullptr, nullptr});
}
DSubstPtr dpcomp(SubstPtr a, SubstPtr b) {
  return std::make_shared<DSubst>(
      DSubst{DSubst::Kind::PendingComp, nullptr, nullptr, nullptr, std::move(a), std::move(b)});
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string rd_term_top(const DTermPtr& d);
std::string rd_subst_top(const DSubstPtr& d);

std::string pending_text(const DTermPtr& d) {
  return print_detail::term_factor(d->pm) + " [ " + print_subst(d->ps) + " ]";
}

std::string rd_term_factor(const DTermPtr& d) {
  switch (d->kind) {
    case DTerm::Kind::Leaf:
      return print_detail::term_factor(d->leaf);
    case DTerm::Kind::Weaken:
      return rd_term_factor(d->a) + "^";
    case DTerm::Kind::Pending:
      return paren(pending_text(d));
    default:
      return paren(rd_term_top(d));
  }
}

std::string rd_term_app(const DTermPtr& d) {
  switch (d->kind) {
    case DTerm::Kind::App: {
      const DTermPtr& fun = d->a;
      bool wrap = fun->kind == DTerm::Kind::Lam || fun->kind == DTerm::Kind::Pending ||
                  (fun->kind == DTerm::Kind::Leaf && fun->leaf->kind == Term::Kind::Lam);
      std::string lhs = wrap ? paren(rd_term_top(fun)) : rd_term_app(fun);
      return lhs + " " + rd_term_factor(d->b);
    }
    case DTerm::Kind::Suc:
      return "suc " + rd_term_factor(d->a);
    case DTerm::Kind::Pending:
      return pending_text(d);
    default:
      return rd_term_factor(d);
  }
}

std::string rd_term_top(const DTermPtr& d) {
  switch (d->kind) {
    case DTerm::Kind::Leaf:
      return print_term(d->leaf);
    case DTerm::Kind::Lam: {
      const DTermPtr& body = d->a;
      bool wrap = body->kind == DTerm::Kind::Lam || body->kind == DTerm::Kind::App ||
                  body->kind == DTerm::Kind::Pending ||
                  (body->kind == DTerm::Kind::Leaf && (body->leaf->kind == Term::Kind::Lam ||
                                                       body->leaf->kind == Term::Kind::App));
      return "\\ " + (wrap ? paren(rd_term_top(body)) : rd_term_top(body));
    }
    default:
      return rd_term_app(d);
  }
}

std::string rd_subst_postfix(const DSubstPtr& d) {
  switch (d->kind) {
    case DSubst::Kind::Leaf:
      return print_detail::subst_postfix(d->leaf);
    case DSubst::Kind::Weaken:
      return rd_subst_postfix(d->sub) + "^";
    default:
      return paren(rd_subst_top(d));
  }
}

std::string rd_subst_top(const DSubstPtr& d) {
  switch (d->kind) {
    case DSubst::Kind::Leaf:
      return print_subst(d->leaf);
    case DSubst::Kind::Cons: {
      std::string head = d->head->kind == DTerm::Kind::Leaf
                             ? print_detail::cons_head(d->head->leaf)
                             : paren(rd_term_top(d->head));
      std::string tail = d->sub->kind == DSubst::Kind::PendingComp
                             ? paren(rd_subst_top(d->sub))
                             : rd_subst_top(d->sub);
      return tail + " , " + head;
    }
    case DSubst::Kind::PendingComp:
      return print_subst(d->ca) + " ; " + print_subst(d->cb);
    case DSubst::Kind::Weaken:
      return rd_subst_postfix(d);
  }
  return {};
}

// Renders the whole expression with the given display node in place of
// the subexpression currently being rewritten.
using TermRender = std::function<std::string(const DTermPtr&)>;
using SubstRender = std::function<std::string(const DSubstPtr&)>;

struct TermTracer {
  const TraceSink& sink;
  TermRender render;
};

struct SubstTracer {
  const TraceSink& sink;
  SubstRender render;
};

void emit(const TraceSink& sink, const char* rule, std::string before, std::string after) {
  sink(TraceStep{rule, std::move(before), std::move(after)});
}

// ---- instantiation ----

TermPtr inst(const TermPtr& m, const SubstPtr& s, const TermTracer* tr);
SubstPtr comp(const SubstPtr& s, const SubstPtr& t, const SubstTracer* tr);

TermPtr inst(const TermPtr& m, const SubstPtr& s, const TermTracer* tr) {
  switch (s->kind) {
    case Subst::Kind::Id:  // (1)  M [ id ] = M
      if (tr) emit(tr->sink, "inst-1", tr->render(dpend(m, s)), tr->render(dleaf(m)));
      return m;
    case Subst::Kind::Weaken: {  // (2)  M [ s ^ ] = (M [ s ]) ^
      if (tr) {
        emit(tr->sink, "inst-2", tr->render(dpend(m, s)),
             tr->render(dweaken(dpend(m, s->sub))));
        TermTracer inner{tr->sink,
                         [tr](const DTermPtr& d) { return tr->render(dweaken(d)); }};
        return weaken(inst(m, s->sub, &inner));
      }
      return weaken(inst(m, s->sub, nullptr));
    }
    case Subst::Kind::Cons:
      break;
  }
  // Only now does the term matter.
  switch (m->kind) {
    case Term::Kind::VarZ:  // (3)  # [ s , P ] = P
      if (tr) emit(tr->sink, "inst-3", tr->render(dpend(m, s)), tr->render(dleaf(s->head)));
      return s->head;
    case Term::Kind::Weaken:  // (4)  M ^ [ s , P ] = M [ s ]
      if (tr) {
        emit(tr->sink, "inst-4", tr->render(dpend(m, s)), tr->render(dpend(m->a, s->sub)));
      }
      return inst(m->a, s->sub, tr);
    case Term::Kind::Lam: {  // (5)  (\ N) [ s ] = \ (N [ s ^ , # ])
      SubstPtr pushed = scons(sweaken(s), varz());
      if (tr) {
        emit(tr->sink, "inst-5", tr->render(dpend(m, s)),
             tr->render(dlam(dpend(m->a, pushed))));
        TermTracer inner{tr->sink, [tr](const DTermPtr& d) { return tr->render(dlam(d)); }};
        return lam(inst(m->a, pushed, &inner));
      }
      return lam(inst(m->a, pushed, nullptr));
    }
    case Term::Kind::App: {  // (6)  (L M) [ s ] = (L [ s ]) (M [ s ])
      if (tr) {
        emit(tr->sink, "inst-6", tr->render(dpend(m, s)),
             tr->render(dapp(dpend(m->a, s), dpend(m->b, s))));
        TermTracer left{tr->sink, [tr, &m, &s](const DTermPtr& d) {
                          return tr->render(dapp(d, dpend(m->b, s)));
                        }};
        TermPtr fun = inst(m->a, s, &left);
        TermTracer right{tr->sink, [tr, &fun](const DTermPtr& d) {
                           return tr->render(dapp(dleaf(fun), d));
                         }};
        TermPtr arg = inst(m->b, s, &right);
        return app(std::move(fun), std::move(arg));
      }
      return app(inst(m->a, s, nullptr), inst(m->b, s, nullptr));
    }
    case Term::Kind::Zero:  // (7)  zero [ s ] = zero
      if (tr) emit(tr->sink, "inst-7", tr->render(dpend(m, s)), tr->render(dleaf(m)));
      return m;
    case Term::Kind::Suc: {  // (8)  (suc M) [ s ] = suc (M [ s ])
      if (tr) {
        emit(tr->sink, "inst-8", tr->render(dpend(m, s)),
             tr->render(dsuc(dpend(m->a, s))));
        TermTracer inner{tr->sink, [tr](const DTermPtr& d) { return tr->render(dsuc(d)); }};
        return suc(inst(m->a, s, &inner));
      }
      return suc(inst(m->a, s, nullptr));
    }
    case Term::Kind::Annot:
      break;
  }
  throw Error(Error::Kind::TypeMismatch, "internal: annotation inside a sealed term");
}

// ---- composition ----

SubstPtr comp(const SubstPtr& s, const SubstPtr& t, const SubstTracer* tr) {
  switch (t->kind) {
    case Subst::Kind::Id:  // (1)  s ; id = s
      if (tr) emit(tr->sink, "comp-1", tr->render(dpcomp(s, t)), tr->render(dsleaf(s)));
      return s;
    case Subst::Kind::Weaken: {  // (2)  s ; (t ^) = (s ; t) ^
      if (tr) {
        emit(tr->sink, "comp-2", tr->render(dpcomp(s, t)),
             tr->render(dsweaken(dpcomp(s, t->sub))));
        SubstTracer inner{tr->sink,
                          [tr](const DSubstPtr& d) { return tr->render(dsweaken(d)); }};
        return sweaken(comp(s, t->sub, &inner));
      }
      return sweaken(comp(s, t->sub, nullptr));
    }
    case Subst::Kind::Cons:
      break;
  }
  switch (s->kind) {
    case Subst::Kind::Id:  // (3)  id ; t = t
      if (tr) emit(tr->sink, "comp-3", tr->render(dpcomp(s, t)), tr->render(dsleaf(t)));
      return t;
    case Subst::Kind::Weaken:  // (4)  (s ^) ; (t , Q) = s ; t
      if (tr) {
        emit(tr->sink, "comp-4", tr->render(dpcomp(s, t)),
             tr->render(dpcomp(s->sub, t->sub)));
      }
      return comp(s->sub, t->sub, tr);
    case Subst::Kind::Cons: {  // (5)  (s , P) ; t = (s ; t) , (P [ t ])
      if (tr) {
        emit(tr->sink, "comp-5", tr->render(dpcomp(s, t)),
             tr->render(dscons(dpcomp(s->sub, t), dpend(s->head, t))));
        SubstTracer sub_tr{tr->sink, [tr, &s, &t](const DSubstPtr& d) {
                             return tr->render(dscons(d, dpend(s->head, t)));
                           }};
        SubstPtr sub = comp(s->sub, t, &sub_tr);
        TermTracer head_tr{tr->sink, [tr, &sub](const DTermPtr& d) {
                             return tr->render(dscons(dsleaf(sub), d));
                           }};
        TermPtr head = inst(s->head, t, &head_tr);
        return scons(std::move(sub), std::move(head));
      }
      return scons(comp(s->sub, t, nullptr), inst(s->head, t, nullptr));
    }
  }
  throw Error(Error::Kind::ContextMismatch, "internal: unreachable substitution kind");
}

// ---- force and beta ----

using WholeTermRender = std::function<std::string(const TermPtr&)>;

TermPtr force_raw(const TermPtr& m, const TraceSink* sink, const WholeTermRender& render) {
  if (m->kind != Term::Kind::Weaken) return m;
  WholeTermRender inner = [&render](const TermPtr& t) { return render(weaken(t)); };
  TermPtr body = force_raw(m->a, sink, inner);
  switch (body->kind) {
    case Term::Kind::VarZ:
    case Term::Kind::Weaken:
      // Variable spine: stays as-is.
      return body == m->a ? m : weaken(body);
    case Term::Kind::Lam: {
      // Push the weakening under the binder: body [ id ^ ^ , # ].
      TermPtr result =
          lam(inst(body->a, scons(sweaken(sweaken(sid())), varz()), nullptr));
      if (sink) emit(*sink, "force-lam", render(weaken(body)), render(result));
      return result;
    }
    case Term::Kind::App: {
      TermPtr result = app(weaken(body->a), weaken(body->b));
      if (sink) emit(*sink, "force-app", render(weaken(body)), render(result));
      return result;
    }
    case Term::Kind::Zero: {
      if (sink) emit(*sink, "force-zero", render(weaken(body)), render(body));
      return body;
    }
    case Term::Kind::Suc: {
      TermPtr result = suc(weaken(body->a));
      if (sink) emit(*sink, "force-suc", render(weaken(body)), render(result));
      return result;
    }
    case Term::Kind::Annot:
      break;
  }
  throw Error(Error::Kind::TypeMismatch, "internal: annotation inside a sealed term");
}

struct BetaOutcome {
  TermPtr term;
  TraceStep step;
};

std::optional<BetaOutcome> beta_raw(const TermPtr& m, const TraceSink* sink,
                                    const WholeTermRender& render) {
  TermPtr head = force_raw(m, sink, render);
  switch (head->kind) {
    case Term::Kind::App: {
      WholeTermRender fun_render = [&render, &head](const TermPtr& t) {
        return render(app(t, head->b));
      };
      TermPtr fun = force_raw(head->a, sink, fun_render);
      if (fun->kind == Term::Kind::Lam) {
        // (\ N) M  —→  N [ id , M ]
        TermPtr contractum = inst(fun->a, scons(sid(), head->b), nullptr);
        TraceStep step{"beta", render(app(fun, head->b)), render(contractum)};
        if (sink) (*sink)(step);
        return BetaOutcome{contractum, std::move(step)};
      }
      if (auto in_fun = beta_raw(fun, sink, fun_render)) {
        return BetaOutcome{app(in_fun->term, head->b), std::move(in_fun->step)};
      }
      WholeTermRender arg_render = [&render, &fun](const TermPtr& t) {
        return render(app(fun, t));
      };
      if (auto in_arg = beta_raw(head->b, sink, arg_render)) {
        return BetaOutcome{app(fun, in_arg->term), std::move(in_arg->step)};
      }
      return std::nullopt;
    }
    case Term::Kind::Lam: {
      WholeTermRender body_render = [&render](const TermPtr& t) { return render(lam(t)); };
      if (auto in_body = beta_raw(head->a, sink, body_render)) {
        return BetaOutcome{lam(in_body->term), std::move(in_body->step)};
      }
      return std::nullopt;
    }
    case Term::Kind::Suc: {
      WholeTermRender body_render = [&render](const TermPtr& t) { return render(suc(t)); };
      if (auto in_body = beta_raw(head->a, sink, body_render)) {
        return BetaOutcome{suc(in_body->term), std::move(in_body->step)};
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

WholeTermRender plain_render() {
  return [](const TermPtr& t) { return print_term(t); };
}

}  // namespace

std::string trace_step_json(const TraceStep& step) {
  nlohmann::json j;
  j["rule"] = step.rule;
  j["before"] = step.before;
  j["after"] = step.after;
  return j.dump();
}

TypedTerm instantiate(const TypedTerm& m, const TypedSubst& s, const TraceSink& sink) {
  if (!(m.ctx() == s.dst())) {
    throw ContextMismatchError("instantiate: term context " + print_ctx(m.ctx()) +
                               " does not match the substitution target " +
                               print_ctx(s.dst()));
  }
  TermPtr out;
  if (sink) {
    TermTracer tr{sink, [](const DTermPtr& d) { return rd_term_top(d); }};
    out = inst(m.term(), s.subst(), &tr);
  } else {
    out = inst(m.term(), s.subst(), nullptr);
  }
  return detail::seal_term(std::move(out), s.src(), m.ty());
}

TypedSubst compose(const TypedSubst& s, const TypedSubst& t, const TraceSink& sink) {
  if (!(s.src() == t.dst())) {
    throw ContextMismatchError("compose: left source " + print_ctx(s.src()) +
                               " does not match the right target " + print_ctx(t.dst()));
  }
  SubstPtr out;
  if (sink) {
    SubstTracer tr{sink, [](const DSubstPtr& d) { return rd_subst_top(d); }};
    out = comp(s.subst(), t.subst(), &tr);
  } else {
    out = comp(s.subst(), t.subst(), nullptr);
  }
  return detail::seal_subst(std::move(out), t.src(), s.dst());
}

TypedTerm subst0(const TypedTerm& n, const TypedTerm& m) {
  if (n.ctx().empty() || !(n.ctx().popped() == m.ctx()) ||
      !equal(n.ctx().entry(0), m.ty())) {
    throw ContextMismatchError(
        "subst0: first operand must live over the second operand's context "
        "extended by its type");
  }
  TermPtr out = inst(n.term(), scons(sid(), m.term()), nullptr);
  return detail::seal_term(std::move(out), m.ctx(), n.ty());
}

TypedTerm subst1(const TypedTerm& n, const TypedTerm& m) {
  if (n.ctx().size() < 2 || !(n.ctx().popped().popped() == m.ctx()) ||
      !equal(n.ctx().entry(1), m.ty())) {
    throw ContextMismatchError(
        "subst1: first operand must live over the second operand's context "
        "extended by its type and one more entry");
  }
  TermPtr out = inst(n.term(), scons(sweaken(scons(sid(), m.term())), varz()), nullptr);
  return detail::seal_term(std::move(out), m.ctx().pushed(n.ctx().entry(0)), n.ty());
}

TypedTerm force(const TypedTerm& m, const TraceSink& sink) {
  TermPtr out = force_raw(m.term(), sink ? &sink : nullptr, plain_render());
  return detail::seal_term(std::move(out), m.ctx(), m.ty());
}

std::optional<std::pair<TypedTerm, TraceStep>> beta_step(const TypedTerm& m,
                                                         const TraceSink& sink) {
  auto outcome = beta_raw(m.term(), sink ? &sink : nullptr, plain_render());
  if (!outcome) return std::nullopt;
  return std::make_pair(detail::seal_term(outcome->term, m.ctx(), m.ty()),
                        std::move(outcome->step));
}

TypedTerm normalize(const TypedTerm& m, std::uint64_t step_limit, const TraceSink& sink) {
  TermPtr current = m.term();
  std::uint64_t steps = 0;
  for (;;) {
    auto outcome = beta_raw(current, sink ? &sink : nullptr, plain_render());
    if (!outcome) break;
    if (++steps > step_limit) throw StepLimitError(step_limit);
    current = outcome->term;
  }
  TypedTerm normal = detail::seal_term(std::move(current), m.ctx(), m.ty());
  return embed(erase_term(normal), m.ctx(), m.ty());
}

}  // namespace lamup
