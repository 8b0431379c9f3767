#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lamup/classical.hpp"
#include "lamup/engine.hpp"
#include "lamup/errors.hpp"
#include "lamup/generator.hpp"
#include "lamup/print.hpp"

using namespace lamup;

namespace {

TermPtr two_ast() { return lam(lam(app(weaken(varz()), app(weaken(varz()), varz())))); }
TermPtr inc_ast() { return lam(suc(varz())); }
TyPtr nat_f() { return arrow(nat(), nat()); }

TypedTerm typed(const Ctx& ctx, const TyPtr& ty, const TermPtr& raw) {
  return check_term(ctx, ty, raw);
}
TypedSubst tsubst(const Ctx& src, const Ctx& dst, const SubstPtr& raw) {
  return check_subst(src, dst, raw);
}

std::vector<std::string> rules_of(const std::vector<TraceStep>& steps) {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.rule);
  return out;
}

}  // namespace

TEST_CASE("golden instantiation of two's body with id , inc") {
  TypedTerm body =
      typed(Ctx({nat_f()}), nat_f(), lam(app(weaken(varz()), app(weaken(varz()), varz()))));
  TypedSubst s = tsubst(Ctx(), Ctx({nat_f()}), scons(sid(), inc_ast()));
  std::vector<TraceStep> steps;
  TypedTerm out = instantiate(body, s, [&](const TraceStep& st) { steps.push_back(st); });

  TermPtr expected = lam(app(weaken(inc_ast()), app(weaken(inc_ast()), varz())));
  CHECK(equal(out.term(), expected));
  CHECK(out.ctx() == Ctx());
  CHECK(equal(out.ty(), nat_f()));

  CHECK(rules_of(steps) ==
        std::vector<std::string>{"inst-5", "inst-6", "inst-4", "inst-2", "inst-3", "inst-6",
                                 "inst-4", "inst-2", "inst-3", "inst-3"});
  // the first five snapshots follow the derivation chain exactly
  CHECK(steps[0].before == "(\\ (#^ (#^ #))) [ id , (\\ suc #) ]");
  CHECK(steps[0].after == "\\ ((#^ (#^ #)) [ (id , (\\ suc #))^ , # ])");
  CHECK(steps[1].after ==
        "\\ ((#^ [ (id , (\\ suc #))^ , # ]) ((#^ #) [ (id , (\\ suc #))^ , # ]))");
  CHECK(steps[2].after ==
        "\\ ((# [ (id , (\\ suc #))^ ]) ((#^ #) [ (id , (\\ suc #))^ , # ]))");
  CHECK(steps[3].after ==
        "\\ ((# [ id , (\\ suc #) ])^ ((#^ #) [ (id , (\\ suc #))^ , # ]))");
  CHECK(steps[4].after == "\\ ((\\ suc #)^ ((#^ #) [ (id , (\\ suc #))^ , # ]))");
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    CHECK(steps[i + 1].before == steps[i].after);
  }
  CHECK(steps.back().after == "\\ ((\\ suc #)^ ((\\ suc #)^ #))");

  // tracing must not change the result
  CHECK(equal(instantiate(body, s).term(), out.term()));
}

TEST_CASE("instantiation clause endpoints") {
  // (3): # [ id , zero ] = zero
  TypedTerm v = typed(Ctx({nat()}), nat(), varz());
  TypedSubst s = tsubst(Ctx(), Ctx({nat()}), scons(sid(), zero()));
  CHECK(equal(instantiate(v, s).term(), zero()));

  // (4) then (1): #^ [ id , zero ] = # [ id ] = #
  TypedTerm wv = typed(Ctx({nat(), nat()}), nat(), weaken(varz()));
  TypedSubst s2 = tsubst(Ctx({nat()}), Ctx({nat(), nat()}), scons(sid(), zero()));
  TypedTerm dropped = instantiate(wv, s2);
  CHECK(equal(dropped.term(), varz()));
  // erasure homomorphism cross-check on the same instance
  CHECK(equal(erase_term(dropped), psubst(erase_term(wv), erase_subst(s2))));
}

TEST_CASE("M [ id ] returns M unchanged") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 200; ++i) {
    SplitMix64 rng = SplitMix64::for_case(0x1D, i);
    Ctx ctx = gen_ctx(rng, cfg);
    TyPtr ty = gen_type(rng, cfg);
    TypedTerm m = typed(ctx, ty, gen_term(rng, cfg, ctx, ty, 1 + rng.below(30)));
    TypedSubst identity = tsubst(ctx, ctx, sid());
    CHECK(equal(instantiate(m, identity).term(), m.term()));
  }
}

TEST_CASE("composition clause endpoints") {
  // (3): id ; (id , zero) = id , zero
  TypedSubst t = tsubst(Ctx(), Ctx({nat()}), scons(sid(), zero()));
  TypedSubst identity = tsubst(Ctx({nat()}), Ctx({nat()}), sid());
  CHECK(equal(compose(identity, t).subst(), t.subst()));

  // ((id , M)^ , #) ; (id , L) = (id , M) , L   with M = zero, L = suc zero
  SubstPtr s1 = scons(sweaken(scons(sid(), zero())), varz());
  TypedSubst left = tsubst(Ctx({nat()}), Ctx({nat(), nat()}), s1);
  TypedSubst right = tsubst(Ctx(), Ctx({nat()}), scons(sid(), suc(zero())));
  TypedSubst composed = compose(left, right);
  CHECK(equal(composed.subst(), scons(scons(sid(), zero()), suc(zero()))));
  CHECK(composed.src() == Ctx());
  CHECK(composed.dst() == Ctx({nat(), nat()}));
  // denotation cross-check: composing then erasing equals substituting
  // the erased images pointwise
  ParallelSubst expected_env;
  for (const auto& image : erase_subst(left).images) {
    expected_env.images.push_back(psubst(image, erase_subst(right)));
  }
  CHECK(equal(erase_subst(composed), expected_env));
}

TEST_CASE("subst0") {
  TypedTerm m = typed(Ctx(), nat(), zero());
  // # [ zero ]0 = zero
  CHECK(equal(subst0(typed(Ctx({nat()}), nat(), varz()), m).term(), zero()));
  // (suc #) [ zero ]0 = suc zero, cross-checked against the oracle
  TypedTerm n = typed(Ctx({nat()}), nat(), suc(varz()));
  TypedTerm out = subst0(n, m);
  CHECK(equal(out.term(), suc(zero())));
  TypedSubst single = tsubst(Ctx(), Ctx({nat()}), scons(sid(), zero()));
  CHECK(equal(erase_term(out), psubst(erase_term(n), erase_subst(single))));
  // (N ^) [ M ]0 = N on a compound N
  TypedTerm weakened = typed(Ctx({nat()}), nat_f(), weaken(inc_ast()));
  CHECK(equal(subst0(weakened, m).term(), inc_ast()));
}

TEST_CASE("subst1") {
  TypedTerm m = typed(Ctx(), nat(), zero());
  // (#^) [ zero ]1 = zero^   (clauses (4), (2), (3))
  TypedTerm n = typed(Ctx({nat(), nat()}), nat(), weaken(varz()));
  TypedTerm out = subst1(n, m);
  CHECK(equal(out.term(), weaken(zero())));
  CHECK(out.ctx() == Ctx({nat()}));
  // # [ M ]1 = #
  TypedTerm keep = typed(Ctx({nat(), nat()}), nat(), varz());
  CHECK(equal(subst1(keep, m).term(), varz()));
}

TEST_CASE("double-subst and commute-subst on concrete instances") {
  // N = #^ (#) over [N, N -> N]? keep it small: N over ctx+A+B at C
  Ctx gamma;
  TyPtr a = nat(), b = nat(), c = nat();
  TypedTerm n = typed(gamma.pushed(a).pushed(b), c, app(inc_ast(), weaken(varz())));
  TypedTerm m = typed(gamma, a, zero());
  TypedTerm l = typed(gamma, b, suc(zero()));
  TypedTerm lhs = subst0(subst1(n, m), l);
  TypedTerm wl = check_term(gamma.pushed(a), b, weaken(l.term()));
  TypedTerm rhs = subst0(subst0(n, wl), m);
  CHECK(equal(lhs.term(), rhs.term()));

  TypedTerm m2 = typed(gamma.pushed(a), b, suc(varz()));
  TypedTerm lhs2 = subst0(subst0(n, m2), m);
  TypedTerm rhs2 = subst0(subst1(n, m), subst0(m2, m));
  CHECK(equal(lhs2.term(), rhs2.term()));
}

TEST_CASE("force") {
  // a weakened closed lambda forces back to itself
  TypedTerm wi = typed(Ctx({nat()}), nat_f(), weaken(inc_ast()));
  std::vector<TraceStep> steps;
  TypedTerm f = force(wi, [&](const TraceStep& st) { steps.push_back(st); });
  CHECK(equal(f.term(), inc_ast()));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].rule == "force-lam");

  CHECK(equal(force(typed(Ctx({nat()}), nat(), weaken(zero()))).term(), zero()));
  CHECK(equal(force(typed(Ctx({nat()}), nat(), varz())).term(), varz()));
  // variable spines are returned as-is
  CHECK(equal(force(typed(Ctx({nat(), nat()}), nat(), weaken(varz()))).term(),
              weaken(varz())));

  // application distributes one level and preserves the erasure
  TypedTerm wa = typed(Ctx({nat_f(), nat()}), nat(), weaken(app(varz(), zero())));
  TypedTerm fa = force(wa);
  REQUIRE(fa.term()->kind == Term::Kind::App);
  CHECK(equal(erase_term(fa), erase_term(wa)));
  // suc distributes one level
  TypedTerm ws = typed(Ctx({nat()}), nat(), weaken(suc(zero())));
  TypedTerm fs = force(ws);
  CHECK(fs.term()->kind == Term::Kind::Suc);
  CHECK(equal(erase_term(fs), erase_term(ws)));
}

TEST_CASE("beta_step") {
  TypedTerm redex = typed(Ctx(), nat_f(), app(two_ast(), inc_ast()));
  auto out = beta_step(redex);
  REQUIRE(out.has_value());
  CHECK(equal(out->first.term(), lam(app(weaken(inc_ast()), app(weaken(inc_ast()), varz())))));
  CHECK(out->second.rule == "beta");
  CHECK(out->second.before == "(\\ (\\ (#^ (#^ #)))) (\\ suc #)");
  CHECK(out->second.after == "\\ ((\\ suc #)^ ((\\ suc #)^ #))");

  CHECK(!beta_step(typed(Ctx(), nat(), zero())).has_value());
  CHECK(!beta_step(typed(Ctx(), nat_f(), inc_ast())).has_value());

  auto identity_redex = beta_step(typed(Ctx(), nat(), app(lam(varz()), zero())));
  REQUIRE(identity_redex.has_value());
  CHECK(equal(identity_redex->first.term(), zero()));

  // redexes hidden under a weakening are found on the forced view
  TypedTerm hidden = typed(Ctx({nat()}), nat(), weaken(app(lam(varz()), zero())));
  auto stepped = beta_step(hidden);
  REQUIRE(stepped.has_value());
  CHECK(equal(erase_term(stepped->first), czero()));
}

TEST_CASE("normalize") {
  TypedTerm two_inc = typed(Ctx(), nat_f(), app(two_ast(), inc_ast()));
  CHECK(equal(normalize(two_inc).term(), lam(suc(suc(varz())))));
  CHECK(print_term(normalize(two_inc).term()) == "\\ suc (suc #)");
  CHECK(equal(normalize(typed(Ctx(), nat(), zero())).term(), zero()));
  CHECK(equal(normalize(typed(Ctx(), nat(), app(lam(varz()), zero()))).term(), zero()));
  CHECK_THROWS_AS(normalize(two_inc, 1), StepLimitError);
  // normal forms are weakening-canonical: M1 normalizes to M0
  TyPtr a = nat(), b = arrow(nat(), nat()), c = nat();
  Ctx ctx({arrow(a, arrow(b, c)), a, b});
  TermPtr m0 = app(app(weaken(weaken(varz())), weaken(varz())), varz());
  TermPtr m1 = app(weaken(app(weaken(varz()), varz())), varz());
  CHECK(equal(normalize(typed(ctx, c, m1)).term(), m0));
}

TEST_CASE("context mismatches are rejected") {
  TypedTerm closed = typed(Ctx(), nat(), zero());
  TypedSubst into_nat = tsubst(Ctx(), Ctx({nat()}), scons(sid(), zero()));
  CHECK_THROWS_AS(instantiate(closed, into_nat), ContextMismatchError);
  TypedSubst identity = tsubst(Ctx(), Ctx(), sid());
  CHECK_THROWS_AS(compose(into_nat, into_nat), ContextMismatchError);
  CHECK_THROWS_AS(subst0(closed, closed), ContextMismatchError);
  CHECK_THROWS_AS(subst1(closed, closed), ContextMismatchError);
  (void)identity;
}

TEST_CASE("trace steps serialize to single-line json") {
  CHECK(trace_step_json(TraceStep{"beta", "a", "b"}) ==
        "{\"after\":\"b\",\"before\":\"a\",\"rule\":\"beta\"}");
}

TEST_CASE("fusion on the golden pieces") {
  // M [ s ] [ t ] = M [ s ; t ] with the worked-example ingredients
  TypedTerm body =
      typed(Ctx({nat_f()}), nat_f(), lam(app(weaken(varz()), app(weaken(varz()), varz()))));
  TypedSubst s = tsubst(Ctx({nat()}), Ctx({nat_f()}), scons(sweaken(sid()), inc_ast()));
  TypedSubst t = tsubst(Ctx(), Ctx({nat()}), scons(sid(), zero()));
  TypedTerm lhs = instantiate(instantiate(body, s), t);
  TypedTerm rhs = instantiate(body, compose(s, t));
  CHECK(equal(lhs.term(), rhs.term()));
}

TEST_CASE("tracing never changes results") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 200; ++i) {
    SplitMix64 rng = SplitMix64::for_case(0x7ACE, i);
    Ctx gamma = gen_ctx(rng, cfg), theta = gen_ctx(rng, cfg), delta = gen_ctx(rng, cfg);
    TyPtr a = gen_type(rng, cfg);
    TypedTerm m = typed(delta, a, gen_term(rng, cfg, delta, a, 1 + rng.below(30)));
    TypedSubst s = tsubst(theta, delta, gen_subst(rng, cfg, theta, delta, 1 + rng.below(30)));
    TypedSubst t = tsubst(gamma, theta, gen_subst(rng, cfg, gamma, theta, 1 + rng.below(30)));
    TraceSink drain = [](const TraceStep&) {};
    CHECK(equal(instantiate(m, s, drain).term(), instantiate(m, s).term()));
    CHECK(equal(compose(s, t, drain).subst(), compose(s, t).subst()));
    CHECK(equal(force(m, drain).term(), force(m).term()));
    CHECK(equal(normalize(m, kDefaultStepLimit, drain).term(), normalize(m).term()));
  }
}

TEST_CASE("normalize reports its reduction steps") {
  TypedTerm two_inc = typed(Ctx(), nat_f(), app(two_ast(), inc_ast()));
  std::vector<TraceStep> steps;
  normalize(two_inc, kDefaultStepLimit, [&](const TraceStep& st) { steps.push_back(st); });
  std::size_t betas = 0, forces = 0;
  for (const auto& st : steps) {
    if (st.rule == "beta") ++betas;
    if (st.rule == "force-lam") ++forces;
  }
  CHECK(betas == 3);
  CHECK(forces == 2);
  CHECK(steps.front().rule == "beta");
  CHECK(steps.front().before == "(\\ (\\ (#^ (#^ #)))) (\\ suc #)");
}

TEST_CASE("composition tracing labels comp clauses") {
  TypedSubst left = tsubst(Ctx({nat()}), Ctx({nat(), nat()}),
                           scons(sweaken(scons(sid(), zero())), varz()));
  TypedSubst right = tsubst(Ctx(), Ctx({nat()}), scons(sid(), suc(zero())));
  std::vector<TraceStep> steps;
  compose(left, right, [&](const TraceStep& st) { steps.push_back(st); });
  // (5) splits the cons, (4) drops the weakening, (1) finishes the tail,
  // (3) instantiates the head variable
  CHECK(rules_of(steps) ==
        std::vector<std::string>{"comp-5", "comp-4", "comp-1", "inst-3"});
}
