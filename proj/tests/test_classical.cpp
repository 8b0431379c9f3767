#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamup/classical.hpp"
#include "lamup/engine.hpp"
#include "lamup/errors.hpp"
#include "lamup/generator.hpp"
#include "lamup/print.hpp"

using namespace lamup;

namespace {

CTermPtr ctwo() { return clam(clam(capp(cvar(1), capp(cvar(1), cvar(0))))); }
CTermPtr cinc() { return clam(csuc(cvar(0))); }

TermPtr two_ast() { return lam(lam(app(weaken(varz()), app(weaken(varz()), varz())))); }

}  // namespace

TEST_CASE("shift") {
  CHECK(equal(shift(cvar(0), 1, 0), cvar(1)));
  CHECK(equal(shift(clam(cvar(0)), 5, 0), clam(cvar(0))));
  CHECK(equal(shift(clam(cvar(1)), 1, 0), clam(cvar(2))));
  CHECK(equal(shift(csuc(cvar(2)), 3, 0), csuc(cvar(5))));
  CHECK_THROWS_AS(shift(cvar(0), -1, 0), ScopeError);
}

TEST_CASE("psubst") {
  ParallelSubst env{{czero()}};
  CHECK(equal(psubst(cvar(0), env), czero()));
  CHECK_THROWS_AS(psubst(cvar(1), env), ScopeError);

  // under a binder, images shift and index zero is kept
  ParallelSubst inc_env{{cinc()}};
  CHECK(equal(psubst(clam(capp(cvar(1), cvar(0))), inc_env),
              clam(capp(cinc(), cvar(0)))));

  // identity environment
  ParallelSubst identity{{cvar(0), cvar(1), cvar(2)}};
  CTermPtr open_term = capp(capp(cvar(2), cvar(1)), csuc(cvar(0)));
  CHECK(equal(psubst(open_term, identity), open_term));
}

TEST_CASE("structurally distinct open terms share an erasure") {
  TyPtr a = nat(), b = arrow(nat(), nat()), c = nat();
  Ctx ctx({arrow(a, arrow(b, c)), a, b});
  TypedTerm m0 = check_term(
      ctx, c, app(app(weaken(weaken(varz())), weaken(varz())), varz()));
  TypedTerm m1 =
      check_term(ctx, c, app(weaken(app(weaken(varz()), varz())), varz()));
  CTermPtr expected = capp(capp(cvar(2), cvar(1)), cvar(0));
  CHECK(equal(erase_term(m0), expected));
  CHECK(equal(erase_term(m1), expected));
  CHECK(!equal(m0.term(), m1.term()));  // structurally distinct, same erasure
}

TEST_CASE("erasure of church two") {
  TyPtr a = nat();
  TypedTerm two = check_term(Ctx(), arrow(arrow(a, a), arrow(a, a)), two_ast());
  CHECK(equal(erase_term(two), ctwo()));
}

TEST_CASE("erase_subst") {
  CHECK(equal(erase_subst(check_subst(Ctx({nat()}), Ctx({nat()}), sid())),
              ParallelSubst{{cvar(0)}}));
  CHECK(equal(erase_subst(check_subst(Ctx(), Ctx({nat()}), scons(sid(), zero()))),
              ParallelSubst{{czero()}}));
  // the flip substitution denotes the swapped identity images
  TyPtr a = nat(), b = arrow(nat(), nat());
  Ctx src({a, b}), dst({b, a});
  TypedSubst flip = check_subst(
      src, dst, scons(scons(sweaken(sweaken(sid())), varz()), weaken(varz())));
  CHECK(equal(erase_subst(flip), ParallelSubst{{cvar(1), cvar(0)}}));
}

TEST_CASE("embed") {
  CHECK(equal(embed(cvar(2), Ctx({nat(), nat(), nat()}), nat()).term(),
              weaken(weaken(varz()))));
  CHECK(equal(embed(czero(), Ctx(), nat()).term(), zero()));
  CHECK_THROWS_AS(embed(cvar(5), Ctx({nat()}), nat()), ScopeError);
  CHECK_THROWS_AS(embed(czero(), Ctx(), arrow(nat(), nat())), TypeMismatchError);
  // beta redexes embed fine (no annotations exist classically)
  CHECK_NOTHROW(embed(capp(clam(cvar(0)), czero()), Ctx(), nat()));
  CHECK_NOTHROW(embed(capp(clam(czero()), clam(cvar(0))), Ctx(), nat()));
}

TEST_CASE("embedding the erasure of M1 yields M0") {
  TyPtr a = nat(), b = arrow(nat(), nat()), c = nat();
  Ctx ctx({arrow(a, arrow(b, c)), a, b});
  TermPtr m0 = app(app(weaken(weaken(varz())), weaken(varz())), varz());
  TypedTerm m1 =
      check_term(ctx, c, app(weaken(app(weaken(varz()), varz())), varz()));
  CHECK(equal(embed(erase_term(m1), ctx, c).term(), m0));
}

TEST_CASE("classical normalization") {
  // hand-verified: (λλ. 1 (1 0)) (λ. suc 0) steps to λ. suc (suc 0)
  CHECK(equal(classical_normalize(capp(ctwo(), cinc())), clam(csuc(csuc(cvar(0))))));
  CHECK(equal(classical_normalize(czero()), czero()));
  CHECK(equal(classical_normalize(capp(clam(cvar(0)), czero())), czero()));
  CHECK_THROWS_AS(classical_normalize(capp(ctwo(), cinc()), 1), StepLimitError);
}

TEST_CASE("classical print and parse") {
  CHECK(print_classical(ctwo()) == "\xCE\xBB. \xCE\xBB. 1 (1 0)");
  CHECK(equal(parse_classical("\xCE\xBB. \xCE\xBB. 1 (1 0)"), ctwo()));
  CHECK(equal(parse_classical("\\. suc 0"), cinc()));
  CHECK(equal(parse_classical("(\\. 0) zero"), capp(clam(cvar(0)), czero())));
  CHECK_THROWS_AS(parse_classical("λ 0"), SyntaxError);
  CHECK_THROWS_AS(parse_classical(""), SyntaxError);
}

namespace {

bool scoped_in(const CTermPtr& t, std::size_t depth) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var:
      return t->index < depth;
    case ClassicalTerm::Kind::Lam:
      return scoped_in(t->a, depth + 1);
    case ClassicalTerm::Kind::App:
      return scoped_in(t->a, depth) && scoped_in(t->b, depth);
    case ClassicalTerm::Kind::Suc:
      return scoped_in(t->a, depth);
    case ClassicalTerm::Kind::Zero:
      return true;
  }
  return true;
}

}  // namespace

TEST_CASE("erasure is well-scoped in the term's context") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 300; ++i) {
    SplitMix64 rng = SplitMix64::for_case(0x5C0FE, i);
    Ctx gamma = gen_ctx(rng, cfg);
    TyPtr a = gen_type(rng, cfg);
    TypedTerm m = check_term(gamma, a, gen_term(rng, cfg, gamma, a, 1 + rng.below(30)));
    CHECK(scoped_in(erase_term(m), gamma.size()));
  }
}

TEST_CASE("erasure homomorphism and evaluation agreement, spot checks") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 200; ++i) {
    SplitMix64 rng = SplitMix64::for_case(0xC1A551CA1, i);
    Ctx gamma = gen_ctx(rng, cfg), delta = gen_ctx(rng, cfg);
    TyPtr a = gen_type(rng, cfg);
    TypedTerm m = check_term(delta, a, gen_term(rng, cfg, delta, a, 1 + rng.below(30)));
    TypedSubst s = check_subst(gamma, delta, gen_subst(rng, cfg, gamma, delta, 1 + rng.below(30)));
    CHECK(equal(erase_term(instantiate(m, s)), psubst(erase_term(m), erase_subst(s))));
    CHECK(equal(erase_term(normalize(m)), classical_normalize(erase_term(m))));
  }
}
