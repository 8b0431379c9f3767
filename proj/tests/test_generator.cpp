#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamup/check.hpp"
#include "lamup/errors.hpp"
#include "lamup/generator.hpp"
#include "lamup/print.hpp"

using namespace lamup;

TEST_CASE("identical seeds give identical output") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 100; ++i) {
    SplitMix64 a = SplitMix64::for_case(42, i);
    SplitMix64 b = SplitMix64::for_case(42, i);
    Ctx ca = gen_ctx(a, cfg), cb = gen_ctx(b, cfg);
    TyPtr ta = gen_type(a, cfg), tb = gen_type(b, cfg);
    REQUIRE(ca == cb);
    REQUIRE(equal(ta, tb));
    TermPtr ma = gen_term(a, cfg, ca, ta, cfg.max_term_size);
    TermPtr mb = gen_term(b, cfg, cb, tb, cfg.max_term_size);
    CHECK(equal(ma, mb));
    CHECK(print_term(ma) == print_term(mb));
  }
}

TEST_CASE("config-seeded entry points reproduce across calls") {
  GenConfig cfg;
  cfg.seed = 42;
  CHECK(equal(gen_type(cfg), gen_type(cfg)));
  CHECK(gen_ctx(cfg) == gen_ctx(cfg));
  Ctx ctx({nat()});
  CHECK(equal(gen_term(cfg, ctx, nat(), 20), gen_term(cfg, ctx, nat(), 20)));
  CHECK(equal(gen_subst(cfg, ctx, ctx, 20), gen_subst(cfg, ctx, ctx, 20)));
}

TEST_CASE("every generated value typechecks") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    SplitMix64 rng = SplitMix64::for_case(7, i);
    Ctx src = gen_ctx(rng, cfg), dst = gen_ctx(rng, cfg);
    TyPtr ty = gen_type(rng, cfg);
    TermPtr t = gen_term(rng, cfg, src, ty, 1 + rng.below(cfg.max_term_size));
    CHECK_NOTHROW(check_term(src, ty, t));
    SubstPtr s = gen_subst(rng, cfg, src, dst, 1 + rng.below(cfg.max_term_size));
    CHECK_NOTHROW(check_subst(src, dst, s));
  }
}

namespace {

void collect(const TermPtr& t, bool seen[6], bool& weaken_nonvar) {
  seen[static_cast<int>(t->kind)] = true;
  switch (t->kind) {
    case Term::Kind::Weaken:
      if (t->a->kind != Term::Kind::VarZ && t->a->kind != Term::Kind::Weaken) {
        weaken_nonvar = true;
      }
      collect(t->a, seen, weaken_nonvar);
      break;
    case Term::Kind::Lam:
    case Term::Kind::Suc:
      collect(t->a, seen, weaken_nonvar);
      break;
    case Term::Kind::App:
      collect(t->a, seen, weaken_nonvar);
      collect(t->b, seen, weaken_nonvar);
      break;
    default:
      break;
  }
}

}  // namespace

TEST_CASE("constructor coverage over 1000 samples at the default config") {
  GenConfig cfg;
  bool term_seen[6] = {};
  bool subst_seen[3] = {};
  bool weaken_nonvar = false;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    SplitMix64 rng = SplitMix64::for_case(11, i);
    Ctx src = gen_ctx(rng, cfg), dst = gen_ctx(rng, cfg);
    TyPtr ty = gen_type(rng, cfg);
    collect(gen_term(rng, cfg, src, ty, 1 + rng.below(cfg.max_term_size)), term_seen,
            weaken_nonvar);
    SubstPtr s = gen_subst(rng, cfg, src, dst, 1 + rng.below(cfg.max_term_size));
    for (SubstPtr cur = s; cur; cur = cur->sub) {
      subst_seen[static_cast<int>(cur->kind)] = true;
      if (cur->kind == Subst::Kind::Cons) collect(cur->head, term_seen, weaken_nonvar);
    }
  }
  for (int k = 0; k < 6; ++k) CHECK(term_seen[k]);
  for (int k = 0; k < 3; ++k) CHECK(subst_seen[k]);
  CHECK(weaken_nonvar);
}

TEST_CASE("size-one leaves") {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 50; ++i) {
    SplitMix64 rng = SplitMix64::for_case(13, i);
    // the only closed natural of size one is zero
    CHECK(gen_term(rng, cfg, Ctx(), nat(), 1)->kind == Term::Kind::Zero);
    TermPtr leaf = gen_term(rng, cfg, Ctx({nat()}), nat(), 1);
    CHECK((leaf->kind == Term::Kind::Zero || leaf->kind == Term::Kind::VarZ));
  }
}

TEST_CASE("the only substitution from [N] to [] is a weakened identity") {
  GenConfig cfg;
  SplitMix64 rng(99);
  CHECK(equal(gen_subst(rng, cfg, Ctx({nat()}), Ctx(), 1), sweaken(sid())));
}

TEST_CASE("unsatisfiable budgets report") {
  GenConfig tiny;
  tiny.max_term_size = 1;
  SplitMix64 rng(1);
  CHECK_THROWS_AS(gen_term(rng, tiny, Ctx(), arrow(nat(), nat()), 1), UnsatisfiableError);
}

TEST_CASE("type depth is capped") {
  GenConfig cfg;
  cfg.max_ty_depth = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    SplitMix64 rng = SplitMix64::for_case(17, i);
    CHECK(gen_type(rng, cfg)->kind == Ty::Kind::Nat);
  }
}
