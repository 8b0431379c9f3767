#include <benchmark/benchmark.h>

#include "lamup/classical.hpp"
#include "lamup/engine.hpp"
#include "lamup/parse.hpp"
#include "lamup/print.hpp"

namespace {

using namespace lamup;

TyPtr nat_f() { return arrow(nat(), nat()); }

// s (s (... (s z))) with n applications, over [s : N -> N, z : N].
TermPtr church_body(int n) {
  TermPtr acc = varz();
  for (int i = 0; i < n; ++i) acc = app(weaken(varz()), acc);
  return acc;
}

TermPtr church(int n) { return lam(lam(church_body(n))); }

// Reverses a context of k naturals: id^..^ , #^(k-1) , ... , #.
SubstPtr reversal(int k) {
  SubstPtr s = sid();
  for (int i = 0; i < k; ++i) s = sweaken(s);
  for (int i = 0; i < k; ++i) {
    TermPtr spine = varz();
    for (int j = 0; j < i; ++j) spine = weaken(spine);
    s = scons(s, spine);
  }
  return s;
}

Ctx nats(int k) {
  std::vector<TyPtr> entries(static_cast<std::size_t>(k), nat());
  return Ctx(std::move(entries));
}

void BM_Instantiate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TypedTerm body = check_term(Ctx({nat_f()}), nat_f(), lam(church_body(n)));
  TypedSubst s = check_subst(Ctx(), Ctx({nat_f()}), scons(sid(), lam(suc(varz()))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(instantiate(body, s));
  }
}
BENCHMARK(BM_Instantiate)->Arg(4)->Arg(32)->Arg(256);

void BM_Compose(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Ctx ctx = nats(k);
  TypedSubst rev = check_subst(ctx, ctx, reversal(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(rev, rev));
  }
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(8)->Arg(32);

void BM_Normalize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TypedTerm term = check_term(Ctx(), nat_f(), app(church(n), lam(suc(varz()))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(term));
  }
}
BENCHMARK(BM_Normalize)->Arg(2)->Arg(16)->Arg(64);

void BM_ParsePrint(benchmark::State& state) {
  std::string text = print_term(church(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(print_term(parse_term(text)));
  }
}
BENCHMARK(BM_ParsePrint)->Arg(8)->Arg(64);

void BM_EraseEmbed(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TyPtr ty = arrow(nat_f(), nat_f());
  TypedTerm term = check_term(Ctx(), ty, church(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(erase_term(term), Ctx(), ty));
  }
}
BENCHMARK(BM_EraseEmbed)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
