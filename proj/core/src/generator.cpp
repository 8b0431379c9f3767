#include "lamup/generator.hpp"

#include <vector>

#include "lamup/errors.hpp"
#include "lamup/print.hpp"

namespace lamup {

namespace {

// Least node count of any term of type ty over ctx. Every type is
// inhabited (NAT by zero, arrows by lambdas), so this is total.
std::size_t term_min_size(const Ctx& ctx, const TyPtr& ty) {
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (equal(ctx.entry(i), ty)) {
      best = i + 1;  // # under i weakenings
      break;
    }
  }
  if (ty->kind == Ty::Kind::Nat) {
    if (best > 1) best = 1;  // zero
  } else {
    std::size_t via_lam = 1 + term_min_size(ctx.pushed(ty->dom), ty->cod);
    if (via_lam < best) best = via_lam;
  }
  return best;
}

std::size_t subst_min_size(const Ctx& src, const Ctx& dst) {
  std::size_t best = SIZE_MAX;
  if (src == dst) best = 1;  // id
  if (!src.empty()) {
    std::size_t via_weaken = 1 + subst_min_size(src.popped(), dst);
    if (via_weaken < best) best = via_weaken;
  }
  if (!dst.empty()) {
    std::size_t via_cons =
        1 + subst_min_size(src, dst.popped()) + term_min_size(src, dst.entry(0));
    if (via_cons < best) best = via_cons;
  }
  return best;
}

enum class TermChoice { Var, Zero, Suc, Lam, App };

TermPtr gen_term_at(SplitMix64& rng, const GenConfig& cfg, const Ctx& ctx, const TyPtr& ty,
                    std::size_t budget) {
  std::size_t need = term_min_size(ctx, ty);
  if (budget < need) budget = need;

  if (!ctx.empty() && budget >= 1 + term_min_size(ctx.popped(), ty) &&
      rng.chance(cfg.weaken_bias)) {
    return weaken(gen_term_at(rng, cfg, ctx.popped(), ty, budget - 1));
  }

  std::vector<TermChoice> choices;
  if (!ctx.empty() && equal(ctx.entry(0), ty)) choices.push_back(TermChoice::Var);
  if (ty->kind == Ty::Kind::Nat) {
    choices.push_back(TermChoice::Zero);
    if (budget >= 2) choices.push_back(TermChoice::Suc);
  } else if (budget >= 1 + term_min_size(ctx.pushed(ty->dom), ty->cod)) {
    choices.push_back(TermChoice::Lam);
  }
  // Applications need room for a function and an argument.
  if (budget >= 4) choices.push_back(TermChoice::App);

  for (;;) {
    if (choices.empty()) {
      // The only inhabitant route left is a variable spine, so a
      // weakening step is feasible.
      return weaken(gen_term_at(rng, cfg, ctx.popped(), ty, budget - 1));
    }
    std::size_t idx = rng.below(choices.size());
    switch (choices[idx]) {
      case TermChoice::Var:
        return varz();
      case TermChoice::Zero:
        return zero();
      case TermChoice::Suc: {
        std::size_t body = 1 + rng.below(budget - 1);
        return suc(gen_term_at(rng, cfg, ctx, nat(), body));
      }
      case TermChoice::Lam: {
        std::size_t body = 1 + rng.below(budget - 1);
        return lam(gen_term_at(rng, cfg, ctx.pushed(ty->dom), ty->cod, body));
      }
      case TermChoice::App: {
        // Pick an argument type that fits; fall back to N, then give up
        // on applications for this node.
        TyPtr arg_ty;
        for (int attempt = 0; attempt < 4 && !arg_ty; ++attempt) {
          TyPtr candidate = gen_type(rng, cfg);
          std::size_t cost = 1 + term_min_size(ctx, arrow(candidate, ty)) +
                             term_min_size(ctx, candidate);
          if (cost <= budget) arg_ty = candidate;
        }
        if (!arg_ty && 1 + term_min_size(ctx, arrow(nat(), ty)) + 1 <= budget) {
          arg_ty = nat();
        }
        if (!arg_ty) {
          choices.erase(choices.begin() + static_cast<std::ptrdiff_t>(idx));
          continue;
        }
        std::size_t fun_min = term_min_size(ctx, arrow(arg_ty, ty));
        std::size_t arg_min = term_min_size(ctx, arg_ty);
        std::size_t spare = budget - 1 - fun_min - arg_min;
        std::size_t fun_budget = fun_min + rng.below(spare + 1);
        std::size_t arg_budget = budget - 1 - fun_budget;
        TermPtr fun = gen_term_at(rng, cfg, ctx, arrow(arg_ty, ty), fun_budget);
        TermPtr arg = gen_term_at(rng, cfg, ctx, arg_ty, arg_budget);
        return app(std::move(fun), std::move(arg));
      }
    }
  }
}

enum class SubstChoice { Id, Weaken, Cons };

SubstPtr gen_subst_at(SplitMix64& rng, const GenConfig& cfg, const Ctx& src, const Ctx& dst,
                      std::size_t budget) {
  std::size_t need = subst_min_size(src, dst);
  if (budget < need) budget = need;

  std::vector<SubstChoice> choices;
  if (src == dst) choices.push_back(SubstChoice::Id);
  if (!src.empty() && budget >= 1 + subst_min_size(src.popped(), dst)) {
    choices.push_back(SubstChoice::Weaken);
  }
  if (!dst.empty() &&
      budget >= 1 + subst_min_size(src, dst.popped()) + term_min_size(src, dst.entry(0))) {
    choices.push_back(SubstChoice::Cons);
  }

  switch (choices[rng.below(choices.size())]) {
    case SubstChoice::Id:
      return sid();
    case SubstChoice::Weaken:
      return sweaken(gen_subst_at(rng, cfg, src.popped(), dst, budget - 1));
    case SubstChoice::Cons: {
      std::size_t tail_min = subst_min_size(src, dst.popped());
      std::size_t head_min = term_min_size(src, dst.entry(0));
      std::size_t spare = budget - 1 - tail_min - head_min;
      std::size_t tail_budget = tail_min + rng.below(spare + 1);
      std::size_t head_budget = budget - 1 - tail_budget;
      SubstPtr tail = gen_subst_at(rng, cfg, src, dst.popped(), tail_budget);
      TermPtr head = gen_term_at(rng, cfg, src, dst.entry(0), head_budget);
      return scons(std::move(tail), std::move(head));
    }
  }
  return sid();
}

}  // namespace

TyPtr gen_type(SplitMix64& rng, const GenConfig& cfg, std::size_t depth) {
  if (depth >= cfg.max_ty_depth || rng.below(2) == 0) return nat();
  TyPtr dom = gen_type(rng, cfg, depth + 1);
  TyPtr cod = gen_type(rng, cfg, depth + 1);
  return arrow(std::move(dom), std::move(cod));
}

Ctx gen_ctx(SplitMix64& rng, const GenConfig& cfg) {
  std::size_t len = rng.below(cfg.max_ctx_len + 1);
  std::vector<TyPtr> entries;
  entries.reserve(len);
  for (std::size_t i = 0; i < len; ++i) entries.push_back(gen_type(rng, cfg));
  return Ctx(std::move(entries));
}

TermPtr gen_term(SplitMix64& rng, const GenConfig& cfg, const Ctx& ctx, const TyPtr& ty,
                 std::size_t budget) {
  std::size_t need = term_min_size(ctx, ty);
  if (need > cfg.max_term_size) {
    throw UnsatisfiableError("no term of type " + print_ty(ty) + " over " + print_ctx(ctx) +
                             " fits in " + std::to_string(cfg.max_term_size) + " nodes");
  }
  return gen_term_at(rng, cfg, ctx, ty, budget);
}

SubstPtr gen_subst(SplitMix64& rng, const GenConfig& cfg, const Ctx& src, const Ctx& dst,
                   std::size_t budget) {
  std::size_t need = subst_min_size(src, dst);
  if (need > cfg.max_term_size) {
    throw UnsatisfiableError("no substitution " + print_ctx(src) + " |= " + print_ctx(dst) +
                             " fits in " + std::to_string(cfg.max_term_size) + " nodes");
  }
  return gen_subst_at(rng, cfg, src, dst, budget);
}

TyPtr gen_type(const GenConfig& cfg, std::size_t depth) {
  SplitMix64 rng(cfg.seed);
  return gen_type(rng, cfg, depth);
}

Ctx gen_ctx(const GenConfig& cfg) {
  SplitMix64 rng(cfg.seed);
  return gen_ctx(rng, cfg);
}

TermPtr gen_term(const GenConfig& cfg, const Ctx& ctx, const TyPtr& ty, std::size_t budget) {
  SplitMix64 rng(cfg.seed);
  return gen_term(rng, cfg, ctx, ty, budget);
}

SubstPtr gen_subst(const GenConfig& cfg, const Ctx& src, const Ctx& dst, std::size_t budget) {
  SplitMix64 rng(cfg.seed);
  return gen_subst(rng, cfg, src, dst, budget);
}

}  // namespace lamup
