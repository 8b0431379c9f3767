#include "lamup/laws.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <utility>

#include "lamup/classical.hpp"
#include "lamup/engine.hpp"
#include "lamup/errors.hpp"
#include "lamup/parse.hpp"
#include "lamup/print.hpp"

namespace lamup {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// First counterexample wins; later suites keep running so the report
// stays complete.
struct Preservation {
  std::size_t checked = 0;
  std::optional<std::string> failure;

  void term(const TypedTerm& t, const char* origin) {
    ++checked;
    if (failure) return;
    try {
      check_term(t.ctx(), t.ty(), t.term());
    } catch (const Error& e) {
      failure = std::string("  origin = ") + origin + "\n  term   = " + print_term(t.term()) +
                "\n  error  = " + e.what();
    }
  }

  void subst(const TypedSubst& s, const char* origin) {
    ++checked;
    if (failure) return;
    try {
      check_subst(s.src(), s.dst(), s.subst());
    } catch (const Error& e) {
      failure = std::string("  origin = ") + origin + "\n  subst  = " +
                print_subst(s.subst()) + "\n  error  = " + e.what();
    }
  }
};

struct SuiteRunner {
  const LawsConfig& cfg;
  std::vector<LawResult> results;

  using CaseFn = std::function<std::optional<std::string>(SplitMix64&)>;
  using FinishFn = std::function<std::optional<std::string>()>;

  void run(const std::string& name, std::size_t cases, const CaseFn& body,
           const FinishFn& finish = {}) {
    LawResult r;
    r.law = name;
    r.cases = cases;
    std::uint64_t suite_seed = cfg.seed ^ fnv1a(name);
    auto started = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < cases; ++i) {
      SplitMix64 rng = SplitMix64::for_case(suite_seed, i);
      std::optional<std::string> failure;
      try {
        failure = body(rng);
      } catch (const Error& e) {
        failure = std::string("  unexpected error: ") + e.what();
      }
      if (failure) {
        r.ok = false;
        r.counterexample = "  case " + std::to_string(i) + "\n" + *failure;
        break;
      }
    }
    if (r.ok && finish) {
      if (auto failure = finish()) {
        r.ok = false;
        r.counterexample = *failure;
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    results.push_back(std::move(r));
  }
};

TypedTerm gen_typed(SplitMix64& rng, const GenConfig& g, const Ctx& ctx, const TyPtr& ty) {
  std::size_t budget = 1 + rng.below(g.max_term_size);
  return check_term(ctx, ty, gen_term(rng, g, ctx, ty, budget));
}

TypedSubst gen_typed_subst(SplitMix64& rng, const GenConfig& g, const Ctx& src,
                           const Ctx& dst) {
  std::size_t budget = 1 + rng.below(g.max_term_size);
  return check_subst(src, dst, gen_subst(rng, g, src, dst, budget));
}

std::string show(const char* name, const std::string& value) {
  return std::string("  ") + name + " = " + value + "\n";
}

}  // namespace

std::vector<LawResult> run_law_suites(const LawsConfig& cfg) {
  const GenConfig& g = cfg.gen;
  SuiteRunner runner{cfg, {}};
  Preservation prn;
  std::size_t half = cfg.cases / 2 > 0 ? cfg.cases / 2 : 1;

  // M [ s ] [ t ] == M [ s ; t ]
  runner.run("fusion", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g), theta = gen_ctx(rng, g), delta = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g);
    TypedTerm m = gen_typed(rng, g, delta, a);
    TypedSubst sigma = gen_typed_subst(rng, g, theta, delta);
    TypedSubst tau = gen_typed_subst(rng, g, gamma, theta);
    TypedTerm lhs = instantiate(instantiate(m, sigma), tau);
    TypedSubst fused = compose(sigma, tau);
    TypedTerm rhs = instantiate(m, fused);
    prn.term(lhs, "fusion lhs");
    prn.term(rhs, "fusion rhs");
    prn.subst(fused, "fusion composed subst");
    if (equal(lhs.term(), rhs.term())) return std::nullopt;
    return show("M", print_term(m.term())) + show("sigma", print_subst(sigma.subst())) +
           show("tau", print_subst(tau.subst())) + show("lhs", print_term(lhs.term())) +
           show("rhs", print_term(rhs.term()));
  });

  // id ; t == t
  runner.run("left-id", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g), theta = gen_ctx(rng, g);
    TypedSubst tau = gen_typed_subst(rng, g, gamma, theta);
    TypedSubst identity = check_subst(theta, theta, sid());
    TypedSubst out = compose(identity, tau);
    prn.subst(out, "left-id result");
    if (equal(out.subst(), tau.subst())) return std::nullopt;
    return show("tau", print_subst(tau.subst())) + show("id ; tau", print_subst(out.subst()));
  });

  // s ; id == s
  runner.run("right-id", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx theta = gen_ctx(rng, g), delta = gen_ctx(rng, g);
    TypedSubst sigma = gen_typed_subst(rng, g, theta, delta);
    TypedSubst identity = check_subst(theta, theta, sid());
    TypedSubst out = compose(sigma, identity);
    prn.subst(out, "right-id result");
    if (equal(out.subst(), sigma.subst())) return std::nullopt;
    return show("sigma", print_subst(sigma.subst())) +
           show("sigma ; id", print_subst(out.subst()));
  });

  // (s ; t) ; u == s ; (t ; u)
  runner.run("assoc", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g), xi = gen_ctx(rng, g), theta = gen_ctx(rng, g),
        delta = gen_ctx(rng, g);
    TypedSubst sigma = gen_typed_subst(rng, g, theta, delta);
    TypedSubst tau = gen_typed_subst(rng, g, xi, theta);
    TypedSubst ups = gen_typed_subst(rng, g, gamma, xi);
    TypedSubst lhs = compose(compose(sigma, tau), ups);
    TypedSubst rhs = compose(sigma, compose(tau, ups));
    prn.subst(lhs, "assoc lhs");
    prn.subst(rhs, "assoc rhs");
    if (equal(lhs.subst(), rhs.subst())) return std::nullopt;
    return show("sigma", print_subst(sigma.subst())) + show("tau", print_subst(tau.subst())) +
           show("upsilon", print_subst(ups.subst())) + show("lhs", print_subst(lhs.subst())) +
           show("rhs", print_subst(rhs.subst()));
  });

  // (N ^) [ M ]0 == N, structurally
  runner.run("introduction", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g), b = gen_type(rng, g);
    TypedTerm n = gen_typed(rng, g, gamma, b);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    TypedTerm weakened = check_term(gamma.pushed(a), b, weaken(n.term()));
    TypedTerm out = subst0(weakened, m);
    prn.term(out, "introduction result");
    if (equal(out.term(), n.term())) return std::nullopt;
    return show("N", print_term(n.term())) + show("M", print_term(m.term())) +
           show("(N^)[M]0", print_term(out.term()));
  });

  // N [ M ]1 [ L ]0 == N [ L ^ ]0 [ M ]0
  runner.run("double-subst", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g), b = gen_type(rng, g), c = gen_type(rng, g);
    TypedTerm n = gen_typed(rng, g, gamma.pushed(a).pushed(b), c);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    TypedTerm l = gen_typed(rng, g, gamma, b);
    TypedTerm lhs = subst0(subst1(n, m), l);
    TypedTerm wl = check_term(gamma.pushed(a), b, weaken(l.term()));
    TypedTerm rhs = subst0(subst0(n, wl), m);
    prn.term(lhs, "double-subst lhs");
    prn.term(rhs, "double-subst rhs");
    if (equal(lhs.term(), rhs.term())) return std::nullopt;
    return show("N", print_term(n.term())) + show("M", print_term(m.term())) +
           show("L", print_term(l.term())) + show("lhs", print_term(lhs.term())) +
           show("rhs", print_term(rhs.term()));
  });

  // N [ M ]0 [ L ]0 == N [ L ]1 [ M [ L ]0 ]0
  runner.run("commute-subst", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g), b = gen_type(rng, g), c = gen_type(rng, g);
    TypedTerm n = gen_typed(rng, g, gamma.pushed(a).pushed(b), c);
    TypedTerm m = gen_typed(rng, g, gamma.pushed(a), b);
    TypedTerm l = gen_typed(rng, g, gamma, a);
    TypedTerm lhs = subst0(subst0(n, m), l);
    TypedTerm rhs = subst0(subst1(n, l), subst0(m, l));
    prn.term(lhs, "commute-subst lhs");
    prn.term(rhs, "commute-subst rhs");
    if (equal(lhs.term(), rhs.term())) return std::nullopt;
    return show("N", print_term(n.term())) + show("M", print_term(m.term())) +
           show("L", print_term(l.term())) + show("lhs", print_term(lhs.term())) +
           show("rhs", print_term(rhs.term()));
  });

  // erase(M [ s ]) == psubst(erase M, erase s)
  runner.run("erasure-homomorphism", cfg.cases,
             [&](SplitMix64& rng) -> std::optional<std::string> {
               Ctx gamma = gen_ctx(rng, g), delta = gen_ctx(rng, g);
               TyPtr a = gen_type(rng, g);
               TypedTerm m = gen_typed(rng, g, delta, a);
               TypedSubst sigma = gen_typed_subst(rng, g, gamma, delta);
               TypedTerm applied = instantiate(m, sigma);
               prn.term(applied, "erasure-homomorphism instantiation");
               CTermPtr lhs = erase_term(applied);
               CTermPtr rhs = psubst(erase_term(m), erase_subst(sigma));
               if (equal(lhs, rhs)) return std::nullopt;
               return show("M", print_term(m.term())) +
                      show("sigma", print_subst(sigma.subst())) +
                      show("erase lhs", print_classical(lhs)) +
                      show("erase rhs", print_classical(rhs));
             });

  // erase(s ; t) == pointwise psubst of erase s under erase t
  runner.run("composition-denotation", cfg.cases,
             [&](SplitMix64& rng) -> std::optional<std::string> {
               Ctx gamma = gen_ctx(rng, g), theta = gen_ctx(rng, g), delta = gen_ctx(rng, g);
               TypedSubst sigma = gen_typed_subst(rng, g, theta, delta);
               TypedSubst tau = gen_typed_subst(rng, g, gamma, theta);
               ParallelSubst composed = erase_subst(compose(sigma, tau));
               ParallelSubst es = erase_subst(sigma);
               ParallelSubst et = erase_subst(tau);
               ParallelSubst pointwise;
               pointwise.images.reserve(es.images.size());
               for (const auto& image : es.images) {
                 pointwise.images.push_back(psubst(image, et));
               }
               if (equal(composed, pointwise)) return std::nullopt;
               return show("sigma", print_subst(sigma.subst())) +
                      show("tau", print_subst(tau.subst()));
             });

  // erase(embed t) == t
  runner.run("embed-section", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    CTermPtr t = erase_term(m);
    TypedTerm embedded = embed(t, gamma, a);
    prn.term(embedded, "embed result");
    if (equal(erase_term(embedded), t)) return std::nullopt;
    return show("t", print_classical(t)) + show("embed t", print_term(embedded.term()));
  });

  // embed . erase is idempotent on its own image
  runner.run("canonical-idempotence", cfg.cases,
             [&](SplitMix64& rng) -> std::optional<std::string> {
               Ctx gamma = gen_ctx(rng, g);
               TyPtr a = gen_type(rng, g);
               TypedTerm m = gen_typed(rng, g, gamma, a);
               TypedTerm once = embed(erase_term(m), gamma, a);
               TypedTerm twice = embed(erase_term(once), gamma, a);
               if (equal(once.term(), twice.term())) return std::nullopt;
               return show("M", print_term(m.term())) +
                      show("once", print_term(once.term())) +
                      show("twice", print_term(twice.term()));
             });

  // erase(normalize M) == classical_normalize(erase M)
  runner.run("evaluation-agreement", half, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    TypedTerm nf = normalize(m);
    prn.term(nf, "normalize result");
    CTermPtr oracle = classical_normalize(erase_term(m));
    if (equal(erase_term(nf), oracle)) return std::nullopt;
    return show("M", print_term(m.term())) + show("normalize", print_term(nf.term())) +
           show("oracle", print_classical(oracle));
  });

  runner.run("normalize-terminates", half, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    normalize(m);  // StepLimitError would surface as a failure
    return std::nullopt;
  });

  // erase(force M) == erase M
  runner.run("force-semantics", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g), extra = gen_type(rng, g);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    TypedTerm forced = force(m);
    prn.term(forced, "force result");
    if (!equal(erase_term(forced), erase_term(m))) {
      return show("M", print_term(m.term())) + show("force M", print_term(forced.term()));
    }
    TypedTerm weakened = check_term(gamma.pushed(extra), a, weaken(m.term()));
    TypedTerm forced_w = force(weakened);
    prn.term(forced_w, "force of weakened term");
    if (!equal(erase_term(forced_w), erase_term(weakened))) {
      return show("M^", print_term(weakened.term())) +
             show("force M^", print_term(forced_w.term()));
    }
    return std::nullopt;
  });

  // parse . print == identity
  runner.run("round-trip", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g), delta = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g);
    TermPtr raw = gen_term(rng, g, gamma, a, 1 + rng.below(g.max_term_size));
    if (!equal(parse_term(print_term(raw)), raw)) {
      return show("term", print_term(raw));
    }
    SubstPtr s = gen_subst(rng, g, gamma, delta, 1 + rng.below(g.max_term_size));
    if (!equal(parse_subst(print_subst(s)), s)) {
      return show("subst", print_subst(s));
    }
    if (!equal(parse_type(print_ty(a)), a)) {
      return show("type", print_ty(a));
    }
    if (!(parse_ctx(print_ctx(gamma)) == gamma)) {
      return show("ctx", print_ctx(gamma));
    }
    return std::nullopt;
  });

  // checking is stable under weakening the context
  runner.run("weaken-typing", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g), extra = gen_type(rng, g);
    TypedTerm m = gen_typed(rng, g, gamma, a);
    check_term(gamma.pushed(extra), a, weaken(m.term()));
    return std::nullopt;
  });

  runner.run("gen-welltyped", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    Ctx gamma = gen_ctx(rng, g), delta = gen_ctx(rng, g);
    TyPtr a = gen_type(rng, g);
    TermPtr raw = gen_term(rng, g, gamma, a, 1 + rng.below(g.max_term_size));
    check_term(gamma, a, raw);
    SubstPtr s = gen_subst(rng, g, gamma, delta, 1 + rng.below(g.max_term_size));
    check_subst(gamma, delta, s);
    return std::nullopt;
  });

  {
    bool term_kinds[6] = {};
    bool subst_kinds[3] = {};
    bool weaken_nonvar = false;
    std::function<void(const TermPtr&)> walk_term = [&](const TermPtr& t) {
      term_kinds[static_cast<int>(t->kind)] = true;
      switch (t->kind) {
        case Term::Kind::Weaken:
          if (t->a->kind != Term::Kind::VarZ && t->a->kind != Term::Kind::Weaken) {
            weaken_nonvar = true;
          }
          walk_term(t->a);
          break;
        case Term::Kind::Lam:
        case Term::Kind::Suc:
          walk_term(t->a);
          break;
        case Term::Kind::App:
          walk_term(t->a);
          walk_term(t->b);
          break;
        default:
          break;
      }
    };
    runner.run(
        "gen-coverage", cfg.cases,
        [&, walk_term](SplitMix64& rng) -> std::optional<std::string> {
          Ctx gamma = gen_ctx(rng, g), delta = gen_ctx(rng, g);
          TyPtr a = gen_type(rng, g);
          walk_term(gen_term(rng, g, gamma, a, 1 + rng.below(g.max_term_size)));
          SubstPtr s = gen_subst(rng, g, gamma, delta, 1 + rng.below(g.max_term_size));
          for (SubstPtr cur = s; cur; cur = cur->sub) {
            subst_kinds[static_cast<int>(cur->kind)] = true;
            if (cur->kind == Subst::Kind::Cons) walk_term(cur->head);
          }
          return std::nullopt;
        },
        [&]() -> std::optional<std::string> {
          std::string missing;
          const char* term_names[6] = {"#", "^", "\\", "app", "zero", "suc"};
          for (int i = 0; i < 6; ++i) {
            if (!term_kinds[i]) missing += std::string("  missing term form: ") + term_names[i] + "\n";
          }
          const char* subst_names[3] = {"id", "^", ","};
          for (int i = 0; i < 3; ++i) {
            if (!subst_kinds[i]) missing += std::string("  missing subst form: ") + subst_names[i] + "\n";
          }
          if (!weaken_nonvar) missing += "  weakening never wrapped a non-variable\n";
          if (missing.empty()) return std::nullopt;
          return missing;
        });
  }

  runner.run("gen-determinism", cfg.cases, [&](SplitMix64& rng) -> std::optional<std::string> {
    std::uint64_t sub_seed = rng.next();
    SplitMix64 first(sub_seed), second(sub_seed);
    Ctx gamma1 = gen_ctx(first, g);
    Ctx gamma2 = gen_ctx(second, g);
    TyPtr a1 = gen_type(first, g);
    TyPtr a2 = gen_type(second, g);
    TermPtr t1 = gen_term(first, g, gamma1, a1, g.max_term_size);
    TermPtr t2 = gen_term(second, g, gamma2, a2, g.max_term_size);
    if (gamma1 == gamma2 && equal(a1, a2) && equal(t1, t2) &&
        print_term(t1) == print_term(t2)) {
      return std::nullopt;
    }
    return show("first", print_term(t1)) + show("second", print_term(t2));
  });

  {
    LawResult preservation;
    preservation.law = "type-preservation";
    preservation.cases = prn.checked;
    if (prn.failure) {
      preservation.ok = false;
      preservation.counterexample = *prn.failure;
    }
    runner.results.push_back(std::move(preservation));
  }

  return runner.results;
}

void write_report(std::ostream& os, const LawsConfig& cfg,
                  const std::vector<LawResult>& results) {
  os << "law suites: seed " << cfg.seed << ", " << cfg.cases << " cases per law\n";
  for (const auto& r : results) {
    os << std::left << std::setw(26) << r.law << (r.ok ? "ok  " : "FAIL") << std::right
       << std::setw(8) << r.cases << " cases\n";
    if (!r.ok) os << r.counterexample << "\n";
  }
}

bool all_ok(const std::vector<LawResult>& results) {
  for (const auto& r : results) {
    if (!r.ok) return false;
  }
  return true;
}

}  // namespace lamup
