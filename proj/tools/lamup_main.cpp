// Command-line front end for the explicit-weakening kernel.
//
// Exit codes: 0 success (equiv: equivalent), 1 domain error or distinct
// terms, 2 usage error, 3 property counterexample.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lamup/classical.hpp"
#include "lamup/engine.hpp"
#include "lamup/laws.hpp"
#include "lamup/parse.hpp"
#include "lamup/print.hpp"

namespace {

using nlohmann::json;

// `@path` arguments name UTF-8 term files; anything else is the text
// itself.
std::string read_arg(const std::string& raw) {
  if (raw.empty() || raw[0] != '@') return raw;
  std::ifstream in(raw.substr(1), std::ios::binary);
  if (!in) throw lamup::Error(lamup::Error::Kind::Scope, "cannot read file " + raw.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

struct ChainItem {
  lamup::TypedSubst typed;
};

// Splits every SUBST argument on `;`, keeps application order, and
// typechecks the whole chain right-to-left starting from the source
// context. Returns the chain in application order.
std::vector<lamup::TypedSubst> check_chain(const std::vector<std::string>& args,
                                           const lamup::Ctx& source) {
  std::vector<lamup::SubstPtr> raw;
  for (const auto& arg : args) {
    for (auto& s : lamup::parse_subst_chain(read_arg(arg))) raw.push_back(std::move(s));
  }
  std::vector<lamup::TypedSubst> typed;
  typed.reserve(raw.size());
  lamup::Ctx current = source;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    lamup::Ctx dst = lamup::infer_dst(current, *it);
    typed.push_back(lamup::check_subst(current, dst, *it));
    current = dst;
  }
  std::reverse(typed.begin(), typed.end());
  return typed;
}

lamup::TypedTerm check_with_optional_ty(const lamup::Ctx& ctx, const std::string& ty_text,
                                        const lamup::TermPtr& raw) {
  lamup::TyPtr ty = ty_text.empty() ? lamup::infer_term_or_reconstruct(ctx, raw)
                                    : lamup::parse_type(ty_text);
  return lamup::check_term(ctx, ty, raw);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamup - a simply-typed lambda calculus kernel with explicit weakening"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string ctx_text = "[]";
  std::string ty_text;
  std::string dst_text;
  bool as_json = false;
  bool fuse = false;
  bool subst_mode = false;
  std::uint64_t step_limit = lamup::kDefaultStepLimit;
  std::uint64_t seed = 1;
  std::size_t cases = 1000;
  std::size_t size = 0;
  std::string term_arg, second_arg, classical_arg;
  std::vector<std::string> subst_args;

  auto add_ctx_ty = [&](CLI::App* cmd, bool with_ty = true) {
    cmd->add_option("--ctx", ctx_text, "Context, e.g. \"[N, N -> N]\" (rightmost is index 0)");
    if (with_ty) cmd->add_option("--ty", ty_text, "Type of the term (inferred when omitted)");
    cmd->add_flag("--json", as_json, "Emit one JSON document");
  };

  // check
  auto* check = app.add_subcommand("check", "Typecheck a term (or substitution) and print its judgement");
  check->add_option("term", term_arg, "Term text or @file")->required();
  check->add_flag("--subst", subst_mode, "Treat the input as a substitution");
  check->add_option("--dst", dst_text, "Target context for --subst (inferred when omitted)");
  add_ctx_ty(check);
  check->callback([&] {
    lamup::Ctx ctx = lamup::parse_ctx(ctx_text);
    if (subst_mode) {
      lamup::SubstPtr raw = lamup::parse_subst(read_arg(term_arg));
      lamup::Ctx dst = dst_text.empty() ? lamup::infer_dst(ctx, raw) : lamup::parse_ctx(dst_text);
      lamup::TypedSubst s = lamup::check_subst(ctx, dst, raw);
      if (as_json) {
        print_json(json{{"subst", lamup::print_subst(s.subst())},
                        {"src", lamup::print_ctx(s.src())},
                        {"dst", lamup::print_ctx(s.dst())}});
      } else {
        std::cout << lamup::print_subst(s.subst()) << " : " << lamup::print_ctx(s.src())
                  << " |= " << lamup::print_ctx(s.dst()) << "\n";
      }
      return;
    }
    lamup::TypedTerm t = check_with_optional_ty(ctx, ty_text, lamup::parse_term(read_arg(term_arg)));
    if (as_json) {
      print_json(json{{"term", lamup::print_term(t.term())},
                      {"ctx", lamup::print_ctx(t.ctx())},
                      {"ty", lamup::print_ty(t.ty())}});
    } else {
      std::cout << lamup::print_term(t.term()) << " : " << lamup::print_ctx(t.ctx())
                << " |- " << lamup::print_ty(t.ty()) << "\n";
    }
  });

  // subst
  auto* subst = app.add_subcommand("subst", "Instantiate a term with one or more substitutions");
  subst->add_option("term", term_arg, "Term text or @file")->required();
  subst->add_option("subst", subst_args, "Substitutions in application order; `;` composes")
      ->required()
      ->expected(-1);
  subst->add_flag("--fuse", fuse, "Compose the chain first, then instantiate once");
  add_ctx_ty(subst);
  subst->callback([&] {
    lamup::Ctx source = lamup::parse_ctx(ctx_text);
    auto chain = check_chain(subst_args, source);
    lamup::TypedTerm m =
        check_with_optional_ty(chain.front().dst(), ty_text, lamup::parse_term(read_arg(term_arg)));
    lamup::TypedTerm result = [&] {
      if (fuse) {
        lamup::TypedSubst acc = chain.front();
        for (std::size_t i = 1; i < chain.size(); ++i) acc = lamup::compose(acc, chain[i]);
        return lamup::instantiate(m, acc);
      }
      lamup::TypedTerm acc = m;
      for (const auto& s : chain) acc = lamup::instantiate(acc, s);
      return acc;
    }();
    if (as_json) {
      print_json(json{{"term", lamup::print_term(result.term())},
                      {"ctx", lamup::print_ctx(result.ctx())},
                      {"ty", lamup::print_ty(result.ty())}});
    } else {
      std::cout << lamup::print_term(result.term()) << "\n";
    }
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "Compose substitutions (application order)");
  compose_cmd->add_option("subst", subst_args, "Substitutions; `;` also composes")
      ->required()
      ->expected(-1);
  add_ctx_ty(compose_cmd, false);
  compose_cmd->callback([&] {
    lamup::Ctx source = lamup::parse_ctx(ctx_text);
    auto chain = check_chain(subst_args, source);
    lamup::TypedSubst acc = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) acc = lamup::compose(acc, chain[i]);
    if (as_json) {
      print_json(json{{"subst", lamup::print_subst(acc.subst())},
                      {"src", lamup::print_ctx(acc.src())},
                      {"dst", lamup::print_ctx(acc.dst())}});
    } else {
      std::cout << lamup::print_subst(acc.subst()) << "\n";
    }
  });

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "Beta-normalize and print the canonical form");
  normalize_cmd->add_option("term", term_arg, "Term text or @file")->required();
  normalize_cmd->add_option("--step-limit", step_limit, "Maximum number of beta steps");
  add_ctx_ty(normalize_cmd);
  normalize_cmd->callback([&] {
    lamup::Ctx ctx = lamup::parse_ctx(ctx_text);
    lamup::TypedTerm m = check_with_optional_ty(ctx, ty_text, lamup::parse_term(read_arg(term_arg)));
    lamup::TypedTerm nf = lamup::normalize(m, step_limit);
    if (as_json) {
      print_json(json{{"term", lamup::print_term(nf.term())},
                      {"ctx", lamup::print_ctx(nf.ctx())},
                      {"ty", lamup::print_ty(nf.ty())}});
    } else {
      std::cout << lamup::print_term(nf.term()) << "\n";
    }
  });

  // trace
  auto* trace_cmd = app.add_subcommand(
      "trace", "Instantiate step by step, one JSON line per clause application");
  trace_cmd->add_option("term", term_arg, "Term text or @file")->required();
  trace_cmd->add_option("subst", subst_args, "Substitutions in application order; `;` composes")
      ->required()
      ->expected(-1);
  trace_cmd->add_flag("--fuse", fuse, "Compose first (comp-* steps), then instantiate");
  add_ctx_ty(trace_cmd);
  trace_cmd->callback([&] {
    lamup::Ctx source = lamup::parse_ctx(ctx_text);
    auto chain = check_chain(subst_args, source);
    lamup::TypedTerm m =
        check_with_optional_ty(chain.front().dst(), ty_text, lamup::parse_term(read_arg(term_arg)));
    std::vector<lamup::TraceStep> steps;
    lamup::TraceSink sink = [&](const lamup::TraceStep& s) {
      steps.push_back(s);
      if (!as_json) std::cout << lamup::trace_step_json(s) << "\n";
    };
    lamup::TypedTerm result = [&] {
      if (fuse) {
        lamup::TypedSubst acc = chain.front();
        for (std::size_t i = 1; i < chain.size(); ++i) acc = lamup::compose(acc, chain[i], sink);
        return lamup::instantiate(m, acc, sink);
      }
      lamup::TypedTerm acc = m;
      for (const auto& s : chain) acc = lamup::instantiate(acc, s, sink);
      return acc;
    }();
    if (as_json) {
      json out;
      out["steps"] = json::array();
      for (const auto& s : steps) {
        out["steps"].push_back(json{{"rule", s.rule}, {"before", s.before}, {"after", s.after}});
      }
      out["result"] = lamup::print_term(result.term());
      out["ctx"] = lamup::print_ctx(result.ctx());
      out["ty"] = lamup::print_ty(result.ty());
      print_json(out);
    } else {
      std::cout << lamup::print_term(result.term()) << "\n";
    }
  });

  // erase
  auto* erase_cmd = app.add_subcommand("erase", "Translate to the classical de Bruijn syntax");
  erase_cmd->add_option("term", term_arg, "Term text or @file")->required();
  add_ctx_ty(erase_cmd);
  erase_cmd->callback([&] {
    lamup::Ctx ctx = lamup::parse_ctx(ctx_text);
    lamup::TypedTerm m = check_with_optional_ty(ctx, ty_text, lamup::parse_term(read_arg(term_arg)));
    std::string classical = lamup::print_classical(lamup::erase_term(m));
    if (as_json) {
      print_json(json{{"classical", classical}});
    } else {
      std::cout << classical << "\n";
    }
  });

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "Translate a classical term into the kernel syntax");
  embed_cmd->add_option("term", classical_arg, "Classical term text or @file")->required();
  add_ctx_ty(embed_cmd);
  embed_cmd->callback([&] {
    if (ty_text.empty()) {
      throw lamup::CannotInferError("embed needs an explicit --ty", "");
    }
    lamup::Ctx ctx = lamup::parse_ctx(ctx_text);
    lamup::CTermPtr t = lamup::parse_classical(read_arg(classical_arg));
    lamup::TypedTerm m = lamup::embed(t, ctx, lamup::parse_type(ty_text));
    if (as_json) {
      print_json(json{{"term", lamup::print_term(m.term())},
                      {"ctx", lamup::print_ctx(m.ctx())},
                      {"ty", lamup::print_ty(m.ty())}});
    } else {
      std::cout << lamup::print_term(m.term()) << "\n";
    }
  });

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "Exit 0 iff the two terms erase to the same classical term");
  equiv_cmd->add_option("left", term_arg, "Term text or @file")->required();
  equiv_cmd->add_option("right", second_arg, "Term text or @file")->required();
  add_ctx_ty(equiv_cmd);
  equiv_cmd->callback([&] {
    lamup::Ctx ctx = lamup::parse_ctx(ctx_text);
    lamup::TypedTerm left = check_with_optional_ty(ctx, ty_text, lamup::parse_term(read_arg(term_arg)));
    lamup::TypedTerm right = lamup::check_term(ctx, left.ty(), lamup::parse_term(read_arg(second_arg)));
    bool same = lamup::equal(lamup::erase_term(left), lamup::erase_term(right));
    if (as_json) {
      print_json(json{{"equivalent", same}});
    } else {
      std::cout << (same ? "equivalent" : "distinct") << "\n";
    }
    if (!same) exit_code = 1;
  });

  // props
  auto* props_cmd = app.add_subcommand("props", "Run every law suite with the seeded generator");
  props_cmd->add_option("--seed", seed, "Suite seed");
  props_cmd->add_option("--cases", cases, "Cases per law");
  props_cmd->add_option("--size", size, "Generator node-count budget (default 40)");
  props_cmd->add_flag("--json", as_json, "Emit one JSON document");
  props_cmd->callback([&] {
    lamup::LawsConfig cfg;
    cfg.seed = seed;
    cfg.cases = cases;
    if (size > 0) cfg.gen.max_term_size = size;
    auto results = lamup::run_law_suites(cfg);
    if (as_json) {
      json out;
      out["seed"] = cfg.seed;
      out["cases"] = cfg.cases;
      out["suites"] = json::array();
      for (const auto& r : results) {
        json suite{{"law", r.law}, {"cases", r.cases}, {"ok", r.ok}};
        if (!r.ok) suite["counterexample"] = r.counterexample;
        out["suites"].push_back(suite);
      }
      print_json(out);
    } else {
      lamup::write_report(std::cout, cfg, results);
    }
    if (!lamup::all_ok(results)) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const lamup::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
