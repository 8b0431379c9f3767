#include "lamup/classical.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "lamup/errors.hpp"
#include "lamup/print.hpp"

namespace lamup {

namespace {
CTermPtr cmk(ClassicalTerm::Kind kind, std::size_t index = 0, CTermPtr a = nullptr,
             CTermPtr b = nullptr) {
  return std::make_shared<ClassicalTerm>(ClassicalTerm{kind, index, std::move(a), std::move(b)});
}
}  // namespace

CTermPtr cvar(std::size_t index) { return cmk(ClassicalTerm::Kind::Var, index); }
CTermPtr clam(CTermPtr body) { return cmk(ClassicalTerm::Kind::Lam, 0, std::move(body)); }
CTermPtr capp(CTermPtr fun, CTermPtr arg) {
  return cmk(ClassicalTerm::Kind::App, 0, std::move(fun), std::move(arg));
}
CTermPtr czero() {
  static const CTermPtr instance = cmk(ClassicalTerm::Kind::Zero);
  return instance;
}
CTermPtr csuc(CTermPtr body) { return cmk(ClassicalTerm::Kind::Suc, 0, std::move(body)); }

bool equal(const CTermPtr& a, const CTermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case ClassicalTerm::Kind::Var:
      return a->index == b->index;
    case ClassicalTerm::Kind::Zero:
      return true;
    case ClassicalTerm::Kind::Lam:
    case ClassicalTerm::Kind::Suc:
      return equal(a->a, b->a);
    case ClassicalTerm::Kind::App:
      return equal(a->a, b->a) && equal(a->b, b->b);
  }
  return false;
}

bool equal(const ParallelSubst& a, const ParallelSubst& b) {
  if (a.images.size() != b.images.size()) return false;
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    if (!equal(a.images[i], b.images[i])) return false;
  }
  return true;
}

CTermPtr shift(const CTermPtr& t, long long amount, std::size_t cutoff) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var: {
      if (t->index < cutoff) return t;
      long long moved = static_cast<long long>(t->index) + amount;
      if (moved < 0) throw ScopeError("shift drove a variable below zero");
      return cvar(static_cast<std::size_t>(moved));
    }
    case ClassicalTerm::Kind::Lam:
      return clam(shift(t->a, amount, cutoff + 1));
    case ClassicalTerm::Kind::App:
      return capp(shift(t->a, amount, cutoff), shift(t->b, amount, cutoff));
    case ClassicalTerm::Kind::Zero:
      return t;
    case ClassicalTerm::Kind::Suc:
      return csuc(shift(t->a, amount, cutoff));
  }
  return t;
}

CTermPtr psubst(const CTermPtr& t, const ParallelSubst& env) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var:
      if (t->index >= env.images.size()) {
        throw ScopeError("variable " + std::to_string(t->index) +
                         " outside a substitution of length " +
                         std::to_string(env.images.size()));
      }
      return env.images[t->index];
    case ClassicalTerm::Kind::Lam: {
      ParallelSubst under;
      under.images.reserve(env.images.size() + 1);
      under.images.push_back(cvar(0));
      for (const auto& image : env.images) under.images.push_back(shift(image, 1, 0));
      return clam(psubst(t->a, under));
    }
    case ClassicalTerm::Kind::App:
      return capp(psubst(t->a, env), psubst(t->b, env));
    case ClassicalTerm::Kind::Zero:
      return t;
    case ClassicalTerm::Kind::Suc:
      return csuc(psubst(t->a, env));
  }
  return t;
}

namespace {

CTermPtr erase_raw(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::VarZ:
      return cvar(0);
    case Term::Kind::Weaken:
      return shift(erase_raw(t->a), 1, 0);
    case Term::Kind::Lam:
      return clam(erase_raw(t->a));
    case Term::Kind::App:
      return capp(erase_raw(t->a), erase_raw(t->b));
    case Term::Kind::Zero:
      return czero();
    case Term::Kind::Suc:
      return csuc(erase_raw(t->a));
    case Term::Kind::Annot:
      return erase_raw(t->a);
  }
  return czero();
}

ParallelSubst identity_env(std::size_t n) {
  ParallelSubst env;
  env.images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) env.images.push_back(cvar(i));
  return env;
}

// |src| needed to size the identity at the base of the spine.
ParallelSubst erase_subst_raw(const SubstPtr& s, std::size_t src_len) {
  switch (s->kind) {
    case Subst::Kind::Id:
      return identity_env(src_len);
    case Subst::Kind::Weaken: {
      ParallelSubst sub = erase_subst_raw(s->sub, src_len - 1);
      for (auto& image : sub.images) image = shift(image, 1, 0);
      return sub;
    }
    case Subst::Kind::Cons: {
      ParallelSubst sub = erase_subst_raw(s->sub, src_len);
      ParallelSubst out;
      out.images.reserve(sub.images.size() + 1);
      out.images.push_back(erase_raw(s->head));
      for (auto& image : sub.images) out.images.push_back(std::move(image));
      return out;
    }
  }
  return {};
}

bool well_scoped(const CTermPtr& t, std::size_t depth) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var:
      return t->index < depth;
    case ClassicalTerm::Kind::Lam:
      return well_scoped(t->a, depth + 1);
    case ClassicalTerm::Kind::App:
      return well_scoped(t->a, depth) && well_scoped(t->b, depth);
    case ClassicalTerm::Kind::Zero:
      return true;
    case ClassicalTerm::Kind::Suc:
      return well_scoped(t->a, depth);
  }
  return true;
}

TermPtr embed_raw(const CTermPtr& t) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var: {
      TermPtr spine = varz();
      for (std::size_t i = 0; i < t->index; ++i) spine = weaken(std::move(spine));
      return spine;
    }
    case ClassicalTerm::Kind::Lam:
      return lam(embed_raw(t->a));
    case ClassicalTerm::Kind::App:
      return app(embed_raw(t->a), embed_raw(t->b));
    case ClassicalTerm::Kind::Zero:
      return zero();
    case ClassicalTerm::Kind::Suc:
      return suc(embed_raw(t->a));
  }
  return zero();
}

// One leftmost-outermost step, TAPL style: substitute the shifted
// argument for index zero, then unshift.
CTermPtr subst_single(const CTermPtr& t, std::size_t target, const CTermPtr& s) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var:
      return t->index == target ? s : t;
    case ClassicalTerm::Kind::Lam:
      return clam(subst_single(t->a, target + 1, shift(s, 1, 0)));
    case ClassicalTerm::Kind::App:
      return capp(subst_single(t->a, target, s), subst_single(t->b, target, s));
    case ClassicalTerm::Kind::Zero:
      return t;
    case ClassicalTerm::Kind::Suc:
      return csuc(subst_single(t->a, target, s));
  }
  return t;
}

CTermPtr beta_contract(const CTermPtr& lam_body, const CTermPtr& arg) {
  return shift(subst_single(lam_body, 0, shift(arg, 1, 0)), -1, 0);
}

std::optional<CTermPtr> classical_step(const CTermPtr& t) {
  switch (t->kind) {
    case ClassicalTerm::Kind::App: {
      if (t->a->kind == ClassicalTerm::Kind::Lam) return beta_contract(t->a->a, t->b);
      if (auto fun = classical_step(t->a)) return capp(*fun, t->b);
      if (auto arg = classical_step(t->b)) return capp(t->a, *arg);
      return std::nullopt;
    }
    case ClassicalTerm::Kind::Lam:
      if (auto body = classical_step(t->a)) return clam(*body);
      return std::nullopt;
    case ClassicalTerm::Kind::Suc:
      if (auto body = classical_step(t->a)) return csuc(*body);
      return std::nullopt;
    case ClassicalTerm::Kind::Var:
    case ClassicalTerm::Kind::Zero:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CTermPtr erase_term(const TypedTerm& m) { return erase_raw(m.term()); }

ParallelSubst erase_subst(const TypedSubst& s) {
  return erase_subst_raw(s.subst(), s.src().size());
}

TypedTerm embed(const CTermPtr& t, const Ctx& ctx, const TyPtr& ty) {
  if (!well_scoped(t, ctx.size())) {
    throw ScopeError("classical term is not well-scoped in a context of length " +
                     std::to_string(ctx.size()));
  }
  return check_term(ctx, ty, embed_raw(t));
}

CTermPtr classical_normalize(const CTermPtr& t, std::uint64_t step_limit) {
  CTermPtr current = t;
  std::uint64_t steps = 0;
  for (;;) {
    auto next = classical_step(current);
    if (!next) return current;
    if (++steps > step_limit) throw StepLimitError(step_limit);
    current = *next;
  }
}

namespace {

std::string cparen(const std::string& s) { return "(" + s + ")"; }

std::string cprint_factor(const CTermPtr& t);
std::string cprint_app(const CTermPtr& t);

std::string cprint_top(const CTermPtr& t) {
  if (t->kind == ClassicalTerm::Kind::Lam) return "\xCE\xBB. " + cprint_top(t->a);
  return cprint_app(t);
}

std::string cprint_app(const CTermPtr& t) {
  switch (t->kind) {
    case ClassicalTerm::Kind::App: {
      std::string lhs = t->a->kind == ClassicalTerm::Kind::Lam ? cparen(cprint_top(t->a))
                                                               : cprint_app(t->a);
      return lhs + " " + cprint_factor(t->b);
    }
    case ClassicalTerm::Kind::Suc:
      return "suc " + cprint_factor(t->a);
    default:
      return cprint_factor(t);
  }
}

std::string cprint_factor(const CTermPtr& t) {
  switch (t->kind) {
    case ClassicalTerm::Kind::Var:
      return std::to_string(t->index);
    case ClassicalTerm::Kind::Zero:
      return "zero";
    default:
      return cparen(cprint_top(t));
  }
}

struct ClassicalParser {
  std::string_view src;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '\n') {
        ++pos;
        ++line;
        column = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
        ++column;
      } else {
        break;
      }
    }
  }

  bool eat(std::string_view s) {
    skip_ws();
    if (src.substr(pos, s.size()) != s) return false;
    pos += s.size();
    ++column;
    return true;
  }

  bool peek_factor() {
    skip_ws();
    if (pos >= src.size()) return false;
    char c = src[pos];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           src.substr(pos, 4) == "zero" || src.substr(pos, 3) == "suc";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found =
        pos < src.size() ? "'" + std::string(1, src[pos]) + "'" : "end of input";
    throw SyntaxError(line, column, std::move(expected), found);
  }

  CTermPtr top() {
    skip_ws();
    if (eat("\xCE\xBB") || eat("\\")) {
      if (!eat(".")) fail({"'.'"});
      return clam(top());
    }
    return app_level();
  }

  CTermPtr app_level() {
    CTermPtr acc = factor();
    while (peek_factor()) acc = capp(std::move(acc), factor());
    return acc;
  }

  CTermPtr factor() {
    skip_ws();
    if (src.substr(pos, 3) == "suc") {
      pos += 3;
      column += 3;
      return csuc(factor());
    }
    return atom();
  }

  CTermPtr atom() {
    skip_ws();
    if (pos >= src.size()) fail({"a classical term"});
    if (src.substr(pos, 4) == "zero") {
      pos += 4;
      column += 4;
      return czero();
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t value = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        value = value * 10 + static_cast<std::size_t>(src[pos] - '0');
        ++pos;
        ++column;
      }
      return cvar(value);
    }
    if (c == '(') {
      ++pos;
      ++column;
      CTermPtr t = top();
      if (!eat(")")) fail({"')'"});
      return t;
    }
    fail({"a variable index", "'zero'", "'suc'", "'('", "a lambda"});
  }

  void done() {
    skip_ws();
    if (pos < src.size()) fail({"end of input"});
  }
};

}  // namespace

std::string print_classical(const CTermPtr& t) { return cprint_top(t); }

CTermPtr parse_classical(std::string_view text) {
  ClassicalParser p{text};
  CTermPtr t = p.top();
  p.done();
  return t;
}

}  // namespace lamup
