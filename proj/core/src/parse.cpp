#include "lamup/parse.hpp"

#include <cctype>
#include <utility>

namespace lamup {

namespace {

enum class Tok {
  Hash,
  Caret,
  Lambda,
  LParen,
  RParen,
  Colon,
  Comma,
  Semi,
  Dot,  // explicit application operator alias
  Arrow,
  NatTy,
  LBrack,
  RBrack,
  KwId,
  KwZero,
  KwSuc,
  End,
};

struct Token {
  Tok type;
  std::size_t line;
  std::size_t column;
  std::string text;
};

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool match_seq(std::string_view s) {
    if (src.substr(pos, s.size()) != s) return false;
    pos += s.size();
    ++column;  // one codepoint
    return true;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
        ++column;
        continue;
      }
      if (c == '\n') {
        ++pos;
        ++line;
        column = 1;
        continue;
      }
      std::size_t tl = line, tc = column;
      auto emit = [&](Tok t, std::string text) { out.push_back({t, tl, tc, std::move(text)}); };
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
        pos += 2;
        column += 2;
        emit(Tok::Arrow, "->");
        continue;
      }
      switch (c) {
        case '#': ++pos; ++column; emit(Tok::Hash, "#"); continue;
        case '^': ++pos; ++column; emit(Tok::Caret, "^"); continue;
        case '\\': ++pos; ++column; emit(Tok::Lambda, "\\"); continue;
        case '(': ++pos; ++column; emit(Tok::LParen, "("); continue;
        case ')': ++pos; ++column; emit(Tok::RParen, ")"); continue;
        case ':': ++pos; ++column; emit(Tok::Colon, ":"); continue;
        case ',': ++pos; ++column; emit(Tok::Comma, ","); continue;
        case ';': ++pos; ++column; emit(Tok::Semi, ";"); continue;
        case '[': ++pos; ++column; emit(Tok::LBrack, "["); continue;
        case ']': ++pos; ++column; emit(Tok::RBrack, "]"); continue;
        default: break;
      }
      // Unicode aliases.
      if (match_seq("\xE2\x97\x8F")) { emit(Tok::Hash, "●"); continue; }       // ●
      if (match_seq("\xE2\x86\x91")) { emit(Tok::Caret, "↑"); continue; }      // ↑
      if (match_seq("\xC6\x9B")) { emit(Tok::Lambda, "ƛ"); continue; }         // ƛ
      if (match_seq("\xC2\xB7")) { emit(Tok::Dot, "·"); continue; }            // ·
      if (match_seq("\xE2\x96\xB7")) { emit(Tok::Comma, "▷"); continue; }      // ▷
      if (match_seq("\xE2\xA8\xBE")) { emit(Tok::Semi, "⨾"); continue; }       // ⨾
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) {
          ++pos;
          ++column;
        }
        std::string word(src.substr(start, pos - start));
        if (word == "id") { emit(Tok::KwId, word); continue; }
        if (word == "zero") { emit(Tok::KwZero, word); continue; }
        if (word == "suc") { emit(Tok::KwSuc, word); continue; }
        if (word == "N") { emit(Tok::NatTy, word); continue; }
        throw SyntaxError(tl, tc, {"#", "^", "\\", "suc", "zero", "id", "N"},
                          "'" + word + "'");
      }
      throw SyntaxError(tl, tc, {"a token"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({Tok::End, line, column, "end of input"});
    return out;
  }
};

struct Parser {
  std::vector<Token> tokens;
  std::size_t at = 0;

  explicit Parser(std::string_view text) : tokens(Lexer{text}.run()) {}

  const Token& peek() const { return tokens[at]; }
  bool next_is(Tok t) const { return tokens[at].type == t; }
  Token take() { return tokens[at++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string found = t.type == Tok::End ? t.text : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column, std::move(expected), found);
  }

  void expect(Tok t, const std::string& name) {
    if (!next_is(t)) fail({name});
    ++at;
  }

  // --- types ---

  TyPtr type_atom() {
    if (next_is(Tok::NatTy)) {
      take();
      return nat();
    }
    if (next_is(Tok::LParen)) {
      take();
      TyPtr t = type_top();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail({"'N'", "'('"});
  }

  TyPtr type_top() {
    TyPtr lhs = type_atom();
    if (next_is(Tok::Arrow)) {
      take();
      return arrow(std::move(lhs), type_top());
    }
    return lhs;
  }

  Ctx ctx_top() {
    expect(Tok::LBrack, "'['");
    std::vector<TyPtr> entries;
    if (!next_is(Tok::RBrack)) {
      entries.push_back(type_top());
      while (next_is(Tok::Comma)) {
        take();
        entries.push_back(type_top());
      }
    }
    expect(Tok::RBrack, "']'");
    return Ctx(std::move(entries));
  }

  // --- terms ---

  bool starts_factor() const {
    switch (peek().type) {
      case Tok::Hash:
      case Tok::KwZero:
      case Tok::KwSuc:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  TermPtr term_atom() {
    switch (peek().type) {
      case Tok::Hash:
        take();
        return varz();
      case Tok::KwZero:
        take();
        return zero();
      case Tok::LParen: {
        take();
        TermPtr t = term_top();
        if (next_is(Tok::Colon)) {
          take();
          TyPtr ty = type_top();
          expect(Tok::RParen, "')'");
          return annot(std::move(t), std::move(ty));
        }
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        fail({"'#'", "'zero'", "'suc'", "'\\'", "'('"});
    }
  }

  TermPtr term_postfix() {
    TermPtr t = term_atom();
    while (next_is(Tok::Caret)) {
      take();
      t = weaken(std::move(t));
    }
    return t;
  }

  TermPtr term_factor() {
    if (next_is(Tok::KwSuc)) {
      take();
      return suc(term_factor());
    }
    return term_postfix();
  }

  TermPtr term_app() {
    TermPtr acc = term_factor();
    for (;;) {
      if (next_is(Tok::Dot)) {
        take();
        acc = app(std::move(acc), term_factor());
      } else if (starts_factor()) {
        acc = app(std::move(acc), term_factor());
      } else {
        return acc;
      }
    }
  }

  TermPtr term_top() {
    if (next_is(Tok::Lambda)) {
      take();
      return lam(term_top());
    }
    return term_app();
  }

  // --- substitutions ---

  SubstPtr subst_atom() {
    if (next_is(Tok::KwId)) {
      take();
      return sid();
    }
    if (next_is(Tok::LParen)) {
      take();
      SubstPtr s = subst_top();
      expect(Tok::RParen, "')'");
      return s;
    }
    fail({"'id'", "'('"});
  }

  SubstPtr subst_postfix() {
    SubstPtr s = subst_atom();
    while (next_is(Tok::Caret)) {
      take();
      s = sweaken(std::move(s));
    }
    return s;
  }

  SubstPtr subst_top() {
    SubstPtr s = subst_postfix();
    while (next_is(Tok::Comma)) {
      take();
      s = scons(std::move(s), term_top());
    }
    return s;
  }

  void done() {
    if (!next_is(Tok::End)) fail({"end of input"});
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) {
  Parser p(text);
  TermPtr t = p.term_top();
  p.done();
  return t;
}

SubstPtr parse_subst(std::string_view text) {
  Parser p(text);
  SubstPtr s = p.subst_top();
  p.done();
  return s;
}

TyPtr parse_type(std::string_view text) {
  Parser p(text);
  TyPtr t = p.type_top();
  p.done();
  return t;
}

Ctx parse_ctx(std::string_view text) {
  Parser p(text);
  Ctx c = p.ctx_top();
  p.done();
  return c;
}

std::vector<SubstPtr> parse_subst_chain(std::string_view text) {
  Parser p(text);
  std::vector<SubstPtr> out;
  out.push_back(p.subst_top());
  while (p.next_is(Tok::Semi)) {
    p.take();
    out.push_back(p.subst_top());
  }
  p.done();
  return out;
}

}  // namespace lamup
