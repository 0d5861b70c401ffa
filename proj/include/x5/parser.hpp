#pragma once

// Recursive descent parser for formulas, programs, theories and
// interpretations.
//
//   iff     := impl { ("<->" | "<=>") impl }        left associative
//   impl    := or [ "->" impl ]                     right associative
//   or      := and { "|" and }
//   and     := prefix { "&" prefix }
//   prefix  := ("~" | "not" | "!") prefix | primary
//   primary := atom | "top" | "bot" | "(" iff ")"
//
// Unicode connectives are accepted as aliases of the ASCII ones.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "x5/core.hpp"

namespace x5 {
namespace detail {

enum class Tok {
  Ident, Top, Bot, XNeg, DNeg, And, Or, Impl, Iff, StrongIff,
  LParen, RParen, LBrace, RBrace, Comma, Dot, End
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::XNeg: return "'~'";
    case Tok::DNeg: return "'not'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Impl: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::StrongIff: return "'<=>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", {line_, col_, 1}});
        return out;
      }
      out.push_back(next());
    }
  }

private:
  struct Alias {
    std::string_view text;
    Tok kind;
  };

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else {
        return;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++col_;  // count code points, not bytes
      }
      ++pos_;
    }
  }

  Token next() {
    static constexpr Alias symbols[] = {
        {"<=>", Tok::StrongIff}, {"<->", Tok::Iff}, {"->", Tok::Impl},
        {"~", Tok::XNeg},        {"!", Tok::DNeg},  {"&", Tok::And},
        {"|", Tok::Or},          {"(", Tok::LParen}, {")", Tok::RParen},
        {"{", Tok::LBrace},      {"}", Tok::RBrace}, {",", Tok::Comma},
        {".", Tok::Dot},
        // Unicode aliases
        {"∼", Tok::XNeg},   {"¬", Tok::DNeg}, {"∧", Tok::And},
        {"∨", Tok::Or},     {"→", Tok::Impl}, {"↔", Tok::Iff},
        {"⟺", Tok::StrongIff}, {"⇔", Tok::StrongIff},
        {"⊥", Tok::Bot},    {"⊤", Tok::Top},
    };
    const SourceSpan start{line_, col_, 1};
    const std::string_view rest = src_.substr(pos_);
    for (const auto& s : symbols) {
      if (rest.substr(0, s.text.size()) == s.text) {
        advance(s.text.size());
        return {s.kind, std::string(s.text), {start.line, start.column, col_ - start.column}};
      }
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      std::string word(src_.substr(pos_, end - pos_));
      SourceSpan span{start.line, start.column, static_cast<int>(word.size())};
      advance(end - pos_);
      if (word == "top") return {Tok::Top, word, span};
      if (word == "bot") return {Tok::Bot, word, span};
      if (word == "not") return {Tok::DNeg, word, span};
      if (!is_atom_name(word))
        throw ParseError("invalid atom name '" + word + "' (atoms start with a lowercase letter)",
                         span);
      return {Tok::Ident, word, span};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  bool at(Tok k) const { return toks_[pos_].kind == k; }
  const Token& peek() const { return toks_[pos_]; }

  const Token& expect(Tok k, const char* context) {
    if (!at(k)) {
      if (k == Tok::RParen)
        throw ParseError("unbalanced parenthesis: expected ')' " + std::string(context) +
                             ", found " + describe(peek().kind),
                         peek().span);
      unexpected(std::string("expected ") + describe(k) + " " + context);
    }
    return toks_[pos_++];
  }

  [[noreturn]] void unexpected(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::Ident ? "atom '" + t.text + "'" : describe(t.kind);
    if (t.kind == Tok::RParen)
      throw ParseError("unbalanced parenthesis: unexpected ')'", t.span);
    throw ParseError(what + ", found " + found, t.span);
  }

  Formula formula() {
    Formula f = iff();
    return f;
  }

  Formula iff() {
    Formula f = impl();
    while (at(Tok::Iff) || at(Tok::StrongIff)) {
      const bool strong = at(Tok::StrongIff);
      ++pos_;
      Formula g = impl();
      f = strong ? Formula::strong_iff(f, g) : Formula::iff(f, g);
    }
    return f;
  }

  Formula impl() {
    Formula f = disj();
    if (at(Tok::Impl)) {
      ++pos_;
      return Formula::impl(f, impl());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (at(Tok::Or)) {
      ++pos_;
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = prefix();
    while (at(Tok::And)) {
      ++pos_;
      f = Formula::conj(f, prefix());
    }
    return f;
  }

  Formula prefix() {
    if (at(Tok::XNeg)) {
      ++pos_;
      return Formula::xneg(prefix());
    }
    if (at(Tok::DNeg)) {
      ++pos_;
      return Formula::dneg(prefix());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: ++pos_; return Formula::atom(t.text);
      case Tok::Top: ++pos_; return Formula::top();
      case Tok::Bot: ++pos_; return Formula::bot();
      case Tok::LParen: {
        ++pos_;
        Formula f = iff();
        expect(Tok::RParen, "to close '('");
        return f;
      }
      default: unexpected("expected a formula");
    }
  }

  ExplicitLiteral literal() {
    const Token& t = peek();
    if (at(Tok::XNeg)) {
      ++pos_;
      if (at(Tok::Top) || at(Tok::Bot) || at(Tok::DNeg))
        throw ParseError("reserved word '" + peek().text + "' used as atom", peek().span);
      const Token& a = expect(Tok::Ident, "after '~' in a literal");
      return {Atom(a.text), true};
    }
    if (at(Tok::Ident)) {
      ++pos_;
      return {Atom(t.text), false};
    }
    if (at(Tok::Top) || at(Tok::Bot) || at(Tok::DNeg))
      throw ParseError("reserved word '" + t.text + "' used as atom", t.span);
    unexpected("expected an explicit literal");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// Span covering tokens [from, to).
inline SourceSpan span_of(const std::vector<Token>& toks, std::size_t from, std::size_t to) {
  SourceSpan s = toks[from].span;
  if (to > from + 1 && toks[to - 1].span.line == s.line)
    s.length = toks[to - 1].span.column + toks[to - 1].span.length - s.column;
  return s;
}

/// Locates the first "->" at parenthesis depth zero in [from, to).
inline std::size_t top_level_arrow(const std::vector<Token>& toks, std::size_t from,
                                   std::size_t to) {
  int depth = 0;
  for (std::size_t i = from; i < to; ++i) {
    if (toks[i].kind == Tok::LParen) ++depth;
    if (toks[i].kind == Tok::RParen) --depth;
    if (depth == 0 && toks[i].kind == Tok::Impl) return i;
  }
  return to;
}

inline std::size_t find_nested_arrow(const std::vector<Token>& toks, std::size_t from,
                                     std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (toks[i].kind == Tok::Impl || toks[i].kind == Tok::Iff ||
        toks[i].kind == Tok::StrongIff)
      return i;
  return to;
}

}  // namespace detail

/// Parses one formula; the whole input must be consumed.
inline Formula parse_formula(std::string_view text) {
  detail::Parser p(text);
  Formula f = p.formula();
  if (!p.at(detail::Tok::End)) p.unexpected("expected end of formula");
  return f;
}

/// Statements terminated by "."; each statement is an arbitrary formula.
inline Theory parse_theory(std::string_view text) {
  detail::Parser p(text);
  Theory t;
  while (!p.at(detail::Tok::End)) {
    t.insert(p.formula());
    p.expect(detail::Tok::Dot, "to terminate the statement");
  }
  return t;
}

/// Statements "BODY -> HEAD." or "HEAD.", both sides nested expressions.
inline Program parse_program(std::string_view text) {
  using detail::Tok;
  detail::Parser p(text);
  Program prog;
  while (!p.at(Tok::End)) {
    const std::size_t start = p.pos_;
    Formula f = p.formula();
    const std::size_t stop = p.pos_;
    p.expect(Tok::Dot, "to terminate the rule");

    const std::size_t arrow = detail::top_level_arrow(p.toks_, start, stop);
    if (arrow == stop) {
      const std::size_t bad = detail::find_nested_arrow(p.toks_, start, stop);
      if (bad != stop)
        throw ParseError("implication nested inside rule head", p.toks_[bad].span);
      prog.insert(Rule::fact(f));
      continue;
    }
    // f is Impl(body, head) with the arrow at `arrow`.
    std::size_t bad = detail::find_nested_arrow(p.toks_, start, arrow);
    if (bad != arrow) throw ParseError("implication nested inside rule body", p.toks_[bad].span);
    bad = detail::find_nested_arrow(p.toks_, arrow + 1, stop);
    if (bad != stop) throw ParseError("implication nested inside rule head", p.toks_[bad].span);
    if (!f.is(Kind::Impl))
      throw ParseError("malformed rule", detail::span_of(p.toks_, start, stop));
    prog.insert(Rule(f.lhs(), f.rhs()));
  }
  return prog;
}

/// "{l1, ..., ln}" with optional braces; rejects inconsistent sets.
inline Interpretation parse_interpretation(std::string_view text) {
  using detail::Tok;
  detail::Parser p(text);
  const bool braced = p.at(Tok::LBrace);
  if (braced) ++p.pos_;
  std::vector<ExplicitLiteral> lits;
  std::vector<SourceSpan> spans;
  const Tok close = braced ? Tok::RBrace : Tok::End;
  if (!p.at(close)) {
    for (;;) {
      spans.push_back(p.peek().span);
      lits.push_back(p.literal());
      if (!p.at(Tok::Comma)) break;
      ++p.pos_;
    }
  }
  if (braced) p.expect(Tok::RBrace, "to close the interpretation");
  if (!p.at(Tok::End)) p.unexpected("expected end of interpretation");
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (lits[i].atom == lits[j].atom && lits[i].negated != lits[j].negated)
        throw ParseError("inconsistent interpretation: " + lits[i].atom.name() + " and ~" +
                             lits[i].atom.name(),
                         spans[i]);
  return Interpretation(std::move(lits));
}

}  // namespace x5
