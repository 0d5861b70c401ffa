#pragma once

// Canonical ASCII rendering. The output is accepted by the parser and
// parses back to a structurally identical tree.

#include <ostream>
#include <string>

#include "x5/core.hpp"

namespace x5 {
namespace detail {

// Binding strength, loosest first.
enum Prec : int { kImpl = 1, kOr = 2, kAnd = 3, kPrefix = 4, kPrimary = 5 };

inline int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Impl: return kImpl;
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    case Kind::XNeg:
    case Kind::DNeg: return kPrefix;
    default: return kPrimary;
  }
}

inline void print_formula(std::string& out, const Formula& f);

inline void print_wrapped(std::string& out, const Formula& f, bool parens) {
  if (parens) out += '(';
  print_formula(out, f);
  if (parens) out += ')';
}

inline void print_formula(std::string& out, const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot: out += "bot"; return;
    case Kind::Top: out += "top"; return;
    case Kind::Atom: out += f.atom_ref().name(); return;
    case Kind::XNeg: {
      out += '~';
      const Formula& g = f.operand();
      // "~ not p", "~p", "~~p"
      if (g.is(Kind::DNeg)) out += ' ';
      print_wrapped(out, g, precedence(g) < kPrefix);
      return;
    }
    case Kind::DNeg: {
      out += "not ";
      const Formula& g = f.operand();
      print_wrapped(out, g, precedence(g) < kPrefix);
      return;
    }
    case Kind::And:
    case Kind::Or: {
      const int p = precedence(f);
      // left associative
      print_wrapped(out, f.lhs(), precedence(f.lhs()) < p);
      out += f.is(Kind::And) ? " & " : " | ";
      print_wrapped(out, f.rhs(), precedence(f.rhs()) <= p);
      return;
    }
    case Kind::Impl:
      // right associative
      print_wrapped(out, f.lhs(), precedence(f.lhs()) <= kImpl);
      out += " -> ";
      print_wrapped(out, f.rhs(), precedence(f.rhs()) < kImpl);
      return;
  }
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(out, f);
  return out;
}

/// "body -> head." or "head." when the body is top.
inline std::string to_string(const Rule& r) {
  if (r.body().is(Kind::Top)) return to_string(r.head()) + ".";
  return to_string(r.body()) + " -> " + to_string(r.head()) + ".";
}

/// One rule per line, each line newline-terminated.
inline std::string to_string(const Program& p) {
  std::string out;
  for (const auto& r : p) out += to_string(r) + "\n";
  return out;
}

/// One formula per line, each terminated by ".".
inline std::string to_string(const Theory& t) {
  std::string out;
  for (const auto& f : t) out += to_string(f) + ".\n";
  return out;
}

inline std::string to_string(const Interpretation& i) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : i) {
    if (!first) out += ", ";
    first = false;
    out += to_string(l);
  }
  return out + "}";
}

/// Atom assignment of an X5 interpretation, e.g. "p=1, q=-2".
inline std::string to_string(const X5Interpretation& m, const Signature& sig) {
  std::string out;
  for (const auto& a : sig) {
    if (!out.empty()) out += ", ";
    out += a.name() + "=" + std::to_string(m.value_of(a).value());
  }
  return out;
}

inline std::string to_string(const X5Interpretation& m) {
  return "<" + to_string(m.here()) + ", " + to_string(m.there()) + ">";
}

template <class T>
inline std::string canonical_print(const T& x) {
  return to_string(x);
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << to_string(r); }
inline std::ostream& operator<<(std::ostream& os, const Interpretation& i) {
  return os << to_string(i);
}
inline std::ostream& operator<<(std::ostream& os, const X5Interpretation& m) {
  return os << to_string(m);
}
inline std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.name(); }

}  // namespace x5
