#pragma once

// Reducts with respect to an interpretation T:
//  - reduct_nested / reduct_program: every "not F" is replaced by bot when
//    T |= F and by top otherwise; the result is an explicit expression.
//  - ferraris_plus / ferraris_minus: a dual pair of transformations for
//    arbitrary formulas. H |= plus(phi) iff <H,T> |= phi, and H =| minus(phi)
//    iff <H,T> =| phi, for every H contained in T.

#include "x5/core.hpp"
#include "x5/semantics.hpp"

namespace x5 {

inline Formula reduct_nested(const Formula& f, const Interpretation& t) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Top:
    case Kind::Atom: return f;
    case Kind::And: return Formula::conj(reduct_nested(f.lhs(), t), reduct_nested(f.rhs(), t));
    case Kind::Or: return Formula::disj(reduct_nested(f.lhs(), t), reduct_nested(f.rhs(), t));
    case Kind::XNeg: return Formula::xneg(reduct_nested(f.operand(), t));
    case Kind::DNeg: return sat(t, f.operand()) ? Formula::bot() : Formula::top();
    case Kind::Impl: break;
  }
  throw InvalidArgument("the reduct is defined for nested expressions only");
}

inline Program reduct_program(const Program& p, const Interpretation& t) {
  Program out;
  for (const auto& r : p) out.insert(Rule(reduct_nested(r.body(), t), reduct_nested(r.head(), t)));
  return out;
}

/// How the implication case of the Ferraris-style reduct is computed.
enum class ImplicationHandling {
  /// (a -> b)+ = not(a+) | b+ and (a -> b)- = b-.
  Direct,
  /// Rewrite a -> b to (not a | b) before reducing. Agrees with Direct at
  /// H = T only; see the tests for a counterexample below T.
  RewriteAsDisjunction,
};

namespace detail {

struct Ferraris {
  const Interpretation& t;
  ImplicationHandling handling;

  bool t_sat(const Formula& f) const { return x5_sat_at(t, t, f); }
  bool t_fals(const Formula& f) const { return x5_fals_at(t, t, f); }

  Formula plus(const Formula& f) const {
    if (handling == ImplicationHandling::RewriteAsDisjunction && f.is(Kind::Impl))
      return plus(Formula::disj(Formula::dneg(f.lhs()), f.rhs()));
    if (!t_sat(f)) return Formula::bot();
    switch (f.kind()) {
      case Kind::Top:
      case Kind::Atom: return f;
      case Kind::And: return Formula::conj(plus(f.lhs()), plus(f.rhs()));
      case Kind::Or: return Formula::disj(plus(f.lhs()), plus(f.rhs()));
      case Kind::Impl: return Formula::disj(Formula::dneg(plus(f.lhs())), plus(f.rhs()));
      case Kind::DNeg: return Formula::dneg(plus(f.operand()));
      case Kind::XNeg: return Formula::xneg(minus(f.operand()));
      case Kind::Bot: break;  // never satisfied
    }
    return Formula::bot();
  }

  Formula minus(const Formula& f) const {
    if (handling == ImplicationHandling::RewriteAsDisjunction && f.is(Kind::Impl))
      return minus(Formula::disj(Formula::dneg(f.lhs()), f.rhs()));
    if (!t_fals(f)) return Formula::top();
    switch (f.kind()) {
      case Kind::Bot:
      case Kind::Atom: return f;
      case Kind::And: return Formula::conj(minus(f.lhs()), minus(f.rhs()));
      case Kind::Or: return Formula::disj(minus(f.lhs()), minus(f.rhs()));
      case Kind::Impl: return minus(f.rhs());
      case Kind::DNeg: return Formula::bot();
      case Kind::XNeg: return Formula::xneg(plus(f.operand()));
      case Kind::Top: break;  // never falsified
    }
    return Formula::top();
  }
};

}  // namespace detail

inline Formula ferraris_plus(const Formula& f, const Interpretation& t,
                             ImplicationHandling h = ImplicationHandling::Direct) {
  return detail::Ferraris{t, h}.plus(f);
}

inline Formula ferraris_minus(const Formula& f, const Interpretation& t,
                              ImplicationHandling h = ImplicationHandling::Direct) {
  return detail::Ferraris{t, h}.minus(f);
}

inline Theory ferraris_plus(const Theory& g, const Interpretation& t,
                            ImplicationHandling h = ImplicationHandling::Direct) {
  Theory out;
  for (const auto& f : g) out.insert(ferraris_plus(f, t, h));
  return out;
}

/// Bottom-up constant folding. Every step replaces a subformula by one with
/// the same five-valued value under every interpretation:
///   f & top = f, f & bot = bot, f | bot = f, f | top = top,
///   ~top = bot, ~bot = top, ~~f = f, not top = bot, not bot = top,
///   top -> f = f, bot -> f = top, f -> top = top.
inline Formula simplify_constants(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Top:
    case Kind::Atom: return f;
    case Kind::XNeg: {
      Formula g = simplify_constants(f.operand());
      if (g.is(Kind::Top)) return Formula::bot();
      if (g.is(Kind::Bot)) return Formula::top();
      if (g.is(Kind::XNeg)) return g.operand();
      return Formula::xneg(g);
    }
    case Kind::DNeg: {
      Formula g = simplify_constants(f.operand());
      if (g.is(Kind::Top)) return Formula::bot();
      if (g.is(Kind::Bot)) return Formula::top();
      return Formula::dneg(g);
    }
    case Kind::And: {
      Formula a = simplify_constants(f.lhs());
      Formula b = simplify_constants(f.rhs());
      if (a.is(Kind::Bot) || b.is(Kind::Bot)) return Formula::bot();
      if (a.is(Kind::Top)) return b;
      if (b.is(Kind::Top)) return a;
      return Formula::conj(a, b);
    }
    case Kind::Or: {
      Formula a = simplify_constants(f.lhs());
      Formula b = simplify_constants(f.rhs());
      if (a.is(Kind::Top) || b.is(Kind::Top)) return Formula::top();
      if (a.is(Kind::Bot)) return b;
      if (b.is(Kind::Bot)) return a;
      return Formula::disj(a, b);
    }
    case Kind::Impl: {
      Formula a = simplify_constants(f.lhs());
      Formula b = simplify_constants(f.rhs());
      if (a.is(Kind::Top)) return b;
      if (a.is(Kind::Bot) || b.is(Kind::Top)) return Formula::top();
      return Formula::impl(a, b);
    }
  }
  return f;
}

inline Rule simplify_constants(const Rule& r) {
  return Rule(simplify_constants(r.body()), simplify_constants(r.head()));
}

inline Program simplify_constants(const Program& p) {
  Program out;
  for (const auto& r : p) out.insert(simplify_constants(r));
  return out;
}

}  // namespace x5
