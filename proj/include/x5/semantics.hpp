#pragma once

// Evaluation relations:
//  - sat/fals: satisfaction and falsification of nested expressions by a
//    single consistent set of literals;
//  - x5_sat/x5_fals: satisfaction and falsification at a here/there pair;
//  - value5: the five-valued valuation (X5, or N5 with its one changed
//    implication cell);
//  - classical_sat: here/there satisfaction with "~" read as plain failure.

#include <algorithm>

#include "x5/core.hpp"

namespace x5 {

enum class EvalMode { X5, N5, ClassicalNeg };

inline const char* to_string(EvalMode m) {
  switch (m) {
    case EvalMode::X5: return "x5";
    case EvalMode::N5: return "n5";
    case EvalMode::ClassicalNeg: return "classical";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Literal sets

namespace detail {

inline bool sat_nested(const Interpretation& t, const Formula& f);

inline bool fals_nested(const Interpretation& t, const Formula& f) {
  switch (f.kind()) {
    case Kind::Top: return false;
    case Kind::Bot: return true;
    case Kind::Atom: return t.contains(f.atom_ref(), true);
    case Kind::And: return fals_nested(t, f.lhs()) || fals_nested(t, f.rhs());
    case Kind::Or: return fals_nested(t, f.lhs()) && fals_nested(t, f.rhs());
    case Kind::XNeg: return sat_nested(t, f.operand());
    case Kind::DNeg: return sat_nested(t, f.operand());
    case Kind::Impl: break;
  }
  throw InvalidArgument("satisfaction on literal sets requires a nested expression");
}

inline bool sat_nested(const Interpretation& t, const Formula& f) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Atom: return t.contains(f.atom_ref(), false);
    case Kind::And: return sat_nested(t, f.lhs()) && sat_nested(t, f.rhs());
    case Kind::Or: return sat_nested(t, f.lhs()) || sat_nested(t, f.rhs());
    case Kind::XNeg: return fals_nested(t, f.operand());
    case Kind::DNeg: return !sat_nested(t, f.operand());
    case Kind::Impl: break;
  }
  throw InvalidArgument("satisfaction on literal sets requires a nested expression");
}

}  // namespace detail

/// T |= F for a nested expression F.
inline bool sat(const Interpretation& t, const Formula& f) { return detail::sat_nested(t, f); }

/// T =| F for a nested expression F.
inline bool fals(const Interpretation& t, const Formula& f) { return detail::fals_nested(t, f); }

/// Every rule F -> G of an explicit (or any nested) program: T |= F implies T |= G.
inline bool sat(const Interpretation& t, const Program& p) {
  return std::all_of(p.begin(), p.end(), [&](const Rule& r) {
    return !sat(t, r.body()) || sat(t, r.head());
  });
}

// ---------------------------------------------------------------------------
// Here/there pairs

namespace detail {

// `here` and `there` are the two worlds; the there-world pair is <there, there>.
inline bool x5_sat_at(const Interpretation& here, const Interpretation& there, const Formula& f);

inline bool x5_fals_at(const Interpretation& here, const Interpretation& there,
                       const Formula& f) {
  switch (f.kind()) {
    case Kind::Top: return false;
    case Kind::Bot: return true;
    case Kind::Atom: return here.contains(f.atom_ref(), true);
    case Kind::And: return x5_fals_at(here, there, f.lhs()) || x5_fals_at(here, there, f.rhs());
    case Kind::Or: return x5_fals_at(here, there, f.lhs()) && x5_fals_at(here, there, f.rhs());
    case Kind::XNeg: return x5_sat_at(here, there, f.operand());
    case Kind::DNeg: return x5_sat_at(there, there, f.operand());
    case Kind::Impl:
      return x5_sat_at(there, there, f.lhs()) && x5_fals_at(here, there, f.rhs());
  }
  return false;
}

inline bool x5_sat_at(const Interpretation& here, const Interpretation& there, const Formula& f) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Atom: return here.contains(f.atom_ref(), false);
    case Kind::And: return x5_sat_at(here, there, f.lhs()) && x5_sat_at(here, there, f.rhs());
    case Kind::Or: return x5_sat_at(here, there, f.lhs()) || x5_sat_at(here, there, f.rhs());
    case Kind::XNeg: return x5_fals_at(here, there, f.operand());
    case Kind::DNeg: return !x5_sat_at(there, there, f.operand());
    case Kind::Impl: {
      const bool at_here =
          !x5_sat_at(here, there, f.lhs()) || x5_sat_at(here, there, f.rhs());
      if (!at_here) return false;
      if (&here == &there) return true;
      return !x5_sat_at(there, there, f.lhs()) || x5_sat_at(there, there, f.rhs());
    }
  }
  return false;
}

}  // namespace detail

inline bool x5_sat(const X5Interpretation& m, const Formula& f) {
  return detail::x5_sat_at(m.here(), m.there(), f);
}

inline bool x5_fals(const X5Interpretation& m, const Formula& f) {
  return detail::x5_fals_at(m.here(), m.there(), f);
}

/// <H,T> is a model when it satisfies every member.
inline bool is_model(const X5Interpretation& m, const Theory& g) {
  return std::all_of(g.begin(), g.end(), [&](const Formula& f) { return x5_sat(m, f); });
}

inline bool is_model(const X5Interpretation& m, const Program& p) {
  return std::all_of(p.begin(), p.end(),
                     [&](const Rule& r) { return x5_sat(m, r.as_formula()); });
}

// ---------------------------------------------------------------------------
// Five-valued valuation

/// Truth table of implication. N5 differs from X5 only at (1, -2).
constexpr int implication_value(int antecedent, int consequent, EvalMode mode = EvalMode::X5) {
  if (antecedent <= std::max(consequent, 0)) return 2;
  if (mode == EvalMode::N5 && antecedent == 1 && consequent == -2) return -1;
  return consequent;
}

inline FiveValue value5(const X5Interpretation& m, const Formula& f,
                        EvalMode mode = EvalMode::X5) {
  if (mode == EvalMode::ClassicalNeg)
    throw InvalidArgument("the classical-negation reading has no five-valued valuation");
  switch (f.kind()) {
    case Kind::Bot: return FiveValue(-2);
    case Kind::Top: return FiveValue(2);
    case Kind::Atom: return m.value_of(f.atom_ref());
    case Kind::XNeg: return -value5(m, f.operand(), mode);
    case Kind::DNeg:
      return FiveValue(implication_value(value5(m, f.operand(), mode).value(), -2, mode));
    case Kind::And: return std::min(value5(m, f.lhs(), mode), value5(m, f.rhs(), mode));
    case Kind::Or: return std::max(value5(m, f.lhs(), mode), value5(m, f.rhs(), mode));
    case Kind::Impl:
      return FiveValue(implication_value(value5(m, f.lhs(), mode).value(),
                                         value5(m, f.rhs(), mode).value(), mode));
  }
  return FiveValue(0);
}

// ---------------------------------------------------------------------------
// Classical negation reading

namespace detail {

inline bool classical_at(const Interpretation& here, const Interpretation& there,
                         const Formula& f) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Atom: return here.contains(f.atom_ref(), false);
    case Kind::And: return classical_at(here, there, f.lhs()) && classical_at(here, there, f.rhs());
    case Kind::Or: return classical_at(here, there, f.lhs()) || classical_at(here, there, f.rhs());
    case Kind::XNeg: return !classical_at(here, there, f.operand());
    case Kind::DNeg:
      // f -> bot at both worlds
      return !classical_at(here, there, f.operand()) && !classical_at(there, there, f.operand());
    case Kind::Impl:
      return (!classical_at(here, there, f.lhs()) || classical_at(here, there, f.rhs())) &&
             (!classical_at(there, there, f.lhs()) || classical_at(there, there, f.rhs()));
  }
  return false;
}

}  // namespace detail

/// Satisfaction with "~f" true at a world exactly when f is not satisfied
/// there. Not persistent; there is no falsification relation.
inline bool classical_sat(const X5Interpretation& m, const Formula& f) {
  return detail::classical_at(m.here(), m.there(), f);
}

}  // namespace x5
