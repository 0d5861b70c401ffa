#pragma once

// Validity and equivalence checking by enumeration of five-valued
// assignments, plus synthesis of contexts that separate formulas which are
// not strongly equivalent.
//
//   weak_equiv(a, b)  : a <-> b is valid. Decides strong equivalence, i.e.
//                       replacing a member a of a theory by b.
//   subst_equiv(a, b) : a <=> b is valid, i.e. a and b take the same value
//                       everywhere. Decides replacement of subformulas in any
//                       context, including under "~".

#include <optional>
#include <string>
#include <vector>

#include "x5/core.hpp"
#include "x5/semantics.hpp"
#include "x5/solver.hpp"

namespace x5 {

/// Outcome of a separating-context construction.
struct ContextCheck {
  /// True when the witness satisfies alpha and not beta; false for the
  /// mirrored case.
  bool alpha_satisfied = true;
  std::vector<Interpretation> models_with_alpha;
  std::vector<Interpretation> models_with_beta;
  /// The two extended theories have different equilibrium models.
  bool verified = false;
};

struct EquivVerdict {
  bool equivalent = true;
  /// First counter-model in canonical order; present iff !equivalent.
  std::optional<X5Interpretation> witness;
  /// Values of the checked formula(s) at the witness.
  std::vector<FiveValue> witness_values;
  /// Signature the verdict was computed over.
  Signature signature;
  /// Discriminating theory, when requested and constructible.
  std::optional<Program> context;
  std::optional<ContextCheck> check;
};

namespace detail {

inline EquivVerdict first_failure(const Signature& sig, const std::vector<Formula>& shown,
                                  const std::function<bool(const X5Interpretation&)>& holds,
                                  EvalMode mode) {
  EquivVerdict v;
  v.signature = sig;
  X5Space space(sig);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    X5Interpretation m = space[i];
    if (holds(m)) continue;
    v.equivalent = false;
    for (const auto& f : shown) v.witness_values.push_back(value5(m, f, mode));
    v.witness = std::move(m);
    break;
  }
  return v;
}

inline Signature joint_atoms(const Formula& a, const Formula& b) {
  Signature s = atoms(a);
  collect_atoms(b, s);
  return s;
}

}  // namespace detail

/// value5 is designated at every interpretation over atoms(phi).
inline EquivVerdict is_valid(const Formula& phi, const SolveOptions& opts = {},
                             EvalMode mode = EvalMode::X5) {
  const Signature sig = effective_signature(atoms(phi), opts);
  return detail::first_failure(
      sig, {phi}, [&](const X5Interpretation& m) { return value5(m, phi, mode).designated(); },
      mode);
}

/// Validity of a <-> b. Witness values are those of a and b.
inline EquivVerdict weak_equiv(const Formula& a, const Formula& b, const SolveOptions& opts = {},
                               EvalMode mode = EvalMode::X5) {
  const Signature sig = effective_signature(detail::joint_atoms(a, b), opts);
  const Formula iff = Formula::iff(a, b);
  return detail::first_failure(
      sig, {a, b}, [&](const X5Interpretation& m) { return value5(m, iff, mode).designated(); },
      mode);
}

/// Validity of a <=> b. Witness values are those of a and b.
inline EquivVerdict subst_equiv(const Formula& a, const Formula& b,
                                const SolveOptions& opts = {}, EvalMode mode = EvalMode::X5) {
  const Signature sig = effective_signature(detail::joint_atoms(a, b), opts);
  const Formula iff = Formula::strong_iff(a, b);
  return detail::first_failure(
      sig, {a, b}, [&](const X5Interpretation& m) { return value5(m, iff, mode).designated(); },
      mode);
}

/// Builds a theory Delta such that Delta + {a} and Delta + {b} have different
/// equilibrium models. With <H,T> the first interpretation satisfying one
/// formula and not the other:
///   Delta = T                                 if <T,T> fails the other formula,
///   Delta = H + { l1 -> l2 : l1, l2 in T\H }  otherwise.
/// Throws EquivalentFormulas when a <-> b is valid.
inline EquivVerdict discriminating_context(const Formula& a, const Formula& b,
                                           const SolveOptions& opts = {}) {
  const Signature sig = effective_signature(detail::joint_atoms(a, b), opts);
  X5Space space(sig);
  std::optional<X5Interpretation> witness;
  bool alpha_satisfied = true;
  for (int pass = 0; pass < 2 && !witness; ++pass) {
    const Formula& sat_f = pass == 0 ? a : b;
    const Formula& unsat_f = pass == 0 ? b : a;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      X5Interpretation m = space[i];
      if (x5_sat(m, sat_f) && !x5_sat(m, unsat_f)) {
        witness = std::move(m);
        alpha_satisfied = pass == 0;
        break;
      }
    }
  }
  if (!witness)
    throw EquivalentFormulas("formulas are strongly equivalent; no discriminating context exists");

  const Formula& unsat_f = alpha_satisfied ? b : a;
  const Interpretation& here = witness->here();
  const Interpretation& there = witness->there();
  Program delta;
  if (!x5_sat(witness->there_world(), unsat_f)) {
    for (const auto& l : there) delta.insert(Rule::fact(Formula::literal(l)));
  } else {
    for (const auto& l : here) delta.insert(Rule::fact(Formula::literal(l)));
    std::vector<ExplicitLiteral> gap;
    for (const auto& l : there)
      if (!here.contains(l)) gap.push_back(l);
    for (const auto& l1 : gap)
      for (const auto& l2 : gap) delta.insert(Rule(Formula::literal(l1), Formula::literal(l2)));
  }

  SolveOptions solve = opts;
  solve.signature = sig;
  ContextCheck check;
  check.alpha_satisfied = alpha_satisfied;
  check.models_with_alpha = equilibrium_models(Theory(delta) + a, solve);
  check.models_with_beta = equilibrium_models(Theory(delta) + b, solve);
  check.verified = check.models_with_alpha != check.models_with_beta;

  EquivVerdict v;
  v.equivalent = false;
  v.signature = sig;
  v.witness_values = {value5(*witness, a), value5(*witness, b)};
  v.witness = std::move(witness);
  v.context = std::move(delta);
  v.check = std::move(check);
  return v;
}

/// Model sets of gamma + {a} and gamma + {b} coincide. Requires a <-> b valid.
inline bool theory_replace_check(const Theory& gamma, const Formula& a, const Formula& b,
                                 const SolveOptions& opts = {}) {
  if (!weak_equiv(a, b, opts).equivalent)
    throw InvalidArgument("precondition violated: the formulas are not weakly equivalent");
  Signature own = atoms(gamma);
  collect_atoms(a, own);
  collect_atoms(b, own);
  const Signature sig = effective_signature(std::move(own), opts);
  const Theory with_a = gamma + a;
  const Theory with_b = gamma + b;
  X5Space space(sig);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const X5Interpretation m = space[i];
    if (is_model(m, with_a) != is_model(m, with_b)) return false;
  }
  return true;
}

/// A context phi (over a fresh placeholder atom) and a theory Delta showing
/// that a and b are not interchangeable inside formulas.
struct SubstitutionContext {
  Atom placeholder;
  Formula context;
  EquivVerdict separation;
};

/// When a <-> b is not valid the context is the placeholder itself;
/// otherwise it is ~placeholder. Throws EquivalentFormulas when a <=> b is valid.
inline SubstitutionContext substitution_context(const Formula& a, const Formula& b,
                                                const SolveOptions& opts = {}) {
  if (subst_equiv(a, b, opts).equivalent)
    throw EquivalentFormulas("formulas are substitution equivalent");
  const Signature used = detail::joint_atoms(a, b);
  std::string name = "x";
  for (int i = 0; used.count(Atom(name)) != 0; ++i) name = "x" + std::to_string(i);
  Atom p(name);
  if (!weak_equiv(a, b, opts).equivalent)
    return {p, Formula::atom(p), discriminating_context(a, b, opts)};
  return {p, Formula::xneg(Formula::atom(p)),
          discriminating_context(Formula::xneg(a), Formula::xneg(b), opts)};
}

}  // namespace x5
