#pragma once

// Brute-force model enumeration: interpretations, minimal models of
// explicit programs, answer sets via the reduct, equilibrium models via
// here/there satisfaction, and equilibrium models via the Ferraris-style
// reduct.
//
// Canonical order: the first atom of the (name-sorted) signature varies
// fastest. Per atom, literal sets cycle through absent, p, ~p and here/there
// pairs through the values 0, 1, 2, -1, -2.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

#include "x5/core.hpp"
#include "x5/reduct.hpp"
#include "x5/semantics.hpp"

namespace x5 {

struct SolveOptions {
  /// Extra atoms; the input's own atoms are always included.
  Signature signature;
  /// Enumeration refuses larger signatures (3^n and 5^n blowup).
  std::size_t max_atoms = 12;
  /// Worker threads over candidate there-worlds; 1 runs sequentially.
  unsigned parallel = 1;
};

inline void check_signature(const Signature& sig, std::size_t max_atoms) {
  if (sig.size() > max_atoms) throw SignatureTooLarge(sig.size(), max_atoms);
}

inline Signature effective_signature(Signature own, const SolveOptions& opts) {
  own.insert(opts.signature.begin(), opts.signature.end());
  check_signature(own, opts.max_atoms);
  return own;
}

/// All 3^n consistent literal sets over a signature, randomly accessible.
class InterpretationSpace {
public:
  explicit InterpretationSpace(const Signature& sig) : atoms_(sig.begin(), sig.end()) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) size_ *= 3;
  }

  std::uint64_t size() const noexcept { return size_; }

  Interpretation operator[](std::uint64_t index) const {
    std::vector<ExplicitLiteral> lits;
    for (const auto& a : atoms_) {
      const auto digit = index % 3;
      index /= 3;
      if (digit == 1) lits.push_back({a, false});
      if (digit == 2) lits.push_back({a, true});
    }
    return Interpretation(std::move(lits));
  }

private:
  std::vector<Atom> atoms_;
  std::uint64_t size_ = 1;
};

/// All 5^n here/there pairs over a signature, randomly accessible.
class X5Space {
public:
  explicit X5Space(const Signature& sig) : atoms_(sig.begin(), sig.end()) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) size_ *= 5;
  }

  std::uint64_t size() const noexcept { return size_; }

  X5Interpretation operator[](std::uint64_t index) const {
    static constexpr int kValues[] = {0, 1, 2, -1, -2};
    std::vector<std::pair<Atom, int>> values;
    for (const auto& a : atoms_) {
      values.emplace_back(a, kValues[index % 5]);
      index /= 5;
    }
    return X5Interpretation::from_values(values);
  }

private:
  std::vector<Atom> atoms_;
  std::uint64_t size_ = 1;
};

inline std::vector<Interpretation> enumerate_interpretations(const Signature& sig,
                                                             std::size_t max_atoms = 12) {
  check_signature(sig, max_atoms);
  InterpretationSpace space(sig);
  std::vector<Interpretation> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space[i]);
  return out;
}

inline std::vector<X5Interpretation> enumerate_x5(const Signature& sig,
                                                  std::size_t max_atoms = 12) {
  check_signature(sig, max_atoms);
  X5Space space(sig);
  std::vector<X5Interpretation> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space[i]);
  return out;
}

/// Calls `fn` on every strict subset of `t`.
inline bool any_strict_subset(const Interpretation& t,
                              const std::function<bool(const Interpretation&)>& fn) {
  const auto& lits = t.literals();
  const std::uint64_t n = lits.size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    std::vector<ExplicitLiteral> sub;
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(lits[i]);
    if (fn(Interpretation(std::move(sub)))) return true;
  }
  return false;
}

namespace detail {

/// Indices in [0, n) accepted by `keep`, ascending, independent of `workers`.
inline std::vector<std::uint64_t> filter_indices(std::uint64_t n, unsigned workers,
                                                 const std::function<bool(std::uint64_t)>& keep) {
  std::vector<std::uint64_t> out;
  if (workers <= 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (keep(i)) out.push_back(i);
    return out;
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  std::vector<std::vector<std::uint64_t>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t i = w; i < n; i += workers)
            if (keep(i)) parts[w].push_back(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Interpretation> select(const Signature& sig, unsigned workers,
                                          const std::function<bool(const Interpretation&)>& keep) {
  InterpretationSpace space(sig);
  std::vector<Interpretation> out;
  for (auto i : filter_indices(space.size(), workers,
                               [&](std::uint64_t idx) { return keep(space[idx]); }))
    out.push_back(space[i]);
  return out;
}

}  // namespace detail

/// T satisfies every rule of `p` and no strict subset of T does.
inline bool is_minimal_model(const Program& p, const Interpretation& t) {
  if (!sat(t, p)) return false;
  return !any_strict_subset(t, [&](const Interpretation& h) { return sat(h, p); });
}

/// Subset-minimal models of an explicit program.
inline std::vector<Interpretation> minimal_models_explicit(const Program& p,
                                                           const SolveOptions& opts = {}) {
  if (!is_explicit(p)) throw InvalidArgument("program contains default negation");
  const Signature sig = effective_signature(atoms(p), opts);
  return detail::select(sig, opts.parallel,
                        [&](const Interpretation& t) { return is_minimal_model(p, t); });
}

/// T is a minimal model of the reduct of `p` with respect to T.
inline bool is_answer_set(const Program& p, const Interpretation& t) {
  return is_minimal_model(reduct_program(p, t), t);
}

inline std::vector<Interpretation> answer_sets(const Program& p, const SolveOptions& opts = {}) {
  const Signature sig = effective_signature(atoms(p), opts);
  return detail::select(sig, opts.parallel,
                        [&](const Interpretation& t) { return is_answer_set(p, t); });
}

/// <T,T> is a model and no <H,T> with H a strict subset of T is.
inline bool is_equilibrium_model(const Theory& g, const Interpretation& t) {
  if (!is_model(X5Interpretation::total(t), g)) return false;
  return !any_strict_subset(t, [&](const Interpretation& h) {
    return is_model(X5Interpretation(h, t), g);
  });
}

inline std::vector<Interpretation> equilibrium_models(const Theory& g,
                                                      const SolveOptions& opts = {}) {
  const Signature sig = effective_signature(atoms(g), opts);
  return detail::select(sig, opts.parallel,
                        [&](const Interpretation& t) { return is_equilibrium_model(g, t); });
}

inline std::vector<Interpretation> equilibrium_models(const Program& p,
                                                      const SolveOptions& opts = {}) {
  return equilibrium_models(Theory(p), opts);
}

/// T is a minimal model of the Ferraris-style reduct of `g`; members of the
/// reduct are evaluated at the total pair <H,H>.
inline bool is_ferraris_equilibrium(const Theory& g, const Interpretation& t,
                                    ImplicationHandling h = ImplicationHandling::Direct) {
  const Theory reduct = ferraris_plus(g, t, h);
  auto model = [&](const Interpretation& w) {
    return std::all_of(reduct.begin(), reduct.end(),
                       [&](const Formula& f) { return detail::x5_sat_at(w, w, f); });
  };
  if (!model(t)) return false;
  return !any_strict_subset(t, model);
}

inline std::vector<Interpretation> equilibrium_models_ferraris(const Theory& g,
                                                               const SolveOptions& opts = {}) {
  const Signature sig = effective_signature(atoms(g), opts);
  return detail::select(sig, opts.parallel,
                        [&](const Interpretation& t) { return is_ferraris_equilibrium(g, t); });
}

}  // namespace x5
