#pragma once

// Domain types for propositional theories with two negations: formulas,
// rules, programs, theories and (here/there) interpretations.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "x5/error.hpp"

namespace x5 {

inline bool is_reserved_word(std::string_view s) {
  return s == "top" || s == "bot" || s == "not";
}

inline bool is_atom_name(std::string_view s) {
  if (s.empty() || !(s.front() >= 'a' && s.front() <= 'z')) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return !is_reserved_word(s);
}

class Atom {
public:
  explicit Atom(std::string name) : name_(std::move(name)) {
    if (!is_atom_name(name_))
      throw InvalidArgument("invalid atom name '" + name_ + "'");
  }

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

private:
  std::string name_;
};

using Signature = std::set<Atom>;

/// An atom or its explicit negation. Ordered by atom, positive first.
struct ExplicitLiteral {
  Atom atom;
  bool negated = false;

  ExplicitLiteral complement() const { return {atom, !negated}; }

  friend bool operator==(const ExplicitLiteral&, const ExplicitLiteral&) = default;
  friend std::strong_ordering operator<=>(const ExplicitLiteral& a,
                                          const ExplicitLiteral& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    return a.negated <=> b.negated;
  }
};

inline std::string to_string(const ExplicitLiteral& l) {
  return l.negated ? "~" + l.atom.name() : l.atom.name();
}

// ---------------------------------------------------------------------------
// Formula

enum class Kind : std::uint8_t { Bot, Top, Atom, XNeg, DNeg, And, Or, Impl };

class Formula {
  struct Node;

public:
  static Formula bot() { return Formula(std::make_shared<const Node>(Kind::Bot)); }
  static Formula top() { return Formula(std::make_shared<const Node>(Kind::Top)); }
  static Formula atom(Atom a) {
    return Formula(std::make_shared<const Node>(Kind::Atom, std::move(a)));
  }
  static Formula atom(std::string name) { return atom(Atom(std::move(name))); }
  static Formula literal(const ExplicitLiteral& l) {
    return l.negated ? xneg(atom(l.atom)) : atom(l.atom);
  }
  static Formula xneg(Formula f) { return unary(Kind::XNeg, std::move(f)); }
  static Formula dneg(Formula f) { return unary(Kind::DNeg, std::move(f)); }
  static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
  static Formula impl(Formula a, Formula b) { return binary(Kind::Impl, std::move(a), std::move(b)); }

  /// (a -> b) & (b -> a)
  static Formula iff(const Formula& a, const Formula& b) {
    return conj(impl(a, b), impl(b, a));
  }
  /// (a <-> b) & (~a <-> ~b); designated exactly when both sides take the same value.
  static Formula strong_iff(const Formula& a, const Formula& b) {
    return conj(iff(a, b), iff(xneg(a), xneg(b)));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }
  bool is_unary() const noexcept { return is(Kind::XNeg) || is(Kind::DNeg); }
  bool is_binary() const noexcept {
    return is(Kind::And) || is(Kind::Or) || is(Kind::Impl);
  }

  const Atom& atom_ref() const {
    if (!is(Kind::Atom)) throw InvalidArgument("formula is not an atom");
    return *node_->atom;
  }
  const Formula& operand() const { return child(0); }
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  std::size_t size() const noexcept { return node_->size; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return compare(a, b);
  }

private:
  struct Node {
    explicit Node(Kind k) : kind(k) {}
    Node(Kind k, Atom a) : kind(k), atom(std::make_unique<Atom>(std::move(a))) {}
    Node(Kind k, std::vector<Formula> cs) : kind(k), children(std::move(cs)) {
      for (const auto& c : children) size += c.size();
    }
    Kind kind;
    std::unique_ptr<Atom> atom;
    std::vector<Formula> children;
    std::size_t size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula unary(Kind k, Formula f) {
    return Formula(std::make_shared<const Node>(k, std::vector<Formula>{std::move(f)}));
  }
  static Formula binary(Kind k, Formula a, Formula b) {
    return Formula(
        std::make_shared<const Node>(k, std::vector<Formula>{std::move(a), std::move(b)}));
  }

  const Formula& child(std::size_t i) const {
    if (i >= node_->children.size()) throw InvalidArgument("formula has no such operand");
    return node_->children[i];
  }

  static std::strong_ordering compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is(Kind::Atom)) return a.atom_ref() <=> b.atom_ref();
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (auto c = compare(ca[i], cb[i]); c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Structural utilities

inline void collect_atoms(const Formula& f, Signature& out) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Top: return;
    case Kind::Atom: out.insert(f.atom_ref()); return;
    case Kind::XNeg:
    case Kind::DNeg: collect_atoms(f.operand(), out); return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

inline Signature atoms(const Formula& f) {
  Signature s;
  collect_atoms(f, s);
  return s;
}

/// Uniform substitution of every occurrence of `p` by `alpha`.
inline Formula substitute(const Formula& phi, const Atom& p, const Formula& alpha) {
  switch (phi.kind()) {
    case Kind::Bot:
    case Kind::Top: return phi;
    case Kind::Atom: return phi.atom_ref() == p ? alpha : phi;
    case Kind::XNeg: return Formula::xneg(substitute(phi.operand(), p, alpha));
    case Kind::DNeg: return Formula::dneg(substitute(phi.operand(), p, alpha));
    case Kind::And:
      return Formula::conj(substitute(phi.lhs(), p, alpha), substitute(phi.rhs(), p, alpha));
    case Kind::Or:
      return Formula::disj(substitute(phi.lhs(), p, alpha), substitute(phi.rhs(), p, alpha));
    case Kind::Impl:
      return Formula::impl(substitute(phi.lhs(), p, alpha), substitute(phi.rhs(), p, alpha));
  }
  return phi;
}

/// Nested expressions are the implication-free formulas.
inline bool is_nested(const Formula& f) {
  switch (f.kind()) {
    case Kind::Impl: return false;
    case Kind::XNeg:
    case Kind::DNeg: return is_nested(f.operand());
    case Kind::And:
    case Kind::Or: return is_nested(f.lhs()) && is_nested(f.rhs());
    default: return true;
  }
}

inline bool is_explicit(const Formula& f) {
  switch (f.kind()) {
    case Kind::DNeg: return false;
    case Kind::XNeg: return is_explicit(f.operand());
    case Kind::And:
    case Kind::Or:
    case Kind::Impl: return is_explicit(f.lhs()) && is_explicit(f.rhs());
    default: return true;
  }
}

inline bool is_explicit_literal(const Formula& f) {
  return f.is(Kind::Atom) || (f.is(Kind::XNeg) && f.operand().is(Kind::Atom));
}

inline ExplicitLiteral as_literal(const Formula& f) {
  if (f.is(Kind::Atom)) return {f.atom_ref(), false};
  if (is_explicit_literal(f)) return {f.operand().atom_ref(), true};
  throw InvalidArgument("formula is not an explicit literal");
}

/// L or not L, for an explicit literal L.
inline bool is_default_literal(const Formula& f) {
  return is_explicit_literal(f) || (f.is(Kind::DNeg) && is_explicit_literal(f.operand()));
}

/// Explicit negation occurs only directly over atoms.
inline bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::XNeg: return f.operand().is(Kind::Atom);
    case Kind::DNeg: return is_nnf(f.operand());
    case Kind::And:
    case Kind::Or:
    case Kind::Impl: return is_nnf(f.lhs()) && is_nnf(f.rhs());
    default: return true;
  }
}

/// Flattens nested applications of a binary connective, left to right.
inline void flatten(const Formula& f, Kind k, std::vector<Formula>& out) {
  if (f.is(k)) {
    flatten(f.lhs(), k, out);
    flatten(f.rhs(), k, out);
  } else {
    out.push_back(f);
  }
}

/// Left fold of `items` with connective `k`; `unit` when empty.
inline Formula fold(const std::vector<Formula>& items, Kind k, const Formula& unit) {
  if (items.empty()) return unit;
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i)
    acc = k == Kind::And ? Formula::conj(acc, items[i]) : Formula::disj(acc, items[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Rules, programs, theories

class Rule {
public:
  Rule(Formula body, Formula head) : body_(std::move(body)), head_(std::move(head)) {
    if (!is_nested(body_)) throw InvalidArgument("implication nested inside rule body");
    if (!is_nested(head_)) throw InvalidArgument("implication nested inside rule head");
  }
  static Rule fact(Formula head) { return Rule(Formula::top(), std::move(head)); }

  const Formula& body() const noexcept { return body_; }
  const Formula& head() const noexcept { return head_; }
  Formula as_formula() const { return Formula::impl(body_, head_); }

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;

private:
  Formula body_;
  Formula head_;
};

namespace detail {

/// Insertion-ordered list without duplicates; equality ignores order.
template <class T>
class OrderedSet {
public:
  OrderedSet() = default;
  OrderedSet(std::initializer_list<T> xs) {
    for (const auto& x : xs) insert(x);
  }
  explicit OrderedSet(const std::vector<T>& xs) {
    for (const auto& x : xs) insert(x);
  }

  bool insert(const T& x) {
    if (!index_.insert(x).second) return false;
    items_.push_back(x);
    return true;
  }
  bool contains(const T& x) const { return index_.count(x) != 0; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<T>& items() const noexcept { return items_; }

  friend bool operator==(const OrderedSet& a, const OrderedSet& b) {
    return a.index_ == b.index_;
  }

private:
  std::vector<T> items_;
  std::set<T> index_;
};

}  // namespace detail

class Program : public detail::OrderedSet<Rule> {
public:
  using detail::OrderedSet<Rule>::OrderedSet;
  const std::vector<Rule>& rules() const noexcept { return items(); }
};

class Theory : public detail::OrderedSet<Formula> {
public:
  using detail::OrderedSet<Formula>::OrderedSet;
  Theory() = default;
  explicit Theory(const Program& p) {
    for (const auto& r : p) insert(r.as_formula());
  }
  const std::vector<Formula>& formulas() const noexcept { return items(); }
};

inline Theory operator+(Theory t, const Formula& f) {
  t.insert(f);
  return t;
}

inline Signature atoms(const Rule& r) {
  Signature s;
  collect_atoms(r.body(), s);
  collect_atoms(r.head(), s);
  return s;
}
inline Signature atoms(const Program& p) {
  Signature s;
  for (const auto& r : p) {
    collect_atoms(r.body(), s);
    collect_atoms(r.head(), s);
  }
  return s;
}
inline Signature atoms(const Theory& t) {
  Signature s;
  for (const auto& f : t) collect_atoms(f, s);
  return s;
}

inline bool is_explicit(const Program& p) {
  return std::all_of(p.begin(), p.end(), [](const Rule& r) {
    return is_explicit(r.body()) && is_explicit(r.head());
  });
}

/// Conjunction of default literals (or top) -> disjunction of default
/// literals (or bot), excluding top -> bot.
inline bool is_regular(const Rule& r) {
  const bool empty_body = r.body().is(Kind::Top);
  const bool empty_head = r.head().is(Kind::Bot);
  if (empty_body && empty_head) return false;
  std::vector<Formula> items;
  if (!empty_body) {
    flatten(r.body(), Kind::And, items);
    if (!std::all_of(items.begin(), items.end(), is_default_literal)) return false;
  }
  items.clear();
  if (!empty_head) {
    flatten(r.head(), Kind::Or, items);
    if (!std::all_of(items.begin(), items.end(), is_default_literal)) return false;
  }
  return true;
}

inline bool is_regular(const Program& p) {
  return std::all_of(p.begin(), p.end(), [](const Rule& r) { return is_regular(r); });
}

// ---------------------------------------------------------------------------
// Interpretations

/// A consistent set of explicit literals.
class Interpretation {
public:
  Interpretation() = default;
  Interpretation(std::initializer_list<ExplicitLiteral> lits)
      : Interpretation(std::vector<ExplicitLiteral>(lits)) {}
  explicit Interpretation(std::vector<ExplicitLiteral> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (std::size_t i = 1; i < lits_.size(); ++i)
      if (lits_[i - 1].atom == lits_[i].atom)
        throw InvalidArgument("inconsistent interpretation: " + lits_[i].atom.name() +
                              " and ~" + lits_[i].atom.name());
  }

  bool contains(const ExplicitLiteral& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }
  bool contains(const Atom& a, bool negated) const { return contains({a, negated}); }

  bool subset_of(const Interpretation& o) const {
    return std::includes(o.lits_.begin(), o.lits_.end(), lits_.begin(), lits_.end());
  }

  const std::vector<ExplicitLiteral>& literals() const noexcept { return lits_; }
  std::size_t size() const noexcept { return lits_.size(); }
  bool empty() const noexcept { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
  friend auto operator<=>(const Interpretation&, const Interpretation&) = default;

private:
  std::vector<ExplicitLiteral> lits_;
};

/// Five truth values; 2 is the only designated one.
class FiveValue {
public:
  constexpr FiveValue() = default;
  constexpr explicit FiveValue(int v) : v_(v) {
    if (v < -2 || v > 2) throw InvalidArgument("five-valued truth value out of range");
  }
  constexpr int value() const noexcept { return v_; }
  constexpr bool designated() const noexcept { return v_ == 2; }
  constexpr FiveValue operator-() const { return FiveValue(-v_); }

  friend constexpr bool operator==(FiveValue, FiveValue) = default;
  friend constexpr auto operator<=>(FiveValue, FiveValue) = default;

private:
  int v_ = 0;
};

/// A pair <H, T> with H a subset of T.
class X5Interpretation {
public:
  X5Interpretation() = default;
  X5Interpretation(Interpretation here, Interpretation there)
      : here_(std::move(here)), there_(std::move(there)) {
    if (!here_.subset_of(there_))
      throw InvalidArgument("here-world is not a subset of the there-world");
  }
  static X5Interpretation total(const Interpretation& t) { return {t, t}; }

  const Interpretation& here() const noexcept { return here_; }
  const Interpretation& there() const noexcept { return there_; }
  bool is_total() const { return here_ == there_; }
  X5Interpretation there_world() const { return total(there_); }

  FiveValue value_of(const Atom& a) const {
    if (here_.contains(a, false)) return FiveValue(2);
    if (here_.contains(a, true)) return FiveValue(-2);
    if (there_.contains(a, false)) return FiveValue(1);
    if (there_.contains(a, true)) return FiveValue(-1);
    return FiveValue(0);
  }

  /// Inverse of value_of over a signature.
  static X5Interpretation from_values(const std::vector<std::pair<Atom, int>>& values) {
    std::vector<ExplicitLiteral> h, t;
    for (const auto& [a, v] : values) {
      FiveValue fv(v);
      if (fv.value() == 0) continue;
      ExplicitLiteral l{a, fv.value() < 0};
      t.push_back(l);
      if (fv.value() == 2 || fv.value() == -2) h.push_back(l);
    }
    return {Interpretation(std::move(h)), Interpretation(std::move(t))};
  }

  friend bool operator==(const X5Interpretation&, const X5Interpretation&) = default;

private:
  Interpretation here_;
  Interpretation there_;
};

}  // namespace x5
