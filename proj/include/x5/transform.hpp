#pragma once

// Program rewriting:
//  - to_nnf: push explicit negation down to atoms;
//  - to_regular: turn a program in negation normal form into regular rules;
//  - export_asp: render regular rules in mainstream ASP solver syntax;
//  - cross_encode: express N5 connectives in X5 and vice versa.
//
// Every rewrite step has an id listed in rewrite_rules(), whose entries are
// checked semantically by verify_rewrite_rules().

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "x5/core.hpp"
#include "x5/equivalence.hpp"
#include "x5/semantics.hpp"

namespace x5 {

struct RewriteStep {
  std::string rule;
  std::string position;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteTrace = std::vector<RewriteStep>;

inline std::string to_string(const RewriteTrace& trace) {
  std::string out;
  for (const auto& s : trace) out += s.rule + " " + s.position + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Rule table

enum class Strength {
  /// lhs <=> rhs: replaceable anywhere, including under "~".
  Substitution,
  /// lhs <-> rhs only: replaceable outside the scope of "~".
  Weak,
};

struct RewriteRule {
  std::string_view id;
  Formula lhs;
  Formula rhs;
  Strength strength;
  EvalMode logic;
};

inline const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = [] {
    const Formula phi = Formula::atom("phi");
    const Formula psi = Formula::atom("psi");
    const Formula gamma = Formula::atom("gamma");
    const Formula top = Formula::top();
    const Formula bot = Formula::bot();
    auto neg = [](Formula f) { return Formula::xneg(std::move(f)); };
    auto no = [](Formula f) { return Formula::dneg(std::move(f)); };
    auto conj = [](Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); };
    auto disj = [](Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); };
    auto impl = [](Formula a, Formula b) { return Formula::impl(std::move(a), std::move(b)); };
    constexpr auto S = Strength::Substitution;
    constexpr auto W = Strength::Weak;
    constexpr auto X5 = EvalMode::X5;
    constexpr auto N5 = EvalMode::N5;
    return std::vector<RewriteRule>{
        // explicit negation normal form
        {"neg-top", neg(top), bot, S, X5},
        {"neg-bot", neg(bot), top, S, X5},
        {"neg-and", neg(conj(phi, psi)), disj(neg(phi), neg(psi)), S, X5},
        {"neg-or", neg(disj(phi, psi)), conj(neg(phi), neg(psi)), S, X5},
        {"neg-neg", neg(neg(phi)), phi, S, X5},
        {"neg-not", neg(no(phi)), no(no(phi)), S, X5},
        {"neg-impl", neg(impl(phi, psi)), conj(no(no(phi)), neg(psi)), W, X5},
        {"neg-not-n5", neg(no(phi)), phi, W, N5},
        {"neg-impl-n5", neg(impl(phi, psi)), conj(phi, neg(psi)), W, N5},
        // regularization
        {"distribute-and", conj(phi, disj(psi, gamma)), disj(conj(phi, psi), conj(phi, gamma)), S, X5},
        {"distribute-or", disj(phi, conj(psi, gamma)), conj(disj(phi, psi), disj(phi, gamma)), S, X5},
        {"and-bot", conj(phi, bot), bot, S, X5},
        {"or-top", disj(phi, top), top, S, X5},
        {"and-top", conj(phi, top), phi, S, X5},
        {"or-bot", disj(phi, bot), phi, S, X5},
        {"not-and", no(conj(phi, psi)), disj(no(phi), no(psi)), S, X5},
        {"not-or", no(disj(phi, psi)), conj(no(phi), no(psi)), S, X5},
        {"not-top", no(top), bot, S, X5},
        {"not-bot", no(bot), top, S, X5},
        {"triple-not", no(no(no(phi))), no(phi), S, X5},
        {"split-head", impl(phi, conj(psi, gamma)), conj(impl(phi, psi), impl(phi, gamma)), S, X5},
        {"split-body", impl(disj(phi, psi), gamma), conj(impl(phi, gamma), impl(psi, gamma)), S, X5},
        {"notnot-body", impl(conj(phi, no(no(psi))), gamma), impl(phi, disj(gamma, no(psi))), S, X5},
        {"notnot-head", impl(phi, disj(gamma, no(no(psi)))), impl(conj(phi, no(psi)), gamma), S, X5},
        // constant folding of implications
        {"top-body", impl(top, phi), phi, S, X5},
        {"bot-body", impl(bot, phi), top, S, X5},
        {"top-head", impl(phi, top), top, S, X5},
    };
  }();
  return rules;
}

inline const RewriteRule& rewrite_rule(std::string_view id) {
  for (const auto& r : rewrite_rules())
    if (r.id == id) return r;
  throw InvalidArgument("unknown rewrite rule '" + std::string(id) + "'");
}

struct RuleCheck {
  std::string id;
  /// lhs <-> rhs valid in the rule's logic.
  bool weak_valid = false;
  /// lhs <=> rhs valid in the rule's logic.
  bool substitution_valid = false;
  /// The rule holds with its declared strength.
  bool ok = false;
};

/// Validates every table entry on its schema instance (distinct atoms for
/// the schema variables).
inline std::vector<RuleCheck> verify_rewrite_rules() {
  std::vector<RuleCheck> out;
  for (const auto& r : rewrite_rules()) {
    RuleCheck c;
    c.id = std::string(r.id);
    c.weak_valid = weak_equiv(r.lhs, r.rhs, {}, r.logic).equivalent;
    c.substitution_valid = subst_equiv(r.lhs, r.rhs, {}, r.logic).equivalent;
    c.ok = r.strength == Strength::Substitution ? c.substitution_valid : c.weak_valid;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Negation normal form

namespace detail {

inline std::string child_path(const std::string& path, int i) {
  return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

struct NnfRewriter {
  EvalMode mode;
  RewriteTrace* trace;

  void note(std::string_view rule, const std::string& path) const {
    if (trace) trace->push_back({std::string(rule), path.empty() ? "root" : path});
  }

  // Outermost-first: the connective under "~" decides the step before any
  // subformula is touched.
  Formula run(const Formula& f, const std::string& path) const {
    switch (f.kind()) {
      case Kind::Bot:
      case Kind::Top:
      case Kind::Atom: return f;
      case Kind::DNeg: return Formula::dneg(run(f.operand(), child_path(path, 0)));
      case Kind::And:
      case Kind::Or:
      case Kind::Impl: {
        Formula a = run(f.lhs(), child_path(path, 0));
        Formula b = run(f.rhs(), child_path(path, 1));
        return rebuild(f.kind(), std::move(a), std::move(b));
      }
      case Kind::XNeg: return negated(f.operand(), path);
    }
    return f;
  }

  static Formula rebuild(Kind k, Formula a, Formula b) {
    if (k == Kind::And) return Formula::conj(std::move(a), std::move(b));
    if (k == Kind::Or) return Formula::disj(std::move(a), std::move(b));
    return Formula::impl(std::move(a), std::move(b));
  }

  // NNF of ~g placed at `path`.
  Formula negated(const Formula& g, const std::string& path) const {
    switch (g.kind()) {
      case Kind::Atom: return Formula::xneg(g);
      case Kind::Top: note("neg-top", path); return Formula::bot();
      case Kind::Bot: note("neg-bot", path); return Formula::top();
      case Kind::And:
      case Kind::Or: {
        note(g.is(Kind::And) ? "neg-and" : "neg-or", path);
        Formula a = negated(g.lhs(), child_path(path, 0));
        Formula b = negated(g.rhs(), child_path(path, 1));
        return rebuild(g.is(Kind::And) ? Kind::Or : Kind::And, std::move(a), std::move(b));
      }
      case Kind::XNeg: note("neg-neg", path); return run(g.operand(), path);
      case Kind::DNeg:
        if (mode == EvalMode::N5) {
          note("neg-not-n5", path);
          return run(g.operand(), path);
        }
        note("neg-not", path);
        return Formula::dneg(Formula::dneg(run(g.operand(), child_path(child_path(path, 0), 0))));
      case Kind::Impl:
        if (mode == EvalMode::N5) {
          note("neg-impl-n5", path);
          Formula a = run(g.lhs(), child_path(path, 0));
          return Formula::conj(std::move(a), negated(g.rhs(), child_path(path, 1)));
        }
        note("neg-impl", path);
        Formula a = run(g.lhs(), child_path(child_path(child_path(path, 0), 0), 0));
        return Formula::conj(Formula::dneg(Formula::dneg(std::move(a))),
                             negated(g.rhs(), child_path(path, 1)));
    }
    return Formula::xneg(g);
  }
};

}  // namespace detail

/// Explicit negation normal form. phi <-> to_nnf(phi) is valid in the chosen
/// logic; for nested expressions under X5 even phi <=> to_nnf(phi) holds.
inline Formula to_nnf(const Formula& phi, EvalMode mode = EvalMode::X5,
                      RewriteTrace* trace = nullptr) {
  if (mode == EvalMode::ClassicalNeg)
    throw InvalidArgument("negation normal form is defined for x5 and n5 only");
  return detail::NnfRewriter{mode, trace}.run(phi, "");
}

inline Program to_nnf_program(const Program& p, EvalMode mode = EvalMode::X5,
                              RewriteTrace* trace = nullptr) {
  Program out;
  std::size_t i = 0;
  for (const auto& r : p) {
    const std::string prefix = "rule " + std::to_string(i++) + " ";
    RewriteTrace local;
    Rule nr(to_nnf(r.body(), mode, trace ? &local : nullptr),
            to_nnf(r.head(), mode, trace ? &local : nullptr));
    if (trace)
      for (auto& s : local) trace->push_back({s.rule, prefix + s.position});
    out.insert(std::move(nr));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regularization

struct RegularizeOptions {
  /// Move "not L" out of rule heads into bodies as "not not L". The result is
  /// then regular only in the extended sense accepted by export_asp.
  bool eliminate_head_negation = false;
  /// Abort when distribution produces more literal occurrences than this.
  std::size_t max_nodes = 100000;
};

/// Body items may also be "not not L" (the extended form).
inline bool is_regular_extended(const Rule& r) {
  if (is_regular(r)) return true;
  if (r.body().is(Kind::Top) && r.head().is(Kind::Bot)) return false;
  auto body_item = [](const Formula& f) {
    return is_default_literal(f) ||
           (f.is(Kind::DNeg) && f.operand().is(Kind::DNeg) &&
            is_explicit_literal(f.operand().operand()));
  };
  std::vector<Formula> items;
  if (!r.body().is(Kind::Top)) {
    flatten(r.body(), Kind::And, items);
    if (!std::all_of(items.begin(), items.end(), body_item)) return false;
  }
  items.clear();
  if (!r.head().is(Kind::Bot)) {
    flatten(r.head(), Kind::Or, items);
    if (!std::all_of(items.begin(), items.end(), is_default_literal)) return false;
  }
  return true;
}

namespace detail {

inline bool is_double_not(const Formula& f) {
  return f.is(Kind::DNeg) && f.operand().is(Kind::DNeg);
}

class Regularizer {
public:
  Regularizer(const RegularizeOptions& opts, RewriteTrace* trace) : opts_(opts), trace_(trace) {}

  void rule(const Rule& r, std::size_t index, Program& out, const Signature& sig) {
    where_ = "rule " + std::to_string(index);
    const Formula body = norm(r.body());
    const Formula head = norm(r.head());
    const auto bodies = dnf(body);
    const auto heads = cnf(head);
    if (bodies.size() > 1) note("split-body");
    if (heads.size() > 1) note("split-head");
    if (bodies.empty()) note("bot-body");
    if (heads.empty()) note("top-head");

    for (const auto& b : bodies) {
      for (const auto& h : heads) {
        std::vector<Formula> body_items;
        std::vector<Formula> head_items;
        for (const auto& item : b) {
          if (is_double_not(item)) {
            note("notnot-body");
            head_items.push_back(item.operand());
          } else {
            body_items.push_back(item);
          }
        }
        for (const auto& item : h) {
          if (is_double_not(item)) {
            note("notnot-head");
            body_items.push_back(item.operand());
          } else {
            head_items.push_back(item);
          }
        }
        if (opts_.eliminate_head_negation) {
          std::vector<Formula> kept;
          for (const auto& item : head_items) {
            if (item.is(Kind::DNeg)) {
              // not L == not not (not L), then the not-not moves to the body.
              note("triple-not");
              note("notnot-head");
              body_items.push_back(Formula::dneg(item));
            } else {
              kept.push_back(item);
            }
          }
          head_items = std::move(kept);
        }
        emit(body_items, head_items, out, sig);
      }
    }
  }

private:
  using Clauses = std::vector<std::vector<Formula>>;

  void note(std::string_view id) {
    if (trace_) trace_->push_back({std::string(id), where_});
  }

  void emit(const std::vector<Formula>& body, const std::vector<Formula>& head, Program& out,
            const Signature& sig) {
    if (body.empty() && head.empty()) {
      // top -> bot has no regular form of its own.
      if (sig.empty())
        throw TransformError("an atom-free program containing top -> bot has no regular form");
      const Formula p = Formula::atom(*sig.begin());
      out.insert(Rule(p, Formula::bot()));
      out.insert(Rule(Formula::dneg(p), Formula::bot()));
      return;
    }
    out.insert(Rule(fold(body, Kind::And, Formula::top()), fold(head, Kind::Or, Formula::bot())));
  }

  // Default negation pushed down to literals; constants folded away unless
  // the whole formula is a constant. Items: L, not L, not not L.
  Formula norm(const Formula& f) {
    switch (f.kind()) {
      case Kind::Bot:
      case Kind::Top:
      case Kind::Atom:
      case Kind::XNeg: return f;
      case Kind::And:
      case Kind::Or: {
        Formula a = norm(f.lhs());
        Formula b = norm(f.rhs());
        return f.is(Kind::And) ? make_and(a, b) : make_or(a, b);
      }
      case Kind::DNeg: return negate(norm(f.operand()));
      case Kind::Impl: break;
    }
    throw TransformError("regularization expects nested expressions");
  }

  Formula negate(const Formula& g) {
    switch (g.kind()) {
      case Kind::Top: note("not-top"); return Formula::bot();
      case Kind::Bot: note("not-bot"); return Formula::top();
      case Kind::And:
      case Kind::Or: {
        note(g.is(Kind::And) ? "not-and" : "not-or");
        Formula a = negate(g.lhs());
        Formula b = negate(g.rhs());
        return g.is(Kind::And) ? make_or(a, b) : make_and(a, b);
      }
      default: break;
    }
    if (is_double_not(g)) {
      note("triple-not");
      return g.operand();
    }
    return Formula::dneg(g);
  }

  Formula make_and(const Formula& a, const Formula& b) {
    if (a.is(Kind::Bot) || b.is(Kind::Bot)) {
      note("and-bot");
      return Formula::bot();
    }
    if (a.is(Kind::Top)) {
      note("and-top");
      return b;
    }
    if (b.is(Kind::Top)) {
      note("and-top");
      return a;
    }
    return Formula::conj(a, b);
  }

  Formula make_or(const Formula& a, const Formula& b) {
    if (a.is(Kind::Top) || b.is(Kind::Top)) {
      note("or-top");
      return Formula::top();
    }
    if (a.is(Kind::Bot)) {
      note("or-bot");
      return b;
    }
    if (b.is(Kind::Bot)) {
      note("or-bot");
      return a;
    }
    return Formula::disj(a, b);
  }

  void charge(const Clauses& c) {
    std::size_t n = 0;
    for (const auto& xs : c) n += xs.size();
    if (n > opts_.max_nodes)
      throw ResourceLimit("regularization exceeded " + std::to_string(opts_.max_nodes) +
                          " literal occurrences");
  }

  // `outer` is the connective that concatenates alternatives, `inner` the one
  // distributed over them.
  Clauses normal_form(const Formula& f, Kind outer, Kind inner, std::string_view distribute) {
    const Kind unit_all = outer == Kind::Or ? Kind::Top : Kind::Bot;  // single empty item list
    const Kind unit_none = outer == Kind::Or ? Kind::Bot : Kind::Top;  // no alternatives
    if (f.is(unit_all)) return {{}};
    if (f.is(unit_none)) return {};
    if (f.is(outer)) {
      Clauses l = normal_form(f.lhs(), outer, inner, distribute);
      Clauses r = normal_form(f.rhs(), outer, inner, distribute);
      l.insert(l.end(), r.begin(), r.end());
      charge(l);
      return l;
    }
    if (f.is(inner)) {
      Clauses l = normal_form(f.lhs(), outer, inner, distribute);
      Clauses r = normal_form(f.rhs(), outer, inner, distribute);
      if (l.size() > 1 || r.size() > 1) note(distribute);
      Clauses out;
      for (const auto& x : l) {
        for (const auto& y : r) {
          auto xy = x;
          xy.insert(xy.end(), y.begin(), y.end());
          out.push_back(std::move(xy));
        }
      }
      charge(out);
      return out;
    }
    return {{f}};
  }

  Clauses dnf(const Formula& f) { return normal_form(f, Kind::Or, Kind::And, "distribute-and"); }
  Clauses cnf(const Formula& f) { return normal_form(f, Kind::And, Kind::Or, "distribute-or"); }

  RegularizeOptions opts_;
  RewriteTrace* trace_;
  std::string where_;
};

}  // namespace detail

/// Regular rules with the same answer sets. Every rule side must be in
/// explicit negation normal form (see to_nnf_program).
inline Program to_regular(const Program& p, const RegularizeOptions& opts = {},
                          RewriteTrace* trace = nullptr) {
  for (const auto& r : p)
    if (!is_nnf(r.body()) || !is_nnf(r.head()))
      throw TransformError("rule not in negation normal form: " + to_string(r));
  const Signature sig = atoms(p);
  detail::Regularizer reg(opts, trace);
  Program out;
  std::size_t i = 0;
  for (const auto& r : p) reg.rule(r, i++, out, sig);
  return out;
}

// ---------------------------------------------------------------------------
// Solver syntax

namespace detail {

inline std::string asp_literal(const Formula& f) {
  if (f.is(Kind::DNeg)) return "not " + asp_literal(f.operand());
  const ExplicitLiteral l = as_literal(f);
  return (l.negated ? "-" : "") + l.atom.name();
}

inline std::string asp_join(const Formula& f, Kind k, const char* sep) {
  std::vector<Formula> items;
  flatten(f, k, items);
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += asp_literal(items[i]);
  }
  return out;
}

}  // namespace detail

/// "h1 ; ... ; hm :- b1, ..., bn." per rule, "-p" for ~p and "not " for
/// default negation. Facts omit ":-", constraints start with ":-".
inline std::string export_asp(const Program& p) {
  std::string out;
  for (const auto& r : p) {
    if (!is_regular_extended(r))
      throw TransformError("rule is not regular: " + to_string(r));
    const bool has_body = !r.body().is(Kind::Top);
    const bool has_head = !r.head().is(Kind::Bot);
    if (has_head) out += detail::asp_join(r.head(), Kind::Or, " ; ");
    if (has_body) {
      out += has_head ? " :- " : ":- ";
      out += detail::asp_join(r.body(), Kind::And, ", ");
    }
    out += ".\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross-encodings

enum class CrossDirection {
  /// Output read with X5 tables behaves like the input read with N5 tables.
  N5InX5,
  /// Output read with N5 tables behaves like the input read with X5 tables.
  X5InN5,
};

inline Formula cross_encode(const Formula& f, CrossDirection dir) {
  switch (f.kind()) {
    case Kind::Bot:
    case Kind::Top:
    case Kind::Atom: return f;
    case Kind::XNeg: return Formula::xneg(cross_encode(f.operand(), dir));
    case Kind::And: return Formula::conj(cross_encode(f.lhs(), dir), cross_encode(f.rhs(), dir));
    case Kind::Or: return Formula::disj(cross_encode(f.lhs(), dir), cross_encode(f.rhs(), dir));
    case Kind::DNeg: {
      Formula a = cross_encode(f.operand(), dir);
      if (dir == CrossDirection::N5InX5) return Formula::impl(a, Formula::xneg(a));
      return Formula::dneg(Formula::dneg(Formula::dneg(a)));
    }
    case Kind::Impl: {
      Formula a = cross_encode(f.lhs(), dir);
      Formula b = cross_encode(f.rhs(), dir);
      if (dir == CrossDirection::N5InX5) return Formula::impl(a, Formula::disj(Formula::xneg(a), b));
      return Formula::conj(Formula::impl(a, b),
                           Formula::impl(Formula::xneg(b),
                                         Formula::dneg(Formula::dneg(Formula::dneg(a)))));
    }
  }
  return f;
}

}  // namespace x5
