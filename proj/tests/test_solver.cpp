#include <gtest/gtest.h>

#include "support/oracle.hpp"

using namespace x5;

namespace {

Interpretation I(const char* s) { return parse_interpretation(s); }
std::vector<Interpretation> Is(std::initializer_list<const char*> xs) {
  std::vector<Interpretation> out;
  for (auto x : xs) out.push_back(I(x));
  return out;
}
Program P(const std::string& s) { return parse_program(s); }
Signature sig(std::initializer_list<const char*> names) {
  Signature s;
  for (auto n : names) s.insert(Atom(n));
  return s;
}

const std::string kBird = "not (bird & ~flies) -> ~(bird & ~flies).";

}  // namespace

TEST(Enumerate, Interpretations) {
  EXPECT_EQ(enumerate_interpretations(sig({"p"})), Is({"{}", "{p}", "{~p}"}));
  EXPECT_EQ(enumerate_interpretations({}), Is({"{}"}));
  EXPECT_EQ(enumerate_interpretations(sig({"p", "q", "r"})).size(), 27u);
  EXPECT_EQ(enumerate_interpretations(sig({"p", "q"}))[1], I("{p}"));
}

TEST(Enumerate, HereThere) {
  const auto xs = enumerate_x5(sig({"p"}));
  ASSERT_EQ(xs.size(), 5u);
  EXPECT_EQ(xs[0], X5Interpretation(I("{}"), I("{}")));
  EXPECT_EQ(xs[1], X5Interpretation(I("{}"), I("{p}")));
  EXPECT_EQ(xs[2], X5Interpretation(I("{p}"), I("{p}")));
  EXPECT_EQ(xs[3], X5Interpretation(I("{}"), I("{~p}")));
  EXPECT_EQ(xs[4], X5Interpretation(I("{~p}"), I("{~p}")));
  const auto two = enumerate_x5(sig({"p", "q"}));
  EXPECT_EQ(two.size(), 25u);
  for (const auto& m : two) EXPECT_TRUE(m.here().subset_of(m.there()));
}

TEST(Enumerate, Guard) {
  EXPECT_THROW(enumerate_x5(sig({"a", "b", "c"}), 2), SignatureTooLarge);
  SolveOptions o;
  o.max_atoms = 1;
  EXPECT_THROW(answer_sets(P("p. q."), o), SignatureTooLarge);
  try {
    answer_sets(P("p. q. r."), o);
  } catch (const SignatureTooLarge& e) {
    EXPECT_EQ(e.atoms(), 3u);
    EXPECT_EQ(e.limit(), 1u);
  }
}

TEST(MinimalModels, Examples) {
  EXPECT_EQ(minimal_models_explicit(P("~top -> p.")), Is({"{}"}));
  const auto bird = minimal_models_explicit(P("~(bird & ~flies)."));
  ASSERT_EQ(bird.size(), 2u);
  EXPECT_EQ(bird[0], parse_interpretation("{~bird}"));
  EXPECT_EQ(bird[1], parse_interpretation("{flies}"));
  EXPECT_EQ(minimal_models_explicit(Program{}), Is({"{}"}));
  EXPECT_THROW(minimal_models_explicit(P("not p -> q.")), InvalidArgument);
}

TEST(AnswerSets, ExampleOne) { EXPECT_EQ(answer_sets(P("~ not p -> p.")), Is({"{}", "{p}"})); }

TEST(AnswerSets, BirdMatrix) {
  auto sorted = [](std::vector<Interpretation> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(answer_sets(P(kBird))), sorted(Is({"{~bird}", "{flies}"})));
  EXPECT_EQ(answer_sets(P(kBird + " bird.")), Is({"{bird, flies}"}));
  EXPECT_EQ(answer_sets(P(kBird + " ~flies.")), Is({"{~bird, ~flies}"}));
  EXPECT_EQ(answer_sets(P(kBird + " bird. ~flies.")), Is({"{bird, ~flies}"}));
}

TEST(AnswerSets, FormulaFour) {
  EXPECT_EQ(answer_sets(P("~(p & not p).")), Is({"{~p}"}));
  EXPECT_EQ(answer_sets(P("~bot.")), Is({"{}"}));
}

TEST(Equilibrium, Examples) {
  EXPECT_EQ(equilibrium_models(Theory{parse_formula("~ not p -> p")}), Is({"{}", "{p}"}));
  EXPECT_EQ(equilibrium_models(Theory{parse_formula("p -> p")}), Is({"{}"}));
  EXPECT_EQ(equilibrium_models(Theory{}), Is({"{}"}));
}

TEST(Equilibrium, FerrarisExamples) {
  EXPECT_TRUE(is_ferraris_equilibrium(Theory{parse_formula(kBird.substr(0, kBird.size() - 1))},
                                      I("{~bird}")));
  EXPECT_EQ(equilibrium_models_ferraris(Theory{parse_formula("~ not p -> p")}), Is({"{}", "{p}"}));
  EXPECT_EQ(equilibrium_models_ferraris(Theory{}), Is({"{}"}));
}

TEST(Equilibrium, ExtraSignatureAtomsStayUndefined) {
  SolveOptions o;
  o.signature = sig({"z"});
  EXPECT_EQ(answer_sets(P("~ not p -> p."), o), Is({"{}", "{p}"}));
  EXPECT_EQ(equilibrium_models(Theory{parse_formula("~ not p -> p")}, o), Is({"{}", "{p}"}));
}

TEST(Determinism, ThreadCountDoesNotChangeOrder) {
  test::Gen g(99);
  for (int i = 0; i < 40; ++i) {
    const Program p = g.program(4, 2);
    SolveOptions one;
    SolveOptions many;
    many.parallel = 4;
    EXPECT_EQ(answer_sets(p, one), answer_sets(p, many));
    EXPECT_EQ(equilibrium_models(Theory(p), one), equilibrium_models(Theory(p), many));
    EXPECT_EQ(equilibrium_models_ferraris(Theory(p), one),
              equilibrium_models_ferraris(Theory(p), many));
  }
}

TEST(Determinism, RepeatedRuns) {
  const Program p = P(kBird);
  const auto first = answer_sets(p);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(answer_sets(p), first);
}

TEST(Order, SubsetMatchesFiveValuedOrder) {
  // H subset of H' (same T) iff value 0 is kept and |value| only grows.
  const auto sg = sig({"p", "q"});
  const auto xs = enumerate_x5(sg);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      if (a.there() != b.there()) continue;
      bool leq = true;
      for (const auto& at : sg) {
        const int va = a.value_of(at).value();
        const int vb = b.value_of(at).value();
        if ((va == 0) != (vb == 0)) leq = false;
        if (std::abs(va) > std::abs(vb)) leq = false;
        if (va * vb < 0) leq = false;
      }
      EXPECT_EQ(a.here().subset_of(b.here()), leq);
    }
}

TEST(AnswerSets, TotalModelCheck) {
  test::Gen g(7);
  for (int i = 0; i < 300; ++i) {
    const Program p = g.program(3, 2);
    for (const auto& t : answer_sets(p)) EXPECT_TRUE(sat(t, p));
  }
}
