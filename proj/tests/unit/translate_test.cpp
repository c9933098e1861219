#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "random_inputs.hpp"
#include "rltl/parser.hpp"
#include "rltl/semantics.hpp"
#include "rltl/translate.hpp"

using namespace rltl;

namespace {
LtlFormula at(const char* formula, const char* b) { return threshold_to_ltl(parse_robust(formula), TruthValue::parse(b)); }
}  // namespace

TEST(Translate, AlwaysComponents) {
  EXPECT_EQ(at("G p", "1111"), parse_ltl("G p"));
  EXPECT_EQ(at("G p", "0111"), parse_ltl("F G p"));
  EXPECT_EQ(at("G p", "0011"), parse_ltl("G F p"));
  EXPECT_EQ(at("G p", "0001"), parse_ltl("F p"));
}

TEST(Translate, BottomIsTrue) { EXPECT_EQ(at("G p", "0000"), parse_ltl("true")); }

TEST(Translate, NnfHasNegationsOnAtomsOnly) {
  LtlFormula f = to_nnf(parse_ltl("!(p U (q & !G r)) => X !F p"));
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->op == Op::Not) EXPECT_EQ(n->lhs->op, Op::Atom);
    EXPECT_NE(n->op, Op::Implies);
    if (n->lhs) walk(n->lhs);
    if (n->rhs) walk(n->rhs);
  };
  walk(f.root);
}

TEST(Simplify, Examples) {
  EXPECT_EQ(simplify(parse_ltl("F F p")), to_nnf(parse_ltl("F p")));
  EXPECT_EQ(simplify(parse_ltl("G (p & G q)")), to_nnf(parse_ltl("G p & G q")));
  EXPECT_EQ(simplify(parse_ltl("p & !p")), parse_ltl("false"));
  EXPECT_EQ(simplify(parse_ltl("G F p | G F !p")), parse_ltl("true"));
}

// Property: rewriting keeps the classical meaning.
TEST(Simplify, PreservesTheLanguage) {
  std::mt19937 rng(37);
  for (int i = 0; i < 2000; ++i) {
    LtlFormula f{rltl::testing::random_formula(rng, {"p", "q"}, 4)};
    LtlFormula s = simplify(f);
    for (int j = 0; j < 5; ++j) {
      LassoWord w = rltl::testing::random_lasso(rng, {"p", "q"}, 3, 3);
      ASSERT_EQ(evaluate_ltl(w, s), evaluate_ltl(w, f)) << f.to_string() << " became " << s.to_string() << " on " << w.to_string();
    }
  }
}
