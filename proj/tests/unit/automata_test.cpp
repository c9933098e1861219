#include <gtest/gtest.h>

#include <random>

#include "random_inputs.hpp"
#include "rltl/automata.hpp"
#include "rltl/parser.hpp"
#include "rltl/semantics.hpp"
#include "rltl/translate.hpp"

using namespace rltl;

namespace {

const Alphabet kP({"p"});
const Alphabet kPQ({"p", "q"});

LassoWord word(const char* text) { return parse_lasso(text); }

Nba nba_of(const char* ltl, const Alphabet& a = kP) { return reduce(degeneralize(ltl_to_gnba(parse_ltl(ltl), a))); }

Dpa dpa_of(const char* ltl, const Alphabet& a = kP) { return determinize(nba_of(ltl, a)); }

}  // namespace

TEST(Gnba, Always) {
  Gnba g = ltl_to_gnba(parse_ltl("G p"), kP);
  EXPECT_TRUE(lasso_accepts(g, word("| {p}")));
  EXPECT_FALSE(lasso_accepts(g, word("| {p} {}")));
}

TEST(Gnba, EventuallyAlways) {
  Gnba g = ltl_to_gnba(parse_ltl("F G p"), kP);
  EXPECT_TRUE(lasso_accepts(g, word("{} | {p}")));
  EXPECT_FALSE(lasso_accepts(g, word("| {} {p}")));
}

TEST(Gnba, OneAcceptingSetPerUntil) {
  Gnba g = ltl_to_gnba(parse_ltl("G F p & G F q"), kPQ);
  EXPECT_EQ(g.accepting_sets.size(), 2u);
}

TEST(Degeneralize, SingleSetNeedsNoCounter) {
  Gnba g = ltl_to_gnba(parse_ltl("F p"), kP);
  ASSERT_EQ(g.accepting_sets.size(), 1u);
  Nba n = degeneralize(g);
  EXPECT_LE(n.num_states, g.num_states);
  for (int q = 0; q < n.num_states; ++q)
    if (n.accepting[q]) EXPECT_TRUE(g.accepting_sets[0][q]);
  EXPECT_TRUE(lasso_accepts(n, word("{} {} {p} | {}")));
  EXPECT_FALSE(lasso_accepts(n, word("| {}")));
}

TEST(Degeneralize, CounterAtMostDoubles) {
  Gnba g = ltl_to_gnba(parse_ltl("G F p & G F q"), kPQ);
  Nba n = degeneralize(g);
  EXPECT_LE(n.num_states, g.num_states * 2);
  EXPECT_TRUE(lasso_accepts(n, word("| {p} {q}")));
  EXPECT_FALSE(lasso_accepts(n, word("{p} {q} | {p}")));
}

TEST(Determinize, Always) {
  Dpa d = dpa_of("G p");
  EXPECT_TRUE(lasso_accepts(d, word("| {p}")));
  EXPECT_FALSE(lasso_accepts(d, word("{p} | {}")));
}

TEST(Determinize, EventuallyAlways) {
  Dpa d = dpa_of("F G p");
  EXPECT_FALSE(lasso_accepts(d, word("| {} {p}")));
  EXPECT_TRUE(lasso_accepts(d, word("{} {} | {p}")));
}

TEST(Determinize, TransitionsAreTotal) {
  Dpa d = dpa_of("G (p => X F q)", kPQ);
  ASSERT_EQ(static_cast<int>(d.delta.size()), d.num_states);
  for (const auto& row : d.delta) {
    ASSERT_EQ(row.size(), kPQ.size());
    for (int t : row) EXPECT_TRUE(t >= 0 && t < d.num_states);
  }
}

TEST(Complement, FlipsMembership) {
  Dpa d = dpa_of("G p");
  Dpa c = complement_dpa(d);
  EXPECT_TRUE(lasso_accepts(c, word("{p} | {}")));
  Dpa cc = complement_dpa(c);
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    LassoWord w = rltl::testing::random_lasso(rng, {"p"}, 3, 3);
    EXPECT_NE(lasso_accepts(d, w), lasso_accepts(c, w));
    EXPECT_EQ(lasso_accepts(d, w), lasso_accepts(cc, w));
  }
}

TEST(Equivalence, SameLanguage) {
  EXPECT_TRUE(check_equivalence(nba_of("G p"), dpa_of("G p"), nba_of("!G p")).equivalent);
}

TEST(Equivalence, DifferentLanguageHasCounterexample) {
  auto r = check_equivalence(nba_of("G p"), dpa_of("F p"), nba_of("!G p"));
  ASSERT_FALSE(r.equivalent);
  ASSERT_TRUE(r.counterexample);
  EXPECT_NE(lasso_accepts(nba_of("G p"), *r.counterexample), lasso_accepts(dpa_of("F p"), *r.counterexample));
}

TEST(ThresholdDpa, InfinitelyOften) {
  Dpa d = build_threshold_dpa(parse_robust("G p"), TruthValue::parse("0011"), kP);
  EXPECT_TRUE(lasso_accepts(d, word("| {p} {}")));
  EXPECT_FALSE(lasso_accepts(d, word("{p} | {}")));
}

TEST(ThresholdDpa, TopIsAlways) {
  Dpa d = build_threshold_dpa(parse_robust("G p"), TruthValue::top(), kP);
  EXPECT_TRUE(check_equivalence(nba_of("G p"), d, nba_of("!G p")).equivalent);
}

TEST(ThresholdDpa, UniversalForBottom) {
  Dpa d = universal_dpa(kP);
  EXPECT_EQ(d.num_states, 1);
  EXPECT_TRUE(lasso_accepts(d, word("| {}")));
}

TEST(ThresholdDpa, SecondChanceObjectiveAgreesWithEvaluation) {
  const Alphabet a({"p", "q", "r"});
  RobustFormula f = parse_robust("(X !q => G p) & (X q => G r)");
  std::mt19937 rng(9);
  for (TruthValue b : kNontrivialThresholds) {
    Dpa d = build_threshold_dpa(f, b, a);
    for (int i = 0; i < 100; ++i) {
      LassoWord w = rltl::testing::random_lasso(rng, {"p", "q", "r"}, 3, 3);
      EXPECT_EQ(lasso_accepts(d, w), evaluate(w, f) >= b) << b.to_string() << " " << w.to_string();
    }
  }
}

TEST(Pipeline, GnbaAndNbaAgreeWithClassicalEvaluation) {
  std::mt19937 rng(13);
  for (int i = 0; i < 500; ++i) {
    LtlFormula f{rltl::testing::random_formula(rng, {"p", "q"}, 3)};
    Gnba g = ltl_to_gnba(f, kPQ);
    Nba n = reduce(degeneralize(g));
    for (int j = 0; j < 5; ++j) {
      LassoWord w = rltl::testing::random_lasso(rng, {"p", "q"}, 3, 3);
      const bool expected = evaluate_ltl(w, f);
      EXPECT_EQ(lasso_accepts(g, w), expected) << f.to_string() << " " << w.to_string();
      EXPECT_EQ(lasso_accepts(n, w), expected) << f.to_string() << " " << w.to_string();
    }
  }
}

TEST(Pipeline, StagesAgreeOnSampledLassos) {
  std::mt19937 rng(23);
  const char* const corpus[] = {"G p", "G F p | G F q", "p R ((p R q) | F q)", "(X !q => G p) & (X q => G r)"};
  for (const char* text : corpus) {
    RobustFormula f = parse_robust(text);
    auto props = propositions(f.root);
    const std::vector<std::string> names(props.begin(), props.end());
    const Alphabet alphabet(names);
    for (TruthValue b : kNontrivialThresholds) {
      ThresholdPipeline p = build_threshold_pipeline(f, b, alphabet);
      for (int i = 0; i < 1000; ++i) {
        LassoWord w = rltl::testing::random_lasso(rng, names, 3, 4);
        const bool g = lasso_accepts(p.gnba, w);
        ASSERT_EQ(lasso_accepts(p.nba, w), g) << text << " " << b.to_string() << " " << w.to_string();
        ASSERT_EQ(lasso_accepts(p.dpa, w), g) << text << " " << b.to_string() << " " << w.to_string();
        ASSERT_EQ(evaluate_ltl(w, p.ltl), g) << text << " " << b.to_string() << " " << w.to_string();
      }
    }
  }
}

// Property: a larger threshold never accepts more words.
TEST(ThresholdDpa, LanguagesShrinkAsTheThresholdGrows) {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    RobustFormula f{rltl::testing::random_formula(rng, {"p", "q"}, 3)};
    Dpa previous = universal_dpa(kPQ);
    for (TruthValue b : kNontrivialThresholds) {
      Dpa d = build_threshold_dpa(f, b, kPQ);
      auto r = check_inclusion(d, previous);
      EXPECT_TRUE(r.equivalent) << f.to_string() << " at " << b.to_string();
      previous = std::move(d);
    }
  }
}

TEST(Complement, TwiceKeepsTheLanguage) {
  std::mt19937 rng(31);
  for (int i = 0; i < 50; ++i) {
    LtlFormula f{rltl::testing::random_formula(rng, {"p", "q"}, 3)};
    Nba n = reduce(degeneralize(ltl_to_gnba(f, kPQ)));
    Dpa d = determinize(n);
    Dpa cc = complement_dpa(complement_dpa(d));
    EXPECT_TRUE(check_inclusion(d, cc).equivalent && check_inclusion(cc, d).equivalent) << f.to_string();
    // A nonempty language is never contained in its complement.
    if (find_accepted_word(n)) EXPECT_FALSE(check_inclusion(d, complement_dpa(d)).equivalent) << f.to_string();
  }
}
