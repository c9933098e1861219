#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"
#include "rltl/automata.hpp"
#include "rltl/error.hpp"
#include "rltl/game.hpp"
#include "rltl/parser.hpp"
#include "rltl/semantics.hpp"

using namespace rltl;
using namespace rltl::testing;

namespace {

ParityGame make(std::vector<int> owner, std::vector<int> priority, std::vector<std::vector<int>> succ) {
  return ParityGame{std::move(owner), std::move(priority), std::move(succ)};
}

}  // namespace

TEST(Zielonka, SelfLoopEvenPriority) {
  ParitySolution s = solve_parity(make({0}, {0}, {{0}}));
  EXPECT_TRUE(s.win[0][0]);
}

TEST(Zielonka, OddCycleControlledByPlayerOne) {
  ParitySolution s = solve_parity(make({1, 1}, {1, 1}, {{1}, {0}}));
  EXPECT_TRUE(s.win[1][0]);
  EXPECT_TRUE(s.win[1][1]);
}

TEST(Zielonka, AgreesWithEnumeration) {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    ParityGame g = random_parity_game(rng, 6, 5);
    ParitySolution s = solve_parity(g);
    EXPECT_EQ(s.win[0], brute_force_win0(g)) << "game " << i;
    EXPECT_TRUE(positional_strategy_wins(g, 0, s.strategy[0], s.win[0]));
    EXPECT_TRUE(positional_strategy_wins(g, 1, s.strategy[1], s.win[1]));
  }
}

TEST(Attractor, EmptyAndFullTargets) {
  ParityGame g = make({0, 1, 0}, {0, 1, 2}, {{1}, {2, 0}, {2}});
  EXPECT_EQ(attractor(g, 0, VertexSet(3, false)).set, VertexSet(3, false));
  EXPECT_EQ(attractor(g, 1, VertexSet(3, true)).set, VertexSet(3, true));
}

TEST(Attractor, RespectsOwnership) {
  // 1 belongs to player 1 and can avoid 2 by going back to 0.
  ParityGame g = make({0, 1, 0}, {0, 1, 2}, {{1}, {2, 0}, {2}});
  VertexSet target = {false, false, true};
  EXPECT_EQ(attractor(g, 0, target).set, (VertexSet{false, false, true}));
  EXPECT_EQ(attractor(g, 1, target).set, (VertexSet{true, true, true}));
}

TEST(PreSet, SelfLoopAndEmpty) {
  ParityGame g = make({0}, {0}, {{0}});
  EXPECT_EQ(pre_set(g, {true}), VertexSet{true});
  EXPECT_EQ(pre_set(g, {false}), VertexSet{false});
}

TEST(Product, SingleVertexWithUniversalAutomaton) {
  Arena a({"p"}, {{"0", 0, {"p"}}}, {{0, 0}});
  ProductGame pg = product(a, universal_dpa(a.alphabet()));
  EXPECT_EQ(pg.game.size(), 1);
}

TEST(Product, BadMoveGameInfinitelyOftenMatchesEnumeration) {
  GameSpec g = load_example("bad_move");
  Dpa d = build_threshold_dpa(g.formula, TruthValue::parse("0011"), g.arena.alphabet());
  ProductGame pg = product(g.arena, d);
  ParitySolution s = solve_parity(pg.game);
  EXPECT_EQ(s.win[0], brute_force_win0(pg.game));
  EXPECT_TRUE(s.win[0][pg.find(g.arena.index_of("2"), d.initial)]);
}

TEST(Product, PlayValueMatchesProductRun) {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    Arena a = random_arena(rng, {"p", "q"}, 5);
    RobustFormula f{random_formula(rng, {"p", "q"}, 2)};
    std::vector<int> choice(a.size());
    for (int v = 0; v < a.size(); ++v) choice[v] = a.successors(v)[rng() % a.successors(v).size()];
    // The arena play from vertex 0 under the fixed choices, as a lasso.
    std::vector<int> play;
    std::map<int, std::size_t> seen;
    for (int v = 0; !seen.count(v); v = choice[v]) {
      seen[v] = play.size();
      play.push_back(v);
    }
    const std::size_t loop_start = seen[choice[play.back()]];
    LassoWord w;
    for (std::size_t j = 0; j < play.size(); ++j) (j < loop_start ? w.stem : w.loop).push_back(a.vertex(play[j]).label);
    for (TruthValue b : kNontrivialThresholds) {
      Dpa d = build_threshold_dpa(f, b, a.alphabet());
      ProductGame pg = product(a, d);
      std::map<int, std::size_t> visited;
      std::vector<int> run;
      for (int x = pg.find(0, d.initial); !visited.count(x);) {
        visited[x] = run.size();
        run.push_back(x);
        const int next_vertex = choice[pg.states[x].first];
        int next = -1;
        for (int y : pg.game.succ[x])
          if (pg.states[y].first == next_vertex) next = y;
        ASSERT_GE(next, 0);
        x = next;
        if (visited.count(x)) {
          int lowest = 1 << 20;
          for (std::size_t j = visited[x]; j < run.size(); ++j) lowest = std::min(lowest, pg.game.priority[run[j]]);
          EXPECT_EQ(lowest % 2 == 0, evaluate(w, f) >= b) << f.to_string() << " " << w.to_string();
        }
      }
    }
  }
}

TEST(Arena, RejectsTerminalVertices) {
  try {
    parse_arena(R"({"propositions": ["p"], "vertices": [{"id": "a", "owner": 0, "label": []},
                  {"id": "b", "owner": 1, "label": ["p"]}], "edges": [["a", "b"]]})");
    FAIL() << "expected InvalidGame";
  } catch (const InvalidGame& e) {
    EXPECT_EQ(e.kind(), InvalidGame::Kind::TerminalVertex);
  }
}

TEST(Arena, Examples) {
  GameSpec g1 = load_example("bad_move");
  EXPECT_EQ(g1.arena.size(), 6);
  for (const char* v : {"0", "3", "4"}) EXPECT_EQ(g1.arena.owner(g1.arena.index_of(v)), 0);
  GameSpec g3 = load_example("no_strongly_adaptive");
  EXPECT_EQ(g3.arena.size(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(g3.arena.owner(v), v == 0 ? 0 : 1);
}

TEST(Arena, PathChecks) {
  GameSpec g = load_example("bad_move");
  EXPECT_NO_THROW(g.arena.parse_path("0 1 4 5"));
  EXPECT_THROW(g.arena.parse_path("0 4"), NotAPath);
  EXPECT_THROW(g.arena.parse_path("0 9"), Error);
}
