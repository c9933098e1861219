#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>

#include "rltl/adaptive.hpp"
#include "rltl/game.hpp"
#include "rltl/io.hpp"
#include "rltl/summaries.hpp"

using namespace rltl;

namespace {

const char* const kGames[] = {"bad_move", "second_chance", "no_strongly_adaptive"};

GameSpec example(int n) { return load_game_file(std::string(RLTL_GAMES_DIR) + "/" + kGames[n] + ".json"); }

ParityGame random_game(int n, int priorities, unsigned seed) {
  std::mt19937 rng(seed);
  ParityGame g;
  for (int v = 0; v < n; ++v) {
    g.owner.push_back(static_cast<int>(rng() % 2));
    g.priority.push_back(static_cast<int>(rng() % priorities));
    std::vector<int> succ;
    for (int k = 0; k < 3; ++k) succ.push_back(static_cast<int>(rng() % n));
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    g.succ.push_back(succ);
  }
  return g;
}

void BM_Zielonka(benchmark::State& state) {
  const ParityGame g = random_game(static_cast<int>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_parity(g));
}
BENCHMARK(BM_Zielonka)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_ExtendedGame(benchmark::State& state) {
  const GameSpec g = example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_extended_game(g.arena, g.formula).size());
}
BENCHMARK(BM_ExtendedGame)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AdaptiveStrategy(benchmark::State& state) {
  const GameSpec g = example(static_cast<int>(state.range(0)));
  const ExtendedGame eg = build_extended_game(g.arena, g.formula);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_adaptive(eg, 0).memory_size());
}
BENCHMARK(BM_AdaptiveStrategy)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_StronglyAdaptive(benchmark::State& state) {
  const GameSpec g = example(static_cast<int>(state.range(0)));
  const ExtendedGame eg = build_extended_game(g.arena, g.formula);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_strongly_adaptive(eg).strategy.has_value());
}
BENCHMARK(BM_StronglyAdaptive)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
