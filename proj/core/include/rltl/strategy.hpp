#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rltl/game.hpp"
#include "rltl/summary.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

/// Finite-state strategy over a graph whose vertices are integers.
///
/// For a play v0 v1 ... the memory evolves as m0 = init(v0) and
/// m(n+1) = update(m(n), v(n)); at an own vertex v(n) the strategy moves to
/// output(m(n), v(n)).
class StrategyMachine {
 public:
  int player = 0;
  std::vector<std::string> memory_names;
  std::vector<int> init;  // per vertex
  std::map<std::pair<int, int>, int> update;
  std::map<std::pair<int, int>, int> output;
  std::map<std::pair<int, int>, TruthValue> enforced;
  std::map<std::pair<int, int>, Summary> summary;

  int memory_size() const { return static_cast<int>(memory_names.size()); }
  int add_memory(std::string name);

  /// Memory after reading `path` except its last vertex.
  int memory_after(const std::vector<int>& path) const;
  int next_memory(int m, int v) const;
  int move(int m, int v) const;
  std::optional<int> try_move(int m, int v) const;

  /// Checks that outputs are edges of `succ` and that update/output are
  /// defined on every pair reachable from init under all moves.
  void validate(const std::vector<std::vector<int>>& succ, const std::vector<int>& owner) const;

  /// Pairs (memory, vertex) reachable from every (init(v), v): own vertices
  /// follow the output, the other player's vertices take every edge.
  std::vector<std::pair<int, int>> reachable_pairs(const std::vector<std::vector<int>>& succ,
                                                   const std::vector<int>& owner) const;
};

/// One-state machine following a positional choice for `player`; vertices
/// without a choice fall back to their first successor.
StrategyMachine positional_machine(int player, const std::vector<int>& choice,
                                   const std::vector<std::vector<int>>& succ, const std::vector<int>& owner);

std::vector<std::vector<int>> arena_successors(const Arena& arena);
std::vector<int> arena_owners(const Arena& arena);

}  // namespace rltl
