#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rltl/automata.hpp"
#include "rltl/game.hpp"
#include "rltl/strategy.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

/// Automaton state vector for the thresholds 0001, 0011, 0111, 1111.
using StateVector = std::array<int, 4>;

/// Product of the arena with all four threshold automata, restricted to the
/// part reachable from the initial state vector at any arena vertex.
struct ExtendedGame {
  Arena arena;
  RobustFormula formula;
  std::array<Dpa, 4> dpa;
  /// G^b for each nontrivial threshold b, and its solution.
  std::array<ProductGame, 4> threshold_games;
  std::array<ParitySolution, 4> threshold_solutions;
  /// Games over complemented automata with swapped owners: player 0 of game
  /// i wins exactly where player 1 keeps the value below threshold i.
  std::array<ProductGame, 4> dual_games;
  std::array<ParitySolution, 4> dual_solutions;

  std::vector<int> vertex;          // arena vertex of each G' vertex
  std::vector<StateVector> states;  // automaton states of each G' vertex
  std::map<std::pair<int, StateVector>, int> index;
  /// Owners and edges of G' (priorities unused).
  ParityGame graph;
  /// Position of each G' vertex in G^b and in the dual game of threshold b.
  std::array<std::vector<int>, 4> threshold_vertex;
  std::array<std::vector<int>, 4> dual_vertex;

  int size() const { return graph.size(); }
  StateVector initial_states() const;
  StateVector step(const StateVector& q, int arena_vertex) const;
  int find(int arena_vertex, const StateVector& q) const;
  /// G' vertex of the path's last position.
  int track(const std::vector<int>& path) const;
  /// "v|q1,q2,q3,q4" using arena vertex ids.
  std::string vertex_name(int x) const;
  /// Priority of G' vertex x in G^b (b > 0000).
  int priority(int x, TruthValue b) const;
};

ExtendedGame build_extended_game(const Arena& arena, const RobustFormula& formula);

/// Regions of G' where a player can enforce a value. For player 0, bound[b]
/// is the set where value >= b can be enforced; for player 1, where value <= b
/// can be enforced. `value` is the best such bound per G' vertex.
struct EnforceMap {
  int player = 0;
  std::array<VertexSet, 5> bound;
  std::vector<TruthValue> value;

  /// Vertices whose best enforceable value is exactly b.
  VertexSet exactly(TruthValue b) const;
};

EnforceMap enforce_regions(const ExtendedGame& eg, int player);

/// Strategy on the arena with the automaton state vector as memory. The
/// annotation `enforced` records the value enforced at each (memory, vertex).
StrategyMachine synthesize_adaptive(const ExtendedGame& eg, int player);

/// Memory index of a state vector in machines over G' (name "q1.q2.q3.q4").
std::string memory_name(const StateVector& q);

struct BadMove {
  int position;
  int player;
  friend bool operator==(const BadMove&, const BadMove&) = default;
};

struct MonitorReport {
  std::vector<TruthValue> enforced;
  std::vector<BadMove> bad_moves;
};

/// Values Player 0 can enforce along a path and the bad moves of both players.
MonitorReport monitor(const ExtendedGame& eg, const EnforceMap& player0, const std::vector<int>& prefix);
MonitorReport monitor(const ExtendedGame& eg, const std::vector<int>& prefix);

}  // namespace rltl
