#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rltl/adaptive.hpp"
#include "rltl/strategy.hpp"
#include "rltl/summary.hpp"

namespace rltl {

/// smry over the vertices of G'.
struct SummaryMap {
  EnforceMap enforce;  // player 0
  std::vector<int> index;                  // per G' vertex, into all_summaries()
  std::vector<VertexSet> exact;            // per summary index
  const Summary& at(int x) const { return all_summaries()[index[x]]; }
  VertexSet exactly(const Summary& s) const { return exact[summary_index(s)]; }
  /// Vertices whose summary is lexicographically greater than s.
  VertexSet greater(const Summary& s) const;
  VertexSet less(const Summary& s) const;
};

/// Computes the summary regions from the largest summary downwards. A vertex
/// without successors in an intermediate subgame is lost by its owner. Throws
/// ConsistencyError when the regions fail to partition G'.
SummaryMap compute_summary_map(const ExtendedGame& eg);

/// Partition, first-slot and successor-structure checks. Returns one line per
/// violation.
std::vector<std::string> check_summary_structure(const ExtendedGame& eg, const SummaryMap& map);

/// Parity/Büchi obliging game on one summary region plus a sink v_new.
struct ObligingGame {
  Summary summary = Summary::single(TruthValue::bottom());
  std::vector<int> vertices;  // G' vertex per local index, v_new excluded
  int v_new = 0;              // local index of the sink (last)
  ParityGame game;            // strong condition
  VertexSet weak;             // Büchi set of the weak condition

  int size() const { return game.size(); }
  int local(int x) const;  // -1 when outside
};

ObligingGame build_obliging_game(const ExtendedGame& eg, const SummaryMap& map, const Summary& s);

/// Uniformly gracious strategy over local vertex indices, or nullopt when
/// none exists. Decided through a parity game in which player 0 proposes a
/// cooperative move at every player-1 choice.
std::optional<StrategyMachine> solve_obliging(const ObligingGame& g);

/// Every consistent play meets the strong condition and every consistent
/// prefix has a consistent continuation meeting the weak one. Throws
/// InvalidStrategy when the strategy leaves the game.
bool verify_gracious(const ObligingGame& g, const StrategyMachine& s);

struct BoundedSearch {
  enum class Status { Found, Exhausted, TooLarge };
  Status status = Status::TooLarge;
  std::optional<StrategyMachine> strategy;
  int memory_bound = 0;
};

/// Exhaustive search over machines with up to 3 × (number of priorities)
/// memory states, each checked with verify_gracious. Gives up with TooLarge
/// once a memory size needs more than `budget` candidates.
BoundedSearch solve_obliging_bounded(const ObligingGame& g, std::size_t budget = 200000);

/// Player-0 machine over arena vertices run in lockstep with G'.
struct StrategyProduct {
  std::vector<std::pair<int, int>> states;  // (memory, G' vertex)
  std::map<std::pair<int, int>, int> index;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<bool>> bad;  // parallel to succ: player-1 bad move
  std::vector<TruthValue> value;       // enforced value of each state

  int size() const { return static_cast<int>(states.size()); }
};

/// Reachable part from `seeds` (pairs of memory and G' vertex). Throws
/// InvalidStrategy when the strategy lowers its own enforced value.
StrategyProduct strategy_product(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s,
                                 const std::vector<std::pair<int, int>>& seeds);
/// Seeds every arena vertex with its initial memory.
StrategyProduct strategy_product(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s);

/// Summaries of bad-move sequences Player 1 can realise from each product
/// state, as bitmasks over all_summaries().
std::vector<std::uint32_t> achievable_summaries(const StrategyProduct& p);
/// Lexicographic minimum over the summaries not strictly extended by another.
Summary uncovered_minimum(std::uint32_t mask);

Summary strategy_summary(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s,
                         const std::vector<int>& prefix);
Summary strategy_summary(const ExtendedGame& eg, const StrategyMachine& s, const std::vector<int>& prefix);

struct AdaptiveReport {
  std::vector<std::string> violations;
  int pairs = 0;
  int max_bad_moves = 0;
};

/// Every cycle of the product meets the parity condition of the value it is
/// on, and values never drop on the strategy's own moves.
AdaptiveReport check_adaptive(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s);

struct StronglyAdaptiveResult {
  SummaryMap map;
  std::map<int, ObligingGame> games;                 // by summary index, nonempty regions only
  std::map<int, StrategyMachine> gracious;           // by summary index
  std::vector<Summary> failing;                      // regions without a gracious strategy
  std::optional<StrategyMachine> strategy;           // over arena vertices
};

StronglyAdaptiveResult synthesize_strongly_adaptive(const ExtendedGame& eg);

/// Checks at every reachable product pair that the strategy summary equals
/// smry and that the enforcing, enabling and evading properties hold.
AdaptiveReport check_strongly_adaptive(const ExtendedGame& eg, const SummaryMap& map, const StrategyMachine& s);

}  // namespace rltl
