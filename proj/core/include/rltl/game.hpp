#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rltl/alphabet.hpp"
#include "rltl/automata.hpp"
#include "rltl/formula.hpp"

namespace rltl {

using VertexSet = std::vector<bool>;

struct ArenaVertex {
  std::string id;
  int owner = 0;
  Letter label;
};

/// Labelled game graph. Vertices are indexed in declaration order; successor
/// lists are sorted by index.
class Arena {
 public:
  Arena() = default;
  /// Validates the structure; throws InvalidGame on violations.
  Arena(std::vector<std::string> propositions, std::vector<ArenaVertex> vertices,
        const std::vector<std::pair<int, int>>& edges);

  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const ArenaVertex& vertex(int v) const { return vertices_[v]; }
  int owner(int v) const { return vertices_[v].owner; }
  std::uint32_t letter(int v) const { return letters_[v]; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }
  bool has_edge(int from, int to) const;
  int index_of(const std::string& id) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Throws NotAPath unless consecutive vertices are joined by edges.
  void check_path(const std::vector<int>& path) const;
  std::vector<int> parse_path(const std::string& text) const;

 private:
  Alphabet alphabet_;
  std::vector<ArenaVertex> vertices_;
  std::vector<std::uint32_t> letters_;
  std::vector<std::vector<int>> succ_;
  std::map<std::string, int> ids_;
};

/// Min-even parity game.
struct ParityGame {
  std::vector<int> owner;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;

  int size() const { return static_cast<int>(owner.size()); }
  std::vector<std::vector<int>> predecessors() const;
};

struct ParitySolution {
  VertexSet win[2];
  /// Positional strategies: strategy[i][v] is the chosen successor for vertices
  /// of player i inside win[i], and -1 elsewhere.
  std::vector<int> strategy[2];
};

/// Zielonka's recursive algorithm. Throws InvalidGame on terminal vertices.
ParitySolution solve_parity(const ParityGame& g);

struct Attractor {
  VertexSet set;
  std::vector<int> strategy;  // for `player` vertices added by the fixpoint
};

/// Vertices inside `members` (all when empty) from which `player` forces a
/// visit to `target`.
Attractor attractor(const ParityGame& g, int player, const VertexSet& target, const VertexSet& members = {});

/// Vertices with an edge into `target`, regardless of owner.
VertexSet pre_set(const ParityGame& g, const VertexSet& target);

/// Product of an arena with a DPA. The automaton reads λ(v) when leaving v;
/// only pairs reachable from some (v, q0) are kept.
struct ProductGame {
  ParityGame game;
  std::vector<std::pair<int, int>> states;  // (arena vertex, automaton state)
  std::map<std::pair<int, int>, int> index;

  int find(int vertex, int state) const;
};

ProductGame product(const Arena& arena, const Dpa& dpa, bool swap_owners = false);

/// A loaded game file: the arena and its rLTL objective.
struct GameSpec {
  Arena arena;
  std::string formula_text;
  RobustFormula formula;
};

}  // namespace rltl
