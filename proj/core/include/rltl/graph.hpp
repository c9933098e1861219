#pragma once

#include <optional>
#include <vector>

namespace rltl {

/// Directed graph whose edges carry an integer label (a letter index when the
/// graph is a product of automata, unused otherwise).
struct LabeledGraph {
  struct Edge {
    int to;
    int label;
  };
  std::vector<std::vector<Edge>> succ;
  std::vector<int> initial;

  int size() const { return static_cast<int>(succ.size()); }
  int add_vertex() {
    succ.emplace_back();
    return size() - 1;
  }
};

/// Strongly connected components of the subgraph induced by `members`
/// (all vertices when empty). Components are returned in reverse
/// topological order, each sorted ascending.
std::vector<std::vector<int>> strongly_connected_components(const LabeledGraph& g,
                                                            const std::vector<bool>& members = {});

/// True iff the component has an edge inside it.
bool is_nontrivial(const LabeledGraph& g, const std::vector<int>& component);

/// Vertices reachable from `sources` (inclusive) inside `members` (all when empty).
std::vector<bool> forward_reachable(const LabeledGraph& g, const std::vector<int>& sources,
                                    const std::vector<bool>& members = {});

/// Vertices that can reach `targets` (inclusive) inside `members`.
std::vector<bool> backward_reachable(const LabeledGraph& g, const std::vector<bool>& targets,
                                     const std::vector<bool>& members = {});

/// A path from an initial vertex into a cycle. `prefix_states` ends where
/// `cycle_states` begins; labels[i] is the label of the edge leaving states[i].
struct LassoPath {
  std::vector<int> prefix_states;
  std::vector<int> prefix_labels;
  std::vector<int> cycle_states;
  std::vector<int> cycle_labels;
};

/// Acceptance as a conjunction of Büchi sets and min-even parity functions.
struct LassoCondition {
  std::vector<std::vector<bool>> buchi;
  std::vector<std::vector<int>> parity;
};

/// Searches for a cycle reachable from an initial vertex that visits every
/// Büchi set and whose least priority is even for every parity function.
std::optional<LassoPath> find_accepting_lasso(const LabeledGraph& g, const LassoCondition& condition);

}  // namespace rltl
