#include "rltl/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "rltl/error.hpp"

namespace rltl {
namespace {

bool in(const std::vector<bool>& members, int v) { return members.empty() || members[v]; }

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const LabeledGraph& g, const std::vector<bool>& members) {
  const int n = g.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;
  // Iterative Tarjan: frames hold (vertex, next edge position).
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (!in(members, root) || index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < g.succ[v].size()) {
        int w = g.succ[v][pos++].to;
        if (!in(members, w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return out;
}

bool is_nontrivial(const LabeledGraph& g, const std::vector<int>& component) {
  if (component.size() > 1) return true;
  int v = component.front();
  for (const auto& e : g.succ[v])
    if (e.to == v) return true;
  return false;
}

std::vector<bool> forward_reachable(const LabeledGraph& g, const std::vector<int>& sources,
                                    const std::vector<bool>& members) {
  std::vector<bool> seen(g.size(), false);
  std::deque<int> queue;
  for (int s : sources) {
    if (in(members, s) && !seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& e : g.succ[v]) {
      if (in(members, e.to) && !seen[e.to]) {
        seen[e.to] = true;
        queue.push_back(e.to);
      }
    }
  }
  return seen;
}

std::vector<bool> backward_reachable(const LabeledGraph& g, const std::vector<bool>& targets,
                                     const std::vector<bool>& members) {
  const int n = g.size();
  std::vector<std::vector<int>> pred(n);
  for (int v = 0; v < n; ++v)
    for (const auto& e : g.succ[v]) pred[e.to].push_back(v);
  std::vector<bool> seen(n, false);
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (targets[v] && in(members, v)) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : pred[v]) {
      if (in(members, u) && !seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return seen;
}

namespace {

struct Found {
  std::vector<int> region;
  std::vector<std::vector<bool>> visit;
};

std::optional<Found> search(const LabeledGraph& g, const std::vector<int>& region,
                            std::vector<std::vector<bool>> buchi, std::size_t parity_index,
                            const LassoCondition& cond) {
  std::vector<bool> members(g.size(), false);
  for (int v : region) members[v] = true;
  if (parity_index == cond.parity.size()) {
    for (auto& comp : strongly_connected_components(g, members)) {
      if (!is_nontrivial(g, comp)) continue;
      bool ok = true;
      for (const auto& set : buchi) {
        ok = std::any_of(comp.begin(), comp.end(), [&](int v) { return set[v]; });
        if (!ok) break;
      }
      if (ok) return Found{comp, buchi};
    }
    return std::nullopt;
  }
  const auto& omega = cond.parity[parity_index];
  std::set<int> present;
  for (int v : region) present.insert(omega[v]);
  for (int p : present) {
    if (p % 2 != 0) continue;
    std::vector<bool> sub(g.size(), false);
    for (int v : region) sub[v] = omega[v] >= p;
    for (auto& comp : strongly_connected_components(g, sub)) {
      if (!is_nontrivial(g, comp)) continue;
      if (std::none_of(comp.begin(), comp.end(), [&](int v) { return omega[v] == p; })) continue;
      auto next = buchi;
      std::vector<bool> hit(g.size(), false);
      for (int v : comp) hit[v] = omega[v] == p;
      next.push_back(std::move(hit));
      if (auto r = search(g, comp, std::move(next), parity_index + 1, cond)) return r;
    }
  }
  return std::nullopt;
}

// Shortest path inside `members` from `from` to a vertex satisfying `goal`,
// using at least `min_edges` edges. Returns visited states and labels.
bool shortest_path(const LabeledGraph& g, int from, const std::vector<bool>& goal, const std::vector<bool>& members,
                   bool need_edge, std::vector<int>& states, std::vector<int>& labels, int& end) {
  if (!need_edge && goal[from]) {
    end = from;
    return true;
  }
  const int n = g.size();
  std::vector<int> parent(n, -2), parent_label(n, -1);
  std::deque<int> queue;
  // Seed with successors so that a nonempty path is produced.
  for (const auto& e : g.succ[from]) {
    if (!in(members, e.to) || parent[e.to] != -2) continue;
    parent[e.to] = from;
    parent_label[e.to] = e.label;
    queue.push_back(e.to);
  }
  // `from` itself may be re-entered only as a goal.
  int found = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (goal[v]) {
      found = v;
      break;
    }
    for (const auto& e : g.succ[v]) {
      if (!in(members, e.to) || parent[e.to] != -2) continue;
      parent[e.to] = v;
      parent_label[e.to] = e.label;
      queue.push_back(e.to);
    }
  }
  if (found < 0) return false;
  std::vector<int> rs, rl;
  for (int v = found;;) {
    int p = parent[v];
    rs.push_back(p);
    rl.push_back(parent_label[v]);
    if (p == from && rs.size() >= 1) {
      // Walk back stops at the first time we return to `from` as a parent.
      break;
    }
    v = p;
  }
  std::reverse(rs.begin(), rs.end());
  std::reverse(rl.begin(), rl.end());
  states.insert(states.end(), rs.begin(), rs.end());
  labels.insert(labels.end(), rl.begin(), rl.end());
  end = found;
  return true;
}

}  // namespace

std::optional<LassoPath> find_accepting_lasso(const LabeledGraph& g, const LassoCondition& condition) {
  auto reach = forward_reachable(g, g.initial);
  std::vector<int> region;
  for (int v = 0; v < g.size(); ++v)
    if (reach[v]) region.push_back(v);
  auto found = search(g, region, condition.buchi, 0, condition);
  if (!found) return std::nullopt;

  std::vector<bool> members(g.size(), false);
  for (int v : found->region) members[v] = true;
  const auto& visit = found->visit;

  int start = found->region.front();
  if (!visit.empty()) {
    for (int v : found->region)
      if (visit.front()[v]) {
        start = v;
        break;
      }
  }

  LassoPath path;
  // Cycle: from start through every remaining Büchi set and back.
  int cur = start;
  for (std::size_t i = 1; i < visit.size(); ++i) {
    int end = cur;
    if (!shortest_path(g, cur, visit[i], members, false, path.cycle_states, path.cycle_labels, end))
      throw ConsistencyError("lasso search lost its cycle");
    cur = end;
  }
  std::vector<bool> back(g.size(), false);
  back[start] = true;
  int end = cur;
  if (!shortest_path(g, cur, back, members, path.cycle_states.empty(), path.cycle_states, path.cycle_labels, end))
    throw ConsistencyError("lasso search lost its cycle");

  // Prefix: from an initial vertex to start.
  std::vector<bool> goal(g.size(), false);
  goal[start] = true;
  bool done = false;
  for (int s : g.initial) {
    if (s == start) {
      done = true;
      break;
    }
  }
  if (!done) {
    // Multi-source BFS.
    const int n = g.size();
    std::vector<int> parent(n, -2), parent_label(n, -1);
    std::deque<int> queue;
    for (int s : g.initial) {
      if (parent[s] == -2) {
        parent[s] = -1;
        queue.push_back(s);
      }
    }
    while (!queue.empty() && parent[start] == -2) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& e : g.succ[v]) {
        if (parent[e.to] != -2) continue;
        parent[e.to] = v;
        parent_label[e.to] = e.label;
        queue.push_back(e.to);
      }
    }
    for (int v = start; parent[v] != -1; v = parent[v]) {
      path.prefix_states.push_back(parent[v]);
      path.prefix_labels.push_back(parent_label[v]);
    }
    std::reverse(path.prefix_states.begin(), path.prefix_states.end());
    std::reverse(path.prefix_labels.begin(), path.prefix_labels.end());
  }
  return path;
}

}  // namespace rltl
