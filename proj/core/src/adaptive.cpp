#include "rltl/adaptive.hpp"

#include <deque>

#include "rltl/error.hpp"

namespace rltl {

StateVector ExtendedGame::initial_states() const {
  StateVector q;
  for (int i = 0; i < 4; ++i) q[i] = dpa[i].initial;
  return q;
}

StateVector ExtendedGame::step(const StateVector& q, int arena_vertex) const {
  StateVector r;
  for (int i = 0; i < 4; ++i) r[i] = dpa[i].step(q[i], arena.letter(arena_vertex));
  return r;
}

int ExtendedGame::find(int arena_vertex, const StateVector& q) const {
  auto it = index.find({arena_vertex, q});
  return it == index.end() ? -1 : it->second;
}

int ExtendedGame::track(const std::vector<int>& path) const {
  arena.check_path(path);
  StateVector q = initial_states();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) q = step(q, path[i]);
  int x = find(path.back(), q);
  if (x < 0) throw ConsistencyError("path left the extended game");
  return x;
}

std::string ExtendedGame::vertex_name(int x) const {
  return arena.vertex(vertex[x]).id + "|" + std::to_string(states[x][0]) + "," + std::to_string(states[x][1]) + "," +
         std::to_string(states[x][2]) + "," + std::to_string(states[x][3]);
}

int ExtendedGame::priority(int x, TruthValue b) const {
  if (b == TruthValue::bottom()) throw Error("threshold 0000 has no game");
  int i = threshold_index(b);
  return threshold_games[i].game.priority[threshold_vertex[i][x]];
}

std::string memory_name(const StateVector& q) {
  return std::to_string(q[0]) + "." + std::to_string(q[1]) + "." + std::to_string(q[2]) + "." + std::to_string(q[3]);
}

ExtendedGame build_extended_game(const Arena& arena, const RobustFormula& formula) {
  for (const auto& p : propositions(formula.root))
    if (!arena.alphabet().contains(p)) throw UndeclaredProposition(p);
  ExtendedGame eg;
  eg.arena = arena;
  eg.formula = formula;
  for (int i = 0; i < 4; ++i) {
    eg.dpa[i] = build_threshold_dpa(formula, kNontrivialThresholds[i], arena.alphabet());
    eg.threshold_games[i] = product(arena, eg.dpa[i]);
    eg.threshold_solutions[i] = solve_parity(eg.threshold_games[i].game);
    eg.dual_games[i] = product(arena, complement_dpa(eg.dpa[i]), true);
    eg.dual_solutions[i] = solve_parity(eg.dual_games[i].game);
  }
  std::deque<int> queue;
  auto id_of = [&](int v, const StateVector& q) {
    auto [it, inserted] = eg.index.emplace(std::make_pair(v, q), eg.size());
    if (inserted) {
      eg.vertex.push_back(v);
      eg.states.push_back(q);
      eg.graph.owner.push_back(arena.owner(v));
      eg.graph.priority.push_back(0);
      eg.graph.succ.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  const StateVector q0 = eg.initial_states();
  for (int v = 0; v < arena.size(); ++v) id_of(v, q0);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    StateVector q2 = eg.step(eg.states[x], eg.vertex[x]);
    std::vector<int> succ;
    for (int w : arena.successors(eg.vertex[x])) succ.push_back(id_of(w, q2));
    std::sort(succ.begin(), succ.end());
    eg.graph.succ[x] = std::move(succ);
  }
  for (int i = 0; i < 4; ++i) {
    eg.threshold_vertex[i].resize(eg.size());
    eg.dual_vertex[i].resize(eg.size());
    for (int x = 0; x < eg.size(); ++x) {
      eg.threshold_vertex[i][x] = eg.threshold_games[i].find(eg.vertex[x], eg.states[x][i]);
      eg.dual_vertex[i][x] = eg.dual_games[i].find(eg.vertex[x], eg.states[x][i]);
      if (eg.threshold_vertex[i][x] < 0 || eg.dual_vertex[i][x] < 0)
        throw ConsistencyError("extended game vertex missing from a threshold game");
    }
  }
  return eg;
}

VertexSet EnforceMap::exactly(TruthValue b) const {
  VertexSet out(value.size());
  for (std::size_t x = 0; x < value.size(); ++x) out[x] = value[x] == b;
  return out;
}

EnforceMap enforce_regions(const ExtendedGame& eg, int player) {
  EnforceMap m;
  m.player = player;
  const int n = eg.size();
  for (auto& s : m.bound) s.assign(n, false);
  m.value.assign(n, TruthValue::bottom());
  if (player == 0) {
    m.bound[0].assign(n, true);
    for (int i = 0; i < 4; ++i)
      for (int x = 0; x < n; ++x) m.bound[i + 1][x] = eg.threshold_solutions[i].win[0][eg.threshold_vertex[i][x]];
    for (int x = 0; x < n; ++x)
      for (int r = 0; r <= 4; ++r)
        if (m.bound[r][x]) m.value[x] = TruthValue::from_rank(r);
  } else {
    m.bound[4].assign(n, true);
    // Value <= b is enforced iff player 1 keeps the play out of threshold b+1.
    for (int r = 0; r < 4; ++r)
      for (int x = 0; x < n; ++x) m.bound[r][x] = eg.dual_solutions[r].win[0][eg.dual_vertex[r][x]];
    for (int x = 0; x < n; ++x)
      for (int r = 4; r >= 0; --r)
        if (m.bound[r][x]) m.value[x] = TruthValue::from_rank(r);
  }
  for (int x = 0; x < n; ++x)
    for (int r = 1; r <= 4; ++r) {
      bool chain = player == 0 ? (!m.bound[r][x] || m.bound[r - 1][x]) : (!m.bound[r - 1][x] || m.bound[r][x]);
      if (!chain) throw ConsistencyError("enforce regions are not nested");
    }
  return m;
}

StrategyMachine synthesize_adaptive(const ExtendedGame& eg, int player) {
  EnforceMap enf = enforce_regions(eg, player);
  StrategyMachine s;
  s.player = player;
  std::map<StateVector, int> memory;
  auto memory_of = [&](const StateVector& q) {
    auto [it, inserted] = memory.emplace(q, s.memory_size());
    if (inserted) s.add_memory(memory_name(q));
    return it->second;
  };
  const int m0 = memory_of(eg.initial_states());
  s.init.assign(eg.arena.size(), m0);
  for (int x = 0; x < eg.size(); ++x) {
    const int v = eg.vertex[x];
    const int m = memory_of(eg.states[x]);
    s.update[{m, v}] = memory_of(eg.step(eg.states[x], v));
    s.enforced[{m, v}] = enf.value[x];
    if (eg.arena.owner(v) != player) continue;
    const int r = enf.value[x].rank();
    int choice = eg.arena.successors(v).front();
    if (player == 0 && r > 0) {
      const auto& g = eg.threshold_games[r - 1];
      int y = eg.threshold_vertex[r - 1][x];
      int z = eg.threshold_solutions[r - 1].strategy[0][y];
      if (z < 0) throw ConsistencyError("no winning move inside a winning region");
      choice = g.states[z].first;
    } else if (player == 1 && r < 4) {
      const auto& g = eg.dual_games[r];
      int y = eg.dual_vertex[r][x];
      int z = eg.dual_solutions[r].strategy[0][y];
      if (z < 0) throw ConsistencyError("no winning move inside a winning region");
      choice = g.states[z].first;
    }
    s.output[{m, v}] = choice;
  }
  return s;
}

MonitorReport monitor(const ExtendedGame& eg, const EnforceMap& player0, const std::vector<int>& prefix) {
  eg.arena.check_path(prefix);
  MonitorReport r;
  StateVector q = eg.initial_states();
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    if (j > 0) q = eg.step(q, prefix[j - 1]);
    int x = eg.find(prefix[j], q);
    if (x < 0) throw ConsistencyError("path left the extended game");
    r.enforced.push_back(player0.value[x]);
    if (j == 0) continue;
    const int mover = eg.arena.owner(prefix[j - 1]);
    TruthValue before = r.enforced[j - 1], after = r.enforced[j];
    if (mover == 1 && after > before) r.bad_moves.push_back({static_cast<int>(j), 1});
    if (mover == 0 && after < before) r.bad_moves.push_back({static_cast<int>(j), 0});
  }
  return r;
}

MonitorReport monitor(const ExtendedGame& eg, const std::vector<int>& prefix) {
  return monitor(eg, enforce_regions(eg, 0), prefix);
}

}  // namespace rltl
