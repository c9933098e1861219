#include "rltl/game.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "rltl/error.hpp"

namespace rltl {

Arena::Arena(std::vector<std::string> propositions, std::vector<ArenaVertex> vertices,
             const std::vector<std::pair<int, int>>& edges)
    : vertices_(std::move(vertices)) {
  try {
    alphabet_ = Alphabet(std::move(propositions));
  } catch (const Error& e) {
    throw InvalidGame(InvalidGame::Kind::Format, e.what());
  }
  const int n = size();
  for (int v = 0; v < n; ++v) {
    const auto& vx = vertices_[v];
    if (vx.owner != 0 && vx.owner != 1) throw InvalidGame(InvalidGame::Kind::BadOwner, "vertex '" + vx.id + "' has owner outside {0,1}");
    if (!ids_.emplace(vx.id, v).second) throw InvalidGame(InvalidGame::Kind::DuplicateId, "duplicate vertex id '" + vx.id + "'");
    for (const auto& p : vx.label)
      if (!alphabet_.contains(p))
        throw InvalidGame(InvalidGame::Kind::UnknownProposition, "vertex '" + vx.id + "' uses unknown proposition '" + p + "'");
    letters_.push_back(alphabet_.letter_index(vx.label));
  }
  succ_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidGame(InvalidGame::Kind::DanglingEdge, "edge endpoint out of range");
    succ_[a].push_back(b);
  }
  for (int v = 0; v < n; ++v) {
    auto& s = succ_[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidGame(InvalidGame::Kind::TerminalVertex, "vertex '" + vertices_[v].id + "' has no successor");
  }
}

bool Arena::has_edge(int from, int to) const {
  return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

int Arena::index_of(const std::string& id) const {
  auto it = ids_.find(id);
  if (it == ids_.end()) throw NotAPath("unknown vertex '" + id + "'");
  return it->second;
}

std::vector<std::pair<int, int>> Arena::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v)
    for (int w : succ_[v]) out.push_back({v, w});
  return out;
}

void Arena::check_path(const std::vector<int>& path) const {
  if (path.empty()) throw NotAPath("empty path");
  for (int v : path)
    if (v < 0 || v >= size()) throw NotAPath("vertex out of range");
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!has_edge(path[i - 1], path[i]))
      throw NotAPath("no edge " + vertices_[path[i - 1]].id + " -> " + vertices_[path[i]].id);
}

std::vector<int> Arena::parse_path(const std::string& text) const {
  std::istringstream in(text);
  std::vector<int> path;
  for (std::string tok; in >> tok;) path.push_back(index_of(tok));
  check_path(path);
  return path;
}

std::vector<std::vector<int>> ParityGame::predecessors() const {
  std::vector<std::vector<int>> pred(size());
  for (int v = 0; v < size(); ++v)
    for (int w : succ[v]) pred[w].push_back(v);
  return pred;
}

Attractor attractor(const ParityGame& g, int player, const VertexSet& target, const VertexSet& members) {
  const int n = g.size();
  auto in = [&](int v) { return members.empty() || members[v]; };
  Attractor a;
  a.set.assign(n, false);
  a.strategy.assign(n, -1);
  std::vector<int> count(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!in(v)) continue;
    for (int w : g.succ[v]) count[v] += in(w) ? 1 : 0;
  }
  auto pred = g.predecessors();
  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    if (in(v) && target[v]) {
      a.set[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int v : pred[w]) {
      if (!in(v) || a.set[v]) continue;
      if (g.owner[v] == player) {
        a.set[v] = true;
        a.strategy[v] = w;
        queue.push_back(v);
      } else if (--count[v] == 0) {
        a.set[v] = true;
        queue.push_back(v);
      }
    }
  }
  return a;
}

VertexSet pre_set(const ParityGame& g, const VertexSet& target) {
  VertexSet out(g.size(), false);
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.succ[v])
      if (target[w]) out[v] = true;
  return out;
}

namespace {

class Zielonka {
 public:
  explicit Zielonka(const ParityGame& g) : g_(g) {}

  ParitySolution solve(const VertexSet& members) {
    const int n = g_.size();
    ParitySolution sol;
    for (int i = 0; i < 2; ++i) {
      sol.win[i].assign(n, false);
      sol.strategy[i].assign(n, -1);
    }
    int p = -1;
    for (int v = 0; v < n; ++v)
      if (members[v] && (p < 0 || g_.priority[v] < p)) p = g_.priority[v];
    if (p < 0) return sol;
    const int i = p % 2;
    VertexSet target(n, false);
    for (int v = 0; v < n; ++v) target[v] = members[v] && g_.priority[v] == p;
    Attractor a = attractor(g_, i, target, members);
    VertexSet rest(n, false);
    for (int v = 0; v < n; ++v) rest[v] = members[v] && !a.set[v];
    ParitySolution sub = solve(rest);

    bool opponent_empty = std::none_of(sub.win[1 - i].begin(), sub.win[1 - i].end(), [](bool b) { return b; });
    if (opponent_empty) {
      for (int v = 0; v < n; ++v) {
        if (!members[v]) continue;
        sol.win[i][v] = true;
        if (g_.owner[v] != i) continue;
        if (rest[v]) sol.strategy[i][v] = sub.strategy[i][v];
        else if (!target[v]) sol.strategy[i][v] = a.strategy[v];
        else sol.strategy[i][v] = first_in(v, members);
      }
      return sol;
    }
    Attractor b = attractor(g_, 1 - i, sub.win[1 - i], members);
    VertexSet rest2(n, false);
    for (int v = 0; v < n; ++v) rest2[v] = members[v] && !b.set[v];
    ParitySolution sub2 = solve(rest2);
    for (int v = 0; v < n; ++v) {
      if (!members[v]) continue;
      if (b.set[v]) {
        sol.win[1 - i][v] = true;
        if (g_.owner[v] == 1 - i)
          sol.strategy[1 - i][v] = sub.win[1 - i][v] ? sub.strategy[1 - i][v] : b.strategy[v];
      } else {
        for (int j = 0; j < 2; ++j) {
          sol.win[j][v] = sub2.win[j][v];
          sol.strategy[j][v] = sub2.strategy[j][v];
        }
      }
    }
    return sol;
  }

 private:
  int first_in(int v, const VertexSet& members) const {
    for (int w : g_.succ[v])
      if (members[w]) return w;
    throw ConsistencyError("subgame is not closed");
  }

  const ParityGame& g_;
};

}  // namespace

ParitySolution solve_parity(const ParityGame& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.succ[v].empty()) throw InvalidGame(InvalidGame::Kind::TerminalVertex, "parity game has a terminal vertex");
  Zielonka z(g);
  return z.solve(VertexSet(g.size(), true));
}

int ProductGame::find(int vertex, int state) const {
  auto it = index.find({vertex, state});
  return it == index.end() ? -1 : it->second;
}

ProductGame product(const Arena& arena, const Dpa& dpa, bool swap_owners) {
  std::vector<std::uint32_t> letters(arena.size());
  for (int v = 0; v < arena.size(); ++v) {
    try {
      letters[v] = dpa.alphabet.letter_index(arena.vertex(v).label);
    } catch (const UndeclaredProposition& e) {
      throw AlphabetMismatch(std::string("automaton alphabet lacks an arena label: ") + e.what());
    }
  }
  ProductGame p;
  std::deque<int> queue;
  auto id_of = [&](int v, int q) {
    auto [it, inserted] = p.index.emplace(std::make_pair(v, q), static_cast<int>(p.states.size()));
    if (inserted) {
      p.states.push_back({v, q});
      p.game.owner.push_back(swap_owners ? 1 - arena.owner(v) : arena.owner(v));
      p.game.priority.push_back(dpa.priority[q]);
      p.game.succ.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (int v = 0; v < arena.size(); ++v) id_of(v, dpa.initial);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    auto [v, q] = p.states[x];
    int q2 = dpa.step(q, letters[v]);
    std::vector<int> succ;
    for (int w : arena.successors(v)) succ.push_back(id_of(w, q2));
    p.game.succ[x] = std::move(succ);
  }
  for (auto& s : p.game.succ) std::sort(s.begin(), s.end());
  return p;
}

}  // namespace rltl
