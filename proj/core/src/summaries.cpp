#include "rltl/summaries.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "rltl/error.hpp"
#include "rltl/graph.hpp"

namespace rltl {
namespace {

constexpr int kSummaries = 31;

LabeledGraph to_graph(const std::vector<std::vector<int>>& succ) {
  LabeledGraph g;
  g.succ.resize(succ.size());
  for (std::size_t v = 0; v < succ.size(); ++v)
    for (int w : succ[v]) g.succ[v].push_back({w, 0});
  return g;
}

// Vertices on a cycle inside `members` whose least priority is odd.
VertexSet odd_cycle_vertices(const LabeledGraph& g, const std::vector<int>& priority, const VertexSet& members) {
  const int n = g.size();
  std::set<int> odd;
  for (int v = 0; v < n; ++v)
    if (members[v] && priority[v] % 2 == 1) odd.insert(priority[v]);
  VertexSet out(n, false);
  for (int p : odd) {
    VertexSet sub(n, false);
    for (int v = 0; v < n; ++v) sub[v] = members[v] && priority[v] >= p;
    for (const auto& comp : strongly_connected_components(g, sub)) {
      if (!is_nontrivial(g, comp)) continue;
      if (std::none_of(comp.begin(), comp.end(), [&](int v) { return priority[v] == p; })) continue;
      for (int v : comp) out[v] = true;
    }
  }
  return out;
}

VertexSet set_minus(VertexSet a, const VertexSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && !b[i];
  return a;
}

void unite(VertexSet& a, const VertexSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
}

int threshold_priority(const ExtendedGame& eg, int x, TruthValue b) {
  return b == TruthValue::bottom() ? 0 : eg.priority(x, b);
}

std::uint32_t bit(const Summary& s) { return 1u << summary_index(s); }

}  // namespace

VertexSet SummaryMap::greater(const Summary& s) const {
  VertexSet out(index.size(), false);
  const int i = summary_index(s);
  for (std::size_t x = 0; x < index.size(); ++x) out[x] = index[x] > i;
  return out;
}

VertexSet SummaryMap::less(const Summary& s) const {
  VertexSet out(index.size(), false);
  const int i = summary_index(s);
  for (std::size_t x = 0; x < index.size(); ++x) out[x] = index[x] < i;
  return out;
}

SummaryMap compute_summary_map(const ExtendedGame& eg) {
  SummaryMap map;
  map.enforce = enforce_regions(eg, 0);
  const int n = eg.size();
  const auto& all = all_summaries();
  map.exact.assign(kSummaries, VertexSet(n, false));
  VertexSet more(n, false);
  for (int i = kSummaries - 1; i >= 0; --i) {
    const Summary& s = all[i];
    const TruthValue b0 = s.first();
    const VertexSet& at_least = map.enforce.bound[b0.rank()];
    VertexSet exact;
    if (s.k() == 0) {
      exact = set_minus(at_least, more);
    } else {
      VertexSet removed = more;
      for (const auto& e : evade_set(s)) unite(removed, attractor(eg.graph, 1, map.exactly(e)).set);
      VertexSet members = set_minus(at_least, removed);

      // Subgame on `members` colored as G^{b0}.
      std::vector<int> local(n, -1), global;
      for (int x = 0; x < n; ++x)
        if (members[x]) {
          local[x] = static_cast<int>(global.size());
          global.push_back(x);
        }
      ParityGame sub;
      for (int x : global) {
        sub.owner.push_back(eg.graph.owner[x]);
        sub.priority.push_back(threshold_priority(eg, x, b0));
        std::vector<int> succ;
        for (int y : eg.graph.succ[x])
          if (local[y] >= 0) succ.push_back(local[y]);
        // A player stuck here can only leave A_s. For player 1 every exit
        // has a larger summary and value at least b0, so the player stuck
        // loses.
        if (succ.empty()) {
          succ.push_back(local[x]);
          sub.priority.back() = sub.owner.back() == 1 ? 0 : 1;
        }
        sub.succ.push_back(std::move(succ));
      }
      ParitySolution sol = solve_parity(sub);
      VertexSet win(n, false);
      for (std::size_t j = 0; j < global.size(); ++j) win[global[j]] = sol.win[0][j];
      VertexSet target = pre_set(eg.graph, map.exactly(left_shift(s)));
      for (int x = 0; x < n; ++x) target[x] = target[x] && win[x];
      exact = backward_reachable(to_graph(eg.graph.succ), target, win);
    }
    map.exact[i] = exact;
    unite(more, exact);
  }
  map.index.assign(n, -1);
  for (int i = 0; i < kSummaries; ++i)
    for (int x = 0; x < n; ++x)
      if (map.exact[i][x]) {
        if (map.index[x] >= 0) throw ConsistencyError("summary regions overlap at " + eg.vertex_name(x));
        map.index[x] = i;
      }
  for (int x = 0; x < n; ++x) {
    if (map.index[x] < 0) throw ConsistencyError("no summary for " + eg.vertex_name(x));
    if (map.at(x).first() != map.enforce.value[x])
      throw ConsistencyError("summary of " + eg.vertex_name(x) + " does not start with its enforced value");
  }
  return map;
}

std::vector<std::string> check_summary_structure(const ExtendedGame& eg, const SummaryMap& map) {
  std::vector<std::string> out;
  const int n = eg.size();
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int i = 0; i < kSummaries; ++i) count += map.exact[i][x] ? 1 : 0;
    if (count != 1) out.push_back(eg.vertex_name(x) + " lies in " + std::to_string(count) + " summary regions");
    if (map.index[x] < 0) continue;
    const Summary& s = map.at(x);
    if (s.first() != map.enforce.value[x])
      out.push_back(eg.vertex_name(x) + ": summary " + s.to_string() + " but enforced " + map.enforce.value[x].to_string());
    const std::string where = eg.vertex_name(x) + " in " + s.to_string();
    bool same = false;
    for (int y : eg.graph.succ[x]) same = same || map.index[y] == map.index[x];
    if (eg.graph.owner[x] == 0) {
      for (int y : eg.graph.succ[x])
        if (map.index[y] > map.index[x]) out.push_back(where + ": player-0 successor with a larger summary");
      if (!same) out.push_back(where + ": player-0 vertex without a successor in its region");
    } else {
      for (int y : eg.graph.succ[x])
        if (map.index[y] < map.index[x] && !is_strict_prefix(map.at(y), s))
          out.push_back(where + ": player-1 successor with smaller summary " + map.at(y).to_string() + " that is no prefix");
      if (!same) {
        bool shifted = false;
        if (s.k() > 0)
          for (int y : eg.graph.succ[x]) shifted = shifted || map.at(y) == left_shift(s);
        if (!shifted) out.push_back(where + ": player-1 vertex leaves its region but not to the shifted summary");
      }
    }
  }
  return out;
}

int ObligingGame::local(int x) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
  return it != vertices.end() && *it == x ? static_cast<int>(it - vertices.begin()) : -1;
}

ObligingGame build_obliging_game(const ExtendedGame& eg, const SummaryMap& map, const Summary& s) {
  ObligingGame g;
  g.summary = s;
  const VertexSet& region = map.exact[summary_index(s)];
  for (int x = 0; x < eg.size(); ++x)
    if (region[x]) g.vertices.push_back(x);
  const int n = static_cast<int>(g.vertices.size());
  g.v_new = n;
  VertexSet pre;
  if (s.k() > 0) pre = pre_set(eg.graph, map.exactly(left_shift(s)));
  for (int i = 0; i < n; ++i) {
    const int x = g.vertices[i];
    g.game.owner.push_back(eg.graph.owner[x]);
    g.game.priority.push_back(threshold_priority(eg, x, s.first()));
    std::vector<int> succ;
    for (int y : eg.graph.succ[x])
      if (region[y]) succ.push_back(g.local(y));
    std::sort(succ.begin(), succ.end());
    if (succ.empty()) {
      if (eg.graph.owner[x] != 1)
        throw ConsistencyError("player-0 vertex " + eg.vertex_name(x) + " has no successor in its summary region");
      succ.push_back(g.v_new);
    }
    g.game.succ.push_back(std::move(succ));
    g.weak.push_back(s.k() == 0 || pre[x]);
  }
  g.game.owner.push_back(0);
  g.game.priority.push_back(0);
  g.game.succ.push_back({g.v_new});
  g.weak.push_back(true);
  return g;
}

namespace {

// Parity game in which player 0 names a cooperative successor at each
// player-1 choice. Player 0 must meet the strong condition and visit the
// weak set or a deviation infinitely often. The Büchi part is folded into
// the priorities by recording the least priority seen since the last visit.
class GraciousReduction {
 public:
  explicit GraciousReduction(const ObligingGame& g) : g_(g) {
    int d = 0;
    for (int p : g.game.priority) d = std::max(d, p);
    none_ = d + 1;
    top_ = (d + 1) % 2 == 1 ? d + 1 : d + 2;
  }

  std::optional<StrategyMachine> solve() {
    for (int v = 0; v < g_.size(); ++v) real(v, none_);
    for (std::size_t i = 0; i < nodes_.size(); ++i) expand(static_cast<int>(i));
    sol_ = solve_parity(h_);
    for (int v = 0; v < g_.size(); ++v)
      if (!sol_.win[0][real(v, none_)]) return std::nullopt;
    return machine();
  }

 private:
  enum class Kind { Real, Propose, Deviate };
  struct Node {
    Kind kind;
    int v;        // Real: vertex; Propose: player-1 vertex; Deviate: target
    int record;   // least priority since the last weak visit, none_ if empty
    int proposal; // Propose only
    auto key() const { return std::tie(kind, v, record, proposal); }
    bool operator<(const Node& o) const { return key() < o.key(); }
  };

  bool chooses(int v) const { return g_.game.owner[v] == 1 && g_.game.succ[v].size() > 1; }

  // Record after leaving v and the priority emitted at v.
  std::pair<int, int> leave(int v, int record) const {
    const int c = g_.game.priority[v];
    if (g_.weak[v]) return {none_, std::min(record, c)};
    return {std::min(record, c), top_};
  }

  int node(const Node& n, int owner, int priority) {
    auto [it, inserted] = ids_.emplace(n, static_cast<int>(nodes_.size()));
    if (inserted) {
      nodes_.push_back(n);
      h_.owner.push_back(owner);
      h_.priority.push_back(priority);
      h_.succ.emplace_back();
    }
    return it->second;
  }

  int real(int v, int record) {
    return node({Kind::Real, v, record, -1}, chooses(v) ? 0 : g_.game.owner[v], leave(v, record).second);
  }

  void expand(int i) {
    const Node n = nodes_[i];
    std::vector<int> succ;
    switch (n.kind) {
      case Kind::Real: {
        const int r = leave(n.v, n.record).first;
        for (int w : g_.game.succ[n.v])
          succ.push_back(chooses(n.v) ? node({Kind::Propose, n.v, r, w}, 1, top_) : real(w, r));
        break;
      }
      case Kind::Propose:
        for (int w : g_.game.succ[n.v])
          succ.push_back(w == n.proposal ? real(w, n.record)
                                         : node({Kind::Deviate, w, n.record, -1}, 0, n.record == none_ ? top_ : n.record));
        break;
      case Kind::Deviate: succ.push_back(real(n.v, none_)); break;
    }
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    h_.succ[i] = std::move(succ);
  }

  int choice(int h) const {
    int c = sol_.strategy[0][h];
    if (c < 0) c = h_.succ[h].front();
    return c;
  }

  // Memory (record, expected successor) over the local vertices.
  StrategyMachine machine() {
    StrategyMachine s;
    s.player = 0;
    std::map<std::pair<int, int>, int> memory;
    std::deque<std::pair<int, int>> queue;  // (memory, vertex)
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> content;  // memory id -> (record, expected)
    auto memory_of = [&](int record, int expected) {
      auto [it, inserted] = memory.emplace(std::make_pair(record, expected), s.memory_size());
      if (inserted) {
        content.push_back({record, expected});
        std::string name = record == none_ ? "-" : std::to_string(record);
        if (expected >= 0) name += ">" + std::to_string(expected);
        s.add_memory(name);
      }
      return it->second;
    };
    auto visit = [&](int m, int v) {
      if (seen.insert({m, v}).second) queue.push_back({m, v});
    };
    const int n = g_.size();
    s.init.assign(n, memory_of(none_, -1));
    for (int v = 0; v < n; ++v) visit(s.init[v], v);
    while (!queue.empty()) {
      auto [m, v] = queue.front();
      queue.pop_front();
      auto [record, expected] = content[m];
      if (expected >= 0 && v != expected) record = none_;
      const int h = real(v, record);
      if (!sol_.win[0][h]) throw ConsistencyError("gracious strategy left its winning region");
      const int r = leave(v, record).first;
      int next;
      if (g_.game.owner[v] == 0) {
        const Node& to = nodes_[choice(h)];
        s.output[{m, v}] = to.v;
        next = memory_of(r, -1);
        visit(next, to.v);
      } else if (chooses(v)) {
        const Node& to = nodes_[choice(h)];
        next = memory_of(r, to.proposal);
        for (int w : g_.game.succ[v]) visit(next, w);
      } else {
        next = memory_of(r, -1);
        for (int w : g_.game.succ[v]) visit(next, w);
      }
      s.update[{m, v}] = next;
    }
    return s;
  }

  const ObligingGame& g_;
  int none_ = 0;
  int top_ = 1;
  ParityGame h_;
  std::vector<Node> nodes_;
  std::map<Node, int> ids_;
  ParitySolution sol_;
};

}  // namespace

std::optional<StrategyMachine> solve_obliging(const ObligingGame& g) { return GraciousReduction(g).solve(); }

bool verify_gracious(const ObligingGame& g, const StrategyMachine& s) {
  s.validate(g.game.succ, g.game.owner);
  auto pairs = s.reachable_pairs(g.game.succ, g.game.owner);
  std::map<std::pair<int, int>, int> id;
  for (std::size_t i = 0; i < pairs.size(); ++i) id.emplace(pairs[i], static_cast<int>(i));
  const int n = static_cast<int>(pairs.size());
  LabeledGraph prod;
  prod.succ.resize(n);
  std::vector<int> priority(n);
  VertexSet weak(n);
  for (int i = 0; i < n; ++i) {
    auto [m, v] = pairs[i];
    priority[i] = g.game.priority[v];
    weak[i] = g.weak[v];
    const int m2 = s.next_memory(m, v);
    if (g.game.owner[v] == s.player) {
      prod.succ[i].push_back({id.at({m2, s.move(m, v)}), 0});
    } else {
      for (int w : g.game.succ[v]) prod.succ[i].push_back({id.at({m2, w}), 0});
    }
  }
  VertexSet all(n, true);
  auto odd = odd_cycle_vertices(prod, priority, all);
  if (std::find(odd.begin(), odd.end(), true) != odd.end()) return false;
  VertexSet good(n, false);
  for (const auto& comp : strongly_connected_components(prod))
    if (is_nontrivial(prod, comp) && std::any_of(comp.begin(), comp.end(), [&](int i) { return weak[i]; }))
      for (int i : comp) good[i] = true;
  auto reach = backward_reachable(prod, good);
  return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

BoundedSearch solve_obliging_bounded(const ObligingGame& g, std::size_t budget) {
  BoundedSearch out;
  std::set<int> colors(g.game.priority.begin(), g.game.priority.end());
  out.memory_bound = 3 * static_cast<int>(colors.size());
  const int n = g.size();
  std::vector<int> choosers;
  for (int v = 0; v < n; ++v)
    if (g.game.owner[v] == 0 && g.game.succ[v].size() > 1) choosers.push_back(v);
  for (int mem = 1; mem <= out.memory_bound; ++mem) {
    // Digits: update per (memory, vertex) except v_new, then output per (memory, chooser).
    std::vector<int> radix;
    for (int i = 0; i < mem * (n - 1); ++i) radix.push_back(mem);
    for (int i = 0; i < mem; ++i)
      for (int v : choosers) radix.push_back(static_cast<int>(g.game.succ[v].size()));
    double count = 1;
    for (int r : radix) count *= r;
    if (count > static_cast<double>(budget)) {
      out.status = BoundedSearch::Status::TooLarge;
      return out;
    }
    std::vector<int> digit(radix.size(), 0);
    for (;;) {
      StrategyMachine s;
      s.player = 0;
      for (int m = 0; m < mem; ++m) s.add_memory("m" + std::to_string(m));
      s.init.assign(n, 0);
      std::size_t d = 0;
      for (int m = 0; m < mem; ++m) {
        for (int v = 0; v < n; ++v) s.update[{m, v}] = v == g.v_new ? 0 : digit[d++];
      }
      for (int m = 0; m < mem; ++m) {
        for (int v = 0; v < n; ++v)
          if (g.game.owner[v] == 0) s.output[{m, v}] = g.game.succ[v].front();
        for (int v : choosers) s.output[{m, v}] = g.game.succ[v][digit[d++]];
      }
      if (verify_gracious(g, s)) {
        out.status = BoundedSearch::Status::Found;
        out.strategy = std::move(s);
        return out;
      }
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == radix[i]) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  out.status = BoundedSearch::Status::Exhausted;
  return out;
}

StrategyProduct strategy_product(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s,
                                 const std::vector<std::pair<int, int>>& seeds) {
  StrategyProduct p;
  std::deque<int> queue;
  auto id_of = [&](int m, int x) {
    auto [it, inserted] = p.index.emplace(std::make_pair(m, x), p.size());
    if (inserted) {
      p.states.push_back({m, x});
      p.value.push_back(enf.value[x]);
      p.succ.emplace_back();
      p.bad.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (auto [m, x] : seeds) id_of(m, x);
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    auto [m, x] = p.states[i];
    const int v = eg.vertex[x];
    const int m2 = s.next_memory(m, v);
    const StateVector q2 = eg.step(eg.states[x], v);
    std::vector<int> targets;
    if (eg.arena.owner(v) == s.player) {
      targets.push_back(s.move(m, v));
    } else {
      targets = eg.arena.successors(v);
    }
    for (int w : targets) {
      const int y = eg.find(w, q2);
      if (y < 0) throw ConsistencyError("strategy play left the extended game");
      const TruthValue before = enf.value[x], after = enf.value[y];
      if (eg.arena.owner(v) == 0 && after < before)
        throw InvalidStrategy("strategy makes a bad move " + eg.vertex_name(x) + " -> " + eg.vertex_name(y));
      const int j = id_of(m2, y);
      p.succ[i].push_back(j);
      p.bad[i].push_back(eg.arena.owner(v) == 1 && after > before);
    }
  }
  return p;
}

StrategyProduct strategy_product(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s) {
  std::vector<std::pair<int, int>> seeds;
  const StateVector q0 = eg.initial_states();
  for (int v = 0; v < eg.arena.size(); ++v) seeds.push_back({s.init.at(v), eg.find(v, q0)});
  return strategy_product(eg, enf, s, seeds);
}

std::vector<std::uint32_t> achievable_summaries(const StrategyProduct& p) {
  const int n = p.size();
  const auto& all = all_summaries();
  std::vector<std::uint32_t> result(n, 0);
  std::vector<std::vector<int>> pred(n);  // along bad-move-free edges
  for (int i = 0; i < n; ++i)
    for (std::size_t e = 0; e < p.succ[i].size(); ++e)
      if (!p.bad[i][e]) pred[p.succ[i][e]].push_back(i);
  // Bad moves raise the value, so higher values are settled first.
  for (int rank = 4; rank >= 0; --rank) {
    const TruthValue b = TruthValue::from_rank(rank);
    std::vector<std::uint32_t> reach(n, 0);
    std::deque<int> queue;
    for (int i = 0; i < n; ++i) {
      if (p.value[i] != b) continue;
      for (std::size_t e = 0; e < p.succ[i].size(); ++e) {
        if (!p.bad[i][e]) continue;
        std::uint32_t mask = result[p.succ[i][e]];
        for (int t = 0; t < kSummaries; ++t)
          if (mask >> t & 1u) {
            std::vector<TruthValue> vals{b};
            for (auto v : all[t].values()) vals.push_back(v);
            reach[i] |= bit(Summary(vals));
          }
      }
      if (reach[i]) queue.push_back(i);
    }
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : pred[i]) {
        if ((reach[j] | reach[i]) == reach[j]) continue;
        reach[j] |= reach[i];
        queue.push_back(j);
      }
    }
    for (int i = 0; i < n; ++i)
      if (p.value[i] == b) result[i] = reach[i] | bit(Summary::single(b));
  }
  return result;
}

Summary uncovered_minimum(std::uint32_t mask) {
  const auto& all = all_summaries();
  for (int t = 0; t < kSummaries; ++t) {
    if (!(mask >> t & 1u)) continue;
    bool covered = false;
    for (int u = 0; u < kSummaries && !covered; ++u)
      covered = (mask >> u & 1u) && is_strict_prefix(all[t], all[u]);
    if (!covered) return all[t];
  }
  throw ConsistencyError("empty summary set");
}

Summary strategy_summary(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s,
                         const std::vector<int>& prefix) {
  const int m = s.memory_after(prefix);
  const int x = eg.track(prefix);
  auto p = strategy_product(eg, enf, s, {{m, x}});
  return uncovered_minimum(achievable_summaries(p)[0]);
}

Summary strategy_summary(const ExtendedGame& eg, const StrategyMachine& s, const std::vector<int>& prefix) {
  return strategy_summary(eg, enforce_regions(eg, 0), s, prefix);
}

namespace {

std::string pair_name(const ExtendedGame& eg, const StrategyMachine& s, const StrategyProduct& p, int i) {
  return "(" + s.memory_names[p.states[i].first] + ", " + eg.vertex_name(p.states[i].second) + ")";
}

// Bad moves along the worst play from each state.
int max_bad_moves(const StrategyProduct& p) {
  std::vector<int> best(p.size(), 0);
  for (int rank = 4; rank >= 0; --rank) {
    const TruthValue b = TruthValue::from_rank(rank);
    std::vector<std::vector<int>> pred(p.size());
    std::deque<int> queue;
    for (int i = 0; i < p.size(); ++i) {
      if (p.value[i] != b) continue;
      for (std::size_t e = 0; e < p.succ[i].size(); ++e) {
        if (p.bad[i][e]) {
          best[i] = std::max(best[i], best[p.succ[i][e]] + 1);
        } else {
          pred[p.succ[i][e]].push_back(i);
        }
      }
      queue.push_back(i);
    }
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j : pred[i])
        if (best[j] < best[i]) {
          best[j] = best[i];
          queue.push_back(j);
        }
    }
  }
  return p.size() ? *std::max_element(best.begin(), best.end()) : 0;
}

// States from which a bad-move-free play can reach `target`.
LabeledGraph free_graph(const StrategyProduct& p) {
  LabeledGraph g;
  g.succ.resize(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (std::size_t e = 0; e < p.succ[i].size(); ++e)
      if (!p.bad[i][e]) g.succ[i].push_back({p.succ[i][e], 0});
  return g;
}

VertexSet reach_without_bad_moves(const StrategyProduct& p, const VertexSet& target) {
  return backward_reachable(free_graph(p), target);
}

// States on a bad-move-free cycle violating the parity condition of their value.
VertexSet parity_violations(const ExtendedGame& eg, const StrategyProduct& p) {
  VertexSet out(p.size(), false);
  LabeledGraph g = free_graph(p);
  for (int rank = 1; rank <= 4; ++rank) {
    const TruthValue b = TruthValue::from_rank(rank);
    VertexSet members(p.size());
    std::vector<int> priority(p.size(), 0);
    for (int i = 0; i < p.size(); ++i) {
      members[i] = p.value[i] == b;
      if (members[i]) priority[i] = eg.priority(p.states[i].second, b);
    }
    unite(out, odd_cycle_vertices(g, priority, members));
  }
  return out;
}

}  // namespace

AdaptiveReport check_adaptive(const ExtendedGame& eg, const EnforceMap& enf, const StrategyMachine& s) {
  AdaptiveReport r;
  StrategyProduct p;
  try {
    p = strategy_product(eg, enf, s);
  } catch (const InvalidStrategy& e) {
    r.violations.push_back(e.what());
    return r;
  }
  r.pairs = p.size();
  auto odd = parity_violations(eg, p);
  for (int i = 0; i < p.size(); ++i)
    if (odd[i]) r.violations.push_back(pair_name(eg, s, p, i) + " lies on a cycle below its enforced value");
  r.max_bad_moves = max_bad_moves(p);
  if (r.max_bad_moves > 4) r.violations.push_back("a play has " + std::to_string(r.max_bad_moves) + " bad moves");
  return r;
}

StronglyAdaptiveResult synthesize_strongly_adaptive(const ExtendedGame& eg) {
  StronglyAdaptiveResult out;
  out.map = compute_summary_map(eg);
  const auto& all = all_summaries();
  for (int i = kSummaries - 1; i >= 0; --i) {
    if (std::find(out.map.exact[i].begin(), out.map.exact[i].end(), true) == out.map.exact[i].end()) continue;
    ObligingGame g = build_obliging_game(eg, out.map, all[i]);
    auto sigma = solve_obliging(g);
    if (!sigma) {
      out.failing.push_back(all[i]);
    } else {
      if (!verify_gracious(g, *sigma)) throw ConsistencyError("synthesized strategy for " + all[i].to_string() + " is not gracious");
      out.gracious.emplace(i, std::move(*sigma));
    }
    out.games.emplace(i, std::move(g));
  }
  if (!out.failing.empty()) return out;

  // Memory: automaton states, current summary and the memory of its
  // gracious strategy; -1 entries mean "not yet inside a region".
  struct Mem {
    StateVector q;
    int summary;
    int inner;
    auto operator<=>(const Mem&) const = default;
  };
  StrategyMachine s;
  s.player = 0;
  std::map<Mem, int> ids;
  std::vector<Mem> mems;
  auto memory_of = [&](const Mem& m) {
    auto [it, inserted] = ids.emplace(m, s.memory_size());
    if (inserted) {
      mems.push_back(m);
      std::string name = memory_name(m.q);
      if (m.summary >= 0) name += "/" + std::to_string(m.summary) + "/" + out.gracious.at(m.summary).memory_names[m.inner];
      s.add_memory(name);
    }
    return it->second;
  };
  const StateVector q0 = eg.initial_states();
  const int m0 = memory_of({q0, -1, -1});
  s.init.assign(eg.arena.size(), m0);
  std::deque<std::pair<int, int>> queue;
  std::set<std::pair<int, int>> seen;
  auto visit = [&](int m, int v) {
    if (seen.insert({m, v}).second) queue.push_back({m, v});
  };
  for (int v = 0; v < eg.arena.size(); ++v) visit(m0, v);
  while (!queue.empty()) {
    auto [m, v] = queue.front();
    queue.pop_front();
    Mem mem = mems[m];
    const int x = eg.find(v, mem.q);
    if (x < 0) throw ConsistencyError("strategy memory left the extended game");
    const int si = out.map.index[x];
    const ObligingGame& g = out.games.at(si);
    const StrategyMachine& sigma = out.gracious.at(si);
    const int lx = g.local(x);
    if (mem.summary != si) mem = {mem.q, si, sigma.init[lx]};
    s.enforced[{m, v}] = out.map.enforce.value[x];
    s.summary.insert_or_assign({m, v}, all[si]);
    const int next = memory_of({eg.step(mem.q, v), si, sigma.next_memory(mem.inner, lx)});
    s.update[{m, v}] = next;
    if (eg.arena.owner(v) == 0) {
      const int ly = sigma.move(mem.inner, lx);
      if (ly == g.v_new) throw ConsistencyError("gracious strategy moves to the sink");
      const int w = eg.vertex[g.vertices[ly]];
      s.output[{m, v}] = w;
      visit(next, w);
    } else {
      for (int w : eg.arena.successors(v)) visit(next, w);
    }
  }
  out.strategy = std::move(s);
  return out;
}

AdaptiveReport check_strongly_adaptive(const ExtendedGame& eg, const SummaryMap& map, const StrategyMachine& s) {
  AdaptiveReport r = check_adaptive(eg, map.enforce, s);
  if (!r.violations.empty() && r.pairs == 0) return r;
  StrategyProduct p = strategy_product(eg, map.enforce, s);
  auto achievable = achievable_summaries(p);
  const auto& all = all_summaries();
  const int n = p.size();

  std::vector<VertexSet> enabling(kSummaries), evading(kSummaries);
  for (int i = 0; i < kSummaries; ++i) {
    const Summary& sm = all[i];
    if (sm.k() == 0) continue;
    VertexSet pre_shift = pre_set(eg.graph, map.exactly(left_shift(sm)));
    VertexSet pre_evade(eg.size(), false);
    for (const auto& e : evade_set(sm)) unite(pre_evade, pre_set(eg.graph, map.exactly(e)));
    VertexSet t1(n), t2(n);
    for (int j = 0; j < n; ++j) {
      t1[j] = pre_shift[p.states[j].second];
      t2[j] = pre_evade[p.states[j].second];
    }
    enabling[i] = reach_without_bad_moves(p, t1);
    evading[i] = reach_without_bad_moves(p, t2);
  }
  for (int j = 0; j < n; ++j) {
    const int x = p.states[j].second;
    const int si = map.index[x];
    const Summary& sm = all[si];
    const Summary got = uncovered_minimum(achievable[j]);
    const std::string where = pair_name(eg, s, p, j);
    if (got != sm) r.violations.push_back(where + ": strategy summary " + got.to_string() + " differs from " + sm.to_string());
    if (sm.k() > 0) {
      if (!enabling[si][j]) r.violations.push_back(where + ": no bad-move-free play offers the shifted summary");
      if (evading[si][j]) r.violations.push_back(where + ": a bad-move-free play offers an evaded summary");
    }
  }
  return r;
}

}  // namespace rltl
