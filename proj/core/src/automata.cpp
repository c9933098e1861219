#include "rltl/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "rltl/error.hpp"
#include "rltl/graph.hpp"
#include "rltl/translate.hpp"

namespace rltl {
namespace {

std::uint32_t num_letters(const Alphabet& a) { return static_cast<std::uint32_t>(a.size()); }

// Keeps the states flagged in `keep`, renumbering them in order.
Nba restrict(const Nba& a, const std::vector<bool>& keep) {
  std::vector<int> id(a.num_states, -1);
  Nba r;
  r.alphabet = a.alphabet;
  for (int s = 0; s < a.num_states; ++s)
    if (keep[s]) id[s] = r.num_states++;
  r.delta.assign(r.num_states, std::vector<std::vector<int>>(num_letters(a.alphabet)));
  r.accepting.assign(r.num_states, false);
  for (int s = 0; s < a.num_states; ++s) {
    if (id[s] < 0) continue;
    r.accepting[id[s]] = a.accepting[s];
    for (std::uint32_t l = 0; l < num_letters(a.alphabet); ++l)
      for (int t : a.delta[s][l])
        if (id[t] >= 0) r.delta[id[s]][l].push_back(id[t]);
  }
  for (int s : a.initial)
    if (id[s] >= 0) r.initial.push_back(id[s]);
  return r;
}

LabeledGraph nba_graph(const Nba& a) {
  LabeledGraph g;
  g.succ.resize(a.num_states);
  for (int s = 0; s < a.num_states; ++s)
    for (std::uint32_t l = 0; l < num_letters(a.alphabet); ++l)
      for (int t : a.delta[s][l]) g.succ[s].push_back({t, static_cast<int>(l)});
  g.initial = a.initial;
  return g;
}

Nba empty_nba(const Alphabet& alphabet) {
  Nba r;
  r.alphabet = alphabet;
  r.num_states = 1;
  r.initial = {0};
  r.delta.assign(1, std::vector<std::vector<int>>(num_letters(alphabet)));
  r.accepting = {false};
  return r;
}

}  // namespace

Nba degeneralize(const Gnba& a) {
  // The counter only ranges over the sets that do not cover the current SCC
  // and restarts when the run changes SCC, which it does finitely often.
  const auto letters = num_letters(a.alphabet);
  LabeledGraph g;
  g.succ.resize(a.num_states);
  for (int q = 0; q < a.num_states; ++q)
    for (std::uint32_t l = 0; l < letters; ++l)
      for (int t : a.delta[q][l]) g.succ[q].push_back({t, static_cast<int>(l)});
  std::vector<int> scc(a.num_states, -1);
  std::vector<std::vector<int>> relevant;  // per SCC
  std::vector<bool> cyclic;
  for (const auto& comp : strongly_connected_components(g)) {
    const int c = static_cast<int>(relevant.size());
    for (int q : comp) scc[q] = c;
    std::vector<int> sets;
    for (std::size_t i = 0; i < a.accepting_sets.size(); ++i)
      if (std::any_of(comp.begin(), comp.end(), [&](int q) { return !a.accepting_sets[i][q]; }))
        sets.push_back(static_cast<int>(i));
    relevant.push_back(std::move(sets));
    cyclic.push_back(is_nontrivial(g, comp));
  }
  auto layers = [&](int q) { return std::max<int>(static_cast<int>(relevant[scc[q]].size()), 1); };
  auto in_layer = [&](int q, int i) {
    const auto& sets = relevant[scc[q]];
    return sets.empty() || a.accepting_sets[sets[i]][q];
  };
  Nba r;
  r.alphabet = a.alphabet;
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> states;
  std::deque<int> queue;
  auto id_of = [&](int q, int i) {
    auto [it, inserted] = ids.emplace(std::make_pair(q, i), static_cast<int>(states.size()));
    if (inserted) {
      states.push_back({q, i});
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (int q : a.initial) r.initial.push_back(id_of(q, 0));
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    auto [q, i] = states[s];
    int j = in_layer(q, i) ? (i + 1) % layers(q) : i;
    std::vector<std::vector<int>> row(letters);
    for (std::uint32_t l = 0; l < letters; ++l)
      for (int t : a.delta[q][l]) row[l].push_back(id_of(t, scc[t] == scc[q] ? j : 0));
    if (static_cast<int>(r.delta.size()) <= s) r.delta.resize(s + 1);
    r.delta[s] = std::move(row);
  }
  r.num_states = static_cast<int>(states.size());
  r.delta.resize(r.num_states, std::vector<std::vector<int>>(letters));
  r.accepting.resize(r.num_states);
  for (int s = 0; s < r.num_states; ++s) {
    auto [q, i] = states[s];
    r.accepting[s] = cyclic[scc[q]] && i == layers(q) - 1 && in_layer(q, i);
  }
  return r;
}

namespace {

// Reachable states from which an accepting cycle is reachable.
Nba trim(const Nba& a) {
  LabeledGraph g = nba_graph(a);
  auto reach = forward_reachable(g, a.initial);
  std::vector<bool> good(a.num_states, false);
  for (const auto& comp : strongly_connected_components(g, reach)) {
    if (!is_nontrivial(g, comp)) continue;
    if (std::any_of(comp.begin(), comp.end(), [&](int s) { return a.accepting[s]; }))
      for (int s : comp) good[s] = true;
  }
  auto productive = backward_reachable(g, good, reach);
  bool any = false;
  for (int s : a.initial) any = any || productive[s];
  if (!any) return empty_nba(a.alphabet);
  return restrict(a, productive);
}

// Merges the states of each class; classes are numbered by first occurrence.
Nba merge_classes(const Nba& r, const std::vector<int>& cls) {
  const auto letters = num_letters(r.alphabet);
  std::map<int, int> order;
  for (int s = 0; s < r.num_states; ++s) order.emplace(cls[s], static_cast<int>(order.size()));
  const int n = static_cast<int>(order.size());
  Nba q;
  q.alphabet = r.alphabet;
  q.num_states = n;
  q.delta.assign(n, std::vector<std::vector<int>>(letters));
  q.accepting.assign(n, false);
  for (int s = 0; s < r.num_states; ++s) {
    int c = order[cls[s]];
    q.accepting[c] = q.accepting[c] || r.accepting[s];
    for (std::uint32_t l = 0; l < letters; ++l)
      for (int t : r.delta[s][l]) q.delta[c][l].push_back(order[cls[t]]);
  }
  for (auto& row : q.delta)
    for (auto& succ : row) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
  std::set<int> init;
  for (int s : r.initial) init.insert(order[cls[s]]);
  q.initial.assign(init.begin(), init.end());
  return q;
}

// Bisimulation quotient by signature refinement.
Nba bisimulation_quotient(const Nba& r) {
  const auto letters = num_letters(r.alphabet);
  std::vector<int> cls(r.num_states);
  for (int s = 0; s < r.num_states; ++s) cls[s] = r.accepting[s] ? 1 : 0;
  int count = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(r.num_states);
    for (int s = 0; s < r.num_states; ++s) {
      std::vector<int> sig{cls[s]};
      for (std::uint32_t l = 0; l < letters; ++l) {
        std::set<int> succ;
        for (int t : r.delta[s][l]) succ.insert(cls[t]);
        sig.push_back(-1);
        sig.insert(sig.end(), succ.begin(), succ.end());
      }
      next[s] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size())).first->second;
    }
    int new_count = static_cast<int>(sig_ids.size());
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }
  return merge_classes(r, cls);
}

// sim[q][p]: p directly simulates q.
std::vector<std::vector<bool>> direct_simulation(const Nba& a) {
  const int n = a.num_states;
  const auto letters = num_letters(a.alphabet);
  std::vector<std::vector<bool>> sim(n, std::vector<bool>(n, false));
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p) sim[q][p] = !a.accepting[q] || a.accepting[p];
  for (bool changed = true; changed;) {
    changed = false;
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p) {
        if (!sim[q][p] || q == p) continue;
        bool ok = true;
        for (std::uint32_t l = 0; l < letters && ok; ++l)
          for (int t : a.delta[q][l]) {
            const auto& moves = a.delta[p][l];
            if (std::none_of(moves.begin(), moves.end(), [&](int u) { return sim[t][u]; })) {
              ok = false;
              break;
            }
          }
        if (!ok) sim[q][p] = false, changed = true;
      }
  }
  return sim;
}

// Drops successors strictly simulated by a sibling successor.
std::vector<int> prune_dominated(const std::vector<int>& succ, const std::vector<std::vector<bool>>& sim) {
  std::vector<int> out;
  for (int t : succ) {
    bool dominated = std::any_of(succ.begin(), succ.end(), [&](int u) { return u != t && sim[t][u] && !sim[u][t]; });
    if (!dominated) out.push_back(t);
  }
  return out;
}

// Quotient by simulation equivalence, then pruning of dominated transitions.
Nba simulation_reduce(const Nba& a) {
  auto sim = direct_simulation(a);
  std::vector<int> cls(a.num_states);
  for (int s = 0; s < a.num_states; ++s) {
    cls[s] = s;
    for (int t = 0; t < s; ++t)
      if (sim[s][t] && sim[t][s]) {
        cls[s] = cls[t];
        break;
      }
  }
  Nba q = merge_classes(a, cls);
  sim = direct_simulation(q);
  for (auto& row : q.delta)
    for (auto& succ : row) succ = prune_dominated(succ, sim);
  q.initial = prune_dominated(q.initial, sim);
  return q;
}

}  // namespace

Nba reduce(const Nba& a) {
  Nba r = bisimulation_quotient(trim(a));
  for (;;) {
    Nba next = trim(simulation_reduce(r));
    const bool same = next.num_states == r.num_states && next.delta == r.delta;
    r = std::move(next);
    if (same) return r;
  }
}

namespace {

// Safra tree with nodes stored oldest first; a node's index is its name.
struct SafraNode {
  int parent;
  std::vector<int> label;  // sorted NBA states
};
using Tree = std::vector<SafraNode>;

std::vector<int> encode(const Tree& t) {
  std::vector<int> out;
  for (const auto& n : t) {
    out.push_back(n.parent);
    out.push_back(static_cast<int>(n.label.size()));
    out.insert(out.end(), n.label.begin(), n.label.end());
  }
  return out;
}

class Determinizer {
 public:
  explicit Determinizer(const Nba& a) : a_(a), idle_(2 * (a.num_states + 1) + 1), scc_(a.num_states, -1) {
    // Below the root, runs are only followed inside one SCC, and only
    // accepting states of nontrivial SCCs open new nodes. Every run changes
    // SCC finitely often, so accepting runs are still tracked from some
    // point on.
    LabeledGraph g = nba_graph(a);
    cyclic_.assign(a.num_states, false);
    auto comps = strongly_connected_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const bool nontrivial = is_nontrivial(g, comps[c]);
      for (int q : comps[c]) {
        scc_[q] = static_cast<int>(c);
        cyclic_[q] = nontrivial;
      }
    }
  }

  Dpa run() {
    Dpa d;
    d.alphabet = a_.alphabet;
    const auto letters = num_letters(a_.alphabet);
    Tree init;
    std::vector<int> init_label(a_.initial.begin(), a_.initial.end());
    std::sort(init_label.begin(), init_label.end());
    if (!init_label.empty()) init.push_back({-1, init_label});
    d.initial = state_of(init, idle_);
    while (!queue_.empty()) {
      int s = queue_.front();
      queue_.pop_front();
      Tree t = trees_[s];
      std::vector<int> row(letters);
      for (std::uint32_t l = 0; l < letters; ++l) {
        if (t.empty()) {
          row[l] = state_of(t, 1);
          continue;
        }
        auto [next, priority] = step(t, l);
        row[l] = state_of(next, priority);
      }
      if (static_cast<int>(d.delta.size()) <= s) d.delta.resize(s + 1);
      d.delta[s] = std::move(row);
    }
    d.num_states = static_cast<int>(trees_.size());
    d.delta.resize(d.num_states);
    d.priority = priorities_;
    return d;
  }

 private:
  int state_of(const Tree& t, int priority) {
    auto key = encode(t);
    key.push_back(t.empty() ? 1 : priority);
    auto [it, inserted] = ids_.emplace(std::move(key), static_cast<int>(trees_.size()));
    if (inserted) {
      trees_.push_back(t);
      priorities_.push_back(t.empty() ? 1 : priority);
      queue_.push_back(it->second);
    }
    return it->second;
  }

  std::vector<int> post(const std::vector<int>& set, std::uint32_t letter, bool root) const {
    std::vector<int> out;
    for (int q : set)
      for (int t : a_.delta[q][letter])
        if (root || scc_[t] == scc_[q]) out.push_back(t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void restrict_node(Tree& t, const std::vector<std::vector<int>>& children, int v, const std::vector<int>& allowed) {
    std::vector<int> label;
    std::set_intersection(t[v].label.begin(), t[v].label.end(), allowed.begin(), allowed.end(), std::back_inserter(label));
    t[v].label = std::move(label);
    std::vector<int> free = t[v].label;
    for (int c : children[v]) {
      restrict_node(t, children, c, free);
      std::vector<int> rest;
      std::set_difference(free.begin(), free.end(), t[c].label.begin(), t[c].label.end(), std::back_inserter(rest));
      free = std::move(rest);
    }
  }

  std::pair<Tree, int> step(const Tree& old, std::uint32_t letter) {
    const int n_old = static_cast<int>(old.size());
    Tree t = old;
    // Spawn children for accepting states.
    for (int i = 0; i < n_old; ++i) {
      std::vector<int> acc;
      for (int q : old[i].label)
        if (a_.accepting[q] && cyclic_[q]) acc.push_back(q);
      if (!acc.empty()) t.push_back({i, std::move(acc)});
    }
    for (std::size_t i = 0; i < t.size(); ++i) t[i].label = post(t[i].label, letter, i == 0);
    const int n = static_cast<int>(t.size());
    std::vector<std::vector<int>> children(n);
    for (int i = 1; i < n; ++i) children[t[i].parent].push_back(i);
    // Horizontal merge: older siblings keep shared states.
    restrict_node(t, children, 0, t[0].label);
    std::vector<bool> removed(n, false), green(n, false);
    for (int i = 0; i < n; ++i)
      if (t[i].label.empty() || (i > 0 && removed[t[i].parent])) removed[i] = true;
    // Vertical merge.
    for (int i = 0; i < n; ++i) {
      if (removed[i]) continue;
      std::size_t covered = 0;
      bool has_child = false;
      for (int c : children[i]) {
        if (removed[c]) continue;
        has_child = true;
        covered += t[c].label.size();
      }
      if (has_child && covered == t[i].label.size()) {
        green[i] = true;
        std::vector<int> stack(children[i].begin(), children[i].end());
        while (!stack.empty()) {
          int c = stack.back();
          stack.pop_back();
          removed[c] = true;
          stack.insert(stack.end(), children[c].begin(), children[c].end());
        }
      }
    }
    int priority = idle_;
    for (int i = 0; i < n_old; ++i) {
      if (removed[i]) priority = std::min(priority, 2 * i + 1);
      else if (green[i]) priority = std::min(priority, 2 * i + 2);
    }
    if (removed[0]) return {Tree{}, 1};
    std::vector<int> rename(n, -1);
    Tree out;
    for (int i = 0; i < n; ++i) {
      if (removed[i]) continue;
      rename[i] = static_cast<int>(out.size());
      out.push_back({i == 0 ? -1 : rename[t[i].parent], t[i].label});
    }
    return {std::move(out), priority};
  }

  const Nba& a_;
  const int idle_;
  std::map<std::vector<int>, int> ids_;
  std::vector<Tree> trees_;
  std::vector<int> priorities_;
  std::deque<int> queue_;
  std::vector<int> scc_;
  std::vector<bool> cyclic_;
};

// Minimal priorities with the same accepted cycles: inside each SCC the
// states of least priority get the lowest value of the right parity and the
// rest is handled recursively. States on no cycle get 0.
void normalize_priorities(Dpa& d) {
  LabeledGraph g;
  g.succ.resize(d.num_states);
  for (int s = 0; s < d.num_states; ++s)
    for (int t : d.delta[s]) g.succ[s].push_back({t, 0});
  std::vector<int> out(d.num_states, 0);
  std::function<void(const std::vector<bool>&, int)> assign = [&](const std::vector<bool>& members, int base) {
    for (const auto& comp : strongly_connected_components(g, members)) {
      if (!is_nontrivial(g, comp)) {
        for (int s : comp) out[s] = base;
        continue;
      }
      int m = d.priority[comp.front()];
      for (int s : comp) m = std::min(m, d.priority[s]);
      const int value = base % 2 == m % 2 ? base : base + 1;
      std::vector<bool> rest(d.num_states, false);
      for (int s : comp) {
        if (d.priority[s] == m) out[s] = value;
        else rest[s] = true;
      }
      assign(rest, value);
    }
  };
  assign(std::vector<bool>(d.num_states, true), 0);
  d.priority = std::move(out);
}

// Merges states with equal priority whose successors agree class-wise
// (Moore-style partition refinement).
Dpa quotient(const Dpa& d) {
  const auto letters = num_letters(d.alphabet);
  std::vector<int> cls(d.num_states);
  for (int s = 0; s < d.num_states; ++s) cls[s] = d.priority[s];
  int count = -1;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(d.num_states);
    for (int s = 0; s < d.num_states; ++s) {
      std::vector<int> sig{cls[s]};
      for (std::uint32_t l = 0; l < letters; ++l) sig.push_back(cls[d.delta[s][l]]);
      next[s] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first->second;
    }
    int new_count = static_cast<int>(sig_ids.size());
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }
  // Renumber in breadth-first order from the initial state.
  std::vector<int> order(count, -1), repr;
  std::deque<int> queue;
  order[cls[d.initial]] = 0;
  repr.push_back(d.initial);
  queue.push_back(d.initial);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (std::uint32_t l = 0; l < letters; ++l) {
      int t = d.delta[s][l];
      if (order[cls[t]] < 0) {
        order[cls[t]] = static_cast<int>(repr.size());
        repr.push_back(t);
        queue.push_back(t);
      }
    }
  }
  Dpa q;
  q.alphabet = d.alphabet;
  q.num_states = static_cast<int>(repr.size());
  q.initial = 0;
  q.delta.assign(q.num_states, std::vector<int>(letters));
  q.priority.resize(q.num_states);
  for (int c = 0; c < q.num_states; ++c) {
    q.priority[c] = d.priority[repr[c]];
    for (std::uint32_t l = 0; l < letters; ++l) q.delta[c][l] = order[cls[d.delta[repr[c]][l]]];
  }
  return q;
}

}  // namespace

Dpa determinize(const Nba& a) {
  Determinizer det(a);
  Dpa d = det.run();
  for (;;) {
    normalize_priorities(d);
    Dpa q = quotient(d);
    if (q.num_states == d.num_states) return q;
    d = std::move(q);
  }
}

Dpa complement_dpa(const Dpa& a) {
  Dpa c = a;
  for (int& p : c.priority) ++p;
  return c;
}

Dpa universal_dpa(const Alphabet& alphabet) {
  Dpa d;
  d.alphabet = alphabet;
  d.num_states = 1;
  d.initial = 0;
  d.delta.assign(1, std::vector<int>(num_letters(alphabet), 0));
  d.priority = {0};
  return d;
}

namespace {

LabeledGraph word_product(const NondetDelta& delta, const std::vector<int>& initial, int states, const Alphabet& alphabet,
                          const LassoWord& w, std::vector<std::pair<int, int>>& index) {
  const int n = static_cast<int>(w.positions());
  std::vector<std::uint32_t> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = alphabet.letter_index(w.at(i));
  LabeledGraph g;
  std::map<std::pair<int, int>, int> ids;
  std::deque<int> queue;
  auto id_of = [&](int pos, int q) {
    auto [it, inserted] = ids.emplace(std::make_pair(pos, q), g.size());
    if (inserted) {
      g.add_vertex();
      index.push_back({pos, q});
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (int q : initial) g.initial.push_back(id_of(0, q));
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto [pos, q] = index[v];
    int next = static_cast<int>(w.successor(pos));
    for (int t : delta[q][letters[pos]]) {
      int u = id_of(next, t);
      g.succ[v].push_back({u, static_cast<int>(letters[pos])});
    }
  }
  (void)states;
  return g;
}

LassoWord to_word(const Alphabet& alphabet, const LassoPath& path) {
  LassoWord w;
  for (int l : path.prefix_labels) w.stem.push_back(alphabet.letter(static_cast<std::uint32_t>(l)));
  for (int l : path.cycle_labels) w.loop.push_back(alphabet.letter(static_cast<std::uint32_t>(l)));
  return w;
}

void require_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw AlphabetMismatch("automata over different alphabets");
}

// Product of an NBA (or DPA viewed as one) with a DPA.
struct PairProduct {
  LabeledGraph graph;
  std::vector<std::pair<int, int>> states;
};

PairProduct product(const NondetDelta& left, const std::vector<int>& left_init, const Dpa& right) {
  PairProduct p;
  std::map<std::pair<int, int>, int> ids;
  std::deque<int> queue;
  auto id_of = [&](int a, int b) {
    auto [it, inserted] = ids.emplace(std::make_pair(a, b), p.graph.size());
    if (inserted) {
      p.graph.add_vertex();
      p.states.push_back({a, b});
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (int q : left_init) p.graph.initial.push_back(id_of(q, right.initial));
  const auto letters = num_letters(right.alphabet);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto [a, b] = p.states[v];
    for (std::uint32_t l = 0; l < letters; ++l) {
      int rb = right.step(b, l);
      for (int ta : left[a][l]) {
        int u = id_of(ta, rb);
        p.graph.succ[v].push_back({u, static_cast<int>(l)});
      }
    }
  }
  return p;
}

NondetDelta as_nondet(const Dpa& d) {
  NondetDelta out(d.num_states);
  for (int s = 0; s < d.num_states; ++s)
    for (int t : d.delta[s]) out[s].push_back({t});
  return out;
}

}  // namespace

bool lasso_accepts(const Gnba& a, const LassoWord& w) {
  std::vector<std::pair<int, int>> index;
  LabeledGraph g = word_product(a.delta, a.initial, a.num_states, a.alphabet, w, index);
  LassoCondition cond;
  for (const auto& set : a.accepting_sets) {
    std::vector<bool> b(g.size());
    for (int v = 0; v < g.size(); ++v) b[v] = set[index[v].second];
    cond.buchi.push_back(std::move(b));
  }
  return find_accepting_lasso(g, cond).has_value();
}

bool lasso_accepts(const Nba& a, const LassoWord& w) {
  std::vector<std::pair<int, int>> index;
  LabeledGraph g = word_product(a.delta, a.initial, a.num_states, a.alphabet, w, index);
  LassoCondition cond;
  std::vector<bool> b(g.size());
  for (int v = 0; v < g.size(); ++v) b[v] = a.accepting[index[v].second];
  cond.buchi.push_back(std::move(b));
  return find_accepting_lasso(g, cond).has_value();
}

bool lasso_accepts(const Dpa& a, const LassoWord& w) {
  const std::size_t n = w.positions();
  std::map<std::pair<std::size_t, int>, std::size_t> seen;
  std::vector<int> run;
  std::size_t pos = 0;
  int q = a.initial;
  for (;;) {
    auto key = std::make_pair(pos, q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      int best = a.priority[run[it->second]];
      for (std::size_t i = it->second; i < run.size(); ++i) best = std::min(best, a.priority[run[i]]);
      return best % 2 == 0;
    }
    seen.emplace(key, run.size());
    run.push_back(q);
    q = a.step(q, a.alphabet.letter_index(w.at(pos)));
    pos = w.successor(pos);
    (void)n;
  }
}

EquivalenceResult check_inclusion(const Nba& sub, const Dpa& super) {
  require_same(sub.alphabet, super.alphabet);
  Dpa comp = complement_dpa(super);
  PairProduct p = product(sub.delta, sub.initial, comp);
  LassoCondition cond;
  std::vector<bool> b(p.graph.size());
  std::vector<int> omega(p.graph.size());
  for (int v = 0; v < p.graph.size(); ++v) {
    b[v] = sub.accepting[p.states[v].first];
    omega[v] = comp.priority[p.states[v].second];
  }
  cond.buchi.push_back(std::move(b));
  cond.parity.push_back(std::move(omega));
  auto path = find_accepting_lasso(p.graph, cond);
  if (!path) return {};
  return {false, to_word(sub.alphabet, *path)};
}

EquivalenceResult check_inclusion(const Dpa& sub, const Dpa& super) {
  require_same(sub.alphabet, super.alphabet);
  Dpa comp = complement_dpa(super);
  PairProduct p = product(as_nondet(sub), {sub.initial}, comp);
  LassoCondition cond;
  std::vector<int> a(p.graph.size()), b(p.graph.size());
  for (int v = 0; v < p.graph.size(); ++v) {
    a[v] = sub.priority[p.states[v].first];
    b[v] = comp.priority[p.states[v].second];
  }
  cond.parity = {std::move(a), std::move(b)};
  auto path = find_accepting_lasso(p.graph, cond);
  if (!path) return {};
  return {false, to_word(sub.alphabet, *path)};
}

EquivalenceResult check_equivalence(const Nba& nba, const Dpa& dpa, const Nba& nba_complement) {
  require_same(nba_complement.alphabet, dpa.alphabet);
  auto forward = check_inclusion(nba, dpa);
  if (!forward.equivalent) return forward;
  // L(dpa) ∩ L(nba_complement) must be empty.
  PairProduct p = product(nba_complement.delta, nba_complement.initial, dpa);
  LassoCondition cond;
  std::vector<bool> b(p.graph.size());
  std::vector<int> omega(p.graph.size());
  for (int v = 0; v < p.graph.size(); ++v) {
    b[v] = nba_complement.accepting[p.states[v].first];
    omega[v] = dpa.priority[p.states[v].second];
  }
  cond.buchi.push_back(std::move(b));
  cond.parity.push_back(std::move(omega));
  auto path = find_accepting_lasso(p.graph, cond);
  if (!path) return {};
  return {false, to_word(dpa.alphabet, *path)};
}

std::optional<LassoWord> find_accepted_word(const Nba& a) {
  LabeledGraph g = nba_graph(a);
  LassoCondition cond;
  cond.buchi.push_back(a.accepting);
  auto path = find_accepting_lasso(g, cond);
  if (!path) return std::nullopt;
  return to_word(a.alphabet, *path);
}

ThresholdPipeline build_threshold_pipeline(const RobustFormula& formula, TruthValue b, const Alphabet& alphabet) {
  ThresholdPipeline p;
  p.ltl = threshold_to_ltl(formula, b);
  p.gnba = ltl_to_gnba(simplify(p.ltl), alphabet);
  p.nba = reduce(degeneralize(p.gnba));
  p.dpa = determinize(p.nba);
  return p;
}

Dpa build_threshold_dpa(const RobustFormula& formula, TruthValue b, const Alphabet& alphabet) {
  if (b == TruthValue::bottom()) return universal_dpa(alphabet);
  return build_threshold_pipeline(formula, b, alphabet).dpa;
}

}  // namespace rltl
