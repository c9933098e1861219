#include "rltl/strategy.hpp"

#include <deque>
#include <set>

#include "rltl/error.hpp"

namespace rltl {

int StrategyMachine::add_memory(std::string name) {
  memory_names.push_back(std::move(name));
  return memory_size() - 1;
}

int StrategyMachine::next_memory(int m, int v) const {
  auto it = update.find({m, v});
  if (it == update.end()) throw InvalidStrategy("update undefined at memory " + std::to_string(m) + ", vertex " + std::to_string(v));
  return it->second;
}

int StrategyMachine::memory_after(const std::vector<int>& path) const {
  if (path.empty()) throw NotAPath("empty path");
  int m = init.at(path.front());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) m = next_memory(m, path[i]);
  return m;
}

int StrategyMachine::move(int m, int v) const {
  auto r = try_move(m, v);
  if (!r) throw InvalidStrategy("output undefined at memory " + std::to_string(m) + ", vertex " + std::to_string(v));
  return *r;
}

std::optional<int> StrategyMachine::try_move(int m, int v) const {
  auto it = output.find({m, v});
  if (it == output.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> StrategyMachine::reachable_pairs(const std::vector<std::vector<int>>& succ,
                                                                  const std::vector<int>& owner) const {
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> queue;
  std::vector<std::pair<int, int>> out;
  auto visit = [&](int m, int v) {
    if (seen.insert({m, v}).second) {
      queue.push_back({m, v});
      out.push_back({m, v});
    }
  };
  for (int v = 0; v < static_cast<int>(succ.size()); ++v) visit(init.at(v), v);
  while (!queue.empty()) {
    auto [m, v] = queue.front();
    queue.pop_front();
    int m2 = next_memory(m, v);
    if (owner[v] == player) {
      visit(m2, move(m, v));
    } else {
      for (int w : succ[v]) visit(m2, w);
    }
  }
  return out;
}

void StrategyMachine::validate(const std::vector<std::vector<int>>& succ, const std::vector<int>& owner) const {
  if (init.size() != succ.size()) throw InvalidStrategy("init must cover every vertex");
  for (int m : init)
    if (m < 0 || m >= memory_size()) throw InvalidStrategy("init refers to an unknown memory state");
  for (const auto& [key, m] : update)
    if (m < 0 || m >= memory_size()) throw InvalidStrategy("update refers to an unknown memory state");
  for (const auto& [key, w] : output) {
    int v = key.second;
    if (v < 0 || v >= static_cast<int>(succ.size()) || owner[v] != player)
      throw InvalidStrategy("output defined at a vertex the strategy does not own");
    if (!std::binary_search(succ[v].begin(), succ[v].end(), w))
      throw InvalidStrategy("output " + std::to_string(v) + " -> " + std::to_string(w) + " is not an edge");
  }
  reachable_pairs(succ, owner);
}

StrategyMachine positional_machine(int player, const std::vector<int>& choice, const std::vector<std::vector<int>>& succ,
                                   const std::vector<int>& owner) {
  StrategyMachine s;
  s.player = player;
  s.add_memory("m0");
  const int n = static_cast<int>(succ.size());
  s.init.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    s.update[{0, v}] = 0;
    if (owner[v] == player) s.output[{0, v}] = choice[v] >= 0 ? choice[v] : succ[v].front();
  }
  return s;
}

std::vector<std::vector<int>> arena_successors(const Arena& arena) {
  std::vector<std::vector<int>> out(arena.size());
  for (int v = 0; v < arena.size(); ++v) out[v] = arena.successors(v);
  return out;
}

std::vector<int> arena_owners(const Arena& arena) {
  std::vector<int> out(arena.size());
  for (int v = 0; v < arena.size(); ++v) out[v] = arena.owner(v);
  return out;
}

}  // namespace rltl
