#pragma once

#include <string>
#include <vector>

#include "rltl/game.hpp"
#include "rltl/io.hpp"

namespace rltl::testing {

inline std::string game_path(const std::string& name) { return std::string(RLTL_GAMES_DIR) + "/" + name; }

inline GameSpec load_example(const std::string& name) { return load_game_file(game_path(name + ".json")); }

inline const std::vector<std::string> kExampleGames = {"bad_move", "second_chance", "no_strongly_adaptive"};

/// Positional player-0 machine from "from->to" pairs given by vertex id.
inline StrategyMachine positional_by_id(const Arena& a, const std::vector<std::pair<std::string, std::string>>& moves) {
  std::vector<int> choice(a.size(), -1);
  for (const auto& [from, to] : moves) choice[a.index_of(from)] = a.index_of(to);
  return positional_machine(0, choice, arena_successors(a), arena_owners(a));
}

}  // namespace rltl::testing
