#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rltl/adaptive.hpp"
#include "rltl/automata.hpp"
#include "rltl/game.hpp"
#include "rltl/strategy.hpp"
#include "rltl/summary.hpp"

namespace rltl {

/// Game file: {"propositions", "vertices": [{"id","owner","label"}], "edges", "formula"}.
GameSpec parse_game(std::string_view json_text);
Arena parse_arena(std::string_view json_text);
std::string game_to_json(const GameSpec& game);
GameSpec load_game_file(const std::string& path);

std::string automaton_to_json(const Gnba& a);
std::string automaton_to_json(const Nba& a);
std::string automaton_to_json(const Dpa& a);

/// Summary as a five-element array with null for ⊥.
std::string summary_to_json(const Summary& s);
Summary parse_summary(std::string_view json_text);
/// Slot strings ("0011") with nullopt for ⊥.
std::vector<std::optional<std::string>> summary_slots(const Summary& s);

/// Strategy file with vertices named by arena ids.
std::string strategy_to_json(const StrategyMachine& s, const Arena& arena);
StrategyMachine parse_strategy(std::string_view json_text, const Arena& arena);

/// Graphviz rendering of the arena; highlighted edges are drawn bold.
std::string arena_to_dot(const Arena& arena, const std::vector<std::pair<int, int>>& highlight = {});
/// Graphviz rendering of a parity game; vertex labels come from `names` when given.
std::string parity_game_to_dot(const ParityGame& g, const std::vector<std::string>& names = {},
                               const VertexSet& winning0 = {});

}  // namespace rltl
