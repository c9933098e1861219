#pragma once

#include <random>
#include <string>
#include <vector>

#include "rltl/formula.hpp"
#include "rltl/game.hpp"
#include "rltl/semantics.hpp"

namespace rltl::testing {

/// Random formula over `props` with nesting depth at most `depth`.
NodePtr random_formula(std::mt19937& rng, const std::vector<std::string>& props, int depth);

/// Random lasso with stem length <= max_stem and loop length in 1..max_loop.
LassoWord random_lasso(std::mt19937& rng, const std::vector<std::string>& props, int max_stem, int max_loop);

/// Random parity game without terminal vertices.
ParityGame random_parity_game(std::mt19937& rng, int max_vertices, int max_priorities);

/// Random labelled arena without terminal vertices.
Arena random_arena(std::mt19937& rng, const std::vector<std::string>& props, int max_vertices);

}  // namespace rltl::testing
