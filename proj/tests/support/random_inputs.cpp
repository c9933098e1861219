#include "random_inputs.hpp"

#include <algorithm>

namespace rltl::testing {
namespace {

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Letter random_letter(std::mt19937& rng, const std::vector<std::string>& props) {
  Letter l;
  for (const auto& p : props)
    if (uniform(rng, 0, 1)) l.insert(p);
  return l;
}

}  // namespace

NodePtr random_formula(std::mt19937& rng, const std::vector<std::string>& props, int depth) {
  if (depth == 0 || uniform(rng, 0, 5) == 0) {
    if (uniform(rng, 0, 9) == 0) return constant(uniform(rng, 0, 1) == 1);
    return atom(props[uniform(rng, 0, static_cast<int>(props.size()) - 1)]);
  }
  static constexpr Op kUnary[] = {Op::Not, Op::Next, Op::Always, Op::Eventually};
  static constexpr Op kBinary[] = {Op::And, Op::Or, Op::Implies, Op::Until, Op::Release};
  if (uniform(rng, 0, 1)) return unary(kUnary[uniform(rng, 0, 3)], random_formula(rng, props, depth - 1));
  NodePtr lhs = random_formula(rng, props, depth - 1);
  NodePtr rhs = random_formula(rng, props, depth - 1);
  return binary(kBinary[uniform(rng, 0, 4)], lhs, rhs);
}

LassoWord random_lasso(std::mt19937& rng, const std::vector<std::string>& props, int max_stem, int max_loop) {
  LassoWord w;
  const int stem = uniform(rng, 0, max_stem);
  const int loop = uniform(rng, 1, max_loop);
  for (int i = 0; i < stem; ++i) w.stem.push_back(random_letter(rng, props));
  for (int i = 0; i < loop; ++i) w.loop.push_back(random_letter(rng, props));
  w.alphabet = {props.begin(), props.end()};
  return w;
}

ParityGame random_parity_game(std::mt19937& rng, int max_vertices, int max_priorities) {
  ParityGame g;
  const int n = uniform(rng, 1, max_vertices);
  const int d = uniform(rng, 1, max_priorities);
  for (int v = 0; v < n; ++v) {
    g.owner.push_back(uniform(rng, 0, 1));
    g.priority.push_back(uniform(rng, 0, d - 1));
    std::vector<int> succ;
    const int out = uniform(rng, 1, std::min(n, 3));
    while (static_cast<int>(succ.size()) < out) {
      const int w = uniform(rng, 0, n - 1);
      if (std::find(succ.begin(), succ.end(), w) == succ.end()) succ.push_back(w);
    }
    std::sort(succ.begin(), succ.end());
    g.succ.push_back(succ);
  }
  return g;
}

Arena random_arena(std::mt19937& rng, const std::vector<std::string>& props, int max_vertices) {
  const int n = uniform(rng, 1, max_vertices);
  std::vector<ArenaVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    vertices.push_back({std::to_string(v), uniform(rng, 0, 1), random_letter(rng, props)});
    std::vector<int> succ;
    const int out = uniform(rng, 1, std::min(n, 3));
    while (static_cast<int>(succ.size()) < out) {
      const int w = uniform(rng, 0, n - 1);
      if (std::find(succ.begin(), succ.end(), w) == succ.end()) succ.push_back(w);
    }
    for (int w : succ) edges.push_back({v, w});
  }
  return Arena(props, std::move(vertices), edges);
}

}  // namespace rltl::testing
