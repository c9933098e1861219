// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/random_inputs.hpp"
#include "rltl/adaptive.hpp"
#include "rltl/automata.hpp"
#include "rltl/error.hpp"
#include "rltl/parser.hpp"
#include "rltl/semantics.hpp"
#include "rltl/summaries.hpp"
#include "rltl/translate.hpp"

using namespace rltl;
using namespace rltl::testing;

namespace {

// Time limits, in seconds.
constexpr double kLadderLimit = 1;
constexpr double kBadMoveLimit = 5;
constexpr double kSecondChanceLimit = 5;
constexpr double kSummaryLimit = 10;
constexpr double kNoStrongLimit = 10;
constexpr double kOracleALimit = 600;
constexpr double kOracleBLimit = 300;

// Sizes of the randomized suites.
constexpr int kOracleAFormulas = 500;
constexpr int kOracleALassos = 20;
constexpr int kOracleBGames = 2000;
constexpr int kRandomGames = 300;
constexpr int kRandomGameDepth = 3;

struct Failure {
  std::ostringstream text;
  int count = 0;
  template <class T>
  void add(const T& what) {
    if (count++ < 5) text << (count > 1 ? "; " : "") << what;
  }
};

struct Criterion {
  std::string name;
  double limit;  // seconds, 0 for none
  std::function<void(Failure&)> body;
};

TruthValue tv(const char* s) { return TruthValue::parse(s); }
Summary smry(std::initializer_list<const char*> values) {
  std::vector<TruthValue> v;
  for (const char* s : values) v.push_back(tv(s));
  return Summary(v);
}

std::set<std::pair<std::string, std::string>> outputs(const StrategyMachine& s, const Arena& a) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [m, v] : s.reachable_pairs(arena_successors(a), arena_owners(a)))
    if (auto w = s.try_move(m, v)) out.insert({a.vertex(v).id, a.vertex(*w).id});
  return out;
}

// Random games shared by suites C, D, E and the strongly adaptive certificate.
struct RandomGame {
  std::string description;
  ExtendedGame eg;
};

const std::vector<RandomGame>& random_games() {
  static const std::vector<RandomGame> games = [] {
    std::vector<RandomGame> out;
    std::mt19937 rng(20240611);
    for (int i = 0; i < kRandomGames; ++i) {
      std::vector<std::string> props = (rng() % 2) ? std::vector<std::string>{"p"} : std::vector<std::string>{"p", "q"};
      Arena a = random_arena(rng, props, 5);
      RobustFormula f{random_formula(rng, props, kRandomGameDepth)};
      std::ostringstream d;
      d << "game " << i << " (" << a.size() << " vertices, " << f.to_string() << ")";
      out.push_back({d.str(), build_extended_game(a, f)});
    }
    return out;
  }();
  return games;
}

void value_ladder(Failure& f) {
  const RobustFormula phi = parse_robust("G p");
  const std::pair<const char*, const char*> cases[] = {
      {"| {p}", "1111"}, {"{} | {p}", "0111"}, {"| {p} {}", "0011"}, {"{p} | {}", "0001"}, {"| {}", "0000"}};
  for (auto [word, expected] : cases) {
    TruthValue got = evaluate(parse_lasso(word), phi);
    if (got != tv(expected)) f.add(std::string(word) + " gave " + got.to_string());
  }
}

void bad_move(Failure& f) {
  GameSpec g = load_example("bad_move");
  ExtendedGame eg = build_extended_game(g.arena, g.formula);
  EnforceMap enf = enforce_regions(eg, 0);
  auto at = [&](const char* p) { return enf.value[eg.track(g.arena.parse_path(p))]; };
  if (at("0 1 4") != tv("0111")) f.add("014 enforces " + at("0 1 4").to_string());
  if (at("0 1 2") != tv("0011")) f.add("012 enforces " + at("0 1 2").to_string());
  MonitorReport r = monitor(eg, g.arena.parse_path("0 1 4"));
  if (r.bad_moves != std::vector<BadMove>{{2, 1}}) f.add("monitor did not flag exactly the move 01 -> 4");
}

void second_chance(Failure& f) {
  GameSpec g = load_example("second_chance");
  ExtendedGame eg = build_extended_game(g.arena, g.formula);
  EnforceMap enf = enforce_regions(eg, 0);
  TruthValue v0 = enf.value[eg.find(0, eg.initial_states())];
  if (v0 != tv("0011")) f.add("vertex 0 enforces " + v0.to_string());
  StrategyMachine s = synthesize_adaptive(eg, 0);
  auto plays = consistent_plays(eg, s, g.arena.parse_path("0 1 2"));
  if (plays.empty()) f.add("no consistent play after 012");
  for (const auto& w : plays)
    if (TruthValue v = evaluate(w, g.formula); v != tv("1111")) f.add("play " + w.to_string() + " has value " + v.to_string());
}

void bad_move_summaries(Failure& f) {
  GameSpec g = load_example("bad_move");
  const Arena& a = g.arena;
  ExtendedGame eg = build_extended_game(a, g.formula);
  StrategyMachine s1 = positional_by_id(a, {{"0", "1"}, {"3", "2"}, {"4", "5"}});
  StrategyMachine s2 = positional_by_id(a, {{"0", "2"}, {"3", "2"}, {"4", "5"}});
  auto check = [&](const char* name, const StrategyMachine& s, const char* prefix, const Summary& expected) {
    Summary got = strategy_summary(eg, s, a.parse_path(prefix));
    if (got != expected) f.add(std::string(name) + " at " + prefix + " gave " + got.to_string());
  };
  check("sigma1", s1, "0", smry({"0011", "0111"}));
  check("sigma2", s2, "0", smry({"0011"}));
  check("sigma1", s1, "0 1 4", smry({"0111"}));
  StronglyAdaptiveResult r = synthesize_strongly_adaptive(eg);
  if (!r.strategy) return f.add("no strongly adaptive strategy");
  const std::set<std::pair<std::string, std::string>> expected = {{"0", "1"}, {"3", "2"}, {"4", "5"}};
  if (outputs(*r.strategy, a) != expected) f.add("strongly adaptive outputs differ from 0->1, 3->2, 4->5");
}

void no_strongly_adaptive(Failure& f) {
  GameSpec g = load_example("no_strongly_adaptive");
  ExtendedGame eg = build_extended_game(g.arena, g.formula);
  StronglyAdaptiveResult r = synthesize_strongly_adaptive(eg);
  if (r.strategy) f.add("a strongly adaptive strategy was returned");
  StrategyMachine s = synthesize_adaptive(eg, 0);
  EnforceMap enf = enforce_regions(eg, 0);
  std::vector<int> prefix = {0};
  for (int n = 0; n < 4; ++n) {
    const int x = eg.track(prefix);
    const auto key = std::make_pair(s.memory_after(prefix), prefix.back());
    if (enf.value[x] != tv("0011")) f.add("enforced value after " + std::to_string(n) + " rounds is " + enf.value[x].to_string());
    if (s.enforced.count(key) && s.enforced.at(key) != tv("0011")) f.add("strategy annotation differs from 0011");
    prefix.push_back(1);
    prefix.push_back(0);
  }
  if (!adaptive_violations(eg, enf, s).empty()) f.add("adaptive strategy fails its certificate");
}

void oracle_a(Failure& f) {
  std::mt19937 rng(7);
  int formulas = 0, lassos = 0;
  while (formulas < kOracleAFormulas) {
    std::vector<std::string> props = (rng() % 3 == 0) ? std::vector<std::string>{"p"} : std::vector<std::string>{"p", "q"};
    RobustFormula phi{random_formula(rng, props, 3)};
    if (depth(phi.root) > 3) return f.add("generator exceeded depth 3");
    ++formulas;
    Alphabet alphabet(props);
    std::vector<LassoWord> words;
    std::vector<TruthValue> values;
    for (int i = 0; i < kOracleALassos; ++i) {
      words.push_back(random_lasso(rng, props, 3, 4));
      values.push_back(evaluate(words.back(), phi));
    }
    for (TruthValue b : kNontrivialThresholds) {
      ThresholdPipeline p = build_threshold_pipeline(phi, b, alphabet);
      for (std::size_t i = 0; i < words.size(); ++i) {
        ++lassos;
        if (lasso_accepts(p.dpa, words[i]) != (values[i] >= b))
          f.add(phi.to_string() + " at " + b.to_string() + " on " + words[i].to_string());
      }
      LtlFormula negated{build::lnot(p.ltl.root)};
      Nba complement = reduce(degeneralize(ltl_to_gnba(negated, alphabet)));
      if (!check_equivalence(p.nba, p.dpa, complement).equivalent)
        f.add("DPA not equivalent to NBA for " + phi.to_string() + " at " + b.to_string());
    }
  }
  std::cout << "    " << formulas << " formulas, " << lassos << " lasso checks\n";
}

void oracle_b(Failure& f) {
  std::mt19937 rng(11);
  for (int i = 0; i < kOracleBGames; ++i) {
    ParityGame g = random_parity_game(rng, 7, 4);
    ParitySolution sol = solve_parity(g);
    std::vector<bool> expected = brute_force_win0(g);
    for (int v = 0; v < g.size(); ++v) {
      if (sol.win[0][v] != expected[v]) f.add("game " + std::to_string(i) + " vertex " + std::to_string(v));
      if (sol.win[0][v] == sol.win[1][v]) f.add("regions of game " + std::to_string(i) + " do not partition");
    }
    if (!positional_strategy_wins(g, 0, sol.strategy[0], sol.win[0]) ||
        !positional_strategy_wins(g, 1, sol.strategy[1], sol.win[1]))
      f.add("strategy of game " + std::to_string(i) + " does not win its region");
  }
}

void suite_c(Failure& f) {
  for (const auto& [name, eg] : random_games()) {
    EnforceMap enf = enforce_regions(eg, 0);
    EnforceMap dual = enforce_regions(eg, 1);
    if (enf.value != dual.value) f.add(name + ": player maps disagree");
    StrategyMachine s = synthesize_adaptive(eg, 0);
    for (const auto& v : adaptive_violations(eg, enf, s)) f.add(name + ": " + v);
    AdaptiveReport r = check_adaptive(eg, enf, s);
    for (const auto& v : r.violations) f.add(name + ": " + v);
    const int bad = max_value_increases(eg, enf, s);
    if (bad > 4 || r.max_bad_moves > 4) f.add(name + ": " + std::to_string(bad) + " bad moves");
  }
}

void suite_d(Failure& f) {
  for (const auto& [name, eg] : random_games()) {
    try {
      SummaryMap map = compute_summary_map(eg);
      EnforceMap enf = enforce_regions(eg, 0);
      for (int x = 0; x < eg.size(); ++x) {
        int regions = 0;
        for (const auto& region : map.exact) regions += region[x] ? 1 : 0;
        if (regions != 1) f.add(name + ": " + eg.vertex_name(x) + " in " + std::to_string(regions) + " regions");
        else if (map.at(x).first() != enf.value[x]) f.add(name + ": first slot of " + eg.vertex_name(x));
      }
      for (const auto& v : check_summary_structure(eg, map)) f.add(name + ": " + v);
    } catch (const ConsistencyError& e) {
      f.add(name + ": " + e.what());
    }
  }
  // Lattice laws against a direct lexicographic comparison with blanks lowest.
  const auto& all = all_summaries();
  if (all.size() != 31) f.add("expected 31 summaries");
  auto key = [](const Summary& s) {
    std::vector<int> k(5, -1);
    for (int i = 0; i < s.length(); ++i) k[i] = s.values()[i].rank();
    return k;
  };
  for (const auto& a : all) {
    if (a.k() > 0 && !(left_shift(a) > a)) f.add("shift does not increase " + a.to_string());
    for (const auto& b : all) {
      const bool less = key(a) < key(b);
      if ((a < b) != less) f.add("order of " + a.to_string() + " and " + b.to_string());
      if (!(a < b) && !(b < a) && !(a == b)) f.add("totality fails");
      if (a < b && b < a) f.add("antisymmetry fails");
      if (is_strict_prefix(a, b) && !(a < b)) f.add(a.to_string() + " prefix but not less");
      for (const auto& c : all)
        if (a < b && b < c && !(a < c)) f.add("transitivity fails");
    }
  }
}

void suite_e(Failure& f) {
  int games = 0, compared = 0, found = 0;
  for (const auto& [name, eg] : random_games()) {
    SummaryMap map;
    try {
      map = compute_summary_map(eg);
    } catch (const ConsistencyError& e) {
      f.add(name + ": " + e.what());
      continue;
    }
    for (std::size_t i = 0; i < all_summaries().size(); ++i) {
      if (std::none_of(map.exact[i].begin(), map.exact[i].end(), [](bool b) { return b; })) continue;
      ObligingGame g = build_obliging_game(eg, map, all_summaries()[i]);
      ++games;
      auto s = solve_obliging(g);
      if (s) ++found;
      if (s && !verify_gracious(g, *s)) f.add(name + ": unverified gracious strategy for " + g.summary.to_string());
      BoundedSearch b = solve_obliging_bounded(g);
      if (b.status == BoundedSearch::Status::TooLarge) continue;
      ++compared;
      if (b.status == BoundedSearch::Status::Found && !s) f.add(name + ": fallback finds a strategy for " + g.summary.to_string());
      if (b.status == BoundedSearch::Status::Exhausted && s) f.add(name + ": fallback finds none for " + g.summary.to_string());
    }
  }
  std::cout << "    " << games << " obliging games, " << found << " gracious, " << compared << " cross-checked\n";
  if (compared == 0) f.add("no game was small enough for the fallback");
}

void strongly_adaptive_certificate(Failure& f) {
  int certified = 0;
  auto certify = [&](const std::string& name, const ExtendedGame& eg) {
    try {
      StronglyAdaptiveResult r = synthesize_strongly_adaptive(eg);
      if (!r.strategy) return;
      ++certified;
      for (const auto& v : check_strongly_adaptive(eg, r.map, *r.strategy).violations) f.add(name + ": " + v);
      for (const auto& v : adaptive_violations(eg, r.map.enforce, *r.strategy)) f.add(name + ": " + v);
    } catch (const ConsistencyError& e) {
      f.add(name + ": " + e.what());
    }
  };
  for (const std::string& name : kExampleGames) {
    GameSpec g = load_example(name);
    certify(name, build_extended_game(g.arena, g.formula));
  }
  for (const auto& [name, eg] : random_games()) certify(name, eg);
  std::cout << "    " << certified << " strategies certified\n";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"value ladder of G p", kLadderLimit, value_ladder},
      {"bad_move game: enforced values and bad move", kBadMoveLimit, bad_move},
      {"second_chance game: enforced value and adaptive play", kSecondChanceLimit, second_chance},
      {"bad_move game: strategy summaries and strongly adaptive strategy", kSummaryLimit, bad_move_summaries},
      {"no_strongly_adaptive game: no strongly adaptive strategy", kNoStrongLimit, no_strongly_adaptive},
      {"oracle A: automata agree with the semantics", kOracleALimit, oracle_a},
      {"oracle B: parity solver agrees with enumeration", kOracleBLimit, oracle_b},
      {"suite C: adaptive certificate", 0, suite_c},
      {"suite D: summary structure and lattice laws", 0, suite_d},
      {"suite E: gracious strategies", 0, suite_e},
      {"strongly adaptive certificate", 0, strongly_adaptive_certificate},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failure f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.add(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) f.add("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s");
    std::cout << (f.count == 0 ? "PASS " : "FAIL ") << c.name << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)";
    if (f.count) std::cout << ": " << f.count << " problem(s): " << f.text.str();
    std::cout << std::endl;
    failed += f.count ? 1 : 0;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
