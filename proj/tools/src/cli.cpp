#include "rltl_tools/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rltl/adaptive.hpp"
#include "rltl/error.hpp"
#include "rltl/io.hpp"
#include "rltl/parser.hpp"
#include "rltl/summaries.hpp"
#include "rltl/translate.hpp"
#include "rltl_tools/service.hpp"

namespace rltl::cli {
namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

GameSpec load_with_formula(const std::string& path) {
  GameSpec g = load_game_file(path);
  if (g.formula_text.empty()) throw Error("game file '" + path + "' has no formula");
  return g;
}

std::vector<TruthValue> thresholds(const std::string& text) {
  if (text.empty()) return {kNontrivialThresholds.begin(), kNontrivialThresholds.end()};
  TruthValue b = TruthValue::parse(text);
  if (b == TruthValue::bottom()) throw Error("threshold must be above 0000");
  return {b};
}

std::vector<std::pair<int, int>> strategy_edges(const StrategyMachine& s, const Arena& arena) {
  std::vector<std::pair<int, int>> edges;
  for (auto [m, v] : s.reachable_pairs(arena_successors(arena), arena_owners(arena))) {
    auto w = s.try_move(m, v);
    if (w && std::find(edges.begin(), edges.end(), std::make_pair(v, *w)) == edges.end()) edges.push_back({v, *w});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void print_outputs(std::ostream& out, const StrategyMachine& s, const Arena& arena) {
  out << "moves:";
  for (auto [v, w] : strategy_edges(s, arena)) out << " " << arena.vertex(v).id << "->" << arena.vertex(w).id;
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Games with robust LTL objectives: evaluation, automata, adaptive strategies and summaries", "rltl"};
  app.require_subcommand(1);

  std::string formula, word, game_path, threshold, stage = "dpa", output, prefix, strategy_path, host = "127.0.0.1",
                                                   log_path;
  int player = 0, port = 8080;
  bool dot = false, strongly = false;

  auto* eval = app.add_subcommand("eval", "Value of a robust formula on a lasso word");
  eval->add_option("--formula", formula, "Robust formula")->required();
  eval->add_option("--word", word, "Lasso word such as \"{p} {} | {p,q}\"")->required();

  auto* translate = app.add_subcommand("translate", "LTL formula for one threshold");
  translate->add_option("--formula", formula)->required();
  translate->add_option("--threshold", threshold)->required();

  auto* automaton = app.add_subcommand("automaton", "Automaton for one threshold as JSON");
  automaton->add_option("--formula", formula)->required();
  automaton->add_option("--threshold", threshold)->required();
  automaton->add_option("--stage", stage)->check(CLI::IsMember({"gnba", "nba", "dpa"}));

  auto* solve = app.add_subcommand("solve", "Winning regions of the threshold games");
  solve->add_option("--game", game_path)->required()->check(CLI::ExistingFile);
  solve->add_option("--threshold", threshold);
  solve->add_flag("--dot", dot, "Print Graphviz graphs instead of text");

  auto* adaptive = app.add_subcommand("adaptive", "Synthesize an adaptive strategy");
  adaptive->add_option("--game", game_path)->required()->check(CLI::ExistingFile);
  adaptive->add_option("--player", player)->check(CLI::IsMember({0, 1}));
  adaptive->add_option("-o,--output", output, "Strategy file to write")->required();
  adaptive->add_flag("--dot", dot, "Also print the arena with strategy moves in bold");

  auto* monitor_cmd = app.add_subcommand("monitor", "Enforced values and bad moves along a prefix");
  monitor_cmd->add_option("--game", game_path)->required()->check(CLI::ExistingFile);
  monitor_cmd->add_option("--prefix", prefix, "Vertex ids separated by spaces")->required();

  auto* summaries = app.add_subcommand("summaries", "Summary of every vertex of the extended game");
  summaries->add_option("--game", game_path)->required()->check(CLI::ExistingFile);

  auto* strong = app.add_subcommand("strongly-adaptive", "Decide and synthesize a strongly adaptive strategy");
  strong->add_option("--game", game_path)->required()->check(CLI::ExistingFile);
  strong->add_option("-o,--output", output, "Strategy file to write")->required();

  auto* verify = app.add_subcommand("verify", "Check a player-0 strategy file");
  verify->add_option("--game", game_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--strategy", strategy_path)->required()->check(CLI::ExistingFile);
  verify->add_flag("--strongly", strongly, "Also check strong adaptivity");

  auto* serve = app.add_subcommand("serve", "HTTP service for live play");
  serve->add_option("--game", game_path)->required()->check(CLI::ExistingFile);
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--log", log_path, "Append one JSON line per step to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (eval->parsed()) {
      out << evaluate(parse_lasso(word), parse_robust(formula)).to_string() << "\n";
    } else if (translate->parsed()) {
      out << threshold_to_ltl(parse_robust(formula), TruthValue::parse(threshold)).to_string() << "\n";
    } else if (automaton->parsed()) {
      RobustFormula f = parse_robust(formula);
      auto props = propositions(f.root);
      Alphabet alphabet({props.begin(), props.end()});
      TruthValue b = TruthValue::parse(threshold);
      if (b == TruthValue::bottom()) {
        out << automaton_to_json(universal_dpa(alphabet)) << "\n";
      } else {
        ThresholdPipeline p = build_threshold_pipeline(f, b, alphabet);
        if (stage == "gnba") out << automaton_to_json(p.gnba) << "\n";
        if (stage == "nba") out << automaton_to_json(p.nba) << "\n";
        if (stage == "dpa") out << automaton_to_json(p.dpa) << "\n";
      }
    } else if (solve->parsed()) {
      GameSpec g = load_with_formula(game_path);
      const Arena& a = g.arena;
      for (TruthValue b : thresholds(threshold)) {
        const Dpa dpa = build_threshold_dpa(g.formula, b, a.alphabet());
        ProductGame pg = product(a, dpa);
        ParitySolution sol = solve_parity(pg.game);
        if (dot) {
          std::vector<std::string> names;
          for (auto [v, q] : pg.states) names.push_back(a.vertex(v).id + "|" + std::to_string(q));
          out << "// threshold " << b.to_string() << "\n" << parity_game_to_dot(pg.game, names, sol.win[0]);
          continue;
        }
        out << "threshold " << b.to_string() << ":";
        for (int v = 0; v < a.size(); ++v)
          out << " " << a.vertex(v).id << "=" << (sol.win[0][pg.find(v, dpa.initial)] ? "P0" : "P1");
        out << "\n";
      }
    } else if (adaptive->parsed()) {
      GameSpec g = load_with_formula(game_path);
      ExtendedGame eg = build_extended_game(g.arena, g.formula);
      StrategyMachine s = synthesize_adaptive(eg, player);
      write_file(output, strategy_to_json(s, g.arena) + "\n");
      EnforceMap enf = enforce_regions(eg, player);
      out << "player " << player << " strategy with " << s.memory_size() << " memory states written to " << output << "\n";
      out << (player == 0 ? "enforced (at least):" : "enforced (at most):");
      for (int v = 0; v < g.arena.size(); ++v)
        out << " " << g.arena.vertex(v).id << "=" << enf.value[eg.find(v, eg.initial_states())].to_string();
      out << "\n";
      if (dot) out << arena_to_dot(g.arena, strategy_edges(s, g.arena));
    } else if (monitor_cmd->parsed()) {
      GameSpec g = load_with_formula(game_path);
      ExtendedGame eg = build_extended_game(g.arena, g.formula);
      MonitorReport r = monitor(eg, g.arena.parse_path(prefix));
      for (std::size_t i = 0; i < r.enforced.size(); ++i) out << (i ? " " : "") << r.enforced[i].to_string();
      out << "\n";
      for (const auto& b : r.bad_moves) out << "bad move by player " << b.player << " at position " << b.position << "\n";
    } else if (summaries->parsed()) {
      GameSpec g = load_with_formula(game_path);
      ExtendedGame eg = build_extended_game(g.arena, g.formula);
      SummaryMap map = compute_summary_map(eg);
      json doc = json::object();
      for (int x = 0; x < eg.size(); ++x) doc[eg.vertex_name(x)] = json::parse(summary_to_json(map.at(x)));
      out << doc.dump(2) << "\n";
    } else if (strong->parsed()) {
      GameSpec g = load_with_formula(game_path);
      ExtendedGame eg = build_extended_game(g.arena, g.formula);
      StronglyAdaptiveResult r = synthesize_strongly_adaptive(eg);
      if (!r.strategy) {
        out << "none: no strongly adaptive strategy exists";
        for (const auto& s : r.failing) out << "; no gracious strategy for summary " << summary_to_json(s);
        out << "\n";
        return kNoStrategy;
      }
      write_file(output, strategy_to_json(*r.strategy, g.arena) + "\n");
      out << "strongly adaptive strategy with " << r.strategy->memory_size() << " memory states written to " << output
          << "\n";
      print_outputs(out, *r.strategy, g.arena);
    } else if (verify->parsed()) {
      GameSpec g = load_with_formula(game_path);
      ExtendedGame eg = build_extended_game(g.arena, g.formula);
      StrategyMachine s = parse_strategy(read_file(strategy_path), g.arena);
      if (s.player != 0) throw Error("only player-0 strategies can be verified");
      AdaptiveReport r;
      if (strongly) {
        r = check_strongly_adaptive(eg, compute_summary_map(eg), s);
      } else {
        r = check_adaptive(eg, enforce_regions(eg, 0), s);
      }
      for (const auto& v : r.violations) out << "violation: " << v << "\n";
      if (!r.violations.empty()) return kError;
      out << "ok: " << r.pairs << " reachable pairs checked" << (strongly ? " (strongly adaptive)" : " (adaptive)") << "\n";
    } else if (serve->parsed()) {
      GameSpec g = load_with_formula(game_path);
      service::GameService svc(std::move(g), log_path.empty() ? std::nullopt : std::optional<std::string>(log_path));
      out << "listening on http://" << host << ":" << port << std::endl;
      if (!service::serve(svc, host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kOk;
}

}  // namespace rltl::cli
