#include "rltl/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rltl/error.hpp"
#include "rltl/parser.hpp"

namespace rltl {
namespace {

using json = nlohmann::ordered_json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidGame(InvalidGame::Kind::Format, std::string("malformed JSON: ") + e.what());
  }
}

json letter_json(const Letter& l) { return json(std::vector<std::string>(l.begin(), l.end())); }

json alphabet_json(const Alphabet& a) {
  json out = json::array();
  for (std::uint32_t i = 0; i < a.size(); ++i) out.push_back(letter_json(a.letter(i)));
  return out;
}

json nondet_transitions(const NondetDelta& delta) {
  json out = json::array();
  for (std::size_t s = 0; s < delta.size(); ++s)
    for (std::size_t l = 0; l < delta[s].size(); ++l)
      for (int t : delta[s][l]) out.push_back({s, l, t});
  return out;
}

json states_json(int n) {
  json out = json::array();
  for (int s = 0; s < n; ++s) out.push_back(s);
  return out;
}

json summary_value(const Summary& s) {
  json out = json::array();
  for (int i = 0; i < 5; ++i) {
    auto v = s.slot(i);
    out.push_back(v ? json(v->to_string()) : json(nullptr));
  }
  return out;
}

Summary summary_from(const json& j) {
  if (!j.is_array() || j.size() != 5) throw Error("a summary is an array of five entries");
  std::vector<TruthValue> vals;
  bool ended = false;
  for (const auto& e : j) {
    if (e.is_null()) {
      ended = true;
      continue;
    }
    if (ended) throw Error("summary entries after null");
    vals.push_back(TruthValue::parse(e.get<std::string>()));
  }
  return Summary(vals);
}

}  // namespace

GameSpec parse_game(std::string_view json_text) {
  json doc = parse_document(json_text);
  auto fail = [](const std::string& what) { throw InvalidGame(InvalidGame::Kind::Format, what); };
  if (!doc.is_object()) fail("game file must be a JSON object");
  try {
    std::vector<std::string> props;
    for (const auto& p : doc.at("propositions")) props.push_back(p.get<std::string>());
    std::vector<ArenaVertex> vertices;
    std::map<std::string, int> ids;
    for (const auto& v : doc.at("vertices")) {
      ArenaVertex vx;
      vx.id = v.at("id").get<std::string>();
      vx.owner = v.at("owner").get<int>();
      for (const auto& p : v.at("label")) vx.label.insert(p.get<std::string>());
      ids.emplace(vx.id, static_cast<int>(vertices.size()));
      vertices.push_back(std::move(vx));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail("an edge is a pair of vertex ids");
      auto a = ids.find(e[0].get<std::string>());
      auto b = ids.find(e[1].get<std::string>());
      if (a == ids.end() || b == ids.end())
        throw InvalidGame(InvalidGame::Kind::DanglingEdge,
                          "edge " + e[0].get<std::string>() + " -> " + e[1].get<std::string>() + " names an unknown vertex");
      edges.push_back({a->second, b->second});
    }
    GameSpec g;
    g.arena = Arena(props, std::move(vertices), edges);
    if (doc.contains("formula")) {
      g.formula_text = doc.at("formula").get<std::string>();
      g.formula = parse_robust(g.formula_text);
      for (const auto& p : propositions(g.formula.root))
        if (!g.arena.alphabet().contains(p))
          throw InvalidGame(InvalidGame::Kind::UnknownProposition, "formula uses unknown proposition '" + p + "'");
    }
    return g;
  } catch (const json::exception& e) {
    fail(std::string("malformed game file: ") + e.what());
  }
  throw ConsistencyError("unreachable");
}

Arena parse_arena(std::string_view json_text) { return parse_game(json_text).arena; }

std::string game_to_json(const GameSpec& game) {
  const Arena& a = game.arena;
  json doc;
  doc["propositions"] = a.alphabet().propositions();
  json vertices = json::array();
  for (int v = 0; v < a.size(); ++v) {
    const auto& vx = a.vertex(v);
    vertices.push_back({{"id", vx.id}, {"owner", vx.owner}, {"label", letter_json(vx.label)}});
  }
  doc["vertices"] = vertices;
  json edges = json::array();
  for (auto [x, y] : a.edges()) edges.push_back({a.vertex(x).id, a.vertex(y).id});
  doc["edges"] = edges;
  doc["formula"] = game.formula_text;
  return doc.dump(2);
}

GameSpec load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string automaton_to_json(const Gnba& a) {
  json doc;
  doc["alphabet"] = alphabet_json(a.alphabet);
  doc["states"] = states_json(a.num_states);
  doc["initial"] = a.initial;
  doc["transitions"] = nondet_transitions(a.delta);
  json sets = json::array();
  for (const auto& set : a.accepting_sets) {
    json members = json::array();
    for (int s = 0; s < a.num_states; ++s)
      if (set[s]) members.push_back(s);
    sets.push_back(members);
  }
  doc["accepting_sets"] = sets;
  return doc.dump(2);
}

std::string automaton_to_json(const Nba& a) {
  json doc;
  doc["alphabet"] = alphabet_json(a.alphabet);
  doc["states"] = states_json(a.num_states);
  doc["initial"] = a.initial;
  doc["transitions"] = nondet_transitions(a.delta);
  json members = json::array();
  for (int s = 0; s < a.num_states; ++s)
    if (a.accepting[s]) members.push_back(s);
  doc["accepting_sets"] = json::array({members});
  return doc.dump(2);
}

std::string automaton_to_json(const Dpa& a) {
  json doc;
  doc["alphabet"] = alphabet_json(a.alphabet);
  doc["states"] = states_json(a.num_states);
  doc["initial"] = json::array({a.initial});
  json trans = json::array();
  for (int s = 0; s < a.num_states; ++s)
    for (std::size_t l = 0; l < a.delta[s].size(); ++l) trans.push_back({s, l, a.delta[s][l]});
  doc["transitions"] = trans;
  doc["priorities"] = a.priority;
  return doc.dump(2);
}

std::string summary_to_json(const Summary& s) { return summary_value(s).dump(); }

Summary parse_summary(std::string_view json_text) { return summary_from(json::parse(json_text)); }

std::vector<std::optional<std::string>> summary_slots(const Summary& s) {
  std::vector<std::optional<std::string>> out;
  for (int i = 0; i < 5; ++i) {
    auto v = s.slot(i);
    out.push_back(v ? std::optional<std::string>(v->to_string()) : std::nullopt);
  }
  return out;
}

std::string strategy_to_json(const StrategyMachine& s, const Arena& arena) {
  auto id = [&](int v) { return arena.vertex(v).id; };
  json doc;
  doc["player"] = s.player;
  doc["memory_states"] = s.memory_names;
  json init = json::object();
  for (int v = 0; v < arena.size(); ++v) init[id(v)] = s.memory_names[s.init[v]];
  doc["init"] = init;
  json update = json::array();
  for (const auto& [key, m] : s.update) update.push_back({s.memory_names[key.first], id(key.second), s.memory_names[m]});
  doc["update"] = update;
  json output = json::array();
  for (const auto& [key, w] : s.output) output.push_back({s.memory_names[key.first], id(key.second), id(w)});
  doc["output"] = output;
  json enforced = json::array();
  for (const auto& [key, b] : s.enforced) enforced.push_back({s.memory_names[key.first], id(key.second), b.to_string()});
  json summary = json::array();
  for (const auto& [key, sm] : s.summary) summary.push_back({s.memory_names[key.first], id(key.second), summary_value(sm)});
  doc["annotations"] = {{"enforced", enforced}, {"summary", summary}};
  return doc.dump(2);
}

StrategyMachine parse_strategy(std::string_view json_text, const Arena& arena) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidStrategy(std::string("malformed strategy file: ") + e.what());
  }
  try {
    StrategyMachine s;
    s.player = doc.value("player", 0);
    std::map<std::string, int> mem;
    for (const auto& m : doc.at("memory_states")) {
      std::string name = m.is_string() ? m.get<std::string>() : m.dump();
      mem.emplace(name, s.add_memory(name));
    }
    auto memory = [&](const json& j) {
      std::string name = j.is_string() ? j.get<std::string>() : j.dump();
      auto it = mem.find(name);
      if (it == mem.end()) throw InvalidStrategy("unknown memory state '" + name + "'");
      return it->second;
    };
    auto vertex = [&](const json& j) {
      try {
        return arena.index_of(j.get<std::string>());
      } catch (const NotAPath& e) {
        throw InvalidStrategy(e.what());
      }
    };
    s.init.assign(arena.size(), -1);
    for (const auto& [k, m] : doc.at("init").items()) s.init[vertex(json(k))] = memory(m);
    for (int v = 0; v < arena.size(); ++v)
      if (s.init[v] < 0) throw InvalidStrategy("init misses vertex '" + arena.vertex(v).id + "'");
    for (const auto& t : doc.at("update")) s.update[{memory(t.at(0)), vertex(t.at(1))}] = memory(t.at(2));
    for (const auto& t : doc.at("output")) s.output[{memory(t.at(0)), vertex(t.at(1))}] = vertex(t.at(2));
    if (doc.contains("annotations")) {
      const auto& ann = doc["annotations"];
      if (ann.contains("enforced"))
        for (const auto& t : ann["enforced"])
          s.enforced[{memory(t.at(0)), vertex(t.at(1))}] = TruthValue::parse(t.at(2).get<std::string>());
      if (ann.contains("summary"))
        for (const auto& t : ann["summary"]) s.summary.insert_or_assign({memory(t.at(0)), vertex(t.at(1))}, summary_from(t.at(2)));
    }
    s.validate(arena_successors(arena), arena_owners(arena));
    return s;
  } catch (const json::exception& e) {
    throw InvalidStrategy(std::string("malformed strategy file: ") + e.what());
  }
}

std::string arena_to_dot(const Arena& arena, const std::vector<std::pair<int, int>>& highlight) {
  std::ostringstream out;
  out << "digraph arena {\n";
  for (int v = 0; v < arena.size(); ++v) {
    const auto& vx = arena.vertex(v);
    std::string label;
    for (const auto& p : vx.label) label += (label.empty() ? "" : ",") + p;
    out << "  \"" << vx.id << "\" [shape=" << (vx.owner == 0 ? "circle" : "box") << ", xlabel=\"{" << label << "}\"];\n";
  }
  for (auto [a, b] : arena.edges()) {
    bool bold = std::find(highlight.begin(), highlight.end(), std::make_pair(a, b)) != highlight.end();
    out << "  \"" << arena.vertex(a).id << "\" -> \"" << arena.vertex(b).id << "\"" << (bold ? " [penwidth=3]" : "") << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string parity_game_to_dot(const ParityGame& g, const std::vector<std::string>& names, const VertexSet& winning0) {
  std::ostringstream out;
  out << "digraph game {\n";
  for (int v = 0; v < g.size(); ++v) {
    std::string name = names.empty() ? std::to_string(v) : names[v];
    out << "  n" << v << " [shape=" << (g.owner[v] == 0 ? "circle" : "box") << ", label=\"" << name << " : "
        << g.priority[v] << "\"";
    if (!winning0.empty()) out << ", style=filled, fillcolor=" << (winning0[v] ? "palegreen" : "lightpink");
    out << "];\n";
  }
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.succ[v]) out << "  n" << v << " -> n" << w << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rltl
