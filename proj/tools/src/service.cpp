#include "rltl_tools/service.hpp"

#include <fstream>

#include "httplib.h"
#include "json.hpp"
#include "rltl/error.hpp"
#include "rltl/io.hpp"

namespace rltl::service {
namespace {

using json = nlohmann::ordered_json;

Response error(int status, const std::string& message, json extra = json::object()) {
  extra["error"] = message;
  return {status, extra.dump()};
}

json summary_json(const std::optional<Summary>& s) {
  if (!s) return nullptr;
  return json::parse(summary_to_json(*s));
}

}  // namespace

GameService::GameService(GameSpec game, std::optional<std::string> log_path)
    : game_(std::move(game)), log_path_(std::move(log_path)) {
  eg_ = build_extended_game(game_.arena, game_.formula);
  enforce_ = enforce_regions(eg_, 0);
  adaptive_ = synthesize_adaptive(eg_, 0);
  strong_ = synthesize_strongly_adaptive(eg_);
}

Response GameService::get_game() const {
  json doc = json::parse(game_to_json(game_));
  return {200, doc.dump()};
}

const StrategyMachine& GameService::machine(const Session& s) const {
  return s.kind == StrategyKind::Adaptive ? adaptive_ : *strong_.strategy;
}

std::shared_ptr<Session> GameService::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void GameService::log(const Session& s, const Step& step) {
  if (!log_path_) return;
  json line;
  line["session"] = s.id;
  line["index"] = s.history.size() - 1;
  line["vertex"] = game_.arena.vertex(step.vertex).id;
  line["mover"] = step.mover < 0 ? json(nullptr) : json(step.mover);
  line["enforced"] = step.enforced.to_string();
  line["summary"] = summary_json(step.summary);
  line["bad_move"] = step.bad_move;
  std::lock_guard lock(log_mutex_);
  std::ofstream out(*log_path_, std::ios::app);
  out << line.dump() << "\n";
}

// Moves the token to `to`, updating memory and automaton states.
void GameService::append(Session& s, int to) {
  const int v = s.current();
  const StrategyMachine& m = machine(s);
  s.memory = m.next_memory(s.memory, v);
  s.states = eg_.step(s.states, v);
  const int x = eg_.find(to, s.states);
  if (x < 0) throw ConsistencyError("session left the extended game");
  Step step;
  step.vertex = to;
  step.mover = game_.arena.owner(v);
  step.enforced = enforce_.value[x];
  if (s.kind == StrategyKind::StronglyAdaptive) step.summary = strong_.map.at(x);
  const TruthValue before = s.history.back().enforced;
  step.bad_move = (step.mover == 1 && step.enforced > before) || (step.mover == 0 && step.enforced < before);
  s.history.push_back(step);
  log(s, step);
}

int GameService::advance(Session& s) {
  int moves = 0;
  while (moves < s.step_limit && game_.arena.owner(s.current()) == 0) {
    append(s, machine(s).move(s.memory, s.current()));
    ++moves;
  }
  return moves;
}

std::string GameService::session_json(const Session& s, std::size_t from) const {
  json doc;
  doc["id"] = s.id;
  doc["strategy"] = s.kind == StrategyKind::Adaptive ? "adaptive" : "strongly_adaptive";
  doc["step"] = s.step_mode;
  const int v = s.current();
  doc["current"] = game_.arena.vertex(v).id;
  doc["owner"] = game_.arena.owner(v);
  doc["enforced"] = s.history.back().enforced.to_string();
  doc["summary"] = summary_json(s.history.back().summary);
  doc["memory"] = machine(s).memory_names[s.memory];
  json legal = json::array();
  if (game_.arena.owner(v) == 1)
    for (int w : game_.arena.successors(v)) legal.push_back(game_.arena.vertex(w).id);
  doc["legal_moves"] = legal;
  json history = json::array();
  for (std::size_t i = from; i < s.history.size(); ++i) {
    const Step& st = s.history[i];
    history.push_back({{"vertex", game_.arena.vertex(st.vertex).id},
                       {"mover", st.mover < 0 ? json(nullptr) : json(st.mover)},
                       {"enforced", st.enforced.to_string()},
                       {"summary", summary_json(st.summary)},
                       {"bad_move", st.bad_move}});
  }
  doc[from == 0 ? "history" : "steps"] = history;
  return doc.dump();
}

Response GameService::create_session(const std::string& body) {
  json req;
  try {
    req = body.empty() ? json::object() : json::parse(body);
  } catch (const json::exception&) {
    return error(400, "malformed JSON body");
  }
  if (!req.is_object()) return error(400, "body must be a JSON object");
  auto s = std::make_shared<Session>();
  const std::string kind = req.value("strategy", "adaptive");
  if (kind == "adaptive") {
    s->kind = StrategyKind::Adaptive;
  } else if (kind == "strongly_adaptive") {
    s->kind = StrategyKind::StronglyAdaptive;
    if (!strong_.strategy) {
      json failing = json::array();
      for (const auto& f : strong_.failing) failing.push_back(json::parse(summary_to_json(f)));
      return error(422, "no strongly adaptive strategy exists for this game",
                   {{"verdict", "none"}, {"failing_summaries", failing}});
    }
  } else {
    return error(400, "strategy must be \"adaptive\" or \"strongly_adaptive\"");
  }
  s->step_mode = req.value("step", false);
  s->step_limit = req.value("step_limit", 64);
  int start = 0;
  if (req.contains("start_vertex")) {
    const auto& sv = req["start_vertex"];
    std::string id = sv.is_string() ? sv.get<std::string>() : sv.dump();
    try {
      start = game_.arena.index_of(id);
    } catch (const Error& e) {
      return error(400, e.what());
    }
  }
  const StrategyMachine& m = machine(*s);
  s->memory = m.init[start];
  s->states = eg_.initial_states();
  const int x = eg_.find(start, s->states);
  {
    std::lock_guard lock(sessions_mutex_);
    s->id = "s" + std::to_string(next_id_++);
    sessions_[s->id] = s;
  }
  std::lock_guard lock(s->mutex);
  Step first{start, -1, enforce_.value[x], std::nullopt, false};
  if (s->kind == StrategyKind::StronglyAdaptive) first.summary = strong_.map.at(x);
  s->history.push_back(first);
  log(*s, first);
  if (!s->step_mode) advance(*s);
  return {201, session_json(*s)};
}

Response GameService::get_session(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session '" + id + "'");
  std::lock_guard lock(s->mutex);
  return {200, session_json(*s)};
}

Response GameService::move(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown session '" + id + "'");
  json req;
  try {
    req = json::parse(body);
  } catch (const json::exception&) {
    return error(400, "malformed JSON body");
  }
  if (!req.is_object() || !req.contains("to")) return error(400, "body must name the target vertex in \"to\"");
  std::string to_id = req["to"].is_string() ? req["to"].get<std::string>() : req["to"].dump();
  std::lock_guard lock(s->mutex);
  const int v = s->current();
  if (game_.arena.owner(v) != 1) return error(409, "it is not player 1's turn");
  int to;
  try {
    to = game_.arena.index_of(to_id);
  } catch (const Error&) {
    return error(409, "unknown vertex '" + to_id + "'");
  }
  if (!game_.arena.has_edge(v, to))
    return error(409, "no edge " + game_.arena.vertex(v).id + " -> " + to_id);
  const std::size_t from = s->history.size();
  append(*s, to);
  if (!s->step_mode) advance(*s);
  json doc = json::parse(session_json(*s, from));
  const Step& moved = s->history[from];
  doc["bad_move"] = moved.bad_move;
  doc["enforced"] = moved.enforced.to_string();
  doc["summary"] = summary_json(moved.summary);
  return {200, doc.dump()};
}

Response GameService::step(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown session '" + id + "'");
  std::lock_guard lock(s->mutex);
  if (game_.arena.owner(s->current()) != 0) return error(409, "it is player 1's turn");
  const std::size_t from = s->history.size();
  append(*s, machine(*s).move(s->memory, s->current()));
  return {200, session_json(*s, from)};
}

Response GameService::delete_session(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  if (sessions_.erase(id) == 0) return error(404, "unknown session '" + id + "'");
  return {200, json({{"deleted", id}}).dump()};
}

void mount(httplib::Server& server, GameService& service) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Get("/game", [&service, reply](const httplib::Request&, httplib::Response& res) { reply(res, service.get_game()); });
  server.Post("/sessions", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.create_session(req.body));
  });
  server.Get(R"(/sessions/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get_session(req.matches[1]));
  });
  server.Delete(R"(/sessions/([^/]+))", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.delete_session(req.matches[1]));
  });
  server.Post(R"(/sessions/([^/]+)/move)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.move(req.matches[1], req.body));
  });
  server.Post(R"(/sessions/([^/]+)/step)", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.step(req.matches[1]));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    }
    res.status = 500;
    res.set_content(json({{"error", what}}).dump(), "application/json");
  });
}

bool serve(GameService& service, const std::string& host, int port) {
  httplib::Server server;
  mount(server, service);
  return server.listen(host, port);
}

}  // namespace rltl::service
