#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rltl/adaptive.hpp"
#include "rltl/game.hpp"
#include "rltl/summaries.hpp"

namespace httplib {
class Server;
}

namespace rltl::service {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

struct Step {
  int vertex;
  int mover;  // owner of the previous vertex, -1 for the start
  TruthValue enforced;
  std::optional<Summary> summary;
  bool bad_move;
};

enum class StrategyKind { Adaptive, StronglyAdaptive };

struct Session {
  std::string id;
  StrategyKind kind = StrategyKind::Adaptive;
  bool step_mode = false;
  int step_limit = 64;
  int memory = 0;
  StateVector states{};  // automaton states before the current vertex
  std::vector<Step> history;
  std::mutex mutex;

  int current() const { return history.back().vertex; }
};

/// Live play against a synthesized player-0 strategy. The human plays
/// player 1; player-0 moves are taken from the strategy machine.
class GameService {
 public:
  explicit GameService(GameSpec game, std::optional<std::string> log_path = std::nullopt);

  Response get_game() const;
  Response create_session(const std::string& body);
  Response get_session(const std::string& id);
  Response move(const std::string& id, const std::string& body);
  /// One strategy move at a player-0 vertex (for sessions in step mode).
  Response step(const std::string& id);
  Response delete_session(const std::string& id);

  const ExtendedGame& extended_game() const { return eg_; }
  const StrategyMachine& adaptive() const { return adaptive_; }
  const StronglyAdaptiveResult& strongly_adaptive() const { return strong_; }

 private:
  std::shared_ptr<Session> find(const std::string& id);
  const StrategyMachine& machine(const Session& s) const;
  void append(Session& s, int to);
  int advance(Session& s);
  std::string session_json(const Session& s, std::size_t from = 0) const;
  void log(const Session& s, const Step& step);

  GameSpec game_;
  ExtendedGame eg_;
  EnforceMap enforce_;
  StrategyMachine adaptive_;
  StronglyAdaptiveResult strong_;
  std::optional<std::string> log_path_;

  std::mutex sessions_mutex_;
  std::mutex log_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  int next_id_ = 1;
};

/// Registers the HTTP routes of `service` on `server`.
void mount(httplib::Server& server, GameService& service);

/// Blocks serving HTTP on host:port.
bool serve(GameService& service, const std::string& host, int port);

}  // namespace rltl::service
