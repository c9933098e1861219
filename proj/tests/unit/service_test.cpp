#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "json.hpp"
#include "rltl_tools/service.hpp"

using namespace rltl;
using json = nlohmann::json;

namespace {
json body(const service::Response& r) { return json::parse(r.body); }
}  // namespace

TEST(Service, GameDocument) {
  service::GameService svc(rltl::testing::load_example("bad_move"));
  auto r = svc.get_game();
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["vertices"].size(), 6u);
}

TEST(Service, BadMoveIsReported) {
  service::GameService svc(rltl::testing::load_example("bad_move"));
  auto created = svc.create_session(R"({"strategy":"strongly_adaptive"})");
  ASSERT_EQ(created.status, 201) << created.body;
  json s = body(created);
  EXPECT_EQ(s["current"], "1");  // player 0 moved 0 -> 1
  EXPECT_EQ(s["summary"], json::parse(R"(["0011","0111",null,null,null])"));
  const std::string id = s["id"];
  auto moved = svc.move(id, R"({"to":"4"})");
  ASSERT_EQ(moved.status, 200) << moved.body;
  json m = body(moved);
  EXPECT_TRUE(m["bad_move"].get<bool>());
  EXPECT_EQ(m["enforced"], "0111");
  EXPECT_EQ(m["current"], "5");
}

TEST(Service, GoodMoveIsNotFlagged) {
  service::GameService svc(rltl::testing::load_example("bad_move"));
  const std::string id = body(svc.create_session("{}"))["id"];
  json m = body(svc.move(id, R"({"to":"2"})"));
  EXPECT_FALSE(m["bad_move"].get<bool>());
  EXPECT_EQ(m["enforced"], "0011");
}

TEST(Service, StepMode) {
  service::GameService svc(rltl::testing::load_example("bad_move"));
  json s = body(svc.create_session(R"({"step":true})"));
  EXPECT_EQ(s["current"], "0");
  const std::string id = s["id"];
  auto stepped = svc.step(id);
  ASSERT_EQ(stepped.status, 200);
  EXPECT_EQ(body(svc.get_session(id))["current"], "1");
  EXPECT_EQ(svc.step(id).status, 409);
}

TEST(Service, RefusesStronglyAdaptiveWhenNoneExists) {
  service::GameService svc(rltl::testing::load_example("no_strongly_adaptive"));
  auto r = svc.create_session(R"({"strategy":"strongly_adaptive"})");
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(body(r)["verdict"], "none");
  EXPECT_EQ(svc.create_session(R"({"strategy":"adaptive"})").status, 201);
}

TEST(Service, ClientErrors) {
  service::GameService svc(rltl::testing::load_example("bad_move"));
  EXPECT_EQ(svc.get_session("nope").status, 404);
  EXPECT_EQ(svc.move("nope", R"({"to":"1"})").status, 404);
  EXPECT_EQ(svc.create_session("{").status, 400);
  EXPECT_EQ(svc.create_session(R"({"strategy":"other"})").status, 400);
  const std::string id = body(svc.create_session("{}"))["id"];
  EXPECT_EQ(svc.move(id, R"({"to":"5"})").status, 409);
  EXPECT_EQ(svc.move(id, R"({"to":"zz"})").status, 409);
  EXPECT_EQ(svc.move(id, "{}").status, 400);
  EXPECT_EQ(svc.delete_session(id).status, 200);
  EXPECT_EQ(svc.delete_session(id).status, 404);
}
