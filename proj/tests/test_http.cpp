// Copyright 2026 The Parley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <thread>

#include "parley/http_api.hpp"
#include "support.hpp"

namespace parley {
namespace {

using nlohmann::json;
using testing::res;

// A server on an ephemeral port for the lifetime of the fixture.
class Http : public ::testing::Test {
 protected:
  void SetUp() override {
    manager_ = std::make_unique<SessionManager>(res(), store_);
    web_dir_ = std::filesystem::temp_directory_path() / ("parley_web_" + std::to_string(::getpid()));
    std::filesystem::create_directories(web_dir_);
    std::ofstream(web_dir_ / "index.html") << "<html>parley</html>";
    api_ = std::make_unique<HttpApi>(*manager_, web_dir_.string());
    port_ = api_->bind_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { api_->listen_after_bind(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    for (int i = 0; i < 100 && !client_->Get("/api/personas"); ++i)
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  void TearDown() override {
    api_->stop();
    thread_.join();
    std::filesystem::remove_all(web_dir_);
  }

  std::pair<int, json> post(const std::string& path, const json& body) {
    auto r = client_->Post(path.c_str(), body.dump(), "application/json");
    if (!r) return {0, nullptr};
    return {r->status, json::parse(r->body)};
  }
  std::pair<int, json> get(const std::string& path) {
    auto r = client_->Get(path.c_str());
    if (!r) return {0, nullptr};
    return {r->status, json::parse(r->body, nullptr, false)};
  }

  DiscourseStore store_;
  std::unique_ptr<SessionManager> manager_;
  std::unique_ptr<HttpApi> api_;
  std::unique_ptr<httplib::Client> client_;
  std::filesystem::path web_dir_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(Http, Personas) {
  auto [status, body] = get("/api/personas");
  EXPECT_EQ(status, 200);
  ASSERT_EQ(body.size(), 5u);
  EXPECT_EQ(body[0]["id"], "christine");
  EXPECT_EQ(body[4]["pattern"], "hybrid");
  for (const auto& p : body) EXPECT_FALSE(p["avatar"].get<std::string>().empty());
}

TEST_F(Http, PersonaChat) {
  auto [s, created] = post("/api/sessions", {{"user_id", "carl"}, {"mode", {{"persona", "ingrid"}}},
                                             {"seed", 1}, {"clock", "2026-10-14T09:00:00"}});
  ASSERT_EQ(s, 201);
  const std::string id = created["session_id"];
  auto [s2, r] = post("/api/sessions/" + id + "/messages", {{"text", "you are very clever."}});
  EXPECT_EQ(s2, 200);
  EXPECT_EQ(r["reply"], "Yes, I am smart because I have a lot of knowledge in my brain. Are you clever?");
  EXPECT_EQ(r["kind"], "chat");
  EXPECT_FALSE(r.contains("report_id"));
  EXPECT_EQ(r["strategies"][0], "compliment");
  auto [s3, t] = get("/api/sessions/" + id + "/transcript");
  EXPECT_EQ(s3, 200);
  EXPECT_EQ(t["turns"].size(), 2u);
  EXPECT_EQ(t["persona_id"], "ingrid");
  EXPECT_EQ(t["turns"][1]["speaker"], "system");
}

TEST_F(Http, FlatModeFields) {
  auto [s, c] = post("/api/sessions", {{"user_id", "u"}, {"mode", "persona"}, {"persona_id", "emina"}});
  EXPECT_EQ(s, 201);
  auto [s2, c2] = post("/api/sessions", {{"user_id", "u"}, {"mode", "scenario"}, {"script_id", "job-interview"}});
  EXPECT_EQ(s2, 201);
  EXPECT_NE(c["session_id"], c2["session_id"]);
}

TEST_F(Http, InterviewToReport) {
  auto [s, created] = post("/api/sessions", {{"user_id", "petra"}, {"mode", {{"scenario", "job-interview"}}},
                                             {"seed", 15}, {"clock", "2026-10-14T15:00:00"}});
  ASSERT_EQ(s, 201);
  const std::string id = created["session_id"];
  EXPECT_EQ(get("/api/sessions/" + id + "/report").first, 409);
  json last;
  for (const auto& line : text::split(testing::corpus_file("interview/replay.setup"), '\n')) {
    if (!line.starts_with("> ")) continue;
    auto [st, r] = post("/api/sessions/" + id + "/messages", {{"text", line.substr(2)}});
    ASSERT_EQ(st, 200);
    last = r;
    if (r["kind"] == "finished") break;
    EXPECT_EQ(r["kind"], "question");
  }
  EXPECT_EQ(last["kind"], "finished");
  EXPECT_EQ(last["report_id"], id);
  auto [s2, report] = get("/api/sessions/" + id + "/report");
  EXPECT_EQ(s2, 200);
  ASSERT_EQ(report["flagged"].size(), 4u);
  EXPECT_EQ(report["flagged"][3]["sentence"], "I like play computer game.");
  EXPECT_EQ(report["flagged"][3]["kinds"][0], "grammar");
  EXPECT_EQ(report["metrics"]["turn_count"], 17);
  auto [s3, t] = get("/api/sessions/" + id + "/transcript");
  EXPECT_EQ(t["events"].size(), 17u);
  EXPECT_TRUE(t["closed"].get<bool>());
  EXPECT_EQ(post("/api/sessions/" + id + "/messages", {{"text", "hello"}}).first, 409);
}

TEST_F(Http, Profile) {
  auto [s, created] = post("/api/sessions", {{"user_id", "anna"}, {"mode", {{"persona", "christoph"}}}});
  const std::string id = created["session_id"];
  auto [s2, p] = post("/api/sessions/" + id + "/profile", {{"avatar", "christine"}, {"display_name", "Anna"}});
  EXPECT_EQ(s2, 200);
  EXPECT_EQ(p["avatar"], "christine");
  EXPECT_EQ(p["display_name"], "Anna");
  EXPECT_EQ(post("/api/sessions/" + id + "/profile", {{"avatar", "robot"}}).first, 400);
}

TEST_F(Http, Errors) {
  EXPECT_EQ(post("/api/sessions", {{"user_id", "u"}, {"mode", {{"persona", "bob"}}}}).first, 400);
  EXPECT_EQ(post("/api/sessions", {{"user_id", "u"}, {"mode", {{"scenario", "nope"}}}}).first, 400);
  EXPECT_EQ(post("/api/sessions", {{"user_id", "u"}, {"mode", "dance"}}).first, 400);
  EXPECT_EQ(post("/api/sessions", {{"user_id", "u"}, {"mode", "persona"}, {"persona_id", "emina"}, {"seed", -3}}).first, 400);
  auto [s, body] = post("/api/sessions/zzz/messages", {{"text", "hi"}});
  EXPECT_EQ(s, 404);
  EXPECT_EQ(body["error"], "UnknownSession");
  EXPECT_EQ(get("/api/sessions/zzz/transcript").first, 404);
  auto r = client_->Post("/api/sessions", "{not json", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  auto [s2, created] = post("/api/sessions", {{"user_id", "u"}, {"mode", {{"persona", "stephan"}}}});
  EXPECT_EQ(post("/api/sessions/" + created["session_id"].get<std::string>() + "/messages", {{"text", "  "}}).first, 400);
}

TEST_F(Http, StatusTable) {
  EXPECT_EQ(http_status(ErrorCode::kUnknownSession), 404);
  EXPECT_EQ(http_status(ErrorCode::kSessionClosed), 409);
  EXPECT_EQ(http_status(ErrorCode::kReportNotReady), 409);
  EXPECT_EQ(http_status(ErrorCode::kEmptyInput), 400);
  EXPECT_EQ(http_status(ErrorCode::kIoError), 500);
}

TEST_F(Http, StaticFiles) {
  auto r = client_->Get("/index.html");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(r->body, "<html>parley</html>");
}

}  // namespace
}  // namespace parley
