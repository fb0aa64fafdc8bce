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

#include "parley/http_api.hpp"

#include <httplib.h>

#include <json.hpp>

#include "parley/error.hpp"

namespace parley {
namespace {

using nlohmann::json;

json to_json(const PersonaDescriptor& d) {
  return {{"id", std::string(to_string(d.id))},
          {"display_name", d.display_name},
          {"pattern", d.pattern},
          {"description", d.description},
          {"avatar", d.avatar}};
}

json to_json(const FeedbackReport& r) {
  json flagged = json::array();
  for (const auto& f : r.flagged) {
    json kinds = json::array();
    for (auto k : f.kinds) kinds.push_back(std::string(to_string(k)));
    json spans = json::array();
    for (const auto& s : f.spans)
      spans.push_back({{"kind", std::string(to_string(s.kind))}, {"begin", s.begin}, {"end", s.end}});
    flagged.push_back({{"sentence", f.sentence}, {"kinds", kinds}, {"spans", spans}});
  }
  return {{"preamble", r.preamble},
          {"flagged", flagged},
          {"metrics", {{"turn_count", r.metrics.turn_count}, {"mean_user_tokens", r.metrics.mean_user_tokens}}},
          {"text", r.render()}};
}

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, ErrorCode code, const std::string& message) {
  send(res, http_status(code), {{"error", std::string(to_string(code))}, {"message", message}});
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorCode::kInvalidArgument, "request body must be a JSON object");
  return j;
}

std::optional<std::string> opt_string(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_string()) throw Error(ErrorCode::kInvalidArgument, std::string(key) + " must be a string");
  return j[key].get<std::string>();
}

SessionSpec spec_from(const json& j) {
  SessionSpec spec;
  spec.user_id = opt_string(j, "user_id").value_or("");
  std::optional<std::string> persona = opt_string(j, "persona_id");
  std::optional<std::string> script = opt_string(j, "script_id");
  std::string mode;
  if (j.contains("mode") && j["mode"].is_object()) {
    // {"mode": {"persona": "emina"}} or {"mode": {"scenario": "job-interview"}}
    const json& m = j["mode"];
    if (m.contains("persona")) {
      mode = "persona";
      persona = opt_string(m, "persona");
    } else if (m.contains("scenario")) {
      mode = "scenario";
      script = opt_string(m, "scenario");
    }
  } else {
    mode = opt_string(j, "mode").value_or(persona ? "persona" : "scenario");
  }
  if (mode == "persona") {
    spec.mode = SessionMode::kPersona;
    spec.persona = persona_from_string(persona.value_or(""));
  } else if (mode == "scenario") {
    spec.mode = SessionMode::kScenario;
    spec.script_id = script.value_or("");
  } else {
    throw Error(ErrorCode::kInvalidArgument, "mode must be persona or scenario");
  }
  if (j.contains("seed") && !j["seed"].is_null()) {
    if (!j["seed"].is_number_unsigned()) throw Error(ErrorCode::kInvalidArgument, "seed must be a non-negative integer");
    spec.seed = j["seed"].get<uint32_t>();
  }
  if (auto c = opt_string(j, "clock")) spec.clock = parse_iso8601(*c);
  return spec;
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession: return 404;
    case ErrorCode::kSessionClosed:
    case ErrorCode::kReportNotReady: return 409;
    case ErrorCode::kEmptyInput:
    case ErrorCode::kUnknownPersona:
    case ErrorCode::kUnknownScript:
    case ErrorCode::kInvalidArgument: return 400;
    default: return 500;
  }
}

struct HttpApi::Impl {
  SessionManager& manager;
  httplib::Server server;

  explicit Impl(SessionManager& m) : manager(m) {}

  template <class F>
  httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
      try {
        f(req, res);
      } catch (const Error& e) {
        send_error(res, e.code(), e.what());
      } catch (const std::exception& e) {
        send(res, 500, {{"error", "Internal"}, {"message", e.what()}});
      }
    };
  }
};

HttpApi::HttpApi(SessionManager& manager, const std::string& web_dir)
    : impl_(std::make_unique<Impl>(manager)) {
  auto& srv = impl_->server;
  SessionManager& m = manager;

  srv.Get("/api/personas", impl_->guarded([&m](const httplib::Request&, httplib::Response& res) {
    json out = json::array();
    for (const auto& d : m.list_personas()) out.push_back(to_json(d));
    send(res, 200, out);
  }));

  srv.Post("/api/sessions", impl_->guarded([&m](const httplib::Request& req, httplib::Response& res) {
    const std::string id = m.create_session(spec_from(body_of(req)));
    send(res, 201, {{"session_id", id}});
  }));

  srv.Post(R"(/api/sessions/([^/]+)/messages)",
           impl_->guarded([&m](const httplib::Request& req, httplib::Response& res) {
             const json body = body_of(req);
             const MessageReply r = m.post_message(req.matches[1], opt_string(body, "text").value_or(""));
             json out = {{"reply", r.reply}, {"kind", std::string(to_string(r.kind))}};
             if (r.report_id) out["report_id"] = *r.report_id;
             if (r.meta) {
               json strategies = json::array();
               for (auto s : r.meta->strategies) strategies.push_back(std::string(to_string(s)));
               out["strategies"] = strategies;
             }
             send(res, 200, out);
           }));

  srv.Post(R"(/api/sessions/([^/]+)/profile)",
           impl_->guarded([&m](const httplib::Request& req, httplib::Response& res) {
             const json body = body_of(req);
             m.update_profile(req.matches[1], opt_string(body, "display_name"), opt_string(body, "avatar"));
             const UserProfile p = m.store().profile(m.info(req.matches[1]).user_id);
             send(res, 200, {{"user_id", p.user_id},
                             {"display_name", p.display_name ? json(*p.display_name) : json(nullptr)},
                             {"avatar", p.avatar ? json(*p.avatar) : json(nullptr)}});
           }));

  srv.Get(R"(/api/sessions/([^/]+)/report)",
          impl_->guarded([&m](const httplib::Request& req, httplib::Response& res) {
            send(res, 200, to_json(m.get_report(req.matches[1])));
          }));

  srv.Get(R"(/api/sessions/([^/]+)/transcript)",
          impl_->guarded([&m](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const SessionInfo info = m.info(id);
            json turns = json::array();
            for (const auto& t : m.get_transcript(id)) {
              turns.push_back({{"index", t.index},
                               {"speaker", std::string(to_string(t.speaker))},
                               {"text", t.text},
                               {"timestamp", t.timestamp}});
            }
            json out = {{"session_id", id},
                        {"user_id", info.user_id},
                        {"mode", std::string(to_string(info.mode))},
                        {"closed", info.closed},
                        {"turns", turns}};
            if (info.persona) out["persona_id"] = std::string(to_string(*info.persona));
            if (info.mode == SessionMode::kScenario) {
              out["script_id"] = info.script_id;
              json events = json::array();
              for (const auto& e : m.interview_transcript(id)) {
                events.push_back({{"question_id", e.question_id},
                                  {"asks", e.asks},
                                  {"answer", e.answer ? json(*e.answer) : json(nullptr)}});
              }
              out["events"] = events;
            }
            send(res, 200, out);
          }));

  if (!web_dir.empty()) srv.set_mount_point("/", web_dir);
}

HttpApi::~HttpApi() { stop(); }

bool HttpApi::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpApi::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpApi::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpApi::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace parley
