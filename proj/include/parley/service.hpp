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

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "parley/clock.hpp"
#include "parley/discourse.hpp"
#include "parley/feedback.hpp"
#include "parley/personas.hpp"
#include "parley/resources.hpp"
#include "parley/scenario.hpp"

namespace parley {

enum class SessionMode { kPersona, kScenario };
std::string_view to_string(SessionMode m);

struct SessionSpec {
  std::string user_id;
  SessionMode mode = SessionMode::kPersona;
  std::optional<PersonaId> persona;
  std::string script_id;
  std::optional<uint32_t> seed;     // entropy when unset
  std::optional<TimePoint> clock;   // wall clock when unset
};

struct SessionInfo {
  std::string session_id;
  std::string user_id;
  SessionMode mode = SessionMode::kPersona;
  std::optional<PersonaId> persona;
  std::string script_id;
  uint32_t seed = 0;
  std::optional<TimePoint> clock;
  bool closed = false;
};

enum class ReplyKind { kChat, kQuestion, kFinished };
std::string_view to_string(ReplyKind k);

struct MessageReply {
  std::string reply;
  ReplyKind kind = ReplyKind::kChat;
  std::optional<std::string> report_id;
  std::optional<ResponseMeta> meta;  // persona sessions only
};

// All live sessions over one shared discourse store. Thread-safe; messages
// to one session are handled one at a time, in arrival order.
class SessionManager {
 public:
  SessionManager(const Resources& resources, DiscourseStore& store);

  // Makes a script loaded from outside the data directory available by id.
  void register_script(std::shared_ptr<const ScenarioScript> script);

  // Throws kUnknownPersona, kUnknownScript, kInvalidArgument.
  std::string create_session(const SessionSpec& spec);
  // Throws kUnknownSession, kSessionClosed, kEmptyInput.
  MessageReply post_message(const std::string& session_id, const std::string& text);
  // The persona speaks first. Persona sessions only.
  MessageReply open_greeting(const std::string& session_id);
  void close_session(const std::string& session_id);

  // Throws kReportNotReady, kUnknownSession.
  FeedbackReport get_report(const std::string& session_id) const;
  std::vector<PersonaDescriptor> list_personas() const;
  std::vector<TurnRecord> get_transcript(const std::string& session_id) const;
  std::vector<QaEvent> interview_transcript(const std::string& session_id) const;
  SessionInfo info(const std::string& session_id) const;
  void update_profile(const std::string& session_id, const std::optional<std::string>& display_name,
                      const std::optional<std::string>& avatar);

  const Resources& resources() const { return res_; }
  DiscourseStore& store() { return store_; }

 private:
  struct Session {
    mutable std::mutex mu;
    SessionInfo info;
    Clock clock;
    std::optional<PersonaState> persona;
    std::unique_ptr<Interview> interview;
    std::optional<FeedbackReport> report;
  };

  std::shared_ptr<Session> find(const std::string& session_id) const;
  std::shared_ptr<const ScenarioScript> script(const std::string& id);

  const Resources& res_;
  DiscourseStore& store_;
  Responder responder_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::shared_ptr<const ScenarioScript>> scripts_;
  size_t next_id_ = 1;
};

}  // namespace parley
