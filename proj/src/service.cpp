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

#include "parley/service.hpp"

#include "parley/error.hpp"
#include "parley/rng.hpp"
#include "parley/text.hpp"

namespace parley {

std::string_view to_string(SessionMode m) {
  return m == SessionMode::kPersona ? "persona" : "scenario";
}

std::string_view to_string(ReplyKind k) {
  switch (k) {
    case ReplyKind::kChat: return "chat";
    case ReplyKind::kQuestion: return "question";
    case ReplyKind::kFinished: return "finished";
  }
  return "?";
}

SessionManager::SessionManager(const Resources& resources, DiscourseStore& store)
    : res_(resources), store_(store), responder_(resources, store) {}

void SessionManager::register_script(std::shared_ptr<const ScenarioScript> s) {
  std::lock_guard lock(mu_);
  scripts_[s->id] = std::move(s);
}

std::shared_ptr<const ScenarioScript> SessionManager::script(const std::string& id) {
  std::lock_guard lock(mu_);
  if (auto it = scripts_.find(id); it != scripts_.end()) return it->second;
  auto path = res_.scripts.find(id);
  if (path == res_.scripts.end()) throw Error(ErrorCode::kUnknownScript, "unknown script '" + id + "'");
  auto s = std::make_shared<const ScenarioScript>(load_script(path->second));
  scripts_[id] = s;
  return s;
}

std::shared_ptr<SessionManager::Session> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kUnknownSession, "unknown session '" + id + "'");
  return it->second;
}

std::string SessionManager::create_session(const SessionSpec& spec) {
  if (text::trim(spec.user_id).empty()) throw Error(ErrorCode::kInvalidArgument, "user_id is required");
  auto s = std::make_shared<Session>();
  s->info.user_id = spec.user_id;
  s->info.mode = spec.mode;
  s->info.seed = spec.seed.value_or(Rng::entropy_seed());
  s->info.clock = spec.clock;
  s->clock = Clock(spec.clock);
  std::string mode;
  std::shared_ptr<const ScenarioScript> sc;
  if (spec.mode == SessionMode::kPersona) {
    if (!spec.persona) throw Error(ErrorCode::kUnknownPersona, "persona_id is required");
    s->info.persona = spec.persona;
    mode = "persona:" + std::string(to_string(*spec.persona));
  } else {
    sc = script(spec.script_id);
    s->info.script_id = sc->id;
    mode = "scenario:" + sc->id;
  }

  std::lock_guard lock(mu_);
  std::string id;
  do {
    id = "s" + std::to_string(next_id_++);
  } while (sessions_.count(id) || store_.has_session(id));
  s->info.session_id = id;
  store_.open_session(id, spec.user_id, mode);
  if (sc) s->interview = std::make_unique<Interview>(sc, res_, s->info.seed);
  else s->persona = responder_.new_state(*spec.persona, id, spec.user_id);
  sessions_[id] = s;
  return id;
}

MessageReply SessionManager::post_message(const std::string& session_id, const std::string& text) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (s->info.closed) throw Error(ErrorCode::kSessionClosed, "session '" + session_id + "' is closed");
  if (text::trim(text).empty()) throw Error(ErrorCode::kEmptyInput, "empty message");
  const TimePoint now = s->clock.now();
  MessageReply out;
  if (s->persona) {
    Response r = responder_.respond(*s->persona, text, now);
    out.reply = r.text;
    out.kind = ReplyKind::kChat;
    out.meta = std::move(r.meta);
    return out;
  }

  const std::string ts = format_iso8601(now);
  store_.record_turn(session_id, Speaker::kUser, text, "-", ts);
  InterviewTurn t = s->interview->run_turn(text, now);
  if (!t.finished) {
    store_.record_turn(session_id, Speaker::kSystem, t.reply, "-", ts);
    out.reply = t.reply;
    out.kind = ReplyKind::kQuestion;
    return out;
  }
  std::vector<std::string> answers;
  for (const auto& e : s->interview->transcript()) {
    if (e.answer) answers.push_back(*e.answer);
  }
  const auto name = store_.profile(s->info.user_id).display_name;
  if (answers.empty()) {
    out.reply = "";
  } else {
    s->report = build_report(answers, res_, s->interview->script().title, name);
    out.reply = s->report->render();
    if (!out.reply.empty() && out.reply.back() == '\n') out.reply.pop_back();
    store_.record_turn(session_id, Speaker::kSystem, out.reply, "-", ts);
    out.report_id = session_id;
  }
  out.kind = ReplyKind::kFinished;
  store_.close_session(session_id);
  s->info.closed = true;
  return out;
}

MessageReply SessionManager::open_greeting(const std::string& session_id) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (!s->persona) throw Error(ErrorCode::kInvalidArgument, "only persona sessions open with a greeting");
  if (s->info.closed) throw Error(ErrorCode::kSessionClosed, "session '" + session_id + "' is closed");
  Response r = responder_.open(*s->persona, s->clock.now());
  return {r.text, ReplyKind::kChat, std::nullopt, std::move(r.meta)};
}

void SessionManager::close_session(const std::string& session_id) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (s->info.closed) return;
  store_.close_session(session_id);
  s->info.closed = true;
}

FeedbackReport SessionManager::get_report(const std::string& session_id) const {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (!s->report) throw Error(ErrorCode::kReportNotReady, "no report for session '" + session_id + "'");
  return *s->report;
}

std::vector<PersonaDescriptor> SessionManager::list_personas() const { return res_.personas; }

std::vector<TurnRecord> SessionManager::get_transcript(const std::string& session_id) const {
  auto log = store_.session(session_id);
  if (!log) throw Error(ErrorCode::kUnknownSession, "unknown session '" + session_id + "'");
  return log->turns;
}

std::vector<QaEvent> SessionManager::interview_transcript(const std::string& session_id) const {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  if (!s->interview) return {};
  return s->interview->transcript();
}

SessionInfo SessionManager::info(const std::string& session_id) const {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  return s->info;
}

void SessionManager::update_profile(const std::string& session_id,
                                    const std::optional<std::string>& display_name,
                                    const std::optional<std::string>& avatar) {
  auto s = find(session_id);
  std::lock_guard lock(s->mu);
  store_.update_profile({s->info.user_id, session_id, display_name, avatar});
}

}  // namespace parley
