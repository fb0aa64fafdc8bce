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

#include "parley/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "parley/error.hpp"
#include "parley/parse.hpp"
#include "parley/text.hpp"
#include "parley/tokenizer.hpp"

namespace parley {
namespace {

[[noreturn]] void bad(ErrorCode code, const std::string& id, size_t line, const std::string& what) {
  throw Error(code, id + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> words(const std::string& s) { return normalized_words(tokenize(s)); }

}  // namespace

const Question& ScenarioScript::question(const std::string& qid) const {
  for (const auto& t : topics) {
    for (const auto& q : t.questions) {
      if (q.id == qid) return q;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "no question " + qid);
}

ScenarioScript parse_script(const std::string& content, const std::string& id) {
  ScenarioScript s;
  s.id = id;
  std::set<std::string> names;
  std::set<std::string> texts;
  size_t topic_line = 0;
  auto finish = [&]() {
    if (!s.topics.empty() && s.topics.back().questions.empty())
      bad(ErrorCode::kEmptyTopic, id, topic_line, "topic '" + s.topics.back().name + "' has no questions");
  };
  size_t n = 0;
  bool last_was_q = false;
  for (auto line : text::split(content, '\n')) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = text::trim(line);
    if (t.empty() || t[0] == '#') {
      last_was_q = false;
      continue;
    }
    if (t.starts_with("[topic]")) {
      finish();
      Topic topic;
      topic.name = text::trim(t.substr(7));
      if (topic.name.empty()) bad(ErrorCode::kDataFile, id, n, "empty topic name");
      if (!names.insert(topic.name).second) bad(ErrorCode::kDataFile, id, n, "duplicate topic '" + topic.name + "'");
      s.topics.push_back(std::move(topic));
      texts.clear();
      topic_line = n;
      last_was_q = false;
      continue;
    }
    const auto colon = t.find(':');
    if (colon == std::string::npos) bad(ErrorCode::kDataFile, id, n, "expected key: value");
    const std::string key = t.substr(0, colon);
    const std::string value = text::trim(t.substr(colon + 1));
    if (key == "title") {
      s.title = value;
    } else if (key == "interviewer") {
      s.interviewer = value;
    } else {
      if (s.topics.empty()) bad(ErrorCode::kDataFile, id, n, key + ": before the first [topic]");
      Topic& topic = s.topics.back();
      if (key == "mode") {
        if (value == "sequence") topic.mode = TopicMode::kSequence;
        else if (value == "random") topic.mode = TopicMode::kRandom;
        else bad(ErrorCode::kDataFile, id, n, "mode must be sequence or random");
      } else if (key == "Q") {
        if (value.empty()) bad(ErrorCode::kDataFile, id, n, "empty question");
        if (!texts.insert(value).second) bad(ErrorCode::kDuplicateQuestion, id, n, "duplicate question '" + value + "'");
        topic.questions.push_back({std::to_string(s.topics.size()) + "." +
                                       std::to_string(topic.questions.size() + 1),
                                   value, std::nullopt});
        last_was_q = true;
        continue;
      } else if (key == "QS") {
        if (!last_was_q) bad(ErrorCode::kDataFile, id, n, "QS: must follow a Q: line");
        topic.questions.back().short_form = value;
      } else {
        bad(ErrorCode::kDataFile, id, n, "unknown key '" + key + "'");
      }
    }
    last_was_q = false;
  }
  finish();
  if (s.topics.empty()) throw Error(ErrorCode::kEmptyTopic, id + ": script has no topics");
  if (s.interviewer.empty()) s.interviewer = "interviewer";
  return s;
}

ScenarioScript load_script(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_script(content, std::filesystem::path(path).stem().string());
}

InterviewState initial_state(const ScenarioScript& script, uint32_t seed) {
  InterviewState st;
  st.script_id = script.id;
  st.seed = seed;
  for (size_t i = 0; i < script.topics.front().questions.size(); ++i) st.remaining.push_back(i);
  return st;
}

std::optional<Question> next_question(InterviewState& state, const ScenarioScript& script, Rng& rng) {
  while (state.topic < script.topics.size() && state.remaining.empty()) {
    ++state.topic;
    if (state.topic < script.topics.size()) {
      for (size_t i = 0; i < script.topics[state.topic].questions.size(); ++i) state.remaining.push_back(i);
    }
  }
  if (state.topic >= script.topics.size()) {
    state.finished = true;
    return std::nullopt;
  }
  const Topic& topic = script.topics[state.topic];
  size_t k = 0;
  if (topic.mode == TopicMode::kRandom) k = rng.index(state.remaining.size());
  const Question& q = topic.questions[state.remaining[k]];
  state.remaining.erase(state.remaining.begin() + static_cast<std::ptrdiff_t>(k));
  state.asked.push_back(q.id);
  return q;
}

Interview::Interview(std::shared_ptr<const ScenarioScript> script, const Resources& resources,
                     uint32_t seed)
    : script_(std::move(script)), res_(resources), state_(initial_state(*script_, seed)), rng_(seed) {}

bool Interview::is_pardon(const std::string& text) const {
  const auto w = words(text);
  for (const auto& p : res_.phrase_list("pardon")) {
    if (w == words(p)) return true;
  }
  return false;
}

bool Interview::ask_next(std::string& reply) {
  auto q = next_question(state_, *script_, rng_);
  if (!q) return false;
  transcript_.push_back({q->id, {q->text}, std::nullopt});
  reply += q->text;
  return true;
}

InterviewTurn Interview::run_turn(const std::string& text, TimePoint now) {
  if (text::trim(text).empty()) throw Error(ErrorCode::kEmptyInput, "empty message");
  if (state_.finished) throw Error(ErrorCode::kSessionClosed, "the interview is over");
  InterviewTurn out;
  if (!state_.started) {
    // The opening line is a greeting; answer it and ask the first question.
    state_.started = true;
    out.reply = time_of_day_greeting(now) + "! ";
    if (!ask_next(out.reply)) out.finished = true;
    return out;
  }
  QaEvent& current = transcript_.back();
  if (is_pardon(text)) {
    const Question& q = script_->question(current.question_id);
    out.reply = q.short_form.value_or(q.text);
    current.asks.push_back(out.reply);
    return out;
  }
  current.answer = text;
  if (!ask_next(out.reply)) {
    out.reply.clear();
    out.finished = true;
  }
  return out;
}

}  // namespace parley
