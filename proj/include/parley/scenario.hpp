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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parley/clock.hpp"
#include "parley/resources.hpp"
#include "parley/rng.hpp"

namespace parley {

enum class TopicMode { kSequence, kRandom };

struct Question {
  std::string id;  // "<topic>.<question>", 1-based
  std::string text;
  std::optional<std::string> short_form;
};

struct Topic {
  std::string name;
  TopicMode mode = TopicMode::kSequence;
  std::vector<Question> questions;
};

struct ScenarioScript {
  std::string id;
  std::string title;
  std::string interviewer;  // persona id used as the speaker label
  std::vector<Topic> topics;

  const Question& question(const std::string& id) const;
};

// Throws kIoError, kEmptyTopic, kDuplicateQuestion, kDataFile.
ScenarioScript load_script(const std::string& path);
ScenarioScript parse_script(const std::string& content, const std::string& id);

struct InterviewState {
  std::string script_id;
  size_t topic = 0;
  std::vector<std::string> asked;  // question ids, in ask order
  std::vector<size_t> remaining;   // unasked questions of the current topic
  uint32_t seed = 0;
  bool started = false;
  bool finished = false;
};

InterviewState initial_state(const ScenarioScript& script, uint32_t seed);

// Sequence topics keep file order; random topics draw uniformly without
// replacement. nullopt once every topic is exhausted.
std::optional<Question> next_question(InterviewState& state, const ScenarioScript& script, Rng& rng);

// One asked question: every rendering of it (re-asks included) and the answer.
struct QaEvent {
  std::string question_id;
  std::vector<std::string> asks;
  std::optional<std::string> answer;
};

struct InterviewTurn {
  std::string reply;  // empty on the finishing turn
  bool finished = false;
};

// A running interview. Not thread-safe; the service serializes calls.
class Interview {
 public:
  Interview(std::shared_ptr<const ScenarioScript> script, const Resources& resources, uint32_t seed);

  // Throws kEmptyInput, kSessionClosed.
  InterviewTurn run_turn(const std::string& text, TimePoint now);

  const std::vector<QaEvent>& transcript() const { return transcript_; }
  const InterviewState& state() const { return state_; }
  const ScenarioScript& script() const { return *script_; }
  bool finished() const { return state_.finished; }

 private:
  bool is_pardon(const std::string& text) const;
  bool ask_next(std::string& reply);

  std::shared_ptr<const ScenarioScript> script_;
  const Resources& res_;
  InterviewState state_;
  Rng rng_;
  std::vector<QaEvent> transcript_;
};

}  // namespace parley
