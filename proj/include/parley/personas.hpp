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

#include <optional>
#include <string>
#include <vector>

#include "parley/clock.hpp"
#include "parley/discourse.hpp"
#include "parley/parse.hpp"
#include "parley/resources.hpp"

namespace parley {

enum class Strategy {
  kGreeting,
  kContentContinuation,
  kQaAnswer,
  kContradictionRecall,
  kContentDelivery,
  kPolarAcknowledgment,
  kImperativeFallback,
  kClarification,
  kContentAnnouncement,
  kContentSegment,
  kContentClose,
  kExhaustedEcho,
  kSympatheticProbe,
  kContinuationCue,
  kSeedQuestion,
  kPastProbe,
  kWhyQuestion,
  kReasonEcho,
  kEcho,
  kAdvice,
  kEncouragement,
  kCompliment,
  kOfferReply,
  kAphorism,
  kBackchannel,
};

std::string_view to_string(Strategy s);

struct ResponseMeta {
  // In the order they contributed text; the first is the primary strategy.
  std::vector<Strategy> strategies;
  std::vector<FactRecord> facts_consulted;
  std::optional<std::string> content_item;
  std::optional<int> content_segment;

  Strategy strategy() const { return strategies.front(); }
};

struct Response {
  std::string text;
  ResponseMeta meta;
};

// Per-session conversational state of a persona chat.
struct PersonaState {
  PersonaId persona = PersonaId::kChristine;
  std::string session_id;
  std::string user_id;

  // Content delivery.
  std::optional<size_t> active_item;
  size_t next_segment = 0;
  std::vector<bool> told;
  size_t rotation = 0;

  // Last system sentence when it was an aux-initial question.
  std::optional<ParsedSentence> pending_polar;

  // Stephan.
  size_t probes_used = 0;
  size_t cue_cursor = 0;
  std::string last_cue;

  // Emina and Christoph.
  size_t seed_cursor = 0;
  std::optional<ParsedSentence> why_about;
  std::vector<std::string> mentioned;
  size_t fallback_cursor = 0;
};

// The dialog engine for free chat. Holds no session state of its own;
// callers serialize calls per session.
class Responder {
 public:
  Responder(const Resources& resources, DiscourseStore& store)
      : res_(resources), store_(store) {}

  PersonaState new_state(PersonaId persona, const std::string& session_id,
                         const std::string& user_id) const;

  // Records the user turn, facts and the reply. Throws kEmptyInput,
  // kUnknownSession, kSessionClosed.
  Response respond(PersonaState& state, const std::string& text, TimePoint now);

  // The persona speaks first (greeting only).
  Response open(PersonaState& state, TimePoint now);

  // Persona-independent answer for questions, commands and answer fragments.
  Response shared_answer(PersonaState& state, const ParsedSentence& parsed, int user_turn);

 private:
  Response dispatch(PersonaState& state, const ParsedSentence& s, int user_turn, TimePoint now);
  Response greeting(PersonaState& state, TimePoint now);
  Response persona_turn(PersonaState& state, const ParsedSentence& s, int user_turn);
  Response acknowledge(PersonaState& state, const ParsedSentence& proposition, int user_turn);

  Response christine(PersonaState& state, const ParsedSentence& s);
  Response stephan(PersonaState& state, const ParsedSentence& s);
  Response emina(PersonaState& state, const ParsedSentence& s);
  Response christoph(PersonaState& state, const ParsedSentence& s);
  Response ingrid(PersonaState& state, const ParsedSentence& s, int user_turn);

  std::optional<Response> continue_content(PersonaState& state);
  std::optional<Response> start_item(PersonaState& state, size_t item, bool whole);
  std::optional<size_t> next_rotation_item(PersonaState& state) const;
  std::optional<std::string> qa_answer(const ParsedSentence& s) const;
  std::optional<const AdviceRule*> match_advice(const ParsedSentence& s) const;
  std::string next_seed(PersonaState& state);
  std::string recall_clause(const FactRecord& f, const std::string& session_id) const;
  bool matches_phrase(const ParsedSentence& s, const std::string& kind) const;
  bool starts_with_phrase(const ParsedSentence& s, const std::string& kind) const;
  bool is_greeting(const ParsedSentence& s) const;

  const Resources& res_;
  DiscourseStore& store_;
};

// Lowercased words of a sentence with contractions expanded and degree
// adverbs removed; the form matched against phrase and QA tables.
std::vector<std::string> match_words(const ParsedSentence& s, const Lexicon& lexicon);

}  // namespace parley
