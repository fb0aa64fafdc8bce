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
#include <string_view>
#include <vector>

#include "parley/lexicon.hpp"
#include "parley/tokenizer.hpp"

namespace parley {

enum class Mood { kDeclarative, kInterrogative, kImperative, kFragment };
enum class Tense { kPresent, kPast, kFuture, kUnknown };

// Each token of a parsed sentence carries exactly one role.
enum class Role {
  kPrefix,      // discourse markers: "yes,", "oh,", "please", "because"
  kWh,          // wh-phrase of a question
  kSubject,
  kAuxiliary,   // modals, do/have/be auxiliaries
  kNegation,
  kVerbAdverb,  // adverbs inside the verb group ("I also like")
  kMainVerb,    // lexical verb or copula
  kComplement,
  kTemporal,
  kTerminal,    // closing punctuation
};

enum class Person { kFirstSingular, kSecond, kThirdSingular, kPlural };

std::string_view to_string(Mood mood);
std::string_view to_string(Tense tense);
std::optional<Mood> mood_from_string(std::string_view s);

// Flat clause analysis of one sentence.
struct ParsedSentence {
  TokenSeq tokens;
  std::vector<Role> roles;  // parallel to tokens
  Mood mood = Mood::kFragment;
  Tense tense = Tense::kUnknown;
  std::optional<int> main_verb;
  std::string main_verb_base;  // "be" when the copula is the main verb
  bool copular = false;
  bool negated = false;
  // An auxiliary precedes the subject ("Do you ...", "Are you ...").
  bool inverted = false;
  std::vector<int> unknown_tokens;
  std::string raw;

  std::vector<int> indices(Role role) const;
  TokenSeq tokens_of(Role role) const;
  std::string text_of(Role role) const;
  // Maximal runs of adjacent temporal tokens.
  std::vector<std::vector<int>> temporal_spans() const;
  bool has_role(Role role) const;
  // "mood=declarative tense=present verb=like"
  std::string summary() const;
  Person subject_person(const Lexicon& lexicon) const;

  bool operator==(const ParsedSentence&) const = default;
};

Mood classify_mood(const TokenSeq& tokens, const Lexicon& lexicon);

// Parses one sentence. Throws Error(kEmptyInput) on an empty sequence.
ParsedSentence parse(const TokenSeq& tokens, const Lexicon& lexicon);

// Tokenizes, splits sentences and parses each.
std::vector<ParsedSentence> parse_text(std::string_view text, const Lexicon& lexicon);

// Recomputes tense from the verb group of an already role-labelled sentence.
Tense derive_tense(const ParsedSentence& parsed, const Lexicon& lexicon);

// Lowercased words with contractions expanded (n't -> not, 'm -> am, ...)
// and punctuation removed.
std::vector<std::string> normalized_words(const TokenSeq& tokens);

}  // namespace parley
