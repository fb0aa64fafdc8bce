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

#include "parley/parse.hpp"
#include "parley/resources.hpp"

namespace parley {

enum class FlagKind { kSpelling, kCapitalization, kGrammar };
std::string_view to_string(FlagKind k);

// Token index range [begin, end) over the tokens of the flagged text.
struct FlagSpan {
  FlagKind kind;
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const FlagSpan&) const = default;
};

struct Flag {
  std::string sentence;          // verbatim user text
  std::vector<FlagKind> kinds;   // sorted, unique
  std::vector<FlagSpan> spans;
};

struct SessionMetrics {
  size_t turn_count = 0;
  double mean_user_tokens = 0.0;  // rounded to 2 decimals
  bool operator==(const SessionMetrics&) const = default;
};

struct FeedbackReport {
  std::string preamble;
  std::vector<Flag> flagged;
  SessionMetrics metrics;

  // Preamble, blank line, one flagged sentence per line.
  std::string render() const;
};

// Unknown words, lowercase "i", proper nouns written lowercase. Capitalized
// unknown words pass as names, as does the user's own name.
std::vector<FlagSpan> spell_flags(const TokenSeq& tokens, const Lexicon& lexicon,
                                  const std::optional<std::string>& user_name = std::nullopt);

// Closed rule list; G1 only: a finite catenative verb directly followed by
// a bare base-form verb ("like play").
std::vector<FlagSpan> grammar_flags(const ParsedSentence& parsed, const Lexicon& lexicon);

// All flags of one user text (possibly several sentences); nullopt if clean.
std::optional<Flag> check_text(const std::string& text, const Lexicon& lexicon,
                               const std::optional<std::string>& user_name = std::nullopt);

SessionMetrics session_metrics(const std::vector<std::string>& user_texts);

// Throws kNoTranscript for an empty answer list.
// {title} in the preamble becomes the scenario title.
FeedbackReport build_report(const std::vector<std::string>& answers, const Resources& resources,
                            const std::string& title,
                            const std::optional<std::string>& user_name = std::nullopt);

}  // namespace parley
