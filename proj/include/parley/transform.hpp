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

#include <string>
#include <string_view>

#include "parley/lexicon.hpp"
#include "parley/parse.hpp"
#include "parley/tokenizer.hpp"

namespace parley {

enum class QuestionKind { kWhyQuestion, kPastProbe, kPolarEcho };

struct QuestionForm {
  QuestionKind kind;
  std::string rendered;
};

// Swaps first and second person: I/me <-> you, my <-> your, mine <-> yours,
// myself <-> yourself. "you" becomes "I" in subject position and "me"
// otherwise; am/are and was/were next to a mirrored subject swap too.
TokenSeq mirror_pronouns(const TokenSeq& tokens, const Lexicon& lexicon);

// Mirrors tokens and keeps the role labelling.
ParsedSentence mirror(const ParsedSentence& parsed, const Lexicon& lexicon);

struct ShiftResult {
  ParsedSentence sentence;
  // The verb was missing from the conjugation table and got a regular "-ed".
  bool regular_fallback = false;
};

// Re-inflects the first finite verb for the target tense. Shifting to the
// sentence's own tense returns it unchanged.
ShiftResult shift_tense(const ParsedSentence& parsed, Tense target, const Lexicon& lexicon);

// "I like the Internet." -> "Why do you like the Internet?"
// Throws Error(kNotAStatement) unless the sentence is declarative.
QuestionForm build_why_question(const ParsedSentence& parsed, const Lexicon& lexicon);

// "I am very happy this week." -> "Were you happy before?"
// Throws kNotAStatement / kNotPresentTense.
QuestionForm build_past_probe(const ParsedSentence& parsed, const Lexicon& lexicon);

// The mirrored clause without discourse markers or closing punctuation,
// starting lowercase unless it opens with "I" or a proper noun. A reason
// clause is appended, prefixed with "because" when it lacks one.
std::string mirrored_clause(const ParsedSentence& parsed, const Lexicon& lexicon,
                            const ParsedSentence* reason = nullptr);

// interjection + ", " + mirrored clause + "." (no prefix when interjection
// is empty). Throws kNotAStatement.
std::string echo_statement(const ParsedSentence& parsed, std::string_view interjection,
                           const Lexicon& lexicon, const ParsedSentence* reason = nullptr);

// Turns a polar question ("Do you like the Internet?") plus a yes/no answer
// into the answerer's statement ("I like the Internet." / "I do not like
// the Internet.").
ParsedSentence proposition_from_polar_question(const ParsedSentence& question,
                                               bool affirmative, const Lexicon& lexicon);

// Aux-initial question ("Do you ...", "Are you ...", "Can you ...").
bool is_polar_question(const ParsedSentence& parsed);

}  // namespace parley
