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

#include "parley/feedback.hpp"

#include <algorithm>
#include <cmath>

#include "parley/error.hpp"
#include "parley/text.hpp"
#include "parley/tokenizer.hpp"

namespace parley {
namespace {

bool has_alpha(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isalpha(c); });
}

bool finite_catenative(const TokenSeq& tokens, size_t i, const Lexicon& lex) {
  const std::string& w = tokens[i].normalized;
  const LexEntry* e = lex.find(w);
  if (e == nullptr) return false;
  if (i > 0 && tokens[i - 1].is_word() && tokens[i - 1].normalized == "to") return false;
  if (e->is(Category::kVerbGerund) || e->is(Category::kVerbParticiple)) {
    // "liked" is both past and participle; only the past reading is finite.
    if (!e->is(Category::kVerbPast)) return false;
  }
  const std::string base = lex.verb_base(w).value_or(w);
  return lex.is(base, Category::kCatenative);
}

bool bare_base_verb(const Token& t, const Lexicon& lex) {
  const LexEntry* e = lex.find(t.normalized);
  return e != nullptr && e->is(Category::kVerb) && !e->is(Category::kNoun) &&
         !e->is(Category::kAuxiliary) && !e->is(Category::kModal) && !e->is(Category::kCopula) &&
         !e->is(Category::kPreposition);
}

}  // namespace

std::string_view to_string(FlagKind k) {
  switch (k) {
    case FlagKind::kSpelling: return "spelling";
    case FlagKind::kCapitalization: return "capitalization";
    case FlagKind::kGrammar: return "grammar";
  }
  return "?";
}

std::vector<FlagSpan> spell_flags(const TokenSeq& tokens, const Lexicon& lex,
                                  const std::optional<std::string>& user_name) {
  std::vector<FlagSpan> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.is_word() || !has_alpha(t.surface) || text::contains_digit(t.surface)) continue;
    if (t.surface.find('\'') != std::string::npos) continue;  // clitics
    const std::string low = text::lower(t.surface);
    auto flag = [&](FlagKind k) { out.push_back({k, i, i + 1}); };
    if (t.surface == "i") {
      flag(FlagKind::kCapitalization);
      continue;
    }
    const LexEntry* e = lex.find(low);
    if (e != nullptr && e->is(Category::kProperNoun) && t.surface != e->word &&
        !text::starts_with_upper(t.surface)) {
      flag(FlagKind::kCapitalization);
      continue;
    }
    if (lex.dictionary_contains(t.surface) || lex.dictionary_contains(low)) continue;
    if (lex.dictionary_contains(text::capitalize(low)) && !text::starts_with_upper(t.surface)) {
      flag(FlagKind::kCapitalization);
      continue;
    }
    if (e != nullptr) continue;
    if (text::starts_with_upper(t.surface)) continue;  // taken as a name
    if (user_name && text::lower(*user_name) == low) continue;
    flag(FlagKind::kSpelling);
  }
  return out;
}

std::vector<FlagSpan> grammar_flags(const ParsedSentence& parsed, const Lexicon& lex) {
  std::vector<FlagSpan> out;
  const TokenSeq& toks = parsed.tokens;
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    if (!toks[i].is_word() || !toks[i + 1].is_word()) continue;
    if (finite_catenative(toks, i, lex) && bare_base_verb(toks[i + 1], lex))
      out.push_back({FlagKind::kGrammar, i, i + 2});
  }
  return out;
}

std::optional<Flag> check_text(const std::string& input, const Lexicon& lex,
                               const std::optional<std::string>& user_name) {
  const TokenSeq tokens = tokenize(input);
  Flag f;
  f.sentence = input;
  f.spans = spell_flags(tokens, lex, user_name);
  size_t offset = 0;
  for (const TokenSeq& sentence : split_sentences(tokens)) {
    const ParsedSentence p = parse(sentence, lex);
    for (FlagSpan s : grammar_flags(p, lex)) {
      s.begin += offset;
      s.end += offset;
      f.spans.push_back(s);
    }
    offset += sentence.size();
  }
  if (f.spans.empty()) return std::nullopt;
  std::sort(f.spans.begin(), f.spans.end(), [](const FlagSpan& a, const FlagSpan& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.kind < b.kind;
  });
  for (const auto& s : f.spans) f.kinds.push_back(s.kind);
  std::sort(f.kinds.begin(), f.kinds.end());
  f.kinds.erase(std::unique(f.kinds.begin(), f.kinds.end()), f.kinds.end());
  return f;
}

SessionMetrics session_metrics(const std::vector<std::string>& user_texts) {
  SessionMetrics m;
  m.turn_count = user_texts.size();
  if (user_texts.empty()) return m;
  size_t words = 0;
  for (const auto& t : user_texts) {
    for (const auto& tok : tokenize(t)) words += tok.is_word() ? 1 : 0;
  }
  const double mean = static_cast<double>(words) / static_cast<double>(user_texts.size());
  m.mean_user_tokens = std::round(mean * 100.0) / 100.0;
  return m;
}

FeedbackReport build_report(const std::vector<std::string>& answers, const Resources& res,
                            const std::string& title, const std::optional<std::string>& user_name) {
  if (answers.empty()) throw Error(ErrorCode::kNoTranscript, "no answers to analyze");
  FeedbackReport r;
  for (const auto& a : answers) {
    if (auto f = check_text(a, res.lexicon, user_name)) r.flagged.push_back(std::move(*f));
  }
  r.preamble = text::replace_all(r.flagged.empty() ? res.report_praise : res.report_preamble, "{title}", title);
  r.metrics = session_metrics(answers);
  return r;
}

std::string FeedbackReport::render() const {
  std::string out = preamble + "\n";
  if (!flagged.empty()) out += "\n";
  for (const auto& f : flagged) out += f.sentence + "\n";
  return out;
}

}  // namespace parley
