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

#include "parley/tokenizer.hpp"

#include <array>
#include <cctype>

#include "parley/error.hpp"
#include "parley/text.hpp"

namespace parley {
namespace {

bool is_punct_char(char c) {
  return c == '.' || c == ',' || c == '?' || c == '!' || c == '\'' || c == ';';
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string normalize_quotes(std::string_view text) {
  // U+2018 / U+2019 become ASCII apostrophes.
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(text[i + 2]) == 0x98 ||
         static_cast<unsigned char>(text[i + 2]) == 0x99)) {
      out += '\'';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

std::string stem_normalized(const std::string& stem_lower) {
  if (stem_lower == "ca") return "can";
  if (stem_lower == "wo") return "will";
  if (stem_lower == "sha") return "shall";
  return stem_lower;
}

// Appends the word, splitting a recognized contraction suffix.
void push_word(TokenSeq& out, const std::string& word, bool space_before) {
  const std::string low = text::lower(word);
  static constexpr std::array<std::string_view, 6> kSuffixes = {"'s", "'m", "'re", "'ll",
                                                                "'ve", "'d"};
  if (low.size() > 3 && low.ends_with("n't")) {
    std::string stem = word.substr(0, word.size() - 3);
    out.push_back({stem, stem_normalized(text::lower(stem)), TokenKind::kWord, 0, space_before});
    out.push_back({word.substr(word.size() - 3), "n't", TokenKind::kWord, 0, false});
    return;
  }
  for (auto suffix : kSuffixes) {
    if (low.size() > suffix.size() && low.ends_with(suffix)) {
      const size_t cut = word.size() - suffix.size();
      std::string stem = word.substr(0, cut);
      out.push_back({stem, text::lower(stem), TokenKind::kWord, 0, space_before});
      out.push_back({word.substr(cut), std::string(suffix), TokenKind::kWord, 0, false});
      return;
    }
  }
  out.push_back({word, low, TokenKind::kWord, 0, space_before});
}

}  // namespace

TokenSeq tokenize(std::string_view raw) {
  const std::string input = normalize_quotes(raw);
  TokenSeq out;
  std::string word;
  bool word_space_before = false;
  bool pending_space = false;

  auto flush = [&] {
    if (!word.empty()) {
      push_word(out, word, word_space_before);
      word.clear();
    }
  };

  for (size_t i = 0; i < input.size(); ++i) {
    const char c = input[i];
    if (is_space(c)) {
      flush();
      pending_space = true;
      continue;
    }
    const char prev = i > 0 ? input[i - 1] : ' ';
    const char next = i + 1 < input.size() ? input[i + 1] : ' ';
    const bool inner_apostrophe = c == '\'' && !word.empty() && is_alnum(prev) && is_alpha(next);
    const bool inner_period = (c == '.' || c == ',') && !word.empty() &&
                              std::isdigit(static_cast<unsigned char>(prev)) &&
                              std::isdigit(static_cast<unsigned char>(next));
    if (is_punct_char(c) && !inner_apostrophe && !inner_period) {
      flush();
      out.push_back({std::string(1, c), std::string(1, c), TokenKind::kPunctuation, 0,
                     pending_space && !out.empty()});
      pending_space = false;
      continue;
    }
    if (word.empty()) {
      word_space_before = pending_space && !out.empty();
      pending_space = false;
    }
    word += c;
  }
  flush();
  if (out.empty()) throw Error(ErrorCode::kEmptyInput, "empty input");
  reindex(out);
  return out;
}

std::vector<TokenSeq> split_sentences(const TokenSeq& tokens) {
  std::vector<TokenSeq> sentences;
  TokenSeq current;
  auto is_terminal = [](const Token& t) {
    return t.is_punct('.') || t.is_punct('?') || t.is_punct('!');
  };
  for (size_t i = 0; i < tokens.size(); ++i) {
    current.push_back(tokens[i]);
    if (!is_terminal(tokens[i])) continue;
    // Absorb runs like "?!" and a glued closing quote.
    while (i + 1 < tokens.size() &&
           (is_terminal(tokens[i + 1]) ||
            (tokens[i + 1].is_punct('\'') && !tokens[i + 1].space_before))) {
      current.push_back(tokens[++i]);
    }
    bool has_word = false;
    for (const auto& t : current) has_word |= t.is_word();
    if (has_word || sentences.empty()) {
      sentences.push_back(std::move(current));
    } else {
      for (auto& t : current) sentences.back().push_back(std::move(t));
    }
    current.clear();
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  for (auto& s : sentences) {
    if (!s.empty()) s.front().space_before = false;
    reindex(s);
  }
  return sentences;
}

std::string render(const TokenSeq& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty() && t.space_before) out += ' ';
    out += t.surface;
  }
  return out;
}

void reindex(TokenSeq& tokens) {
  for (size_t i = 0; i < tokens.size(); ++i) tokens[i].index = static_cast<int>(i);
}

Token make_word(std::string surface, bool space_before) {
  Token t;
  t.normalized = text::lower(surface);
  t.surface = std::move(surface);
  t.kind = TokenKind::kWord;
  t.space_before = space_before;
  return t;
}

Token make_punct(char c) {
  return Token{std::string(1, c), std::string(1, c), TokenKind::kPunctuation, 0, false};
}

}  // namespace parley
