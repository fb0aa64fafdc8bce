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
#include <vector>

namespace parley {

enum class TokenKind { kWord, kPunctuation };

struct Token {
  std::string surface;
  // Lowercased; contraction parts carry their stem ("ca" -> "can").
  std::string normalized;
  TokenKind kind = TokenKind::kWord;
  int index = 0;
  // Whether whitespace preceded the token in the source text.
  bool space_before = false;

  bool is_word() const { return kind == TokenKind::kWord; }
  bool is_punct(char c) const {
    return kind == TokenKind::kPunctuation && surface.size() == 1 && surface[0] == c;
  }
  bool operator==(const Token&) const = default;
};

using TokenSeq = std::vector<Token>;

// Splits an utterance into words and the punctuation marks . , ? ! ' ;
// Contractions split as stem + n't/'s/'m/'re/'ll/'ve/'d.
// Throws Error(kEmptyInput) on empty or whitespace-only text.
TokenSeq tokenize(std::string_view text);

// Splits a token sequence after terminal punctuation (. ? !). A closing quote
// glued to the terminal stays with its sentence. Indices restart at 0.
std::vector<TokenSeq> split_sentences(const TokenSeq& tokens);

// Joins surfaces using the space_before flags (whitespace collapsed to one
// space, no leading space).
std::string render(const TokenSeq& tokens);

// Re-numbers indices 0..n-1.
void reindex(TokenSeq& tokens);

Token make_word(std::string surface, bool space_before = true);
Token make_punct(char c);

}  // namespace parley
