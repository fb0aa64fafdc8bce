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

#include <gtest/gtest.h>

#include "parley/error.hpp"
#include "parley/text.hpp"
#include "parley/tokenizer.hpp"

namespace parley {
namespace {

std::vector<std::string> surfaces(const TokenSeq& t) {
  std::vector<std::string> out;
  for (const auto& x : t) out.push_back(x.surface);
  return out;
}

TEST(Tokenize, SplitsPunctuation) {
  EXPECT_EQ(surfaces(tokenize("Hello, Christine.")),
            (std::vector<std::string>{"Hello", ",", "Christine", "."}));
}

TEST(Tokenize, PlainWords) {
  EXPECT_EQ(surfaces(tokenize("I like play computer game.")),
            (std::vector<std::string>{"I", "like", "play", "computer", "game", "."}));
}

TEST(Tokenize, EmptyInputThrows) {
  for (const char* s : {"", "   ", "\t\n"}) {
    try {
      tokenize(s);
      FAIL() << "no throw for '" << s << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
    }
  }
}

TEST(Tokenize, Contractions) {
  const auto t = tokenize("you can't sing, I'm sure it's fine");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"you", "ca", "n't", "sing", ",", "I", "'m", "sure",
                                                   "it", "'s", "fine"}));
  EXPECT_EQ(t[1].normalized, "can");
}

TEST(Tokenize, GluedComma) {
  EXPECT_EQ(surfaces(tokenize("sorry,I haven't had this exam")),
            (std::vector<std::string>{"sorry", ",", "I", "have", "n't", "had", "this", "exam"}));
}

TEST(Tokenize, RenderRestoresCollapsedText) {
  for (const char* s : {"Hello,   Christine.", "yes. I am very happy this week.",
                        "Little Johnny came running into the house and asked, 'Mommy, can little girls have babies?'",
                        "sorry,I haven't had this exam"}) {
    std::string collapsed;
    for (char c : std::string(s)) {
      if (c == ' ' && !collapsed.empty() && collapsed.back() == ' ') continue;
      collapsed += c;
    }
    EXPECT_EQ(render(tokenize(s)), collapsed);
  }
}

TEST(Tokenize, IndicesAreConsecutive) {
  const auto t = tokenize("I watch TV to learn English.");
  for (size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].index, static_cast<int>(i));
}

TEST(SplitSentences, SplitsAfterTerminals) {
  const auto parts = split_sentences(tokenize("yes. I am very happy this week."));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(render(parts[0]), "yes.");
  EXPECT_EQ(render(parts[1]), "I am very happy this week.");
  EXPECT_EQ(parts[1].front().index, 0);
}

TEST(SplitSentences, ClosingQuoteStays) {
  const auto parts = split_sentences(tokenize("'No,' said his mom, 'Of course not.' Then?"));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(render(parts[0]), "'No,' said his mom, 'Of course not.'");
}

TEST(Text, Helpers) {
  EXPECT_EQ(text::lower("HeLLo"), "hello");
  EXPECT_EQ(text::trim("  a b \n"), "a b");
  EXPECT_EQ(text::split("a\tb\t", '\t'), (std::vector<std::string>{"a", "b", ""}));
  EXPECT_EQ(text::join({"a", "b"}, ", "), "a, b");
  EXPECT_EQ(text::capitalize("you are"), "You are");
  EXPECT_EQ(text::decapitalize("You are"), "you are");
  EXPECT_TRUE(text::is_all_digits("2005"));
  EXPECT_FALSE(text::is_all_digits("20a5"));
  EXPECT_EQ(text::replace_all("a{x}b{x}", "{x}", "-"), "a-b-");
}

}  // namespace
}  // namespace parley
