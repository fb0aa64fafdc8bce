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

#include <set>

#include "parley/error.hpp"
#include "parley/rng.hpp"
#include "support.hpp"

namespace parley {
namespace {

using testing::lex;
using testing::P;

std::string words_of(const ParsedSentence& p, Role r) { return p.text_of(r); }

TEST(Mood, PublishedExamples) {
  EXPECT_EQ(P("Do you watch TV?").mood, Mood::kInterrogative);
  EXPECT_EQ(P("Please sing a song for me.").mood, Mood::kImperative);
  EXPECT_EQ(P("I watch TV to learn English.").mood, Mood::kDeclarative);
  EXPECT_EQ(P("pardon").mood, Mood::kFragment);
}

TEST(Mood, Rules) {
  EXPECT_EQ(P("What is your name").mood, Mood::kInterrogative);  // wh start
  EXPECT_EQ(P("can you sing a song.").mood, Mood::kInterrogative);  // modal start
  EXPECT_EQ(P("you are happy?").mood, Mood::kInterrogative);  // terminal ?
  EXPECT_EQ(P("Tell me a story.").mood, Mood::kImperative);  // bare verb
  EXPECT_EQ(P("Yes.").mood, Mood::kFragment);
  EXPECT_EQ(P("Jilin normal university.").mood, Mood::kFragment);
}

TEST(Mood, GoldCorpus) {
  size_t n = 0;
  for (const auto& line : text::data_lines(testing::corpus_file("mood_gold.tsv"))) {
    const auto f = text::split(line, '\t');
    ASSERT_EQ(f.size(), 2u) << line;
    const auto parsed = parse_text(f[0], lex());
    ASSERT_EQ(parsed.size(), 1u) << f[0];
    EXPECT_EQ(to_string(parsed[0].mood), f[1]) << f[0];
    ++n;
  }
  EXPECT_GE(n, 40u);
}

TEST(Parse, CopulaWithTemporal) {
  const auto p = P("I am very happy this week.");
  EXPECT_EQ(p.mood, Mood::kDeclarative);
  EXPECT_EQ(words_of(p, Role::kSubject), "I");
  EXPECT_EQ(words_of(p, Role::kMainVerb), "am");
  EXPECT_TRUE(p.copular);
  EXPECT_EQ(p.tense, Tense::kPresent);
  EXPECT_EQ(words_of(p, Role::kComplement), "very happy");
  ASSERT_EQ(p.temporal_spans().size(), 1u);
  EXPECT_EQ(words_of(p, Role::kTemporal), "this week");
  EXPECT_FALSE(p.negated);
}

TEST(Parse, NegatedCopula) {
  const auto p = P("You are not clever.");
  EXPECT_EQ(words_of(p, Role::kSubject), "You");
  EXPECT_EQ(words_of(p, Role::kMainVerb), "are");
  EXPECT_TRUE(p.negated);
  EXPECT_EQ(words_of(p, Role::kNegation), "not");
  EXPECT_EQ(words_of(p, Role::kComplement), "clever");
}

TEST(Parse, UnknownWords) {
  const auto p = P("my favorate course is English liberary history");
  std::vector<std::string> unknown;
  for (int i : p.unknown_tokens) unknown.push_back(p.tokens[i].surface);
  EXPECT_EQ(unknown, (std::vector<std::string>{"favorate", "liberary"}));
}

TEST(Parse, Tense) {
  EXPECT_EQ(P("I will face an English examination tomorrow.").tense, Tense::kFuture);
  EXPECT_EQ(P("I have failed in my final examination.").tense, Tense::kPresent);
  EXPECT_EQ(P("I watched TV.").tense, Tense::kPast);
  EXPECT_EQ(P("I like the Internet.").tense, Tense::kPresent);
}

TEST(Parse, VerbGroup) {
  const auto p = P("you can't sing a song.");
  EXPECT_EQ(words_of(p, Role::kAuxiliary), "ca");
  EXPECT_TRUE(p.negated);
  ASSERT_TRUE(p.main_verb);
  EXPECT_EQ(p.main_verb_base, "sing");
  EXPECT_EQ(words_of(p, Role::kComplement), "a song");
}

TEST(Parse, InvertedQuestion) {
  const auto p = P("Do you like the Internet?");
  EXPECT_TRUE(p.inverted);
  EXPECT_EQ(words_of(p, Role::kSubject), "you");
  EXPECT_EQ(p.main_verb_base, "like");
}

TEST(Parse, EmptyThrows) {
  EXPECT_THROW(parse({}, lex()), Error);
}

TEST(Parse, MultipleSentences) {
  const auto ps = parse_text("thank you. I will face an English examination tomorrow.", lex());
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[1].tense, Tense::kFuture);
}

// Every token gets exactly one role, and rendering the tokens gives back
// the collapsed input.
TEST(ParseProperty, RolesPartitionGoldSentences) {
  for (const auto& line : text::data_lines(testing::corpus_file("mood_gold.tsv"))) {
    const std::string s = text::split(line, '\t')[0];
    const TokenSeq toks = tokenize(s);
    const auto p = parse(toks, lex());
    EXPECT_EQ(p.tokens, toks) << s;
    EXPECT_EQ(p.roles.size(), p.tokens.size()) << s;
    size_t covered = 0;
    for (Role r : {Role::kPrefix, Role::kWh, Role::kSubject, Role::kAuxiliary, Role::kNegation,
                   Role::kVerbAdverb, Role::kMainVerb, Role::kComplement, Role::kTemporal, Role::kTerminal})
      covered += p.indices(r).size();
    EXPECT_EQ(covered, toks.size()) << s;
  }
}

TEST(ParseProperty, UnknownWordTotality) {
  std::vector<std::string> words(lex().dictionary().begin(), lex().dictionary().end());
  std::sort(words.begin(), words.end());
  Rng rng(7);
  for (int n = 0; n < 500; ++n) {
    std::string s;
    const size_t len = 1 + rng.index(9);
    for (size_t i = 0; i < len; ++i) {
      if (rng.index(4) == 0) {
        std::string w;
        for (size_t k = 0, m = 2 + rng.index(6); k < m; ++k) w += static_cast<char>('a' + rng.index(26));
        s += w + " ";
      } else {
        s += words[rng.index(words.size())] + " ";
      }
    }
    EXPECT_NO_THROW(parse_text(s, lex())) << s;
  }
}

TEST(ParseProperty, Deterministic) {
  for (const char* s : {"I am very happy this week.", "Do you like the Internet?", "yes, i receive english major bachelor degree."}) {
    EXPECT_EQ(P(s), P(s));
  }
}

TEST(Lexicon, Lookup) {
  EXPECT_TRUE(lex().is("like", Category::kVerb));
  EXPECT_EQ(lex().verb_base("failed").value_or(""), "fail");
  ASSERT_NE(lex().conjugation("sing"), nullptr);
  EXPECT_EQ(lex().conjugation("sing")->past, "sang");
  EXPECT_TRUE(lex().dictionary_contains("computer"));
  EXPECT_FALSE(lex().dictionary_contains("favorate"));
}

TEST(Lexicon, TemporalPhrases) {
  std::set<std::string> got;
  for (const auto& p : lex().temporal_phrases()) got.insert(text::join(p, " "));
  EXPECT_EQ(got, (std::set<std::string>{"now", "these days", "this week", "this year", "today", "tomorrow", "tonight"}));
}

TEST(Lexicon, BadLineNamesLine) {
  try {
    Lexicon::from_strings("like\tverb\nbroken line without tab\n", "like\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDataFile);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

}  // namespace
}  // namespace parley
