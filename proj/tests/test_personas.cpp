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

#include <algorithm>
#include <set>

#include "parley/error.hpp"
#include "parley/personas.hpp"
#include "parley/rng.hpp"
#include "support.hpp"

namespace parley {
namespace {

using testing::res;

// One open session with a Responder over its own store.
struct Chat {
  explicit Chat(PersonaId p, const std::string& user = "u") : responder(res(), store) {
    store.open_session("s1", user, "persona:" + std::string(to_string(p)));
    state = responder.new_state(p, "s1", user);
  }
  std::string say(const std::string& text, TimePoint now = testing::weekday_morning()) {
    last = responder.respond(state, text, now);
    return last.text;
  }
  DiscourseStore store;
  Responder responder;
  PersonaState state;
  Response last;
};

TEST(Personas, ClosedSetOfFive) {
  std::set<std::string> names;
  for (auto p : kAllPersonas) {
    names.insert(std::string(to_string(p)));
    EXPECT_EQ(persona_from_string(to_string(p)), p);
  }
  EXPECT_EQ(names.size(), 5u);
  EXPECT_THROW(persona_from_string("robot"), Error);
  EXPECT_EQ(res().personas.size(), 5u);
}

TEST(Emina, PastProbe) {
  Chat c(PersonaId::kEmina);
  EXPECT_EQ(c.say("I am very happy this week."), "Were you happy before?");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kPastProbe);
}

TEST(Emina, SeedQuestionThenEcho) {
  Chat c(PersonaId::kEmina);
  EXPECT_EQ(c.say("Hi, Emina."), "Hello! Do you like the Internet?");
  EXPECT_EQ(c.say("Yes."), "Oh, you like the Internet. Why do you like the Internet?");
  EXPECT_EQ(c.say("because I can get any information I need."),
            "ha, you like the Internet because you can get any information you need.");
}

TEST(Emina, EchoAndWhyOnFirstMention) {
  Chat c(PersonaId::kEmina);
  const auto r = c.say("I watched TV.");
  EXPECT_NE(r.find("Why did you watch TV?"), std::string::npos) << r;
}

TEST(Stephan, PublishedSequence) {
  Chat c(PersonaId::kStephan);
  EXPECT_EQ(c.say("I want to cry these days."), "oh? Why?");
  EXPECT_EQ(c.say("I have failed in my final examination."), "So terrible?");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kSympatheticProbe);
  EXPECT_EQ(c.say("Yes, this course is extremely important one in my major."), "then?");
  EXPECT_EQ(c.say("I must learn it again in next semester."), "oh.");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kContinuationCue);
}

TEST(Stephan, NeverRepeatsCue) {
  const std::vector<std::string> inputs = {"I am sad.", "I lost my book.", "I like music.", "It is raining.",
                                           "I failed.", "I cry.", "My friend is here.", "It was terrible."};
  for (uint32_t seed = 0; seed < 20; ++seed) {
    Chat c(PersonaId::kStephan);
    Rng rng(seed);
    std::string prev;
    for (int i = 0; i < 40; ++i) {
      const auto r = c.say(inputs[rng.index(inputs.size())]);
      EXPECT_NE(r, prev) << "seed " << seed << " turn " << i;
      prev = r;
    }
  }
}

TEST(Christoph, AdviceExamples) {
  Chat c(PersonaId::kChristoph);
  EXPECT_EQ(c.say("Hi.", testing::saturday()), "Happy weekend. Do you watch TV?");
  EXPECT_EQ(c.say("Yes."),
            "Oh. You watch TV. But watching TV wastes the students too much time, and even hurts their eyes.");
  EXPECT_EQ(c.say("I watch TV to learn English."),
            "The best way to learn English is to use it as often as possible, for example, to chat with me everyday.");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kAdvice);
  EXPECT_EQ(c.say("I will face an English examination tomorrow."), "Everything ready? Believe yourself.");
}

TEST(Christoph, TenseInsensitive) {
  Chat a(PersonaId::kChristoph), b(PersonaId::kChristoph), d(PersonaId::kChristoph);
  const auto r1 = a.say("I watched TV to learn English.");
  const auto r2 = b.say("I am watching TV to learn English.");
  const auto r3 = d.say("I watch TV to learn English.");
  EXPECT_EQ(r1, r3);
  EXPECT_EQ(r2, r3);
}

TEST(Christoph, EncouragementFallback) {
  Chat c(PersonaId::kChristoph);
  c.say("My cat is grey.");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kEncouragement);
  EXPECT_FALSE(c.last.text.empty());
}

TEST(Ingrid, ComplimentAndAphorism) {
  Chat c(PersonaId::kIngrid);
  EXPECT_EQ(c.say("you are very clever."),
            "Yes, I am smart because I have a lot of knowledge in my brain. Are you clever?");
  EXPECT_EQ(c.say("No."), "Oh, You are not clever. To be clever one must learn and learn during all the life.");
  EXPECT_EQ(c.say("yes. I want to tell you a story now."), "please.");
}

TEST(Ingrid, ContradictionRecall) {
  Chat c(PersonaId::kIngrid);
  c.say("you can't sing a song.");
  c.store.close_session("s1");
  c.store.open_session("s2", "u", "persona:ingrid");
  c.state = c.responder.new_state(PersonaId::kIngrid, "s2", "u");
  EXPECT_EQ(c.say("can you sing a song."),
            "yes. I can sing a song. You have said you can't sing a song according to our previous dialog.");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kQaAnswer);
  ASSERT_EQ(c.last.meta.facts_consulted.size(), 1u);
  EXPECT_EQ(c.last.meta.facts_consulted[0].session_id, "s1");
}

TEST(Christine, GreetingWithRecallAndJoke) {
  Chat c(PersonaId::kChristine, "john");
  c.store.close_session("s1");
  c.store.open_session("s0", "john", "persona:christine");
  c.store.record_turn("s0", Speaker::kUser, "my name is John.", "-", "t");
  c.store.update_profile({"john", "s0", "John", std::nullopt});
  c.store.close_session("s0");
  c.store.open_session("s2", "john", "persona:christine");
  c.state = c.responder.new_state(PersonaId::kChristine, "s2", "john");
  EXPECT_EQ(c.say("Hello, Christine."),
            "Good morning, John. I have known your name from our previous dialog. This story is a joke.");
  EXPECT_EQ(c.last.meta.content_item, "Baby Talk");
  // Run the joke to its end.
  std::string r;
  for (int i = 0; i < 10 && r.find("That is all I know") == std::string::npos; ++i) r = c.say("ha, ha!");
  EXPECT_NE(r.find("That is all I know about the joke of Baby Talk."), std::string::npos) << r;
}

TEST(Christine, AnonymousGreetingAndClock) {
  Chat a(PersonaId::kChristine), b(PersonaId::kChristine);
  const auto m = a.say("Hello.", testing::weekday_morning());
  const auto w = b.say("Hello.", testing::saturday());
  EXPECT_TRUE(m.starts_with("Good morning.")) << m;
  EXPECT_TRUE(w.starts_with("Happy weekend")) << w;
  EXPECT_EQ(m.find("previous dialog"), std::string::npos);
}

TEST(Christine, ExhaustedContentEchoes) {
  Chat c(PersonaId::kChristine);
  c.say("Hello.");
  bool echoed = false;
  for (int i = 0; i < 200 && !echoed; ++i) {
    c.say("I see.");
    echoed = c.last.meta.strategy() == Strategy::kExhaustedEcho;
  }
  EXPECT_TRUE(echoed);
  EXPECT_TRUE(c.last.text.starts_with("oh")) << c.last.text;
}

std::vector<std::string> uniformity_sentences() {
  return text::data_lines(testing::corpus_file("uniformity.txt"));
}

TEST(SharedAnswer, UniformAcrossPersonasFreshStore) {
  const auto lines = uniformity_sentences();
  ASSERT_GE(lines.size(), 10u);
  for (const auto& line : lines) {
    std::set<std::string> answers;
    for (auto p : kAllPersonas) {
      Chat c(p);
      answers.insert(c.say(line));
    }
    EXPECT_EQ(answers.size(), 1u) << line;
  }
}

TEST(SharedAnswer, UniformMidContent) {
  for (const char* follow : {"what is the answer?", "Please then."}) {
    std::set<std::string> answers;
    for (auto p : kAllPersonas) {
      Chat c(p);
      c.say("Please tell me a joke.");
      answers.insert(c.say(follow));
    }
    EXPECT_EQ(answers.size(), 1u) << follow;
  }
}

TEST(SharedAnswer, SongDeliveredWhole) {
  Chat c(PersonaId::kStephan);
  EXPECT_EQ(c.say("Please sing a song for me."), "Daisy, Daisy.\nGive me your answer do.\nI am half crazy.");
  EXPECT_EQ(c.last.meta.strategy(), Strategy::kContentDelivery);
}

TEST(Respond, EmptyAndClosed) {
  Chat c(PersonaId::kIngrid);
  EXPECT_THROW(c.say("   "), Error);
  c.store.close_session("s1");
  try {
    c.say("Hello.");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSessionClosed);
  }
}

TEST(Respond, RecordsTurns) {
  Chat c(PersonaId::kEmina);
  c.say("I am very happy this week.");
  const auto log = c.store.session("s1");
  ASSERT_EQ(log->turns.size(), 2u);
  EXPECT_EQ(log->turns[0].speaker, Speaker::kUser);
  EXPECT_EQ(log->turns[0].text, "I am very happy this week.");
  EXPECT_EQ(log->turns[1].speaker, Speaker::kSystem);
  EXPECT_EQ(log->turns[1].text, "Were you happy before?");
  EXPECT_NE(log->turns[0].summary.find("mood=declarative"), std::string::npos);
}

// Random word salad: never throws, never empty, always names a strategy.
TEST(RespondProperty, TotalAndAttributed) {
  std::vector<std::string> words;
  for (const auto& [w, e] : res().lexicon.entries()) words.push_back(e.word);
  std::sort(words.begin(), words.end());
  const std::vector<std::string> punct = {".", "?", "!", ",", ""};
  for (auto p : kAllPersonas) {
    Chat c(p);
    Rng rng(static_cast<uint32_t>(p) + 7);
    for (int i = 0; i < 300; ++i) {
      std::string s;
      const auto n = 1 + rng.index(9);
      for (uint32_t k = 0; k < n; ++k) s += (k ? " " : "") + words[rng.index(words.size())];
      s += punct[rng.index(punct.size())];
      Response r;
      ASSERT_NO_THROW(r = c.responder.respond(c.state, s, testing::weekday_morning())) << s;
      EXPECT_FALSE(r.text.empty()) << s;
      ASSERT_FALSE(r.meta.strategies.empty()) << s;
      EXPECT_FALSE(to_string(r.meta.strategy()).empty());
    }
  }
}

TEST(RespondProperty, Deterministic) {
  const std::vector<std::string> lines = {"Hello.", "I like music.", "Do you like music?", "Yes.",
                                          "I am tired.", "Please tell me a joke.", "ha, ha!"};
  for (auto p : kAllPersonas) {
    Chat a(p), b(p);
    for (const auto& l : lines) EXPECT_EQ(a.say(l), b.say(l)) << to_string(p) << ": " << l;
  }
}

TEST(MatchWords, DropsDegreeAdverbs) {
  const auto w = match_words(testing::P("you are very clever."), res().lexicon);
  EXPECT_EQ(w, (std::vector<std::string>{"you", "are", "clever"}));
  EXPECT_EQ(match_words(testing::P("I can't go."), res().lexicon),
            (std::vector<std::string>{"i", "can", "not", "go"}));
}

}  // namespace
}  // namespace parley
