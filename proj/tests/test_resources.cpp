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

#include <filesystem>
#include <fstream>
#include <set>

#include "parley/error.hpp"
#include "parley/resources.hpp"
#include "support.hpp"

namespace parley {
namespace {

using testing::res;

std::string message_of(const std::function<void()>& f, ErrorCode expected) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error thrown";
  return "";
}

TEST(Content, Parses) {
  const auto items = parse_content(
      "[item] kind=joke title=A B\nintro: It is a joke.\nseg: one.\nseg: two.\nclose: End of {title}.\n", "c");
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0].kind, ContentKind::kJoke);
  EXPECT_EQ(items[0].title, "A B");
  EXPECT_EQ(items[0].segments, (std::vector<std::string>{"one.", "two."}));
  EXPECT_EQ(items[0].closing(), "End of A B.");
}

TEST(Content, Errors) {
  auto bad = [](const std::string& data) { return message_of([&] { parse_content(data, "c.txt"); }, ErrorCode::kDataFile); };
  EXPECT_NE(bad("[item] kind=joke title=X\nintro: i\nclose: {title}\n").find("c.txt"), std::string::npos);
  bad("[item] kind=opera title=X\nseg: s\nclose: {title}\n");
  bad("[item] kind=joke title=X\nseg: s\nclose: no placeholder\n");
  bad("seg: orphan\n");
  EXPECT_NE(bad("[item] kind=joke title=X\nseg: s\nclose: {title}\nwhat: ever\n").find(":4"), std::string::npos);
}

TEST(Advice, Parses) {
  const auto rules = parse_advice("r\t5\twatch\ttv|television,english\tWatch less.\nq\t1\tplay\t-\tPlay more.\n", "a");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].keywords, (std::vector<std::vector<std::string>>{{"tv", "television"}, {"english"}}));
  EXPECT_TRUE(rules[1].keywords.empty());
  EXPECT_EQ(rules[1].priority, 1);
}

TEST(Advice, Errors) {
  auto bad = [](const std::string& data) { parse_advice(data, "a.tsv"); };
  message_of([&] { bad("r\tfive\twatch\ttv\tT.\n"); }, ErrorCode::kDataFile);
  message_of([&] { bad("r\t5\twatch\ttv\n"); }, ErrorCode::kDataFile);
  message_of([&] { bad("r\t5\twatch\ttv\tT.\ns\t5\twatch\ttv\tU.\n"); }, ErrorCode::kDataFile);
  message_of([&] { bad("r\t5\twatch\ttv\tno end mark\n"); }, ErrorCode::kDataFile);
}

TEST(Qa, Parses) {
  const auto qa = parse_qa("can you sing\tyes.\ndo you like *\tMaybe {1}.\n", "q");
  ASSERT_EQ(qa.size(), 2u);
  EXPECT_FALSE(qa[0].wildcard);
  EXPECT_TRUE(qa[1].wildcard);
  EXPECT_EQ(qa[1].pattern, (std::vector<std::string>{"do", "you", "like"}));
  message_of([] { parse_qa("no tab here\n", "q"); }, ErrorCode::kDataFile);
  message_of([] { parse_qa("a * b\tx\n", "q"); }, ErrorCode::kDataFile);
}

TEST(Load, ShippedData) {
  const auto& r = res();
  EXPECT_EQ(r.personas.size(), 5u);
  EXPECT_EQ(r.persona(PersonaId::kIngrid).pattern, "hybrid");
  EXPECT_TRUE(r.scripts.count("job-interview"));
  EXPECT_FALSE(r.report_preamble.empty());
  EXPECT_FALSE(r.report_praise.empty());
  for (const auto& c : r.content) {
    EXPECT_FALSE(c.segments.empty()) << c.title;
    EXPECT_NE(c.close.find("{title}"), std::string::npos) << c.title;
  }
  std::set<std::pair<std::string, int>> seen;
  for (const auto& a : r.advice) {
    EXPECT_TRUE(seen.insert({a.verb + "|" + a.name, a.priority}).second) << a.name;
    const char last = a.response.back();
    EXPECT_TRUE(last == '.' || last == '!' || last == '?') << a.name;
  }
  EXPECT_THROW(r.phrase("no-such-kind"), Error);
}

TEST(Load, MissingDirectoryAndBrokenFile) {
  message_of([] { Resources::load("/nonexistent/data"); }, ErrorCode::kIoError);
  const auto dir = std::filesystem::temp_directory_path() / ("parley_res_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::copy(PARLEY_TEST_DATA_DIR, dir, std::filesystem::copy_options::recursive);
  std::ofstream(dir / "personas.tsv", std::ios::app) << "robot\tRobot\n";
  const auto msg = message_of([&] { Resources::load(dir.string()); }, ErrorCode::kDataFile);
  EXPECT_NE(msg.find("personas.tsv"), std::string::npos) << msg;
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace parley
