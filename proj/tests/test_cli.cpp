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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"

namespace parley {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI binary through the shell; stderr is discarded.
Run cli(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string("'") + PARLEY_CLI_PATH + "' " + args;
  if (!stdin_file.empty()) cmd += " < '" + stdin_file + "'";
  cmd += " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("parley_cli_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name, std::ios::binary) << content;
    return (path_ / name).string();
  }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::string replay_answers() {
  std::string out;
  for (const auto& line : text::split(testing::corpus_file("interview/replay.setup"), '\n'))
    if (line.starts_with("> ")) out += line.substr(2) + "\n";
  return out;
}

TEST(Cli, UsageExitCodes) {
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("--help").code, 0);
  EXPECT_EQ(cli("chat").code, 1);
  EXPECT_EQ(cli("frobnicate").code, 1);
  EXPECT_EQ(cli("chat --persona bob --user x", "/dev/null").code, 1);
}

TEST(Cli, ReplayReproducesGoldens) {
  for (const char* name : {"christine", "stephan", "emina", "christoph", "ingrid"}) {
    const auto r = cli("replay '" + testing::corpus_path(std::string("dialogs/") + name + ".setup") + "'");
    EXPECT_EQ(r.code, 0) << name;
    EXPECT_EQ(r.out, testing::corpus_file(std::string("dialogs/") + name + ".golden")) << name;
  }
  const auto r = cli("replay '" + testing::corpus_path("interview/replay.setup") + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, testing::corpus_file("interview/replay.golden"));
}

TEST(Cli, InterviewTwiceIdentical) {
  TempDir d("iv");
  const auto answers = d.file("answers.txt", replay_answers());
  const std::string args = "interview --script job-interview --seed 15 --clock 2026-10-14T15:00:00 --user petra --label Petra";
  const auto a = cli(args, answers);
  const auto b = cli(args, answers);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, testing::corpus_file("interview/replay.golden"));
  // --out and --answers give the same bytes.
  const auto out = d.str() + "/t.txt";
  EXPECT_EQ(cli(args + " --answers '" + answers + "' --out '" + out + "'", "/dev/null").code, 0);
  EXPECT_EQ(text::read_file(out), a.out);
  // Another seed changes only the order of the random topics.
  const auto c = cli("interview --script job-interview --seed 42 --clock 2026-10-14T15:00:00", answers);
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out, a.out);
}

TEST(Cli, InterviewScriptErrors) {
  TempDir d("bad");
  EXPECT_EQ(cli("interview --script /nonexistent.txt --seed 1", "/dev/null").code, 2);
  const auto empty = d.file("empty.txt", "[topic] a\nmode: random\n");
  EXPECT_EQ(cli("interview --script '" + empty + "' --seed 1", "/dev/null").code, 2);
  const auto dup = d.file("dup.txt", "[topic] a\nmode: random\nQ: One?\nQ: One?\n");
  EXPECT_EQ(cli("interview --script '" + dup + "' --seed 1", "/dev/null").code, 2);
  EXPECT_EQ(cli("interview --script job-interview", "/dev/null").code, 1);
}

TEST(Cli, BrokenDataDirectory) {
  TempDir d("data");
  fs::copy(PARLEY_TEST_DATA_DIR, d.str(), fs::copy_options::recursive);
  {
    std::ofstream f(d.str() + "/advice.tsv", std::ios::app);
    f << "broken line without tabs\n";
  }
  TempDir w("in");
  const auto t = w.file("t.txt", "I like music.\n");
  EXPECT_EQ(cli("--data-dir '" + d.str() + "' check '" + t + "'").code, 2);
  EXPECT_EQ(cli("--data-dir /nonexistent check '" + t + "'").code, 1);
}

TEST(Cli, Check) {
  TempDir d("check");
  const auto f = d.file("t.txt",
                        "yes, i receive english major bachelor degree.\nI like music.\n\nI like play computer game.\n");
  const auto r = cli("check '" + f + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "1\tcapitalization\tyes, i receive english major bachelor degree.\n"
            "3\tgrammar\tI like play computer game.\n"
            "2 of 3 sentences flagged\n");
  const auto n = d.file("n.txt", "my name is petra.\n");
  EXPECT_EQ(cli("check '" + n + "' --user petra").out, "0 of 1 sentences flagged\n");
  EXPECT_EQ(cli("check /nonexistent.txt").code, 2);
}

TEST(Cli, ChatAndStore) {
  TempDir d("chat");
  const auto store = d.str() + "/store.tsv";
  const auto in1 = d.file("in1.txt", "my name is John.\n/quit\nignored\n");
  const auto a = cli("chat --persona ingrid --user john --seed 1 --clock 2026-10-14T09:00:00 --store '" + store + "'", in1);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(text::split(a.out, '\n').size(), 2u) << a.out;
  EXPECT_TRUE(a.out.starts_with("Ingrid: ")) << a.out;
  const auto in2 = d.file("in2.txt", "Hello, Christine.\n");
  const auto b = cli("chat --persona christine --user john --seed 1 --clock 2026-10-14T09:00:00 --store '" + store + "'", in2);
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "Christine: Good morning, John. I have known your name from our previous dialog. This story is a joke.\n");
  const auto c = cli("chat --persona stephan --user john --opens --clock 2026-10-14T09:00:00 --store '" + store + "'", "/dev/null");
  EXPECT_EQ(c.out, "Stephan: Good morning, John. Happy to meet you again!\n");
}

}  // namespace
}  // namespace parley
