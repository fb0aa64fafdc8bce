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

#include "parley/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "parley/error.hpp"
#include "parley/feedback.hpp"
#include "parley/http_api.hpp"
#include "parley/replay.hpp"
#include "parley/service.hpp"
#include "parley/text.hpp"

#ifndef PARLEY_DEFAULT_DATA_DIR
#define PARLEY_DEFAULT_DATA_DIR "data"
#endif

namespace parley {
namespace {

bool data_error(ErrorCode c) {
  return c == ErrorCode::kDataFile || c == ErrorCode::kIoError || c == ErrorCode::kEmptyTopic ||
         c == ErrorCode::kDuplicateQuestion;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!text::trim(line).empty()) out.push_back(line);
  }
  return out;
}

void open_store(DiscourseStore& store, const std::string& path, std::ostream& err) {
  if (path.empty()) return;
  if (std::filesystem::exists(path)) {
    auto loaded = DiscourseStore::load(path);
    for (const auto& e : loaded.errors)
      err << "warning: " << path << ":" << e.line << ": " << e.message << "\n";
    store = std::move(loaded.store);
  }
  store.attach_journal(path);
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot write " + path);
  f << content;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"parley: English conversation practice with five chatting partners"};
  app.require_subcommand(1);
  std::string data_dir = PARLEY_DEFAULT_DATA_DIR;
  app.add_option("--data-dir", data_dir, "data directory")->check(CLI::ExistingDirectory);

  auto* chat = app.add_subcommand("chat", "chat with a persona on stdin/stdout");
  std::string persona, user, clock, store_path;
  uint32_t seed = 0;
  chat->add_option("--persona", persona, "christine, stephan, emina, christoph or ingrid")->required();
  chat->add_option("--user", user, "user id")->required();
  chat->add_option("--seed", seed, "rng seed");
  chat->add_option("--clock", clock, "fixed clock, ISO 8601");
  chat->add_option("--store", store_path, "discourse store file (loaded, then appended)");
  bool opens = false;
  chat->add_flag("--opens", opens, "the persona speaks first");

  auto* interview = app.add_subcommand("interview", "run a scripted interview; answers on stdin");
  std::string script, out_path, answers_path, label;
  interview->add_option("--script", script, "script file")->required();
  interview->add_option("--seed", seed, "rng seed")->required();
  interview->add_option("--out", out_path, "write transcript and report here");
  interview->add_option("--answers", answers_path, "read answers from this file instead of stdin");
  interview->add_option("--clock", clock, "fixed clock, ISO 8601");
  interview->add_option("--user", user, "user id");
  interview->add_option("--label", label, "speaker label of the user");

  auto* check = app.add_subcommand("check", "flag spelling and grammar, one sentence per line");
  std::string check_file;
  check->add_option("textfile", check_file, "input file")->required();
  check->add_option("--user", user, "user name, never flagged");

  auto* replay = app.add_subcommand("replay", "run a dialog setup file");
  std::string setup_file;
  replay->add_option("setup", setup_file, "setup file")->required();
  replay->add_option("--out", out_path, "write the transcript here");

  auto* serve = app.add_subcommand("serve", "start the HTTP API");
  int port = 8080;
  std::string host = "127.0.0.1", web_dir;
  serve->add_option("--port", port, "port");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--store", store_path, "discourse store file");
  serve->add_option("--web-dir", web_dir, "static files served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Resources res = Resources::load(data_dir);

    if (*chat) {
      DiscourseStore store;
      open_store(store, store_path, err);
      SessionManager manager(res, store);
      SessionSpec spec;
      spec.user_id = user;
      spec.persona = persona_from_string(persona);
      if (chat->count("--seed")) spec.seed = seed;
      if (!clock.empty()) spec.clock = parse_iso8601(clock);
      const std::string id = manager.create_session(spec);
      const std::string name = res.persona(*spec.persona).display_name;
      if (opens) out << name << ": " << manager.open_greeting(id).reply << "\n" << std::flush;
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (text::trim(line).empty()) continue;
        if (line == "/quit") break;
        out << name << ": " << manager.post_message(id, line).reply << "\n" << std::flush;
      }
      manager.close_session(id);
      return 0;
    }

    if (*interview) {
      DialogSetup setup;
      setup.script = script;
      setup.seed = seed;
      setup.user_id = user.empty() ? "user" : user;
      setup.label = label.empty() ? text::capitalize(setup.user_id) : label;
      if (!clock.empty()) setup.clock = parse_iso8601(clock);
      if (answers_path.empty()) {
        setup.turns = read_lines(in);
      } else {
        std::ifstream f(answers_path);
        if (!f) throw Error(ErrorCode::kIoError, "cannot read " + answers_path);
        setup.turns = read_lines(f);
      }
      const DialogRun run = run_dialog(setup, res);
      write_output(out_path, run.transcript, out);
      if (!run.report) err << "note: the interview did not finish; no report\n";
      return 0;
    }

    if (*check) {
      std::ifstream f(check_file);
      if (!f) throw Error(ErrorCode::kIoError, "cannot read " + check_file);
      const auto lines = read_lines(f);
      size_t flagged = 0;
      std::optional<std::string> name;
      if (!user.empty()) name = user;
      for (size_t i = 0; i < lines.size(); ++i) {
        auto flag = check_text(lines[i], res.lexicon, name);
        if (!flag) continue;
        ++flagged;
        std::vector<std::string> kinds;
        for (auto k : flag->kinds) kinds.emplace_back(to_string(k));
        out << (i + 1) << "\t" << text::join(kinds, ",") << "\t" << lines[i] << "\n";
      }
      out << flagged << " of " << lines.size() << " sentences flagged\n";
      return 0;
    }

    if (*replay) {
      const DialogSetup setup = parse_setup(text::read_file(setup_file), setup_file);
      const auto base = std::filesystem::path(setup_file).parent_path().string();
      const DialogRun run = run_dialog(setup, res, base.empty() ? "." : base);
      write_output(out_path, run.transcript, out);
      return 0;
    }

    if (*serve) {
      DiscourseStore store;
      open_store(store, store_path, err);
      SessionManager manager(res, store);
      HttpApi api(manager, web_dir);
      err << "listening on http://" << host << ":" << port << "\n";
      if (!api.listen(host, port)) {
        err << "error: cannot listen on " << host << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return data_error(e.code()) ? 2 : 1;
  }
  return 1;
}

}  // namespace parley
