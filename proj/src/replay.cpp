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

#include "parley/replay.hpp"

#include <charconv>
#include <filesystem>

#include "parley/error.hpp"
#include "parley/service.hpp"
#include "parley/text.hpp"

namespace parley {
namespace {

[[noreturn]] void bad(const std::string& name, size_t line, const std::string& what) {
  throw Error(ErrorCode::kDataFile, name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

DialogSetup parse_setup(const std::string& content, const std::string& name) {
  DialogSetup s;
  size_t n = 0;
  for (auto line : text::split(content, '\n')) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with("> ")) {
      s.turns.push_back(line.substr(2));
      continue;
    }
    const std::string t = text::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) bad(name, n, "expected key: value or > line");
    const std::string key = t.substr(0, colon);
    const std::string value = text::trim(t.substr(colon + 1));
    try {
      if (key == "persona") s.persona = persona_from_string(value);
      else if (key == "prior-persona") s.prior_persona = persona_from_string(value);
      else if (key == "script") s.script = value;
      else if (key == "user") s.user_id = value;
      else if (key == "label") s.label = value;
      else if (key == "clock") s.clock = parse_iso8601(value);
      else if (key == "prior") s.prior.push_back(value);
      else if (key == "opens") s.persona_opens = value == "yes";
      else if (key == "seed") {
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), s.seed);
        if (ec != std::errc() || p != value.data() + value.size()) bad(name, n, "bad seed");
      } else {
        bad(name, n, "unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDataFile) throw;
      bad(name, n, e.what());
    }
  }
  if (!s.persona && s.script.empty()) bad(name, n, "needs persona: or script:");
  if (s.user_id.empty()) bad(name, n, "needs user:");
  if (s.label.empty()) s.label = text::capitalize(s.user_id);
  return s;
}

DialogRun run_dialog(const DialogSetup& setup, const Resources& res, const std::string& base_dir) {
  DiscourseStore store;
  SessionManager manager(res, store);
  DialogRun run;

  if (!setup.prior.empty()) {
    SessionSpec prior;
    prior.user_id = setup.user_id;
    prior.persona = setup.prior_persona ? setup.prior_persona : setup.persona;
    if (!prior.persona) prior.persona = PersonaId::kIngrid;
    prior.seed = setup.seed;
    prior.clock = setup.clock;
    const std::string id = manager.create_session(prior);
    for (const auto& line : setup.prior) manager.post_message(id, line);
    manager.close_session(id);
  }

  SessionSpec spec;
  spec.user_id = setup.user_id;
  spec.seed = setup.seed;
  spec.clock = setup.clock;
  std::string speaker;
  if (setup.persona) {
    spec.mode = SessionMode::kPersona;
    spec.persona = setup.persona;
    speaker = res.persona(*setup.persona).display_name;
  } else {
    spec.mode = SessionMode::kScenario;
    std::string path;
    if (auto it = res.scripts.find(setup.script); it != res.scripts.end()) {
      path = it->second;
    } else {
      std::filesystem::path p(setup.script);
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      path = p.string();
    }
    auto sc = std::make_shared<const ScenarioScript>(load_script(path));
    manager.register_script(sc);
    spec.script_id = sc->id;
    try {
      speaker = res.persona(persona_from_string(sc->interviewer)).display_name;
    } catch (const Error&) {
      speaker = text::capitalize(sc->interviewer);
    }
  }
  const std::string sid = manager.create_session(spec);

  auto say = [&](const std::string& who, const std::string& text) {
    run.transcript += who + ": " + text + "\n";
  };
  if (setup.persona_opens && setup.persona) {
    const auto r = manager.open_greeting(sid);
    say(speaker, r.reply);
    run.system_lines.push_back(r.reply);
  }
  for (const auto& line : setup.turns) {
    say(setup.label, line);
    run.user_lines.push_back(line);
    const MessageReply r = manager.post_message(sid, line);
    if (r.kind == ReplyKind::kFinished) {
      if (!r.reply.empty()) {
        run.report = r.reply;
        run.transcript += "\n" + speaker + ": " + r.reply + "\n";
      }
      break;
    }
    say(speaker, r.reply);
    run.system_lines.push_back(r.reply);
  }
  return run;
}

}  // namespace parley
