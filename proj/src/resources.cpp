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

#include "parley/resources.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <set>

#include "parley/error.hpp"
#include "parley/text.hpp"

namespace parley {
namespace {

namespace fs = std::filesystem;

struct Line {
  size_t number;
  std::string text;
};

std::vector<Line> numbered_lines(const std::string& content) {
  std::vector<Line> out;
  size_t n = 0;
  for (auto& line : text::split(content, '\n')) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line[0] == '#') continue;
    out.push_back({n, line});
  }
  return out;
}

[[noreturn]] void bad(const std::string& file, size_t line, const std::string& what) {
  throw Error(ErrorCode::kDataFile, file + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> fields(const std::string& file, const Line& l, size_t n) {
  auto f = text::split(l.text, '\t');
  if (f.size() != n) {
    bad(file, l.number, "expected " + std::to_string(n) + " tab-separated fields, got " +
                            std::to_string(f.size()));
  }
  for (const auto& x : f) {
    if (text::trim(x).empty()) bad(file, l.number, "empty field");
  }
  return f;
}

std::string read(const std::string& dir, const std::string& name) {
  return text::read_file((fs::path(dir) / name).string());
}

}  // namespace

std::string_view to_string(PersonaId id) {
  switch (id) {
    case PersonaId::kChristine: return "christine";
    case PersonaId::kStephan: return "stephan";
    case PersonaId::kEmina: return "emina";
    case PersonaId::kChristoph: return "christoph";
    case PersonaId::kIngrid: return "ingrid";
  }
  return "?";
}

PersonaId persona_from_string(std::string_view s) {
  const std::string low = text::lower(s);
  for (PersonaId id : kAllPersonas) {
    if (to_string(id) == low) return id;
  }
  throw Error(ErrorCode::kUnknownPersona, "unknown persona '" + std::string(s) + "'");
}

std::string_view to_string(ContentKind k) {
  switch (k) {
    case ContentKind::kStory: return "story";
    case ContentKind::kJoke: return "joke";
    case ContentKind::kNews: return "news";
    case ContentKind::kSong: return "song";
  }
  return "?";
}

std::string ContentItem::closing() const { return text::replace_all(close, "{title}", title); }

std::vector<ContentItem> parse_content(const std::string& data, const std::string& name) {
  std::vector<ContentItem> items;
  size_t header_line = 0;
  auto finish = [&]() {
    if (items.empty()) return;
    const ContentItem& it = items.back();
    if (it.segments.empty()) bad(name, header_line, "item '" + it.title + "' has no segments");
    if (it.close.find("{title}") == std::string::npos)
      bad(name, header_line, "closing of '" + it.title + "' lacks {title}");
  };
  for (const auto& l : numbered_lines(data)) {
    if (l.text.starts_with("[item]")) {
      finish();
      header_line = l.number;
      const std::string rest = text::trim(l.text.substr(6));
      const auto kpos = rest.find("kind=");
      const auto tpos = rest.find("title=");
      if (kpos == std::string::npos || tpos == std::string::npos || tpos < kpos)
        bad(name, l.number, "expected [item] kind=<kind> title=<title>");
      const std::string kind = text::trim(rest.substr(kpos + 5, tpos - kpos - 5));
      ContentItem item;
      if (kind == "story") item.kind = ContentKind::kStory;
      else if (kind == "joke") item.kind = ContentKind::kJoke;
      else if (kind == "news") item.kind = ContentKind::kNews;
      else if (kind == "song") item.kind = ContentKind::kSong;
      else bad(name, l.number, "unknown content kind '" + kind + "'");
      item.title = text::trim(rest.substr(tpos + 6));
      if (item.title.empty()) bad(name, l.number, "empty title");
      items.push_back(std::move(item));
      continue;
    }
    if (items.empty()) bad(name, l.number, "line before the first [item]");
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) bad(name, l.number, "expected intro:, seg: or close:");
    const std::string key = l.text.substr(0, colon);
    const std::string value = text::trim(l.text.substr(colon + 1));
    if (value.empty()) bad(name, l.number, "empty " + key);
    if (key == "intro") items.back().intro = value;
    else if (key == "seg") items.back().segments.push_back(value);
    else if (key == "close") items.back().close = value;
    else bad(name, l.number, "unknown key '" + key + "'");
  }
  finish();
  return items;
}

std::vector<AdviceRule> parse_advice(const std::string& data, const std::string& name) {
  std::vector<AdviceRule> rules;
  std::set<std::pair<std::string, int>> seen;
  for (const auto& l : numbered_lines(data)) {
    const auto f = fields(name, l, 5);
    AdviceRule r;
    r.name = f[0];
    auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), r.priority);
    if (ec != std::errc() || ptr != f[1].data() + f[1].size()) bad(name, l.number, "bad priority");
    r.verb = text::lower(f[2]);
    if (f[3] != "-") {
      for (const auto& group : text::split(f[3], ',')) {
        std::vector<std::string> alts;
        for (const auto& a : text::split(group, '|')) alts.push_back(text::lower(text::trim(a)));
        r.keywords.push_back(std::move(alts));
      }
    }
    r.response = f[4];
    const std::string trigger = r.verb + "/" + f[3];
    if (!seen.insert({trigger, r.priority}).second)
      bad(name, l.number, "duplicate trigger and priority");
    const char last = r.response.back();
    if (last != '.' && last != '!' && last != '?') bad(name, l.number, "template is not a sentence");
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<QaEntry> parse_qa(const std::string& data, const std::string& name) {
  std::vector<QaEntry> out;
  for (const auto& l : numbered_lines(data)) {
    const auto f = fields(name, l, 2);
    QaEntry e;
    e.pattern = text::split(text::lower(text::trim(f[0])), ' ');
    if (!e.pattern.empty() && e.pattern.back() == "*") {
      e.wildcard = true;
      e.pattern.pop_back();
    }
    if (e.pattern.empty()) bad(name, l.number, "empty pattern");
    for (const auto& w : e.pattern)
      if (w == "*") bad(name, l.number, "'*' is only allowed at the end of a pattern");
    e.answer = f[1];
    out.push_back(std::move(e));
  }
  return out;
}

Resources Resources::load(const std::string& dir) {
  Resources r;
  r.data_dir = dir;
  r.lexicon = Lexicon::from_strings(read(dir, "lexicon.tsv"), read(dir, "dictionary.txt"));

  for (const auto& l : numbered_lines(read(dir, "phrases.tsv"))) {
    const auto f = fields("phrases.tsv", l, 2);
    r.phrases[f[0]].push_back(f[1]);
  }

  for (const auto& l : numbered_lines(read(dir, "personas.tsv"))) {
    const auto f = fields("personas.tsv", l, 7);
    PersonaDescriptor d;
    try {
      d.id = persona_from_string(f[0]);
    } catch (const Error&) {
      bad("personas.tsv", l.number, "unknown persona id '" + f[0] + "'");
    }
    d.display_name = f[1];
    d.pattern = f[2];
    d.description = f[3];
    d.avatar = f[4];
    d.greeting_named = f[5];
    d.greeting_anonymous = f[6];
    r.personas.push_back(std::move(d));
  }
  for (PersonaId id : kAllPersonas) {
    const bool found = std::any_of(r.personas.begin(), r.personas.end(),
                                   [&](const PersonaDescriptor& d) { return d.id == id; });
    if (!found || r.personas.size() != 5)
      throw Error(ErrorCode::kDataFile, "personas.tsv must list each of the five personas once");
  }

  for (const auto& l : numbered_lines(read(dir, "persona_lines.tsv"))) {
    const auto f = fields("persona_lines.tsv", l, 3);
    PersonaId id;
    try {
      id = persona_from_string(f[0]);
    } catch (const Error&) {
      bad("persona_lines.tsv", l.number, "unknown persona id '" + f[0] + "'");
    }
    r.persona_lines[{id, f[1]}].push_back(f[2]);
  }

  r.content = parse_content(read(dir, "content.txt"), "content.txt");
  r.advice = parse_advice(read(dir, "advice.tsv"), "advice.tsv");
  r.qa = parse_qa(read(dir, "qa.tsv"), "qa.tsv");

  for (const auto& l : numbered_lines(read(dir, "aphorisms.tsv"))) {
    const auto f = fields("aphorisms.tsv", l, 3);
    if (f[1] != "positive" && f[1] != "negative") bad("aphorisms.tsv", l.number, "bad polarity");
    r.aphorisms.push_back({text::lower(f[0]), f[1] == "positive", f[2]});
  }

  for (const auto& l : numbered_lines(read(dir, "report.tsv"))) {
    const auto f = fields("report.tsv", l, 2);
    if (f[0] == "preamble") r.report_preamble = f[1];
    else if (f[0] == "praise") r.report_praise = f[1];
    else bad("report.tsv", l.number, "unknown report kind '" + f[0] + "'");
  }
  if (r.report_preamble.empty() || r.report_praise.empty())
    throw Error(ErrorCode::kDataFile, "report.tsv needs preamble and praise lines");

  const fs::path scripts = fs::path(dir) / "scripts";
  std::error_code ec;
  if (fs::is_directory(scripts, ec)) {
    for (const auto& entry : fs::directory_iterator(scripts)) {
      if (entry.path().extension() == ".txt")
        r.scripts[entry.path().stem().string()] = entry.path().string();
    }
  }
  return r;
}

const PersonaDescriptor& Resources::persona(PersonaId id) const {
  for (const auto& d : personas) {
    if (d.id == id) return d;
  }
  throw Error(ErrorCode::kUnknownPersona, "persona not loaded");
}

const std::vector<std::string>& Resources::phrase_list(const std::string& kind) const {
  static const std::vector<std::string> kEmpty;
  auto it = phrases.find(kind);
  return it == phrases.end() ? kEmpty : it->second;
}

const std::string& Resources::phrase(const std::string& kind) const {
  const auto& list = phrase_list(kind);
  if (list.empty()) throw Error(ErrorCode::kDataFile, "phrases.tsv lacks kind '" + kind + "'");
  return list.front();
}

const std::vector<std::string>& Resources::lines(PersonaId id, const std::string& kind) const {
  static const std::vector<std::string> kEmpty;
  auto it = persona_lines.find({id, kind});
  return it == persona_lines.end() ? kEmpty : it->second;
}

}  // namespace parley
