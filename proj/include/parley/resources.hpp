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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parley/lexicon.hpp"

namespace parley {

enum class PersonaId { kChristine, kStephan, kEmina, kChristoph, kIngrid };

inline constexpr PersonaId kAllPersonas[] = {PersonaId::kChristine, PersonaId::kStephan,
                                             PersonaId::kEmina, PersonaId::kChristoph,
                                             PersonaId::kIngrid};

std::string_view to_string(PersonaId id);
// Throws Error(kUnknownPersona).
PersonaId persona_from_string(std::string_view s);

struct PersonaDescriptor {
  PersonaId id;
  std::string display_name;
  std::string pattern;  // active, reactive, proactive, hybrid
  std::string description;
  std::string avatar;
  std::string greeting_named;  // {tod}, {name}, {recall}
  std::string greeting_anonymous;
};

enum class ContentKind { kStory, kJoke, kNews, kSong };
std::string_view to_string(ContentKind k);

struct ContentItem {
  ContentKind kind;
  std::string title;
  std::string intro;
  std::vector<std::string> segments;
  std::string close;  // contains {title}

  std::string closing() const;
};

struct AdviceRule {
  std::string name;
  int priority = 0;
  std::string verb;
  // Every group must match; a group matches when any alternative occurs.
  std::vector<std::vector<std::string>> keywords;
  std::string response;
};

struct QaEntry {
  std::vector<std::string> pattern;
  bool wildcard = false;
  std::string answer;
};

struct Aphorism {
  std::string key;
  bool positive = true;
  std::string text;
};

// All data files of a data directory, loaded once and shared read-only.
struct Resources {
  Lexicon lexicon;
  std::map<std::string, std::vector<std::string>> phrases;
  std::vector<PersonaDescriptor> personas;
  std::map<std::pair<PersonaId, std::string>, std::vector<std::string>> persona_lines;
  std::vector<ContentItem> content;
  std::vector<AdviceRule> advice;
  std::vector<QaEntry> qa;
  std::vector<Aphorism> aphorisms;
  std::string report_preamble;
  std::string report_praise;
  std::map<std::string, std::string> scripts;  // id -> path
  std::string data_dir;

  // Throws Error(kDataFile) naming the file and line, or kIoError.
  static Resources load(const std::string& data_dir);

  const PersonaDescriptor& persona(PersonaId id) const;
  const std::vector<std::string>& phrase_list(const std::string& kind) const;
  // First phrase of a kind; throws kDataFile when missing.
  const std::string& phrase(const std::string& kind) const;
  const std::vector<std::string>& lines(PersonaId id, const std::string& kind) const;
};

// Parsers for the individual formats, exposed for tests.
std::vector<ContentItem> parse_content(const std::string& data, const std::string& name);
std::vector<AdviceRule> parse_advice(const std::string& data, const std::string& name);
std::vector<QaEntry> parse_qa(const std::string& data, const std::string& name);

}  // namespace parley
