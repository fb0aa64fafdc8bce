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

#include "parley/clock.hpp"
#include "parley/parse.hpp"
#include "parley/resources.hpp"
#include "parley/text.hpp"

namespace parley::testing {

inline const Resources& res() {
  static const Resources r = Resources::load(PARLEY_TEST_DATA_DIR);
  return r;
}

inline const Lexicon& lex() { return res().lexicon; }

inline std::string corpus_path(const std::string& rel) {
  return std::string(PARLEY_TEST_CORPUS_DIR) + "/" + rel;
}

inline std::string corpus_file(const std::string& rel) { return text::read_file(corpus_path(rel)); }

// First sentence of a text.
inline ParsedSentence P(std::string_view s) { return parse_text(s, lex()).front(); }

// Wednesday morning, a Saturday, Wednesday afternoon.
inline TimePoint weekday_morning() { return parse_iso8601("2026-10-14T09:00:00"); }
inline TimePoint saturday() { return parse_iso8601("2026-10-17T10:00:00"); }
inline TimePoint weekday_afternoon() { return parse_iso8601("2026-10-14T15:00:00"); }

}  // namespace parley::testing
