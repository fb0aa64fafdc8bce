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

#include <optional>
#include <string>
#include <vector>

#include "parley/clock.hpp"
#include "parley/resources.hpp"

namespace parley {

// A scripted dialog: who talks to whom, the fixed clock and seed, what the
// store already holds, and the user lines in order.
//
//   persona: christine          (or  script: job-interview | path/to/script.txt)
//   user: john
//   label: John
//   clock: 2026-10-14T09:00:00
//   seed: 7
//   prior: my name is John.     (user lines of one earlier, closed session)
//   prior-persona: ingrid       (persona of that session; defaults to persona)
//   opens: yes                  (the persona speaks first)
//   > Hello, Christine.
struct DialogSetup {
  std::optional<PersonaId> persona;
  std::string script;
  std::string user_id;
  std::string label;
  std::optional<TimePoint> clock;
  uint32_t seed = 0;
  std::vector<std::string> prior;
  std::optional<PersonaId> prior_persona;
  bool persona_opens = false;
  std::vector<std::string> turns;
};

// Throws kDataFile naming the line.
DialogSetup parse_setup(const std::string& content, const std::string& name = "setup");

struct DialogRun {
  // "Label: text" lines; an interview ends with a blank line and the report.
  std::string transcript;
  std::vector<std::string> system_lines;
  std::vector<std::string> user_lines;
  std::optional<std::string> report;
};

// Runs the dialog against a fresh in-memory store. `base_dir` resolves a
// relative script path.
DialogRun run_dialog(const DialogSetup& setup, const Resources& resources,
                     const std::string& base_dir = ".");

}  // namespace parley
