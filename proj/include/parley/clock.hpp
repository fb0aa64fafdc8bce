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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace parley {

using TimePoint = std::chrono::sys_seconds;

// "2026-02-14T09:30:00" (a trailing "Z" is accepted). Throws kInvalidArgument.
TimePoint parse_iso8601(std::string_view s);
std::string format_iso8601(TimePoint t);

// "Happy weekend" on Saturday and Sunday, otherwise "Good morning" before
// noon, "Good day" until 18:00 and "Good evening" after.
std::string time_of_day_greeting(TimePoint t);

// Session clock: a fixed instant when injected, wall-clock time otherwise.
class Clock {
 public:
  Clock() = default;
  explicit Clock(std::optional<TimePoint> fixed) : fixed_(fixed) {}

  TimePoint now() const;
  bool fixed() const { return fixed_.has_value(); }

 private:
  std::optional<TimePoint> fixed_;
};

}  // namespace parley
