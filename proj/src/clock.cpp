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

#include "parley/clock.hpp"

#include <charconv>
#include <cstdio>

#include "parley/error.hpp"

namespace parley {
namespace {

int field(std::string_view s, size_t pos, size_t len) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, v);
  if (ec != std::errc() || ptr != s.data() + pos + len)
    throw Error(ErrorCode::kInvalidArgument, "bad timestamp '" + std::string(s) + "'");
  return v;
}

}  // namespace

TimePoint parse_iso8601(std::string_view s) {
  using namespace std::chrono;
  if (s.ends_with('Z')) s.remove_suffix(1);
  if (s.size() != 19 || s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') ||
      s[13] != ':' || s[16] != ':') {
    throw Error(ErrorCode::kInvalidArgument,
                "bad timestamp '" + std::string(s) + "', expected YYYY-MM-DDTHH:MM:SS");
  }
  const year_month_day ymd{year{field(s, 0, 4)}, month{static_cast<unsigned>(field(s, 5, 2))},
                           day{static_cast<unsigned>(field(s, 8, 2))}};
  const int hh = field(s, 11, 2), mm = field(s, 14, 2), ss = field(s, 17, 2);
  if (!ymd.ok() || hh > 23 || mm > 59 || ss > 59)
    throw Error(ErrorCode::kInvalidArgument, "timestamp out of range '" + std::string(s) + "'");
  return sys_days{ymd} + hours{hh} + minutes{mm} + seconds{ss};
}

std::string format_iso8601(TimePoint t) {
  using namespace std::chrono;
  const auto day_start = floor<days>(t);
  const year_month_day ymd{day_start};
  const hh_mm_ss<seconds> hms{t - day_start};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string time_of_day_greeting(TimePoint t) {
  using namespace std::chrono;
  const auto day_start = floor<days>(t);
  const weekday wd{day_start};
  if (wd == Saturday || wd == Sunday) return "Happy weekend";
  const auto hour = duration_cast<hours>(t - day_start).count();
  if (hour < 12) return "Good morning";
  if (hour < 18) return "Good day";
  return "Good evening";
}

TimePoint Clock::now() const {
  if (fixed_) return *fixed_;
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

}  // namespace parley
