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

// Small ASCII string helpers shared by the modules.

#include <string>
#include <string_view>
#include <vector>

namespace parley::text {

std::string lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Uppercases / lowercases only the first byte.
std::string capitalize(std::string_view s);
std::string decapitalize(std::string_view s);

bool starts_with_upper(std::string_view s);
bool is_all_digits(std::string_view s);
bool contains_digit(std::string_view s);

// Replaces every {key} occurrence.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

// Reads a whole file; throws Error(kIoError).
std::string read_file(const std::string& path);

// Splits into lines, dropping '\r', blank lines and '#' comments.
std::vector<std::string> data_lines(const std::string& content);

}  // namespace parley::text
