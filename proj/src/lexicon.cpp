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

#include "parley/lexicon.hpp"

#include <algorithm>

#include "parley/error.hpp"
#include "parley/text.hpp"

namespace parley {
namespace {

struct CategoryName {
  std::string_view name;
  Category category;
};

constexpr CategoryName kCategoryNames[] = {
    {"pronoun", Category::kPronoun},
    {"auxiliary", Category::kAuxiliary},
    {"modal", Category::kModal},
    {"copula", Category::kCopula},
    {"verb", Category::kVerb},
    {"verb-past", Category::kVerbPast},
    {"verb-participle", Category::kVerbParticiple},
    {"verb-3sg", Category::kVerb3sg},
    {"verb-gerund", Category::kVerbGerund},
    {"noun", Category::kNoun},
    {"proper-noun", Category::kProperNoun},
    {"adjective", Category::kAdjective},
    {"adverb", Category::kAdverb},
    {"determiner", Category::kDeterminer},
    {"wh-word", Category::kWhWord},
    {"interjection", Category::kInterjection},
    {"temporal-adverbial", Category::kTemporal},
    {"preposition", Category::kPreposition},
    {"conjunction", Category::kConjunction},
    {"negation", Category::kNegation},
    {"affect", Category::kAffect},
    {"compliment", Category::kCompliment},
    {"catenative", Category::kCatenative},
};

std::optional<Category> category_from_name(std::string_view name) {
  for (const auto& entry : kCategoryNames) {
    if (entry.name == name) return entry.category;
  }
  return std::nullopt;
}

[[noreturn]] void data_error(size_t line, const std::string& what) {
  throw Error(ErrorCode::kDataFile, "lexicon line " + std::to_string(line) + ": " + what);
}

}  // namespace

bool LexEntry::is_verb_form() const {
  return is(Category::kVerb) || is(Category::kVerbPast) || is(Category::kVerbParticiple) ||
         is(Category::kVerb3sg) || is(Category::kVerbGerund);
}

Lexicon Lexicon::from_strings(const std::string& lexicon_data,
                              const std::string& dictionary_data) {
  Lexicon lex;
  size_t line_no = 0;
  for (auto line : text::split(lexicon_data, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line[0] == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) data_error(line_no, "expected word<TAB>categories");
    const std::string key = text::lower(fields[0]);
    LexEntry& entry = lex.entries_[key];
    if (entry.word.empty() || text::starts_with_upper(fields[0])) entry.word = fields[0];
    for (const auto& raw : text::split(fields[1], ',')) {
      // "verb-past:like" or "degree" qualifiers ("adverb:degree").
      const auto colon = raw.find(':');
      const std::string name = raw.substr(0, colon);
      const std::string qualifier = colon == std::string::npos ? "" : raw.substr(colon + 1);
      if (name == "adverb" && qualifier == "degree") {
        entry.categories.set(static_cast<size_t>(Category::kAdverb));
        entry.categories.set(static_cast<size_t>(Category::kDegreeAdverb));
        continue;
      }
      auto cat = category_from_name(name);
      if (!cat) data_error(line_no, "unknown category '" + name + "'");
      entry.categories.set(static_cast<size_t>(*cat));
      if (*cat == Category::kCopula) entry.copula_form = qualifier;
      if (*cat == Category::kVerbPast || *cat == Category::kVerbParticiple ||
          *cat == Category::kVerb3sg || *cat == Category::kVerbGerund) {
        if (qualifier.empty()) data_error(line_no, "verb form without base link");
        if (!entry.verb_base.empty() && entry.verb_base != qualifier)
          data_error(line_no, "verb form linked to two bases");
        entry.verb_base = qualifier;
      }
    }
    if (key.find(' ') != std::string::npos || entry.is(Category::kTemporal)) {
      lex.temporal_phrases_.push_back(text::split(key, ' '));
    }
  }

  // Build conjugation tables from the linked forms.
  for (const auto& [key, entry] : lex.entries_) {
    if (entry.is(Category::kVerb)) lex.conjugations_[key].base = key;
  }
  for (const auto& [key, entry] : lex.entries_) {
    if (entry.verb_base.empty()) continue;
    auto& conj = lex.conjugations_[entry.verb_base];
    conj.base = entry.verb_base;
    if (entry.is(Category::kVerbPast)) conj.past = key;
    if (entry.is(Category::kVerbParticiple)) conj.participle = key;
    if (entry.is(Category::kVerb3sg)) conj.third_singular = key;
    if (entry.is(Category::kVerbGerund)) conj.gerund = key;
  }
  std::sort(lex.temporal_phrases_.begin(), lex.temporal_phrases_.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });

  for (auto line : text::data_lines(dictionary_data)) {
    lex.dictionary_.insert(text::trim(line));
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& lexicon_path, const std::string& dictionary_path) {
  return from_strings(text::read_file(lexicon_path), text::read_file(dictionary_path));
}

const LexEntry* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(text::lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::is(std::string_view word, Category c) const {
  const LexEntry* e = find(word);
  return e != nullptr && e->is(c);
}

std::optional<std::string> Lexicon::verb_base(std::string_view word) const {
  const LexEntry* e = find(word);
  if (e == nullptr) return std::nullopt;
  if (!e->verb_base.empty()) return e->verb_base;
  if (e->is(Category::kVerb)) return text::lower(word);
  return std::nullopt;
}

const Conjugation* Lexicon::conjugation(std::string_view base) const {
  auto it = conjugations_.find(text::lower(base));
  return it == conjugations_.end() ? nullptr : &it->second;
}

bool Lexicon::dictionary_contains(std::string_view word) const {
  return dictionary_.count(std::string(word)) > 0;
}

}  // namespace parley
