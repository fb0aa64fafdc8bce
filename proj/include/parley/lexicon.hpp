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

#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace parley {

enum class Category {
  kPronoun,
  kAuxiliary,
  kModal,
  kCopula,
  kVerb,  // base form
  kVerbPast,
  kVerbParticiple,
  kVerb3sg,
  kVerbGerund,
  kNoun,
  kProperNoun,
  kAdjective,
  kAdverb,
  kDegreeAdverb,
  kDeterminer,
  kWhWord,
  kInterjection,
  kTemporal,
  kPreposition,
  kConjunction,
  kNegation,
  kAffect,
  kCompliment,
  kCatenative,
  kCount_,
};

using CategorySet = std::bitset<static_cast<size_t>(Category::kCount_)>;

struct LexEntry {
  std::string word;  // as written in the data file ("I", "English", "like")
  CategorySet categories;
  std::string verb_base;    // for inflected verb forms
  std::string copula_form;  // "present", "past", "base", "participle", "gerund"

  bool is(Category c) const { return categories.test(static_cast<size_t>(c)); }
  bool is_verb_form() const;
};

struct Conjugation {
  std::string base;
  std::string past;
  std::string participle;
  std::string third_singular;
  std::string gerund;
};

// Word categories, verb conjugations and the spell-check dictionary.
// Immutable after construction; safe to share across threads.
class Lexicon {
 public:
  // Parses the line formats of lexicon.tsv / dictionary.txt.
  // Throws Error(kDataFile) with the offending line number.
  static Lexicon from_strings(const std::string& lexicon_data,
                              const std::string& dictionary_data);
  static Lexicon load(const std::string& lexicon_path, const std::string& dictionary_path);

  const LexEntry* find(std::string_view word) const;
  bool is(std::string_view word, Category c) const;

  // Base form of any verb form ("liked" -> "like", "like" -> "like").
  std::optional<std::string> verb_base(std::string_view word) const;
  const Conjugation* conjugation(std::string_view base) const;

  // Case-sensitive membership, as written in the dictionary file.
  bool dictionary_contains(std::string_view word) const;
  const std::unordered_set<std::string>& dictionary() const { return dictionary_; }

  // Multi-word temporal adverbials, longest first, as lowercase word lists.
  const std::vector<std::vector<std::string>>& temporal_phrases() const {
    return temporal_phrases_;
  }

  const std::unordered_map<std::string, LexEntry>& entries() const { return entries_; }

 private:
  std::unordered_map<std::string, LexEntry> entries_;  // key: lowercase word
  std::unordered_map<std::string, Conjugation> conjugations_;
  std::unordered_set<std::string> dictionary_;
  std::vector<std::vector<std::string>> temporal_phrases_;
};

}  // namespace parley
