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

#include "parley/parse.hpp"

#include <algorithm>
#include <array>

#include "parley/error.hpp"
#include "parley/text.hpp"

namespace parley {
namespace {

constexpr std::array<std::string_view, 7> kPossessives = {"my", "your", "his", "her",
                                                          "its", "our", "their"};

// Pronouns after which "'s" reads as "is".
constexpr std::array<std::string_view, 12> kCopulaHosts = {
    "it", "he", "she", "that", "what", "there", "here", "this", "who", "where", "how", "everything"};

bool contains(auto const& list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

class SentenceView {
 public:
  SentenceView(const TokenSeq& tokens, const Lexicon& lexicon)
      : tokens_(tokens), lex_(lexicon) {}

  size_t size() const { return tokens_.size(); }
  const Token& at(size_t i) const { return tokens_[i]; }
  const std::string& norm(size_t i) const { return tokens_[i].normalized; }
  bool word(size_t i) const { return i < size() && tokens_[i].is_word(); }

  bool is(size_t i, Category c) const { return word(i) && lex_.is(norm(i), c); }
  const LexEntry* entry(size_t i) const { return word(i) ? lex_.find(norm(i)) : nullptr; }

  bool possessive(size_t i) const { return word(i) && contains(kPossessives, norm(i)); }

  bool copula(size_t i) const {
    if (!word(i)) return false;
    if (norm(i) == "'s") return i > 0 && word(i - 1) && contains(kCopulaHosts, norm(i - 1));
    return is(i, Category::kCopula);
  }
  bool modal(size_t i) const { return is(i, Category::kModal); }
  bool auxiliary(size_t i) const { return is(i, Category::kAuxiliary); }
  bool negation(size_t i) const { return is(i, Category::kNegation); }
  bool functional_verb(size_t i) const { return copula(i) || modal(i) || auxiliary(i); }

  bool verb_form(size_t i) const {
    const LexEntry* e = entry(i);
    return e != nullptr && e->is_verb_form();
  }
  bool base_verb(size_t i) const { return is(i, Category::kVerb); }
  bool participle(size_t i) const {
    return is(i, Category::kVerbParticiple) ||
           (copula(i) && entry(i) != nullptr && entry(i)->copula_form == "participle");
  }
  bool gerund(size_t i) const {
    return is(i, Category::kVerbGerund) ||
           (copula(i) && entry(i) != nullptr && entry(i)->copula_form == "gerund");
  }
  bool adjective(size_t i) const { return is(i, Category::kAdjective); }

  bool nominal(size_t i) const {
    if (!word(i)) return false;
    const LexEntry* e = entry(i);
    if (e == nullptr) return true;  // unknown words act as nouns
    return e->is(Category::kNoun) || e->is(Category::kProperNoun) ||
           e->is(Category::kPronoun) || text::is_all_digits(norm(i));
  }

  // A verb reading is not plausible right after a determiner, possessive,
  // adjective, preposition or "to".
  bool blocks_verb(size_t i) const {
    if (!word(i)) return false;
    return is(i, Category::kDeterminer) || possessive(i) || is(i, Category::kPreposition) ||
           (adjective(i) && !verb_form(i));
  }

  // Pure pre-verbal adverb ("then", "also", "really").
  bool adverb_only(size_t i) const {
    const LexEntry* e = entry(i);
    return e != nullptr && e->is(Category::kAdverb) && !e->is(Category::kNoun) &&
           !e->is_verb_form() && !e->is(Category::kAdjective) && !e->is(Category::kTemporal);
  }

  // Interjection or conjunction that opens a sentence.
  bool discourse_marker(size_t i) const {
    const LexEntry* e = entry(i);
    if (e == nullptr) return false;
    if (!e->is(Category::kInterjection) && !e->is(Category::kConjunction)) return false;
    CategorySet other = e->categories;
    other.reset(static_cast<size_t>(Category::kInterjection));
    other.reset(static_cast<size_t>(Category::kConjunction));
    other.reset(static_cast<size_t>(Category::kDegreeAdverb));
    if (other.none() || norm(i) == "please") return true;
    // Ambiguous words ("no", "well", "ok") only when punctuation follows.
    return i + 1 >= size() || !word(i + 1);
  }

 private:
  const TokenSeq& tokens_;
  const Lexicon& lex_;
};

size_t skip_markers(const SentenceView& s, size_t i, bool include_please) {
  while (i < s.size()) {
    const Token& t = s.at(i);
    if (!t.is_word() && (t.is_punct(',') || t.is_punct('\'') || t.is_punct(';'))) {
      ++i;
      continue;
    }
    if (t.is_word() && s.discourse_marker(i) && (include_please || t.normalized != "please")) {
      ++i;
      continue;
    }
    break;
  }
  return i;
}

size_t terminal_start(const TokenSeq& tokens) {
  size_t end = tokens.size();
  while (end > 0 && !tokens[end - 1].is_word()) --end;
  return end;
}

bool ends_with_question(const TokenSeq& tokens) {
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    if (it->is_word()) return false;
    if (it->is_punct('?')) return true;
  }
  return false;
}

// Whether a token at i can start the verb group in a declarative scan.
bool starts_verb_group(const SentenceView& s, size_t i, size_t subject_begin) {
  if (!s.word(i)) return false;
  if (s.functional_verb(i)) {
    // "'s" as possessive is excluded by copula(); do/have also read as verbs.
    return i > subject_begin;
  }
  if (!s.verb_form(i) || i == subject_begin) return false;
  size_t prev = i - 1;
  if (!s.word(prev)) return false;
  if (s.norm(prev) == "to" || s.blocks_verb(prev)) return false;
  return s.nominal(prev) || s.adverb_only(prev) || s.is(prev, Category::kDegreeAdverb);
}

bool plausible_verb_anywhere(const SentenceView& s, size_t begin, size_t end) {
  for (size_t i = begin; i < end; ++i) {
    if (!s.word(i)) continue;
    if (s.functional_verb(i)) return true;
    if (s.verb_form(i) && (i == begin || !s.blocks_verb(i - 1))) return true;
  }
  return false;
}

size_t count_words(const TokenSeq& tokens) {
  return static_cast<size_t>(std::count_if(tokens.begin(), tokens.end(),
                                           [](const Token& t) { return t.is_word(); }));
}

}  // namespace

std::string_view to_string(Mood mood) {
  switch (mood) {
    case Mood::kDeclarative: return "declarative";
    case Mood::kInterrogative: return "interrogative";
    case Mood::kImperative: return "imperative";
    case Mood::kFragment: return "fragment";
  }
  return "?";
}

std::string_view to_string(Tense tense) {
  switch (tense) {
    case Tense::kPresent: return "present";
    case Tense::kPast: return "past";
    case Tense::kFuture: return "future";
    case Tense::kUnknown: return "unknown";
  }
  return "?";
}

std::optional<Mood> mood_from_string(std::string_view s) {
  for (Mood m : {Mood::kDeclarative, Mood::kInterrogative, Mood::kImperative, Mood::kFragment}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

Mood classify_mood(const TokenSeq& tokens, const Lexicon& lexicon) {
  if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "empty sentence");
  SentenceView s(tokens, lexicon);
  const size_t end = terminal_start(tokens);
  const size_t core = skip_markers(s, 0, /*include_please=*/false);

  if (core < end) {
    if (s.functional_verb(core) || s.is(core, Category::kWhWord)) return Mood::kInterrogative;
  }
  if (ends_with_question(tokens)) return Mood::kInterrogative;

  if (core < end && s.norm(core) == "please") return Mood::kImperative;
  if (core < end && s.base_verb(core) && !s.functional_verb(core)) {
    // "Love is great": a following verb makes the first word a subject.
    const bool next_verbal = core + 1 < end && (s.functional_verb(core + 1) ||
                                                (s.verb_form(core + 1) && !s.nominal(core + 1)));
    if (!next_verbal) return Mood::kImperative;
  }

  const size_t words = count_words(tokens);
  if (!plausible_verb_anywhere(s, 0, end) && words <= 3) return Mood::kFragment;
  return Mood::kDeclarative;
}

ParsedSentence parse(const TokenSeq& input, const Lexicon& lexicon) {
  if (input.empty()) throw Error(ErrorCode::kEmptyInput, "empty sentence");
  ParsedSentence p;
  p.tokens = input;
  reindex(p.tokens);
  p.raw = render(p.tokens);
  p.mood = classify_mood(p.tokens, lexicon);
  p.roles.assign(p.tokens.size(), Role::kComplement);

  SentenceView s(p.tokens, lexicon);
  const size_t end = terminal_start(p.tokens);
  for (size_t i = end; i < p.tokens.size(); ++i) p.roles[i] = Role::kTerminal;

  // Leading discourse markers, then comma-fronted chunks ("many things, I think").
  size_t pos = skip_markers(s, 0, /*include_please=*/true);
  while (true) {
    size_t comma = pos;
    while (comma < end && !s.at(comma).is_punct(',')) ++comma;
    if (comma >= end || p.mood == Mood::kFragment) break;
    if (plausible_verb_anywhere(s, pos, comma)) break;
    if (!plausible_verb_anywhere(s, comma + 1, end)) break;
    pos = skip_markers(s, comma + 1, true);
  }
  for (size_t i = 0; i < pos; ++i) p.roles[i] = Role::kPrefix;

  auto mark_verb_group = [&](size_t i) -> size_t {
    // Auxiliaries, negation and adverbs up to the main verb.
    while (i < end && s.word(i)) {
      if (s.negation(i)) {
        p.roles[i] = Role::kNegation;
        p.negated = true;
        ++i;
        continue;
      }
      size_t next = i + 1;
      while (next < end && (s.negation(next) || s.adverb_only(next))) ++next;
      if (s.modal(i)) {
        p.roles[i] = Role::kAuxiliary;
        ++i;
        continue;
      }
      if (s.copula(i)) {
        const bool aux = next < end && (s.gerund(next) || s.participle(next)) &&
                         !s.adjective(next);
        if (aux) {
          p.roles[i] = Role::kAuxiliary;
          ++i;
          continue;
        }
        p.roles[i] = Role::kMainVerb;
        p.main_verb = static_cast<int>(i);
        p.main_verb_base = "be";
        p.copular = true;
        ++i;
        while (i < end && s.negation(i)) {
          p.roles[i++] = Role::kNegation;
          p.negated = true;
        }
        return i;
      }
      if (s.auxiliary(i)) {
        const std::string& w = s.norm(i);
        const bool do_form = w == "do" || w == "does" || w == "did";
        const bool aux = do_form ? (next < end && s.base_verb(next) && !s.blocks_verb(i))
                                   : (next < end && s.participle(next)) ||
                                         (w == "'d" && next < end && s.base_verb(next));
        if (aux || (do_form && next < end && s.negation(i + 1))) {
          p.roles[i] = Role::kAuxiliary;
          ++i;
          continue;
        }
      }
      if (s.adverb_only(i) || s.is(i, Category::kDegreeAdverb)) {
        if (next < end && (s.verb_form(next) || s.functional_verb(next)) && next != i + 1) {
          p.roles[i] = Role::kVerbAdverb;
          ++i;
          continue;
        }
        if (i + 1 < end && (s.verb_form(i + 1) || s.functional_verb(i + 1))) {
          p.roles[i] = Role::kVerbAdverb;
          ++i;
          continue;
        }
        return i;
      }
      if (s.verb_form(i) || s.auxiliary(i)) {
        p.roles[i] = Role::kMainVerb;
        p.main_verb = static_cast<int>(i);
        p.main_verb_base = lexicon.verb_base(s.norm(i)).value_or(s.norm(i));
        if (s.norm(i) == "'ve") p.main_verb_base = "have";
        return i + 1;
      }
      return i;
    }
    return i;
  };

  auto mark_noun_phrase = [&](size_t i, Role role) -> size_t {
    // Pronoun alone, or [det|possessive] modifiers* head.
    if (i >= end || !s.word(i)) return i;
    if (s.is(i, Category::kPronoun) && !s.possessive(i) && !s.is(i, Category::kDeterminer)) {
      p.roles[i] = role;
      return i + 1;
    }
    if (s.norm(i) == "there" || s.norm(i) == "here") {
      p.roles[i] = role;
      return i + 1;
    }
    size_t j = i;
    if (s.is(j, Category::kDeterminer) || s.possessive(j) || text::is_all_digits(s.norm(j))) {
      p.roles[j++] = role;
    }
    while (j < end && s.word(j) && !s.functional_verb(j) && !s.is(j, Category::kPreposition) &&
           (s.nominal(j) || s.adjective(j) || s.is(j, Category::kDegreeAdverb) ||
            (s.verb_form(j) && !s.base_verb(j)) || (j > i && s.norm(j - 1) == "'s"))) {
      // Stop before a base verb that follows a nominal head ("you watch").
      if (j > i && s.base_verb(j) && s.nominal(j - 1) && !s.blocks_verb(j - 1)) break;
      p.roles[j++] = role;
    }
    return j;
  };

  if (p.mood == Mood::kFragment) {
    // Everything after the markers is complement.
  } else if (p.mood == Mood::kImperative) {
    size_t i = pos;
    while (i < end && s.word(i) && !s.verb_form(i)) {
      if (s.adverb_only(i)) p.roles[i] = Role::kVerbAdverb;
      else break;
      ++i;
    }
    if (i < end && s.verb_form(i)) mark_verb_group(i);
  } else if (p.mood == Mood::kInterrogative && pos < end &&
             (s.functional_verb(pos) || s.is(pos, Category::kWhWord))) {
    size_t i = pos;
    if (s.is(i, Category::kWhWord)) {
      p.roles[i++] = Role::kWh;
      // Wh-phrase: "what university", "how old", "which college subjects".
      while (i < end && s.word(i) && !s.functional_verb(i) &&
             (s.nominal(i) || s.adjective(i)) && !s.is(i, Category::kPronoun)) {
        p.roles[i++] = Role::kWh;
      }
    }
    if (i < end && s.functional_verb(i)) {
      // Inverted auxiliary: "Do you ...", "Are you ...", "What is the answer".
      const size_t aux = i;
      p.roles[aux] = Role::kAuxiliary;
      ++i;
      while (i < end && s.negation(i)) {
        p.roles[i++] = Role::kNegation;
        p.negated = true;
      }
      const size_t subj_begin = i;
      i = mark_noun_phrase(i, Role::kSubject);
      p.inverted = i > subj_begin;
      const size_t after = mark_verb_group(i);
      if (!p.main_verb) {
        // "Are you clever?", "What is the answer?": the copula or the
        // auxiliary itself is the main verb.
        const bool do_aux = s.norm(aux) == "do" || s.norm(aux) == "does" || s.norm(aux) == "did";
        if (s.copula(aux) || !(s.modal(aux) || do_aux)) {
          p.roles[aux] = Role::kMainVerb;
          p.main_verb = static_cast<int>(aux);
          p.copular = s.copula(aux);
          p.main_verb_base = s.copula(aux) ? "be"
                                           : lexicon.verb_base(s.norm(aux)).value_or(s.norm(aux));
        }
      }
      (void)after;
    } else if (i < end) {
      // "Who likes tea?" style: the wh-word is the subject.
      mark_verb_group(i);
    }
  } else {
    // Declarative (or a question marked only by "?").
    size_t i = pos;
    // Leading temporal phrase ("Today I am happy").
    const size_t subject_begin = i;
    size_t v = subject_begin;
    while (v < end && !starts_verb_group(s, v, subject_begin)) ++v;
    // Pre-verbal adverbs belong to the verb group.
    size_t verb_start = v;
    while (verb_start > subject_begin + 1 &&
           (s.adverb_only(verb_start - 1) || s.is(verb_start - 1, Category::kDegreeAdverb)) &&
           v < end) {
      --verb_start;
    }
    if (v < end) {
      for (size_t k = subject_begin; k < verb_start; ++k) p.roles[k] = Role::kSubject;
      for (size_t k = verb_start; k < v; ++k) p.roles[k] = Role::kVerbAdverb;
      mark_verb_group(v);
    }
  }

  // Temporal adverbials among complement tokens.
  for (size_t i = 0; i < end; ++i) {
    if (p.roles[i] != Role::kComplement) continue;
    for (const auto& phrase : lexicon.temporal_phrases()) {
      if (i + phrase.size() > end) continue;
      bool match = true;
      for (size_t k = 0; k < phrase.size(); ++k) {
        if (!s.word(i + k) || s.norm(i + k) != phrase[k] ||
            p.roles[i + k] != Role::kComplement) {
          match = false;
          break;
        }
      }
      if (match) {
        for (size_t k = 0; k < phrase.size(); ++k) p.roles[i + k] = Role::kTemporal;
        i += phrase.size() - 1;
        break;
      }
    }
  }

  for (size_t i = 0; i < p.tokens.size(); ++i) {
    const Token& t = p.tokens[i];
    if (!t.is_word() || text::contains_digit(t.normalized) || t.normalized.starts_with('\'') ||
        t.normalized == "n't") {
      continue;
    }
    if (lexicon.find(t.normalized) == nullptr && !lexicon.dictionary_contains(t.normalized) &&
        !lexicon.dictionary_contains(t.surface)) {
      p.unknown_tokens.push_back(static_cast<int>(i));
    }
  }
  p.tense = derive_tense(p, lexicon);
  return p;
}

Tense derive_tense(const ParsedSentence& p, const Lexicon& lexicon) {
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    if (p.roles[i] != Role::kAuxiliary && p.roles[i] != Role::kMainVerb) continue;
    const std::string& w = p.tokens[i].normalized;
    if (w == "will" || w == "shall" || w == "'ll") return Tense::kFuture;
    const LexEntry* e = lexicon.find(w);
    if (e == nullptr) return Tense::kPresent;
    if (e->is(Category::kCopula)) {
      if (e->copula_form == "past") return Tense::kPast;
      if (e->copula_form == "present") return Tense::kPresent;
      continue;
    }
    if (w == "did" || w == "had" || w == "'d") return w == "'d" ? Tense::kPresent : Tense::kPast;
    if (e->is(Category::kModal) || e->is(Category::kAuxiliary)) return Tense::kPresent;
    if (e->is(Category::kVerbPast)) return Tense::kPast;
    if (e->is(Category::kVerbGerund) || (e->is(Category::kVerbParticiple) && !e->is(Category::kVerb)))
      continue;
    return Tense::kPresent;
  }
  return p.main_verb || p.has_role(Role::kAuxiliary) ? Tense::kPresent : Tense::kUnknown;
}

std::vector<int> ParsedSentence::indices(Role role) const {
  std::vector<int> out;
  for (size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == role) out.push_back(static_cast<int>(i));
  }
  return out;
}

TokenSeq ParsedSentence::tokens_of(Role role) const {
  TokenSeq out;
  for (size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == role) out.push_back(tokens[i]);
  }
  if (!out.empty()) out.front().space_before = false;
  return out;
}

std::string ParsedSentence::text_of(Role role) const { return render(tokens_of(role)); }

bool ParsedSentence::has_role(Role role) const {
  return std::find(roles.begin(), roles.end(), role) != roles.end();
}

std::vector<std::vector<int>> ParsedSentence::temporal_spans() const {
  std::vector<std::vector<int>> spans;
  for (size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] != Role::kTemporal) continue;
    if (i == 0 || roles[i - 1] != Role::kTemporal) spans.emplace_back();
    spans.back().push_back(static_cast<int>(i));
  }
  return spans;
}

std::string ParsedSentence::summary() const {
  std::string out = "mood=" + std::string(to_string(mood)) + " tense=" + std::string(to_string(tense));
  if (!main_verb_base.empty()) out += " verb=" + main_verb_base;
  if (negated) out += " negated";
  return out;
}

Person ParsedSentence::subject_person(const Lexicon& lexicon) const {
  const auto subject = indices(Role::kSubject);
  if (subject.empty()) return Person::kThirdSingular;
  const std::string& head = tokens[subject.back()].normalized;
  if (subject.size() == 1) {
    if (head == "i") return Person::kFirstSingular;
    if (head == "you") return Person::kSecond;
    if (head == "we" || head == "they" || head == "these" || head == "those")
      return Person::kPlural;
  }
  for (int i : subject) {
    if (tokens[i].normalized == "and") return Person::kPlural;
  }
  (void)lexicon;
  if (head.size() > 3 && head.ends_with('s') && !head.ends_with("ss")) return Person::kPlural;
  return Person::kThirdSingular;
}

std::vector<std::string> normalized_words(const TokenSeq& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (!t.is_word()) continue;
    const std::string& w = t.normalized;
    if (w == "n't") out.push_back("not");
    else if (w == "'m") out.push_back("am");
    else if (w == "'re") out.push_back("are");
    else if (w == "'s") out.push_back("is");
    else if (w == "'ll") out.push_back("will");
    else if (w == "'ve") out.push_back("have");
    else if (w == "'d") out.push_back("would");
    else out.push_back(w);
  }
  return out;
}

std::vector<ParsedSentence> parse_text(std::string_view raw, const Lexicon& lexicon) {
  std::vector<ParsedSentence> out;
  for (const auto& sentence : split_sentences(tokenize(raw))) out.push_back(parse(sentence, lexicon));
  return out;
}

}  // namespace parley
