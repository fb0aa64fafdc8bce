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

#include "parley/transform.hpp"

#include <algorithm>
#include <array>

#include "parley/error.hpp"
#include "parley/text.hpp"

namespace parley {
namespace {

constexpr std::array<std::string_view, 10> kCausatives = {
    "let", "make", "help", "have", "see", "watch", "hear", "bid", "feel", "notice"};

bool contains(auto const& list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

Token word_token(std::string surface, std::string normalized, bool space_before) {
  Token t;
  t.surface = std::move(surface);
  t.normalized = std::move(normalized);
  t.kind = TokenKind::kWord;
  t.space_before = space_before;
  return t;
}

// Replacement keeping the capitalization of the original surface.
Token replace_word(const Token& original, const std::string& lower_word) {
  std::string surface =
      text::starts_with_upper(original.surface) ? text::capitalize(lower_word) : lower_word;
  const bool glued_contraction = original.normalized.starts_with('\'') && lower_word[0] != '\'';
  return word_token(surface, lower_word, original.space_before || glued_contraction);
}

bool functional(const Token& t, const Lexicon& lex) {
  if (!t.is_word()) return false;
  if (t.normalized == "'s") return false;
  return lex.is(t.normalized, Category::kCopula) || lex.is(t.normalized, Category::kModal) ||
         lex.is(t.normalized, Category::kAuxiliary);
}

bool skippable_adverb(const Token& t, const Lexicon& lex) {
  if (!t.is_word()) return false;
  const LexEntry* e = lex.find(t.normalized);
  if (e == nullptr) return false;
  if (e->is(Category::kNegation)) return true;
  if (!e->is(Category::kAdverb)) return false;
  return !e->is(Category::kNoun) && !e->is_verb_form() && !e->is(Category::kAdjective) &&
         !e->is(Category::kTemporal);
}

bool clause_boundary(const Token& t, const Lexicon& lex) {
  if (!t.is_word()) return true;
  return lex.is(t.normalized, Category::kConjunction) ||
         lex.is(t.normalized, Category::kInterjection);
}

// Whether a first/second person pronoun at i stands in subject position.
bool subject_position(const TokenSeq& tokens, size_t i, const Lexicon& lex) {
  size_t n = i + 1;
  while (n < tokens.size() && skippable_adverb(tokens[n], lex)) ++n;
  const Token* next = n < tokens.size() && tokens[n].is_word() ? &tokens[n] : nullptr;
  const Token* prev = i > 0 ? &tokens[i - 1] : nullptr;

  if (next != nullptr && functional(*next, lex)) return true;
  if (prev != nullptr && prev->is_word() && lex.is(prev->normalized, Category::kPreposition))
    return false;
  const LexEntry* next_entry = next != nullptr ? lex.find(next->normalized) : nullptr;
  const bool next_verbal = next_entry != nullptr && next_entry->is_verb_form();
  if (prev != nullptr && prev->is_word() && !functional(*prev, lex)) {
    const LexEntry* pe = lex.find(prev->normalized);
    if (pe != nullptr && pe->is_verb_form()) {
      const std::string base = lex.verb_base(prev->normalized).value_or(prev->normalized);
      if (contains(kCausatives, base)) return false;
      return next_verbal;
    }
  }
  if (prev != nullptr && functional(*prev, lex)) return true;
  if (next_verbal) return true;
  return (prev == nullptr || clause_boundary(*prev, lex)) && next == nullptr;
}

bool sentence_start(const TokenSeq& tokens, size_t i) {
  for (size_t k = 0; k < i; ++k) {
    if (tokens[k].is_word() || tokens[k].is_punct(',')) return false;
  }
  return true;
}

std::string swap_copula(const std::string& w) {
  if (w == "am") return "are";
  if (w == "are") return "am";
  if (w == "'m") return "'re";
  if (w == "'re") return "'m";
  if (w == "was") return "were";
  if (w == "were") return "was";
  return "";
}

std::string be_form(Tense tense, Person person) {
  const bool singular = person == Person::kFirstSingular || person == Person::kThirdSingular;
  if (tense == Tense::kPast) return singular ? "was" : "were";
  if (person == Person::kFirstSingular) return "am";
  return person == Person::kThirdSingular ? "is" : "are";
}

std::string do_form(Tense tense, Person person) {
  if (tense == Tense::kPast) return "did";
  return person == Person::kThirdSingular ? "does" : "do";
}

std::string have_form(Tense tense, Person person) {
  if (tense == Tense::kPast) return "had";
  return person == Person::kThirdSingular ? "has" : "have";
}

std::string expand_contraction(const std::string& w) {
  if (w == "'m") return "am";
  if (w == "'re") return "are";
  if (w == "'s") return "is";
  if (w == "'ll") return "will";
  if (w == "'ve") return "have";
  if (w == "'d") return "would";
  return w;
}

bool is_do(const std::string& w) { return w == "do" || w == "does" || w == "did"; }

// "will" + "n't" is written "won't", "can" + "n't" is "can't".
void fix_negative_stems(TokenSeq& tokens) {
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i].normalized != "n't") continue;
    Token& stem = tokens[i - 1];
    const bool upper = text::starts_with_upper(stem.surface);
    std::string s;
    if (stem.normalized == "will") s = "wo";
    else if (stem.normalized == "can") s = "ca";
    else if (stem.normalized == "shall") s = "sha";
    else s = stem.normalized;
    stem.surface = upper ? text::capitalize(s) : s;
  }
}

struct Labelled {
  TokenSeq tokens;
  std::vector<Role> roles;

  void push(Token t, Role r) {
    tokens.push_back(std::move(t));
    roles.push_back(r);
  }
};

// Re-derives the summary fields after a token edit.
ParsedSentence rebuild(const ParsedSentence& base, Labelled l, const Lexicon& lex) {
  ParsedSentence p = base;
  fix_negative_stems(l.tokens);
  reindex(l.tokens);
  if (!l.tokens.empty()) l.tokens.front().space_before = false;
  p.tokens = std::move(l.tokens);
  p.roles = std::move(l.roles);
  p.raw = render(p.tokens);
  p.main_verb.reset();
  for (size_t i = 0; i < p.roles.size(); ++i) {
    if (p.roles[i] == Role::kMainVerb) p.main_verb = static_cast<int>(i);
  }
  p.tense = derive_tense(p, lex);
  return p;
}

std::optional<size_t> finite_index(const ParsedSentence& p) {
  for (size_t i = 0; i < p.roles.size(); ++i) {
    if (p.roles[i] == Role::kAuxiliary || p.roles[i] == Role::kMainVerb) return i;
  }
  return std::nullopt;
}

bool is_copula(const Token& t, const Lexicon& lex) {
  return t.normalized == "'s" || lex.is(t.normalized, Category::kCopula);
}

std::string inflect(const std::string& base, Tense tense, Person person, const Lexicon& lex,
                    bool* fallback) {
  const Conjugation* c = lex.conjugation(base);
  if (tense == Tense::kPast) {
    if (c != nullptr && !c->past.empty()) return c->past;
    if (fallback != nullptr) *fallback = true;
    return base.ends_with('e') ? base + "d" : base + "ed";
  }
  if (person == Person::kThirdSingular) {
    if (c != nullptr && !c->third_singular.empty()) return c->third_singular;
    if (base.ends_with('s') || base.ends_with("sh") || base.ends_with("ch") || base.ends_with('o'))
      return base + "es";
    return base + "s";
  }
  return base;
}

// Lowercases a leading pronoun or common word unless it is "I" or a proper noun.
void decapitalize_first(TokenSeq& tokens, const Lexicon& lex) {
  for (Token& t : tokens) {
    if (!t.is_word()) continue;
    if (t.surface == "I") return;
    const LexEntry* e = lex.find(t.normalized);
    if (e != nullptr && !e->word.empty() && !text::starts_with_upper(e->word))
      t.surface = text::decapitalize(t.surface);
    return;
  }
}

void capitalize_first(TokenSeq& tokens) {
  for (Token& t : tokens) {
    if (!t.is_word()) continue;
    t.surface = text::capitalize(t.surface);
    return;
  }
}

std::string base_of(const Token& t, const Lexicon& lex) {
  return lex.verb_base(t.normalized).value_or(t.normalized);
}

struct InvertOptions {
  std::string wh;  // "Why" or empty
  bool drop_degree = false;
  bool drop_temporal = false;
  bool append_before = false;
};

// Builds an aux-initial question from a declarative clause.
TokenSeq invert(const ParsedSentence& p, const InvertOptions& opt, const Lexicon& lex) {
  const auto fin = finite_index(p);
  if (!fin) throw Error(ErrorCode::kNotAStatement, "statement has no verb: " + p.raw);
  const Person person = p.subject_person(lex);

  TokenSeq out;
  if (!opt.wh.empty()) out.push_back(make_word(opt.wh, false));

  const Token& f = p.tokens[*fin];
  const bool lexical = p.roles[*fin] == Role::kMainVerb && !is_copula(f, lex) &&
                       !(p.main_verb_base == "have" && f.normalized == "'ve");
  size_t skip_after_finite = *fin;
  if (lexical) {
    const Tense t = p.tense == Tense::kPast ? Tense::kPast : Tense::kPresent;
    out.push_back(make_word(do_form(t, person)));
  } else {
    std::string w = expand_contraction(f.normalized);
    if (f.normalized == "ca") w = "can";
    if (f.normalized == "wo") w = "will";
    if (f.normalized == "sha") w = "shall";
    Token tok = word_token(w, w, true);
    out.push_back(tok);
    if (*fin + 1 < p.tokens.size() && p.tokens[*fin + 1].normalized == "n't") {
      out.push_back(p.tokens[*fin + 1]);
      skip_after_finite = *fin + 1;
    }
  }

  TokenSeq subject;
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    if (p.roles[i] == Role::kSubject) subject.push_back(p.tokens[i]);
  }
  decapitalize_first(subject, lex);
  for (auto& t : subject) out.push_back(t);
  if (!subject.empty()) out[out.size() - subject.size()].space_before = true;

  bool before_seen = false;
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    const Role r = p.roles[i];
    if (r == Role::kPrefix || r == Role::kTerminal || r == Role::kSubject || r == Role::kWh) continue;
    if (i >= *fin && i <= skip_after_finite) {
      if (!(lexical && i == *fin)) continue;
    }
    if (i < *fin && r != Role::kVerbAdverb && r != Role::kNegation) continue;
    const Token& t = p.tokens[i];
    if (opt.drop_temporal && r == Role::kTemporal) continue;
    if (opt.drop_degree && t.is_word() && lex.is(t.normalized, Category::kDegreeAdverb) &&
        r != Role::kMainVerb)
      continue;
    if (lexical && i == *fin) {
      out.push_back(word_token(p.main_verb_base, p.main_verb_base, true));
      continue;
    }
    if (t.is_punct(',') && i + 1 < p.tokens.size() && p.roles[i + 1] == Role::kTerminal) continue;
    if (t.normalized == "before") before_seen = true;
    out.push_back(t);
  }
  if (opt.append_before && !before_seen) out.push_back(make_word("before"));
  out.push_back(make_punct('?'));
  fix_negative_stems(out);
  if (!out.empty()) out.front().space_before = false;
  capitalize_first(out);
  return out;
}

TokenSeq clause_tokens(const ParsedSentence& p) {
  TokenSeq out;
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    if (p.roles[i] == Role::kPrefix || p.roles[i] == Role::kTerminal) continue;
    out.push_back(p.tokens[i]);
  }
  while (!out.empty() && !out.back().is_word()) out.pop_back();
  if (!out.empty()) out.front().space_before = false;
  return out;
}

}  // namespace

TokenSeq mirror_pronouns(const TokenSeq& tokens, const Lexicon& lexicon) {
  TokenSeq out = tokens;
  std::vector<bool> mirrored_subject(tokens.size(), false);
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.is_word()) continue;
    const std::string& w = t.normalized;
    std::string repl;
    if (w == "i") {
      repl = "you";
      mirrored_subject[i] = true;
      Token r = word_token(sentence_start(tokens, i) ? "You" : "you", "you", t.space_before);
      out[i] = r;
      continue;
    }
    if (w == "you") {
      if (subject_position(tokens, i, lexicon)) {
        mirrored_subject[i] = true;
        out[i] = word_token("I", "i", t.space_before);
        continue;
      }
      repl = "me";
    } else if (w == "me") repl = "you";
    else if (w == "my") repl = "your";
    else if (w == "your") repl = "my";
    else if (w == "mine") repl = "yours";
    else if (w == "yours") repl = "mine";
    else if (w == "myself") repl = "yourself";
    else if (w == "yourself") repl = "myself";
    if (repl.empty()) continue;
    out[i] = replace_word(t, repl);
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word()) continue;
    const std::string swapped = swap_copula(tokens[i].normalized);
    if (swapped.empty()) continue;
    const bool next_to_subject = (i > 0 && mirrored_subject[i - 1]) ||
                                 (i + 1 < tokens.size() && mirrored_subject[i + 1]);
    if (!next_to_subject) continue;
    Token r = replace_word(tokens[i], swapped);
    r.space_before = tokens[i].space_before;
    out[i] = r;
  }
  return out;
}

ParsedSentence mirror(const ParsedSentence& parsed, const Lexicon& lexicon) {
  ParsedSentence p = parsed;
  p.tokens = mirror_pronouns(parsed.tokens, lexicon);
  p.raw = render(p.tokens);
  return p;
}

ShiftResult shift_tense(const ParsedSentence& parsed, Tense target, const Lexicon& lex) {
  ShiftResult result{parsed, false};
  if (parsed.tense == target || parsed.tense == Tense::kUnknown || target == Tense::kUnknown)
    return result;
  const auto fin = finite_index(parsed);
  if (!fin) return result;
  const Person person = parsed.subject_person(lex);
  const Token& f = parsed.tokens[*fin];
  const Role frole = parsed.roles[*fin];
  const std::string w = f.normalized;

  // Index just after the negation and adverbs that follow the finite verb.
  size_t after_neg = *fin + 1;
  while (after_neg < parsed.tokens.size() && (parsed.roles[after_neg] == Role::kNegation ||
                                              parsed.roles[after_neg] == Role::kVerbAdverb)) {
    ++after_neg;
  }

  Labelled l;
  auto copy_range = [&](size_t from, size_t to) {
    for (size_t i = from; i < to; ++i) l.push(parsed.tokens[i], parsed.roles[i]);
  };
  auto emit_at = [&](std::vector<std::pair<Token, Role>> finite_tokens,
                     std::vector<std::pair<Token, Role>> after_negation,
                     bool drop_following_base = false) {
    copy_range(0, *fin);
    for (auto& [t, r] : finite_tokens) l.push(t, r);
    copy_range(*fin + 1, after_neg);
    for (auto& [t, r] : after_negation) l.push(t, r);
    copy_range(after_neg + (drop_following_base ? 1 : 0), parsed.tokens.size());
  };

  const bool negated_next = *fin + 1 < parsed.tokens.size() &&
                            parsed.roles[*fin + 1] == Role::kNegation;
  const bool future_src = w == "will" || w == "'ll" || w == "shall";

  if (future_src) {
    // Next verb after "will": be / have / lexical base.
    if (after_neg >= parsed.tokens.size()) return result;
    const Token& next = parsed.tokens[after_neg];
    const Role nrole = parsed.roles[after_neg];
    if (nrole != Role::kMainVerb && nrole != Role::kAuxiliary) return result;
    std::string repl;
    if (next.normalized == "be") repl = be_form(target, person);
    else if (next.normalized == "have" && nrole == Role::kAuxiliary) repl = have_form(target, person);
    if (!repl.empty()) {
      emit_at({{replace_word(f, repl), nrole}}, {}, /*drop_following_base=*/true);
    } else if (negated_next) {
      emit_at({{replace_word(f, do_form(target, person)), Role::kAuxiliary}}, {});
    } else {
      copy_range(0, *fin);
      copy_range(*fin + 1, after_neg);
      Token v = replace_word(next, inflect(base_of(next, lex), target, person, lex,
                                           &result.regular_fallback));
      v.space_before = true;
      l.push(v, Role::kMainVerb);
      copy_range(after_neg + 1, parsed.tokens.size());
    }
  } else if (is_copula(f, lex)) {
    if (target == Tense::kFuture) {
      emit_at({{replace_word(f, "will"), Role::kAuxiliary}},
              {{word_token("be", "be", true), frole}});
    } else {
      emit_at({{replace_word(f, be_form(target, person)), frole}}, {});
    }
  } else if (frole == Role::kAuxiliary && is_do(w)) {
    const std::string repl = target == Tense::kFuture ? "will" : do_form(target, person);
    emit_at({{replace_word(f, repl), Role::kAuxiliary}}, {});
  } else if (frole == Role::kAuxiliary && (w == "have" || w == "has" || w == "had" || w == "'ve")) {
    if (target == Tense::kFuture) {
      emit_at({{replace_word(f, "will"), Role::kAuxiliary}},
              {{word_token("have", "have", true), Role::kAuxiliary}});
    } else {
      emit_at({{replace_word(f, have_form(target, person)), Role::kAuxiliary}}, {});
    }
  } else if (lex.is(w, Category::kModal) || w == "ca" || w == "'d") {
    std::string repl;
    if (target == Tense::kPast) {
      if (w == "can" || w == "ca") repl = "could";
      else if (w == "may") repl = "might";
    } else if (target == Tense::kPresent) {
      if (w == "could") repl = "can";
      else if (w == "might") repl = "may";
    }
    if (repl.empty()) return result;
    emit_at({{replace_word(f, repl), Role::kAuxiliary}}, {});
  } else if (frole == Role::kMainVerb) {
    const std::string base = parsed.main_verb_base.empty() ? base_of(f, lex) : parsed.main_verb_base;
    if (target == Tense::kFuture) {
      copy_range(0, *fin);
      l.push(replace_word(f, "will"), Role::kAuxiliary);
      l.push(word_token(base, base, true), Role::kMainVerb);
      copy_range(*fin + 1, parsed.tokens.size());
    } else {
      emit_at({{replace_word(f, inflect(base, target, person, lex, &result.regular_fallback)),
                Role::kMainVerb}},
              {});
    }
  } else {
    return result;
  }
  result.sentence = rebuild(parsed, std::move(l), lex);
  return result;
}

QuestionForm build_why_question(const ParsedSentence& parsed, const Lexicon& lexicon) {
  if (parsed.mood != Mood::kDeclarative || !finite_index(parsed))
    throw Error(ErrorCode::kNotAStatement, "not a statement: " + parsed.raw);
  const ParsedSentence m = mirror(parsed, lexicon);
  InvertOptions opt;
  opt.wh = "Why";
  return {QuestionKind::kWhyQuestion, render(invert(m, opt, lexicon))};
}

QuestionForm build_past_probe(const ParsedSentence& parsed, const Lexicon& lexicon) {
  if (parsed.mood != Mood::kDeclarative || !finite_index(parsed))
    throw Error(ErrorCode::kNotAStatement, "not a statement: " + parsed.raw);
  if (parsed.tense != Tense::kPresent)
    throw Error(ErrorCode::kNotPresentTense, "not in the present tense: " + parsed.raw);
  const ParsedSentence m = mirror(parsed, lexicon);
  const ShiftResult past = shift_tense(m, Tense::kPast, lexicon);
  InvertOptions opt;
  opt.drop_degree = true;
  opt.drop_temporal = true;
  opt.append_before = true;
  return {QuestionKind::kPastProbe, render(invert(past.sentence, opt, lexicon))};
}

std::string mirrored_clause(const ParsedSentence& parsed, const Lexicon& lexicon,
                            const ParsedSentence* reason) {
  TokenSeq out = clause_tokens(mirror(parsed, lexicon));
  decapitalize_first(out, lexicon);
  if (reason != nullptr) {
    const ParsedSentence r = mirror(*reason, lexicon);
    TokenSeq rt;
    for (size_t i = 0; i < r.tokens.size(); ++i) {
      if (r.roles[i] == Role::kTerminal) continue;
      rt.push_back(r.tokens[i]);
    }
    while (!rt.empty() && !rt.back().is_word()) rt.pop_back();
    if (rt.empty() || rt.front().normalized != "because") {
      if (!rt.empty()) rt.front().space_before = true;
      rt.insert(rt.begin(), make_word("because"));
    }
    rt.front().surface = "because";
    rt.front().space_before = true;
    for (auto& t : rt) out.push_back(t);
  }
  return render(out);
}

std::string echo_statement(const ParsedSentence& parsed, std::string_view interjection,
                           const Lexicon& lexicon, const ParsedSentence* reason) {
  if (parsed.mood != Mood::kDeclarative)
    throw Error(ErrorCode::kNotAStatement, "not a statement: " + parsed.raw);
  std::string clause = mirrored_clause(parsed, lexicon, reason);
  if (interjection.empty()) return clause + ".";
  return std::string(interjection) + ", " + clause + ".";
}

bool is_polar_question(const ParsedSentence& p) {
  if (p.mood != Mood::kInterrogative || p.has_role(Role::kWh) || !p.inverted) return false;
  for (size_t i = 0; i < p.roles.size(); ++i) {
    if (p.roles[i] == Role::kPrefix) continue;
    return p.roles[i] == Role::kAuxiliary || p.roles[i] == Role::kMainVerb;
  }
  return false;
}

ParsedSentence proposition_from_polar_question(const ParsedSentence& q, bool affirmative,
                                               const Lexicon& lexicon) {
  if (!is_polar_question(q))
    throw Error(ErrorCode::kInvalidArgument, "not a polar question: " + q.raw);
  size_t aux = 0;
  while (q.roles[aux] == Role::kPrefix) ++aux;
  const Token& a = q.tokens[aux];
  std::string aw = expand_contraction(a.normalized);
  const bool do_support = q.roles[aux] == Role::kAuxiliary && is_do(aw);

  TokenSeq out;
  size_t i = aux + 1;
  while (i < q.tokens.size() && q.roles[i] == Role::kNegation) ++i;
  for (; i < q.tokens.size() && q.roles[i] == Role::kSubject; ++i) out.push_back(q.tokens[i]);
  if (!do_support) {
    out.push_back(word_token(aw, aw, true));
    if (!affirmative) out.push_back(make_word("not"));
  } else if (!affirmative) {
    out.push_back(word_token(aw, aw, true));
    out.push_back(make_word("not"));
  }
  for (; i < q.tokens.size(); ++i) {
    if (q.roles[i] == Role::kTerminal || q.roles[i] == Role::kNegation) continue;
    Token t = q.tokens[i];
    if (do_support && affirmative && q.roles[i] == Role::kMainVerb && aw != "do") {
      const Person person = aw == "does" ? Person::kThirdSingular : Person::kSecond;
      const Tense tense = aw == "did" ? Tense::kPast : Tense::kPresent;
      const std::string w = inflect(base_of(t, lexicon), tense, person, lexicon, nullptr);
      t = replace_word(t, w);
    }
    out.push_back(t);
  }
  out.push_back(make_punct('.'));
  fix_negative_stems(out);
  if (!out.empty()) out.front().space_before = false;
  TokenSeq mirrored = mirror_pronouns(out, lexicon);
  capitalize_first(mirrored);
  return parse(mirrored, lexicon);
}

}  // namespace parley
