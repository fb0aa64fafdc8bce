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

#include "parley/personas.hpp"

#include <algorithm>
#include <set>

#include "parley/error.hpp"
#include "parley/text.hpp"
#include "parley/transform.hpp"

namespace parley {
namespace {

constexpr ContentKind kRotation[] = {ContentKind::kJoke, ContentKind::kStory, ContentKind::kNews};

enum class Delivery { kIntroOnly, kIntroAndFirst, kWhole };

std::vector<std::string> words_of(const std::string& phrase) {
  std::vector<std::string> out;
  for (auto& w : text::split(text::lower(phrase), ' ')) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

bool starts_with(const std::vector<std::string>& words, const std::vector<std::string>& prefix) {
  return prefix.size() <= words.size() && std::equal(prefix.begin(), prefix.end(), words.begin());
}

std::string fill_clause(std::string tmpl, const std::string& clause) {
  tmpl = text::replace_all(tmpl, "{Clause}", text::capitalize(clause));
  return text::replace_all(tmpl, "{clause}", clause);
}

void merge(Response& into, const Response& part) {
  if (into.text.empty()) into.text = part.text;
  else if (!part.text.empty()) into.text += " " + part.text;
  into.meta.strategies.insert(into.meta.strategies.end(), part.meta.strategies.begin(),
                              part.meta.strategies.end());
  into.meta.facts_consulted.insert(into.meta.facts_consulted.end(),
                                   part.meta.facts_consulted.begin(),
                                   part.meta.facts_consulted.end());
  if (part.meta.content_item) {
    into.meta.content_item = part.meta.content_item;
    into.meta.content_segment = part.meta.content_segment;
  }
}

Response make(std::string text, Strategy s) {
  Response r;
  r.text = std::move(text);
  r.meta.strategies.push_back(s);
  return r;
}

std::optional<ContentKind> requested_kind(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    if (w == "song" || w == "songs") return ContentKind::kSong;
    if (w == "story" || w == "stories") return ContentKind::kStory;
    if (w == "joke" || w == "jokes") return ContentKind::kJoke;
    if (w == "news") return ContentKind::kNews;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kGreeting: return "greeting";
    case Strategy::kContentContinuation: return "content-continuation";
    case Strategy::kQaAnswer: return "qa-answer";
    case Strategy::kContradictionRecall: return "contradiction-recall";
    case Strategy::kContentDelivery: return "content-delivery";
    case Strategy::kPolarAcknowledgment: return "polar-acknowledgment";
    case Strategy::kImperativeFallback: return "imperative-fallback";
    case Strategy::kClarification: return "clarification";
    case Strategy::kContentAnnouncement: return "content-announcement";
    case Strategy::kContentSegment: return "content-segment";
    case Strategy::kContentClose: return "content-close";
    case Strategy::kExhaustedEcho: return "exhausted-echo";
    case Strategy::kSympatheticProbe: return "sympathetic-probe";
    case Strategy::kContinuationCue: return "continuation-cue";
    case Strategy::kSeedQuestion: return "seed-question";
    case Strategy::kPastProbe: return "past-probe";
    case Strategy::kWhyQuestion: return "why-question";
    case Strategy::kReasonEcho: return "reason-echo";
    case Strategy::kEcho: return "echo";
    case Strategy::kAdvice: return "advice";
    case Strategy::kEncouragement: return "encouragement";
    case Strategy::kCompliment: return "compliment";
    case Strategy::kOfferReply: return "offer-reply";
    case Strategy::kAphorism: return "aphorism";
    case Strategy::kBackchannel: return "backchannel";
  }
  return "?";
}

std::vector<std::string> match_words(const ParsedSentence& s, const Lexicon& lexicon) {
  TokenSeq kept;
  for (const auto& t : s.tokens) {
    if (t.is_word() && lexicon.is(t.normalized, Category::kDegreeAdverb) &&
        !lexicon.is(t.normalized, Category::kConjunction)) {
      continue;
    }
    kept.push_back(t);
  }
  return normalized_words(kept);
}

PersonaState Responder::new_state(PersonaId persona, const std::string& session_id,
                                  const std::string& user_id) const {
  PersonaState st;
  st.persona = persona;
  st.session_id = session_id;
  st.user_id = user_id;
  st.told.assign(res_.content.size(), false);
  return st;
}

bool Responder::matches_phrase(const ParsedSentence& s, const std::string& kind) const {
  const auto words = match_words(s, res_.lexicon);
  for (const auto& p : res_.phrase_list(kind)) {
    if (words == words_of(p)) return true;
  }
  return false;
}

bool Responder::starts_with_phrase(const ParsedSentence& s, const std::string& kind) const {
  const auto words = match_words(s, res_.lexicon);
  for (const auto& p : res_.phrase_list(kind)) {
    if (starts_with(words, words_of(p))) return true;
  }
  return false;
}

bool Responder::is_greeting(const ParsedSentence& s) const {
  if (s.mood == Mood::kInterrogative) return false;
  const auto words = normalized_words(s.tokens);
  std::set<std::string> addressees = {"there", "everyone", "all"};
  for (const auto& d : res_.personas) addressees.insert(text::lower(d.display_name));
  for (const auto& p : res_.phrase_list("greeting")) {
    const auto pw = words_of(p);
    if (!starts_with(words, pw)) continue;
    const size_t rest = words.size() - pw.size();
    if (rest > 2) continue;
    bool ok = true;
    for (size_t i = pw.size(); i < words.size(); ++i) ok = ok && addressees.count(words[i]) > 0;
    if (ok) return true;
  }
  return false;
}

Response Responder::respond(PersonaState& state, const std::string& input, TimePoint now) {
  if (text::trim(input).empty()) throw Error(ErrorCode::kEmptyInput, "empty message");
  const auto log = store_.session(state.session_id);
  if (!log) throw Error(ErrorCode::kUnknownSession, "unknown session " + state.session_id);
  if (log->closed) throw Error(ErrorCode::kSessionClosed, "session " + state.session_id + " is closed");

  const auto sentences = parse_text(input, res_.lexicon);
  std::vector<std::string> summaries;
  for (const auto& s : sentences) summaries.push_back(s.summary());
  const std::string ts = format_iso8601(now);
  const int user_turn =
      store_.record_turn(state.session_id, Speaker::kUser, input, text::join(summaries, " | "), ts);

  const ParsedSentence* pending = state.pending_polar ? &*state.pending_polar : nullptr;
  for (const auto& s : sentences) {
    if (auto name = capture_name(s, res_.lexicon)) {
      store_.update_profile({state.user_id, state.session_id, *name, std::nullopt});
    }
    for (FactRecord f : extract_facts(s, Speaker::kUser, pending, res_.lexicon)) {
      f.session_id = state.session_id;
      f.turn_index = user_turn;
      store_.record_fact(f);
    }
  }

  Response out;
  for (size_t k = 0; k < sentences.size(); ++k) {
    const ParsedSentence& s = sentences[k];
    // A bare acknowledgment before another sentence gets no reply of its own.
    if (k + 1 < sentences.size() && matches_phrase(s, "acknowledgment")) continue;
    merge(out, dispatch(state, s, user_turn, now));
  }
  if (out.text.empty()) out = make(res_.phrase("clarification"), Strategy::kClarification);

  const auto reply = parse_text(out.text, res_.lexicon);
  std::vector<std::string> reply_summaries;
  for (const auto& s : reply) reply_summaries.push_back(s.summary());
  store_.record_turn(state.session_id, Speaker::kSystem, out.text, text::join(reply_summaries, " | "), ts);
  if (!reply.empty() && is_polar_question(reply.back())) state.pending_polar = reply.back();
  else state.pending_polar.reset();
  return out;
}

Response Responder::open(PersonaState& state, TimePoint now) {
  const auto log = store_.session(state.session_id);
  if (!log) throw Error(ErrorCode::kUnknownSession, "unknown session " + state.session_id);
  if (log->closed) throw Error(ErrorCode::kSessionClosed, "session " + state.session_id + " is closed");
  Response r = greeting(state, now);
  const auto reply = parse_text(r.text, res_.lexicon);
  std::vector<std::string> summaries;
  for (const auto& s : reply) summaries.push_back(s.summary());
  store_.record_turn(state.session_id, Speaker::kSystem, r.text, text::join(summaries, " | "),
                     format_iso8601(now));
  if (!reply.empty() && is_polar_question(reply.back())) state.pending_polar = reply.back();
  else state.pending_polar.reset();
  return r;
}

Response Responder::dispatch(PersonaState& state, const ParsedSentence& s, int user_turn,
                             TimePoint now) {
  if (is_greeting(s)) return greeting(state, now);
  if (s.mood == Mood::kInterrogative || s.mood == Mood::kImperative)
    return shared_answer(state, s, user_turn);
  if (s.mood == Mood::kFragment) {
    if (state.pending_polar && answer_polarity(s)) return shared_answer(state, s, user_turn);
    if (state.active_item && matches_phrase(s, "continuation")) return shared_answer(state, s, user_turn);
  }
  return persona_turn(state, s, user_turn);
}

Response Responder::greeting(PersonaState& state, TimePoint now) {
  const PersonaDescriptor& d = res_.persona(state.persona);
  const auto name = recall_name(state.user_id, store_, state.session_id);
  std::string t = name ? d.greeting_named : d.greeting_anonymous;
  t = text::replace_all(t, "{tod}", time_of_day_greeting(now));
  t = text::replace_all(t, "{name}", name.value_or(""));
  t = text::replace_all(t, "{recall}", name ? " " + res_.phrase("name-recall") : "");
  Response r = make(t, Strategy::kGreeting);
  if (state.persona == PersonaId::kChristine) {
    if (auto item = next_rotation_item(state)) {
      Response a = *start_item(state, *item, false);
      a.meta.strategies = {Strategy::kContentAnnouncement};
      merge(r, a);
    }
  } else if (state.persona == PersonaId::kEmina || state.persona == PersonaId::kChristoph) {
    merge(r, make(next_seed(state), Strategy::kSeedQuestion));
  }
  return r;
}

std::optional<size_t> Responder::next_rotation_item(PersonaState& state) const {
  const size_t n = std::size(kRotation);
  for (size_t r = 0; r < n; ++r) {
    const ContentKind kind = kRotation[(state.rotation + r) % n];
    for (size_t i = 0; i < res_.content.size(); ++i) {
      if (res_.content[i].kind == kind && !state.told[i]) {
        state.rotation = (state.rotation + r + 1) % n;
        return i;
      }
    }
  }
  return std::nullopt;
}

// Intro only when announcing, intro plus the first segment on request, or
// every segment at once for songs.
std::optional<Response> Responder::start_item(PersonaState& state, size_t index, bool requested) {
  const ContentItem& item = res_.content.at(index);
  state.told[index] = true;
  Response r;
  r.meta.content_item = item.title;
  if (item.kind == ContentKind::kSong && requested) {
    r.text = text::join(item.segments, "\n");
    r.meta.content_segment = static_cast<int>(item.segments.size()) - 1;
    r.meta.strategies.push_back(Strategy::kContentDelivery);
    state.active_item.reset();
    return r;
  }
  state.active_item = index;
  if (!requested) {
    r.text = item.intro;
    state.next_segment = 0;
    r.meta.strategies.push_back(Strategy::kContentAnnouncement);
    return r;
  }
  r.text = item.intro + " " + item.segments.front();
  r.meta.content_segment = 0;
  state.next_segment = 1;
  r.meta.strategies.push_back(Strategy::kContentDelivery);
  if (state.next_segment >= item.segments.size()) {
    // Single-segment items close on the next turn.
  }
  return r;
}

std::optional<Response> Responder::continue_content(PersonaState& state) {
  if (!state.active_item) return std::nullopt;
  const ContentItem& item = res_.content.at(*state.active_item);
  Response r;
  r.meta.content_item = item.title;
  if (state.next_segment < item.segments.size()) {
    r.text = item.segments[state.next_segment];
    r.meta.content_segment = static_cast<int>(state.next_segment);
    r.meta.strategies.push_back(Strategy::kContentSegment);
    ++state.next_segment;
    return r;
  }
  r.text = item.closing();
  r.meta.strategies.push_back(Strategy::kContentClose);
  state.active_item.reset();
  state.next_segment = 0;
  return r;
}

std::optional<std::string> Responder::qa_answer(const ParsedSentence& s) const {
  const auto words = match_words(s, res_.lexicon);
  for (const auto& e : res_.qa) {
    if (!e.wildcard) {
      if (words == e.pattern) return e.answer;
      continue;
    }
    if (words.size() <= e.pattern.size() || !starts_with(words, e.pattern)) continue;
    // Capture the remaining word tokens and mirror them.
    TokenSeq rest;
    size_t seen = 0;
    for (const auto& t : s.tokens) {
      if (!t.is_word()) continue;
      if (res_.lexicon.is(t.normalized, Category::kDegreeAdverb) &&
          !res_.lexicon.is(t.normalized, Category::kConjunction))
        continue;
      if (t.normalized == "n't") {
        // Expanded to one word in match_words.
      }
      if (seen++ < e.pattern.size()) continue;
      rest.push_back(t);
    }
    if (rest.empty()) continue;
    rest.front().space_before = false;
    TokenSeq mirrored = mirror_pronouns(rest, res_.lexicon);
    return text::replace_all(e.answer, "{1}", render(mirrored));
  }
  return std::nullopt;
}

std::string Responder::recall_clause(const FactRecord& f, const std::string& session_id) const {
  std::string clause = text::trim(f.source_text);
  while (!clause.empty() && (clause.back() == '.' || clause.back() == '!' || clause.back() == '?'))
    clause.pop_back();
  if (!(clause.starts_with("I ") || clause.starts_with("I'"))) clause = text::decapitalize(clause);
  const std::string& tmpl =
      res_.phrase(f.session_id == session_id ? "recall-current" : "recall");
  return text::replace_all(tmpl, "{clause}", clause);
}

Response Responder::shared_answer(PersonaState& state, const ParsedSentence& s, int user_turn) {
  // (1) continuation of the active content item.
  if (matches_phrase(s, "continuation")) {
    if (auto r = continue_content(state)) {
      r->meta.strategies.insert(r->meta.strategies.begin(), Strategy::kContentContinuation);
      return *r;
    }
  }
  // (2) canned answers, with recall of a contradicting earlier statement.
  if (auto answer = qa_answer(s)) {
    Response r = make(*answer, Strategy::kQaAnswer);
    if (is_polar_question(s)) {
      const ParsedSentence prop = proposition_from_polar_question(s, true, res_.lexicon);
      for (FactRecord q : extract_facts(prop, Speaker::kSystem, nullptr, res_.lexicon)) {
        q.session_id = state.session_id;
        q.turn_index = user_turn;
        if (auto hit = find_contradiction(q, store_, state.user_id)) {
          r.text += " " + recall_clause(*hit, state.session_id);
          r.meta.strategies.push_back(Strategy::kContradictionRecall);
          r.meta.facts_consulted.push_back(*hit);
          break;
        }
      }
    }
    return r;
  }
  // (3) requests for a song, story, joke or news.
  if (s.mood == Mood::kImperative) {
    if (auto kind = requested_kind(match_words(s, res_.lexicon))) {
      std::optional<size_t> pick;
      for (size_t i = 0; i < res_.content.size() && !pick; ++i) {
        if (res_.content[i].kind == *kind && !state.told[i]) pick = i;
      }
      for (size_t i = 0; i < res_.content.size() && !pick; ++i) {
        if (res_.content[i].kind == *kind) pick = i;
      }
      if (pick) return *start_item(state, *pick, true);
    }
  }
  // (4) yes/no answering the persona's own polar question.
  if (state.pending_polar) {
    if (auto yes = answer_polarity(s)) {
      const ParsedSentence prop =
          proposition_from_polar_question(*state.pending_polar, *yes, res_.lexicon);
      return acknowledge(state, prop, user_turn);
    }
  }
  // (5) fallback.
  if (s.mood == Mood::kImperative) return make(res_.phrase("imperative-fallback"), Strategy::kImperativeFallback);
  return make(res_.phrase("clarification"), Strategy::kClarification);
}

Response Responder::acknowledge(PersonaState& state, const ParsedSentence& prop, int user_turn) {
  Response r;
  r.meta.strategies.push_back(Strategy::kPolarAcknowledgment);
  const std::string clause = mirrored_clause(prop, res_.lexicon);
  switch (state.persona) {
    case PersonaId::kEmina:
      merge(r, emina(state, prop));
      break;
    case PersonaId::kChristoph: {
      const auto& echo = res_.lines(PersonaId::kChristoph, "echo");
      r.text = fill_clause(echo.empty() ? "{Clause}." : echo.front(), clause);
      merge(r, christoph(state, prop));
      break;
    }
    case PersonaId::kIngrid: {
      const auto& echo = res_.lines(PersonaId::kIngrid, "echo");
      r.text = fill_clause(echo.empty() ? "{Clause}." : echo.front(), clause);
      const std::string key = predicate_key(prop, res_.lexicon);
      for (const auto& a : res_.aphorisms) {
        if (a.key == key && a.positive == !prop.negated) {
          merge(r, make(a.text, Strategy::kAphorism));
          break;
        }
      }
      break;
    }
    case PersonaId::kChristine: {
      const auto& echo = res_.lines(PersonaId::kChristine, "echo");
      std::string t = echo.empty() ? "{clause}." : echo.front();
      t = text::replace_all(t, "{interjection}", res_.phrase("exhausted-echo"));
      r.text = fill_clause(t, clause);
      break;
    }
    case PersonaId::kStephan:
      merge(r, stephan(state, prop));
      break;
  }
  (void)user_turn;
  return r;
}

Response Responder::persona_turn(PersonaState& state, const ParsedSentence& s, int user_turn) {
  switch (state.persona) {
    case PersonaId::kChristine: return christine(state, s);
    case PersonaId::kStephan: return stephan(state, s);
    case PersonaId::kEmina: return emina(state, s);
    case PersonaId::kChristoph: return christoph(state, s);
    case PersonaId::kIngrid: return ingrid(state, s, user_turn);
  }
  return make(res_.phrase("clarification"), Strategy::kClarification);
}

Response Responder::christine(PersonaState& state, const ParsedSentence& s) {
  if (auto r = continue_content(state)) return *r;
  if (auto item = next_rotation_item(state)) return *start_item(state, *item, false);
  const std::string oh = res_.phrase("exhausted-echo");
  if (s.mood == Mood::kDeclarative) return make(echo_statement(s, oh, res_.lexicon), Strategy::kExhaustedEcho);
  return make(oh + ".", Strategy::kExhaustedEcho);
}

Response Responder::stephan(PersonaState& state, const ParsedSentence& s) {
  const auto& negative = res_.phrase_list("negative-affect");
  bool sad = false;
  for (const auto& t : s.tokens) {
    if (!t.is_word()) continue;
    const std::string base = res_.lexicon.verb_base(t.normalized).value_or(t.normalized);
    if (std::find(negative.begin(), negative.end(), t.normalized) != negative.end() ||
        std::find(negative.begin(), negative.end(), base) != negative.end()) {
      sad = true;
    }
  }
  auto pick = [&](const std::vector<std::string>& pool, size_t& cursor) {
    std::string t = pool[cursor % pool.size()];
    ++cursor;
    if (t == state.last_cue && pool.size() > 1) {
      t = pool[cursor % pool.size()];
      ++cursor;
    }
    state.last_cue = t;
    return t;
  };
  const auto& probes = res_.lines(PersonaId::kStephan, "probe");
  const auto& cues = res_.lines(PersonaId::kStephan, "cue");
  if (sad && !probes.empty()) return make(pick(probes, state.probes_used), Strategy::kSympatheticProbe);
  if (cues.empty()) return make(res_.phrase("exhausted-echo") + ".", Strategy::kContinuationCue);
  return make(pick(cues, state.cue_cursor), Strategy::kContinuationCue);
}

std::string Responder::next_seed(PersonaState& state) {
  const auto& seeds = res_.lines(state.persona, "seed");
  if (seeds.empty()) return res_.phrase("clarification");
  return seeds[state.seed_cursor++ % seeds.size()];
}

Response Responder::emina(PersonaState& state, const ParsedSentence& s) {
  const Lexicon& lex = res_.lexicon;
  const auto& echo_lines = res_.lines(PersonaId::kEmina, "echo");
  const std::string echo_tmpl = echo_lines.empty() ? "{clause}." : echo_lines.front();

  if (state.why_about && s.mood == Mood::kDeclarative) {
    const auto& reason = res_.lines(PersonaId::kEmina, "reason");
    const std::string clause = mirrored_clause(*state.why_about, lex, &s);
    state.why_about.reset();
    return make(fill_clause(reason.empty() ? "{clause}." : reason.front(), clause),
                Strategy::kReasonEcho);
  }
  state.why_about.reset();
  if (s.mood != Mood::kDeclarative) return make(next_seed(state), Strategy::kSeedQuestion);

  if (s.copular && s.tense == Tense::kPresent) {
    bool affect = false;
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.roles[i] == Role::kComplement && lex.is(s.tokens[i].normalized, Category::kAffect))
        affect = true;
    }
    if (affect) {
      try {
        return make(build_past_probe(s, lex).rendered, Strategy::kPastProbe);
      } catch (const Error&) {
      }
    }
  }
  Response r = make(fill_clause(echo_tmpl, mirrored_clause(s, lex)), Strategy::kEcho);
  const std::string key = predicate_key(s, lex);
  const bool first = std::find(state.mentioned.begin(), state.mentioned.end(), key) == state.mentioned.end();
  if (!s.copular && s.main_verb && first) {
    state.mentioned.push_back(key);
    try {
      merge(r, make(build_why_question(s, lex).rendered, Strategy::kWhyQuestion));
      state.why_about = s;
      return r;
    } catch (const Error&) {
    }
  }
  merge(r, make(next_seed(state), Strategy::kSeedQuestion));
  return r;
}

std::optional<const AdviceRule*> Responder::match_advice(const ParsedSentence& s) const {
  std::set<std::string> verbs, words;
  for (const auto& t : s.tokens) {
    if (!t.is_word()) continue;
    words.insert(t.normalized);
    const LexEntry* e = res_.lexicon.find(t.normalized);
    if (e != nullptr && e->is_verb_form()) {
      verbs.insert(res_.lexicon.verb_base(t.normalized).value_or(t.normalized));
    }
  }
  if (!s.main_verb_base.empty()) verbs.insert(s.main_verb_base);
  const AdviceRule* best = nullptr;
  for (const auto& rule : res_.advice) {
    if (!verbs.count(rule.verb)) continue;
    bool ok = true;
    for (const auto& group : rule.keywords) {
      ok = ok && std::any_of(group.begin(), group.end(),
                             [&](const std::string& k) { return words.count(k) > 0; });
    }
    if (ok && (best == nullptr || rule.priority > best->priority)) best = &rule;
  }
  if (best == nullptr) return std::nullopt;
  return best;
}

Response Responder::christoph(PersonaState& state, const ParsedSentence& s) {
  if (s.mood == Mood::kDeclarative && !s.negated) {
    if (auto rule = match_advice(s)) return make((*rule)->response, Strategy::kAdvice);
  }
  const auto& fallbacks = res_.lines(PersonaId::kChristoph, "fallback");
  if (fallbacks.empty()) return make(res_.phrase("clarification"), Strategy::kEncouragement);
  return make(fallbacks[state.fallback_cursor++ % fallbacks.size()], Strategy::kEncouragement);
}

Response Responder::ingrid(PersonaState& state, const ParsedSentence& s, int user_turn) {
  const Lexicon& lex = res_.lexicon;
  if (s.mood == Mood::kDeclarative && s.copular) {
    const auto subject = s.indices(Role::kSubject);
    if (subject.size() == 1 && s.tokens[subject[0]].normalized == "you") {
      for (size_t i = 0; i < s.tokens.size(); ++i) {
        if (s.roles[i] != Role::kComplement || !lex.is(s.tokens[i].normalized, Category::kCompliment))
          continue;
        const auto answer = qa_answer(s);
        const auto& fallback = res_.lines(PersonaId::kIngrid, "compliment-fallback");
        std::string t = answer ? *answer : (fallback.empty() ? "" : fallback.front());
        if (!t.empty()) t += " ";
        t += "Are you " + s.tokens[i].normalized + "?";
        return make(t, Strategy::kCompliment);
      }
    }
  }
  if (starts_with_phrase(s, "offer")) return make(res_.phrase("offer-reply"), Strategy::kOfferReply);
  if (s.mood != Mood::kDeclarative)
    return make(res_.phrase("exhausted-echo") + ".", Strategy::kBackchannel);

  const auto& echo = res_.lines(PersonaId::kIngrid, "echo");
  Response r = make(fill_clause(echo.empty() ? "{Clause}." : echo.front(), mirrored_clause(s, lex)),
                    Strategy::kEcho);
  for (FactRecord q : extract_facts(s, Speaker::kUser, nullptr, lex)) {
    q.session_id = state.session_id;
    q.turn_index = user_turn;
    if (auto hit = find_contradiction(q, store_, state.user_id)) {
      Response recall = make(recall_clause(*hit, state.session_id), Strategy::kContradictionRecall);
      recall.meta.facts_consulted.push_back(*hit);
      merge(r, recall);
      return r;
    }
  }
  const std::string key = predicate_key(s, lex);
  for (const auto& a : res_.aphorisms) {
    if (a.key == key && a.positive == !s.negated) {
      merge(r, make(a.text, Strategy::kAphorism));
      break;
    }
  }
  return r;
}

}  // namespace parley
