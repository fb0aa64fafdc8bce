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

#include "parley/discourse.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "parley/error.hpp"
#include "parley/text.hpp"
#include "parley/transform.hpp"

namespace parley {
namespace {

constexpr std::array<std::string_view, 8> kYes = {"yes", "yeah", "yep", "sure", "ok", "okay",
                                                  "right", "certainly"};
constexpr std::array<std::string_view, 3> kNo = {"no", "nope", "never"};

bool contains(auto const& list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

// TABs become spaces; newlines and backslashes are escaped.
std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\t') out += ' ';
    else if (c == '\n') out += "\\n";
    else if (c == '\\') out += "\\\\";
    else if (c == '\r') continue;
    else out += c;
  }
  return out;
}

std::string unescape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      const char n = s[++i];
      if (n == 'n') out += '\n';
      else if (n == '\\') out += '\\';
      else throw Error(ErrorCode::kCorruptRecord, "bad escape sequence");
    } else if (s[i] == '\\') {
      throw Error(ErrorCode::kCorruptRecord, "dangling backslash");
    } else {
      out += s[i];
    }
  }
  return out;
}

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorCode::kCorruptRecord, what); }

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) corrupt("bad turn index '" + s + "'");
  return v;
}

Speaker speaker_from(const std::string& s) {
  if (s == "user") return Speaker::kUser;
  if (s == "system") return Speaker::kSystem;
  corrupt("bad speaker '" + s + "'");
}

Modality modality_from(const std::string& s) {
  for (Modality m : {Modality::kBe, Modality::kDo, Modality::kCan, Modality::kHave}) {
    if (to_string(m) == s) return m;
  }
  corrupt("bad modality '" + s + "'");
}

Polarity polarity_from(const std::string& s) {
  if (s == "positive") return Polarity::kPositive;
  if (s == "negative") return Polarity::kNegative;
  corrupt("bad polarity '" + s + "'");
}

SubjectRef subject_from(const std::string& s) {
  if (s == "user") return {SubjectKind::kUser, ""};
  if (s == "system") return {SubjectKind::kSystem, ""};
  if (s.starts_with("other:")) return {SubjectKind::kOther, s.substr(6)};
  corrupt("bad subject '" + s + "'");
}

std::optional<std::string> optional_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return unescape(s);
}

const std::string& session_of(const Record& r) {
  return std::visit([](const auto& v) -> const std::string& { return v.session_id; }, r);
}

bool content_word(const ParsedSentence& p, size_t i, const Lexicon& lex) {
  const Token& t = p.tokens[i];
  if (!t.is_word()) return false;
  const LexEntry* e = lex.find(t.normalized);
  if (e == nullptr) return !t.normalized.starts_with('\'');
  if (e->is(Category::kPronoun) || e->is(Category::kDeterminer) || e->is(Category::kDegreeAdverb) ||
      e->is(Category::kPreposition) || e->is(Category::kNegation))
    return false;
  if (e->is(Category::kAdjective)) return true;
  if (!e->is(Category::kNoun) && !e->is(Category::kProperNoun)) return false;
  if (!e->is_verb_form()) return true;
  // Noun/verb words count as nouns inside a noun phrase ("a book").
  if (i == 0) return false;
  const Token& prev = p.tokens[i - 1];
  const LexEntry* pe = lex.find(prev.normalized);
  if (pe == nullptr) return prev.is_word();
  return pe->is(Category::kDeterminer) || pe->is(Category::kAdjective) ||
         (pe->is(Category::kPronoun) && (prev.normalized == "my" || prev.normalized == "your")) ||
         (pe->is(Category::kNoun) && !pe->is_verb_form());
}

}  // namespace

std::string_view to_string(Speaker s) { return s == Speaker::kUser ? "user" : "system"; }

std::string_view to_string(Modality m) {
  switch (m) {
    case Modality::kBe: return "be";
    case Modality::kDo: return "do";
    case Modality::kCan: return "can";
    case Modality::kHave: return "have";
  }
  return "?";
}

std::string_view to_string(Polarity p) {
  return p == Polarity::kPositive ? "positive" : "negative";
}

std::string to_string(const SubjectRef& s) {
  switch (s.kind) {
    case SubjectKind::kUser: return "user";
    case SubjectKind::kSystem: return "system";
    case SubjectKind::kOther: return "other:" + s.other;
  }
  return "?";
}

std::string serialize_record(const Record& r) {
  struct V {
    std::string operator()(const SessionRecord& s) const {
      return "session\t" + escape(s.session_id) + "\t-\t" + escape(s.user_id) + "\t" + escape(s.mode);
    }
    std::string operator()(const TurnRecord& t) const {
      return "turn\t" + escape(t.session_id) + "\t" + std::to_string(t.index) + "\t" +
             std::string(to_string(t.speaker)) + "\t" + escape(t.timestamp) + "\t" +
             escape(t.summary) + "\t" + escape(t.text);
    }
    std::string operator()(const FactRecord& f) const {
      return "fact\t" + escape(f.session_id) + "\t" + std::to_string(f.turn_index) + "\t" +
             std::string(to_string(f.speaker)) + "\t" + escape(to_string(f.subject)) + "\t" +
             std::string(to_string(f.modality)) + "\t" + escape(f.predicate_key) + "\t" +
             std::string(to_string(f.polarity)) + "\t" + escape(f.source_text);
    }
    std::string operator()(const ProfileRecord& p) const {
      return "profile\t" + escape(p.session_id) + "\t-\t" + escape(p.user_id) + "\t" +
             escape(p.display_name.value_or("")) + "\t" + escape(p.avatar.value_or(""));
    }
    std::string operator()(const CloseRecord& c) const {
      return "close\t" + escape(c.session_id) + "\t-";
    }
  };
  return std::visit(V{}, r);
}

Record parse_record(const std::string& line) {
  const auto f = text::split(line, '\t');
  if (f.size() < 3) corrupt("too few fields");
  const std::string& kind = f[0];
  auto want = [&](size_t n) {
    if (f.size() != n) {
      corrupt(kind + " record needs " + std::to_string(n) + " fields, got " + std::to_string(f.size()));
    }
  };
  if (kind == "session") {
    want(5);
    if (f[2] != "-") corrupt("session record with a turn index");
    return SessionRecord{unescape(f[1]), unescape(f[3]), unescape(f[4])};
  }
  if (kind == "turn") {
    want(7);
    return TurnRecord{unescape(f[1]), parse_int(f[2]), speaker_from(f[3]),
                      unescape(f[6]), unescape(f[5]), unescape(f[4])};
  }
  if (kind == "fact") {
    want(9);
    FactRecord fact;
    fact.session_id = unescape(f[1]);
    fact.turn_index = parse_int(f[2]);
    fact.speaker = speaker_from(f[3]);
    fact.subject = subject_from(unescape(f[4]));
    fact.modality = modality_from(f[5]);
    fact.predicate_key = unescape(f[6]);
    fact.polarity = polarity_from(f[7]);
    fact.source_text = unescape(f[8]);
    if (fact.predicate_key.empty()) corrupt("empty predicate key");
    return fact;
  }
  if (kind == "profile") {
    want(6);
    return ProfileRecord{unescape(f[3]), unescape(f[1]), optional_field(f[4]), optional_field(f[5])};
  }
  if (kind == "close") {
    want(3);
    return CloseRecord{unescape(f[1])};
  }
  corrupt("unknown record kind '" + kind + "'");
}

DiscourseStore::DiscourseStore(const DiscourseStore& other) {
  std::shared_lock lock(other.mu_);
  records_ = other.records_;
}

DiscourseStore& DiscourseStore::operator=(const DiscourseStore& other) {
  if (this == &other) return *this;
  std::vector<Record> copy;
  {
    std::shared_lock lock(other.mu_);
    copy = other.records_;
  }
  std::unique_lock lock(mu_);
  records_ = std::move(copy);
  return *this;
}

DiscourseStore::DiscourseStore(DiscourseStore&& other) noexcept {
  std::unique_lock lock(other.mu_);
  records_ = std::move(other.records_);
  journal_ = std::move(other.journal_);
}

DiscourseStore& DiscourseStore::operator=(DiscourseStore&& other) noexcept {
  if (this == &other) return *this;
  std::scoped_lock lock(mu_, other.mu_);
  records_ = std::move(other.records_);
  journal_ = std::move(other.journal_);
  return *this;
}

bool DiscourseStore::operator==(const DiscourseStore& other) const {
  if (this == &other) return true;
  std::shared_lock a(mu_);
  std::shared_lock b(other.mu_);
  return records_ == other.records_;
}

void DiscourseStore::append_locked(Record r) {
  if (journal_) {
    *journal_ << serialize_record(r) << '\n';
    journal_->flush();
  }
  records_.push_back(std::move(r));
}

void DiscourseStore::check_open_locked(const std::string& session_id) const {
  bool found = false;
  for (const auto& r : records_) {
    if (const auto* s = std::get_if<SessionRecord>(&r); s && s->session_id == session_id) found = true;
    if (const auto* c = std::get_if<CloseRecord>(&r); c && c->session_id == session_id)
      throw Error(ErrorCode::kSessionClosed, "session " + session_id + " is closed");
  }
  if (!found) throw Error(ErrorCode::kUnknownSession, "unknown session " + session_id);
}

void DiscourseStore::open_session(const std::string& session_id, const std::string& user_id,
                                  const std::string& mode) {
  std::unique_lock lock(mu_);
  for (const auto& r : records_) {
    if (const auto* s = std::get_if<SessionRecord>(&r); s && s->session_id == session_id)
      throw Error(ErrorCode::kInvalidArgument, "duplicate session id " + session_id);
  }
  append_locked(SessionRecord{session_id, user_id, mode});
}

int DiscourseStore::record_turn(const std::string& session_id, Speaker speaker,
                                const std::string& raw, const std::string& summary,
                                const std::string& timestamp) {
  std::unique_lock lock(mu_);
  check_open_locked(session_id);
  int next = 0;
  for (const auto& r : records_) {
    if (const auto* t = std::get_if<TurnRecord>(&r); t && t->session_id == session_id) ++next;
  }
  append_locked(TurnRecord{session_id, next, speaker, raw, summary, timestamp});
  return next;
}

void DiscourseStore::record_fact(const FactRecord& fact) {
  if (fact.predicate_key.empty()) throw Error(ErrorCode::kInvalidArgument, "empty predicate key");
  std::unique_lock lock(mu_);
  const bool turn_exists = std::any_of(records_.begin(), records_.end(), [&](const Record& r) {
    const auto* t = std::get_if<TurnRecord>(&r);
    return t && t->session_id == fact.session_id && t->index == fact.turn_index;
  });
  if (!turn_exists) throw Error(ErrorCode::kInvalidArgument, "fact references a missing turn");
  append_locked(fact);
}

void DiscourseStore::update_profile(const ProfileRecord& update) {
  if (update.avatar) {
    static constexpr std::array<std::string_view, 5> kIds = {"christine", "stephan", "emina",
                                                             "christoph", "ingrid"};
    if (!contains(kIds, *update.avatar))
      throw Error(ErrorCode::kUnknownPersona, "unknown avatar " + *update.avatar);
  }
  std::unique_lock lock(mu_);
  append_locked(update);
}

void DiscourseStore::close_session(const std::string& session_id) {
  std::unique_lock lock(mu_);
  check_open_locked(session_id);
  append_locked(CloseRecord{session_id});
}

bool DiscourseStore::has_session(const std::string& session_id) const {
  std::shared_lock lock(mu_);
  return std::any_of(records_.begin(), records_.end(), [&](const Record& r) {
    const auto* s = std::get_if<SessionRecord>(&r);
    return s && s->session_id == session_id;
  });
}

std::optional<SessionLog> DiscourseStore::session(const std::string& session_id) const {
  std::shared_lock lock(mu_);
  std::optional<SessionLog> log;
  for (const auto& r : records_) {
    if (session_of(r) != session_id) continue;
    if (const auto* s = std::get_if<SessionRecord>(&r)) {
      log.emplace();
      log->session = *s;
    } else if (!log) {
      continue;
    } else if (const auto* t = std::get_if<TurnRecord>(&r)) {
      log->turns.push_back(*t);
    } else if (std::holds_alternative<CloseRecord>(r)) {
      log->closed = true;
    }
  }
  return log;
}

std::vector<FactRecord> DiscourseStore::facts() const {
  std::shared_lock lock(mu_);
  std::vector<FactRecord> out;
  for (const auto& r : records_) {
    if (const auto* f = std::get_if<FactRecord>(&r)) out.push_back(*f);
  }
  return out;
}

UserProfile DiscourseStore::profile(const std::string& user_id) const {
  std::shared_lock lock(mu_);
  UserProfile p;
  p.user_id = user_id;
  for (const auto& r : records_) {
    const auto* u = std::get_if<ProfileRecord>(&r);
    if (u == nullptr || u->user_id != user_id) continue;
    if (u->display_name) {
      p.display_name = u->display_name;
      p.name_session_id = u->session_id;
    }
    if (u->avatar) p.avatar = u->avatar;
  }
  return p;
}

std::vector<Record> DiscourseStore::records() const {
  std::shared_lock lock(mu_);
  return records_;
}

size_t DiscourseStore::size() const {
  std::shared_lock lock(mu_);
  return records_.size();
}

void DiscourseStore::attach_journal(const std::string& path) {
  auto out = std::make_unique<std::ofstream>(path, std::ios::app | std::ios::binary);
  if (!*out) throw Error(ErrorCode::kIoError, "cannot open journal " + path);
  std::unique_lock lock(mu_);
  journal_ = std::move(out);
}

void DiscourseStore::persist(const std::string& path) const {
  std::string content;
  {
    std::shared_lock lock(mu_);
    for (const auto& r : records_) content += serialize_record(r) + "\n";
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

DiscourseStore::LoadResult DiscourseStore::parse(const std::string& content) {
  LoadResult result;
  DiscourseStore& store = result.store;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    ++line_no;
    const size_t nl = content.find('\n', pos);
    if (nl == std::string::npos) {
      result.errors.push_back({line_no, "truncated record (no line terminator)"});
      break;
    }
    const std::string line = content.substr(pos, nl - pos);
    pos = nl + 1;
    try {
      Record r = parse_record(line);
      // Replays through the checked operations so broken references are caught.
      if (auto* s = std::get_if<SessionRecord>(&r)) {
        store.open_session(s->session_id, s->user_id, s->mode);
      } else if (auto* t = std::get_if<TurnRecord>(&r)) {
        const int idx = store.record_turn(t->session_id, t->speaker, t->text, t->summary, t->timestamp);
        if (idx != t->index) {
          // Undo the append: indices must be contiguous.
          std::unique_lock lock(store.mu_);
          store.records_.pop_back();
          corrupt("turn index " + std::to_string(t->index) + " out of sequence");
        }
      } else if (auto* f = std::get_if<FactRecord>(&r)) {
        store.record_fact(*f);
      } else if (auto* p = std::get_if<ProfileRecord>(&r)) {
        store.update_profile(*p);
      } else if (auto* c = std::get_if<CloseRecord>(&r)) {
        store.close_session(c->session_id);
      }
    } catch (const Error& e) {
      result.errors.push_back({line_no, e.what()});
    }
  }
  return result;
}

DiscourseStore::LoadResult DiscourseStore::load(const std::string& path) {
  return parse(text::read_file(path));
}

std::string predicate_key(const ParsedSentence& p, const Lexicon& lex) {
  std::vector<std::string> words;
  if (!p.copular && !p.main_verb_base.empty() && p.main_verb) words.push_back(p.main_verb_base);
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    if (p.roles[i] != Role::kComplement) continue;
    if (content_word(p, i, lex)) words.push_back(p.tokens[i].normalized);
  }
  return text::join(words, " ");
}

std::optional<bool> answer_polarity(const ParsedSentence& parsed) {
  if (parsed.mood != Mood::kFragment) return std::nullopt;
  const auto words = normalized_words(parsed.tokens);
  if (words.empty()) return std::nullopt;
  if (contains(kYes, words.front())) return true;
  if (contains(kNo, words.front())) return false;
  return std::nullopt;
}

std::vector<FactRecord> extract_facts(const ParsedSentence& parsed, Speaker speaker,
                                      const ParsedSentence* pending, const Lexicon& lex) {
  if (parsed.mood == Mood::kFragment) {
    const auto yes = answer_polarity(parsed);
    if (!yes || pending == nullptr || !is_polar_question(*pending)) return {};
    const ParsedSentence prop = proposition_from_polar_question(*pending, *yes, lex);
    return extract_facts(prop, speaker, nullptr, lex);
  }
  if (parsed.mood != Mood::kDeclarative) return {};
  const auto subject = parsed.indices(Role::kSubject);
  if (subject.size() != 1) return {};
  const std::string& head = parsed.tokens[subject[0]].normalized;
  if (head != "i" && head != "you") return {};

  FactRecord f;
  f.speaker = speaker;
  const bool self = head == "i";
  const bool about_user = (speaker == Speaker::kUser) == self;
  f.subject.kind = about_user ? SubjectKind::kUser : SubjectKind::kSystem;

  bool can = false, have = false;
  for (size_t i = 0; i < parsed.tokens.size(); ++i) {
    if (parsed.roles[i] != Role::kAuxiliary && parsed.roles[i] != Role::kMainVerb) continue;
    const std::string& w = parsed.tokens[i].normalized;
    if (w == "can" || w == "could") can = true;
    if (w == "have" || w == "has" || w == "had" || w == "'ve") have = true;
  }
  if (can) f.modality = Modality::kCan;
  else if (parsed.copular) f.modality = Modality::kBe;
  else if (have || parsed.main_verb_base == "have") f.modality = Modality::kHave;
  else f.modality = Modality::kDo;

  f.predicate_key = predicate_key(parsed, lex);
  if (f.predicate_key.empty()) return {};
  f.polarity = parsed.negated ? Polarity::kNegative : Polarity::kPositive;
  f.source_text = parsed.raw;
  return {f};
}

std::optional<FactRecord> find_contradiction(const FactRecord& query, const DiscourseStore& store,
                                             const std::string& user_id) {
  const auto records = store.records();
  std::vector<std::string> sessions;
  std::optional<FactRecord> best;
  for (const auto& r : records) {
    if (const auto* s = std::get_if<SessionRecord>(&r)) {
      if (s->user_id == user_id) sessions.push_back(s->session_id);
      continue;
    }
    if (const auto* t = std::get_if<TurnRecord>(&r)) {
      // Nothing recorded at or after the query's own turn counts.
      if (t->session_id == query.session_id && t->index >= query.turn_index) break;
      continue;
    }
    const auto* f = std::get_if<FactRecord>(&r);
    if (f == nullptr) continue;
    if (std::find(sessions.begin(), sessions.end(), f->session_id) == sessions.end()) continue;
    if (f->session_id == query.session_id && f->turn_index >= query.turn_index) continue;
    if (f->same_proposition(query) && f->polarity != query.polarity) best = *f;
  }
  return best;
}

std::optional<std::string> recall_name(const std::string& user_id, const DiscourseStore& store,
                                       const std::string& current_session) {
  std::optional<std::string> name;
  for (const auto& r : store.records()) {
    const auto* p = std::get_if<ProfileRecord>(&r);
    if (p == nullptr || p->user_id != user_id || !p->display_name) continue;
    if (!current_session.empty() && p->session_id == current_session) continue;
    name = p->display_name;
  }
  return name;
}

std::optional<std::string> capture_name(const ParsedSentence& parsed, const Lexicon& lexicon) {
  std::vector<const Token*> words;
  for (const auto& t : parsed.tokens) {
    if (t.is_word()) words.push_back(&t);
  }
  auto norm = [&](size_t i) -> std::string {
    return i < words.size() ? words[i]->normalized : std::string();
  };
  auto unknown_capitalized = [&](size_t i) {
    return i < words.size() && text::starts_with_upper(words[i]->surface) &&
           lexicon.find(words[i]->normalized) == nullptr && i + 1 == words.size();
  };
  for (size_t i = 0; i < words.size(); ++i) {
    if (norm(i) == "my" && norm(i + 1) == "name" && (norm(i + 2) == "is" || norm(i + 2) == "'s") &&
        i + 3 < words.size() && !text::contains_digit(words[i + 3]->surface)) {
      return text::capitalize(words[i + 3]->surface);
    }
    if (norm(i) == "i" && (norm(i + 1) == "am" || norm(i + 1) == "'m") && unknown_capitalized(i + 2))
      return words[i + 2]->surface;
    if (norm(i) == "call" && norm(i + 1) == "me" && unknown_capitalized(i + 2))
      return words[i + 2]->surface;
  }
  return std::nullopt;
}

}  // namespace parley
