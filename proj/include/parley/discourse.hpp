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

#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "parley/lexicon.hpp"
#include "parley/parse.hpp"

namespace parley {

enum class Speaker { kUser, kSystem };
enum class SubjectKind { kUser, kSystem, kOther };
enum class Modality { kBe, kDo, kCan, kHave };
enum class Polarity { kPositive, kNegative };

std::string_view to_string(Speaker s);
std::string_view to_string(Modality m);
std::string_view to_string(Polarity p);

struct SubjectRef {
  SubjectKind kind = SubjectKind::kUser;
  std::string other;  // only for kOther
  bool operator==(const SubjectRef&) const = default;
};

std::string to_string(const SubjectRef& s);

struct FactRecord {
  Speaker speaker = Speaker::kUser;
  SubjectRef subject;
  Modality modality = Modality::kDo;
  std::string predicate_key;
  Polarity polarity = Polarity::kPositive;
  int turn_index = 0;
  std::string session_id;
  // The utterance the fact came from; used to render recall clauses.
  std::string source_text;

  bool same_proposition(const FactRecord& o) const {
    return subject == o.subject && modality == o.modality && predicate_key == o.predicate_key;
  }
  bool operator==(const FactRecord&) const = default;
};

struct SessionRecord {
  std::string session_id;
  std::string user_id;
  std::string mode;  // "persona:<id>" or "scenario:<id>"
  bool operator==(const SessionRecord&) const = default;
};

struct TurnRecord {
  std::string session_id;
  int index = 0;
  Speaker speaker = Speaker::kUser;
  std::string text;
  std::string summary;
  std::string timestamp;
  bool operator==(const TurnRecord&) const = default;
};

// One profile update; fields left empty are unchanged.
struct ProfileRecord {
  std::string user_id;
  std::string session_id;
  std::optional<std::string> display_name;
  std::optional<std::string> avatar;
  bool operator==(const ProfileRecord&) const = default;
};

struct CloseRecord {
  std::string session_id;
  bool operator==(const CloseRecord&) const = default;
};

using Record = std::variant<SessionRecord, TurnRecord, FactRecord, ProfileRecord, CloseRecord>;

struct UserProfile {
  std::string user_id;
  std::optional<std::string> display_name;
  std::optional<std::string> avatar;
  // Session in which the display name was last set.
  std::string name_session_id;
};

struct SessionLog {
  SessionRecord session;
  std::vector<TurnRecord> turns;
  bool closed = false;
};

struct CorruptLine {
  size_t line = 0;
  std::string message;
};

// Append-only discourse history shared by all sessions. Every method is
// thread-safe; readers only see fully appended records.
class DiscourseStore {
 public:
  DiscourseStore() = default;
  DiscourseStore(const DiscourseStore& other);
  DiscourseStore& operator=(const DiscourseStore& other);
  // Copies leave the journal behind; moves take it along.
  DiscourseStore(DiscourseStore&& other) noexcept;
  DiscourseStore& operator=(DiscourseStore&& other) noexcept;

  // Throws kInvalidArgument for a duplicate id.
  void open_session(const std::string& session_id, const std::string& user_id,
                    const std::string& mode);
  // Throws kUnknownSession / kSessionClosed.
  int record_turn(const std::string& session_id, Speaker speaker, const std::string& text,
                  const std::string& summary, const std::string& timestamp);
  // The referenced turn must exist (kInvalidArgument otherwise).
  void record_fact(const FactRecord& fact);
  void update_profile(const ProfileRecord& update);
  void close_session(const std::string& session_id);

  bool has_session(const std::string& session_id) const;
  std::optional<SessionLog> session(const std::string& session_id) const;
  std::vector<FactRecord> facts() const;
  UserProfile profile(const std::string& user_id) const;
  std::vector<Record> records() const;
  size_t size() const;

  // Mirrors every later append to a file, one line per record.
  void attach_journal(const std::string& path);

  void persist(const std::string& path) const;
  struct LoadResult;
  static LoadResult load(const std::string& path);
  static LoadResult parse(const std::string& content);

  bool operator==(const DiscourseStore& other) const;

 private:
  void append_locked(Record r);
  void check_open_locked(const std::string& session_id) const;

  mutable std::shared_mutex mu_;
  std::vector<Record> records_;
  std::unique_ptr<std::ofstream> journal_;
};

struct DiscourseStore::LoadResult {
  DiscourseStore store;
  std::vector<CorruptLine> errors;
};

std::string serialize_record(const Record& r);
// Throws Error(kCorruptRecord).
Record parse_record(const std::string& line);

// Facts stated by one sentence. A yes/no fragment answering a pending
// polar question yields that question's proposition.
std::vector<FactRecord> extract_facts(const ParsedSentence& parsed, Speaker speaker,
                                      const ParsedSentence* pending_question,
                                      const Lexicon& lexicon);

// Verb base plus content words of the complement, lowercased.
std::string predicate_key(const ParsedSentence& parsed, const Lexicon& lexicon);

// Most recent fact of this user's sessions, recorded before the query,
// with the same proposition and the opposite polarity.
std::optional<FactRecord> find_contradiction(const FactRecord& query, const DiscourseStore& store,
                                             const std::string& user_id);

// Name captured in a session other than `current_session`.
std::optional<std::string> recall_name(const std::string& user_id, const DiscourseStore& store,
                                       const std::string& current_session = "");

// "my name is X", "I am X", "call me X".
std::optional<std::string> capture_name(const ParsedSentence& parsed, const Lexicon& lexicon);

// true for yes/yeah/sure..., false for no/nope, nullopt otherwise.
std::optional<bool> answer_polarity(const ParsedSentence& parsed);

}  // namespace parley
