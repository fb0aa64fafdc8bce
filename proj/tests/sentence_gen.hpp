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

#include <string>
#include <vector>

#include "parley/rng.hpp"

namespace parley::testing {

// Small random sentences over lexicon words, enough variety to exercise
// pronoun positions, auxiliaries, copulas and prepositional objects.
class SentenceGen {
 public:
  explicit SentenceGen(uint32_t seed) : rng_(seed) {}

  std::string next() {
    if (rng_.index(3) == 0) return copular();
    std::string s = pick({"I", "you", "we", "they", "He", "You"});
    const int aux = static_cast<int>(rng_.index(5));
    if (aux == 1) s += " " + pick({"can", "will", "must", "could"});
    if (aux == 2) s += " " + pick({"do not", "did not", "can not"});
    s += " " + pick({"like", "watch", "need", "play", "read", "love", "help", "want", "know", "see"});
    s += " " + object();
    if (rng_.index(2) == 0) s += " " + pick({"with", "for", "to", "about"}) + " " + object();
    if (rng_.index(3) == 0) s += " " + pick({"today", "now", "this week", "tomorrow"});
    return s + pick({".", "!", "."});
  }

 private:
  std::string copular() {
    const int who = static_cast<int>(rng_.index(4));
    std::string s;
    if (who == 0) s = pick({"I am", "I was"});
    else if (who == 1) s = pick({"you are", "you were", "You are"});
    else if (who == 2) s = pick({"my teacher is", "your friend was"});
    else s = pick({"we are", "they were"});
    if (rng_.index(3) == 0) s += " not";
    if (rng_.index(2) == 0) s += " " + pick({"very", "so", "extremely"});
    s += " " + pick({"happy", "clever", "tired", "busy", "sad", "good"});
    if (rng_.index(2) == 0) s += " " + pick({"with", "for", "to"}) + " " + object();
    return s + ".";
  }

  std::string object() {
    switch (rng_.index(7)) {
      case 0: return "me";
      case 1: return "you";
      case 2: return "my " + noun();
      case 3: return "your " + noun();
      case 4: return "the " + noun();
      case 5: return "myself";
      default: return "it";
    }
  }

  std::string noun() { return pick({"book", "friend", "music", "teacher", "computer", "song", "game"}); }

  std::string pick(std::vector<std::string> options) { return options[rng_.index(options.size())]; }

  Rng rng_;
};

}  // namespace parley::testing
