// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_TESTS_FIXTURES_H_
#define GAZKIT_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "gazkit/corpus.h"
#include "gazkit/gazetteer.h"

namespace gazkit::fixtures {

inline Sentence make_sentence(const std::vector<std::string>& words,
                              TokenMode mode = TokenMode::kWord) {
  Sentence s;
  s.mode = mode;
  for (const auto& w : words) s.tokens.push_back(Token{w, BioLabel::outside()});
  return s;
}

inline std::vector<std::string> airport_words() {
  return {"Jack", "is", "on", "Hong", "Kong", "International", "Airport",
          "in", "Lantau", "Island", ",", "Hong", "Kong"};
}

inline Sentence airport_sentence() { return make_sentence(airport_words()); }

inline Gazetteer airport_gazetteer() {
  Gazetteer g;
  auto add = [&](const std::string& type, std::vector<std::string> tokens) {
    g.insert(GazetteerEntry{std::move(tokens), type, EntrySource::kCanonical, "en"});
  };
  add("PER", {"Jack"});
  add("LOC", {"Lantau", "Island"});
  add("GPE", {"Hong", "Kong", "Government"});
  add("ORG", {"JFK", "International", "Airport"});
  return g;
}

// The four expected rows, as label strings per token.
inline std::vector<std::string> airport_row(const std::string& type) {
  std::vector<std::string> r(13, "O");
  if (type == "PER") {
    r[0] = "B-PER";
  } else if (type == "LOC") {
    r[8] = "B-LOC";
    r[9] = "I-LOC";
  } else if (type == "GPE") {
    r[3] = r[11] = "B-GPE";
    r[4] = r[12] = "I-GPE";
  } else if (type == "ORG") {
    r[5] = r[6] = "I-ORG";
  }
  return r;
}

inline std::string word(std::mt19937_64& rng, size_t vocab) {
  return "w" + std::to_string(std::uniform_int_distribution<size_t>(0, vocab - 1)(rng));
}

inline std::vector<std::string> words(std::mt19937_64& rng, size_t min_len, size_t max_len,
                                      size_t vocab) {
  size_t n = std::uniform_int_distribution<size_t>(min_len, max_len)(rng);
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back(word(rng, vocab));
  return out;
}

}  // namespace gazkit::fixtures

#endif  // GAZKIT_TESTS_FIXTURES_H_
