// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_AUGMENT_H_
#define GAZKIT_AUGMENT_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gazkit/corpus.h"
#include "gazkit/gazetteer.h"

namespace gazkit {

struct EntityMention {
  size_t start = 0;
  size_t end = 0;  // exclusive
  std::string type;
  std::string surface;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

// Maximal B-I runs of the gold labels, left to right. Throws DataError
// listing the violations when the labels are not BIO-valid.
std::vector<EntityMention> extract_entities(const Sentence& sentence);

// The generator behind augmentation. std::mt19937_64 has a fully specified
// output sequence; the two draws built on it are defined here instead of
// through std::uniform_*_distribution, whose algorithms vary between
// standard libraries.
class AugmentRng {
 public:
  explicit AugmentRng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n) by rejection of the biased tail. n > 0.
  uint64_t below(uint64_t n);
  // Uniform in [0, 1) from the top 53 bits of one draw.
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct AugmentConfig {
  std::set<std::string> types;  // ignored when all_types
  bool all_types = false;
  bool consistent = false;
  uint64_t seed = 0;
  double probability = 1.0;  // chance that a mention is replaced
  const Gazetteer* source = nullptr;
  std::set<std::string> languages;  // empty = any
  std::set<EntrySource> sources;    // empty = any

  bool targets(const std::string& type) const { return all_types || types.count(type) > 0; }
};

// Replaces targeted entity mentions with entries drawn uniformly from the
// same-type gazetteer entries (the selection order of Gazetteer::select).
// Per mention, in document order: with probability < 1 one unit() draw
// decides whether to replace; then one below(pool size) draw picks the
// entry. With consistent = true the outcome for a (type, surface) pair is
// drawn once and reused for the rest of the document.
//
// Throws DataError before producing anything when a targeted type present
// in the document has no gazetteer entries, or a sentence is not BIO-valid.
Document augment_document(const Document& doc, const AugmentConfig& config);

}  // namespace gazkit

#endif  // GAZKIT_AUGMENT_H_
