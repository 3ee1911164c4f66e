// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_MATCHER_H_
#define GAZKIT_MATCHER_H_

#include <set>
#include <string>
#include <vector>

#include "gazkit/corpus.h"
#include "gazkit/features.h"
#include "gazkit/match_index.h"
#include "gazkit/tags.h"

namespace gazkit {

enum class MatchKind { kFull, kPartial };

struct MatchSpan {
  size_t start = 0;
  size_t end = 0;  // exclusive
  std::string type;
  MatchKind kind = MatchKind::kFull;
  std::vector<BioKind> tags;  // one per covered token

  friend bool operator==(const MatchSpan&, const MatchSpan&) = default;
};

// Shortest partial match accepted for a type: 1 for PER, 2 otherwise.
size_t min_partial_length(const std::string& type);

// All sentence n-grams equal to a complete entry, reduced to a
// non-overlapping set by taking longer spans first, then smaller start.
// Throws DataError if the sentence and index modes differ.
std::vector<MatchSpan> find_full_matches(const Sentence& sentence, const MatchIndex& index);

// Partial matches: n-grams that occur inside some entry at an offset where
// they cannot be extended left or right within that entry occurrence and
// are not the complete entry. Spans shorter than min_partial_length(type)
// are dropped, as are spans touching a token flagged in `blocked` (same
// length as the sentence, or empty for none). Selection order: longer
// span, smaller start, then an offset-0 occurrence over inner ones. Tags
// are copied from the entry: B,I,I... at offset 0, I,I,... otherwise.
// Word mode only; throws DataError for character-mode input.
std::vector<MatchSpan> find_partial_matches(const Sentence& sentence, const MatchIndex& index,
                                            const std::vector<bool>& blocked = {});

// Per-type match row for one index: full matches first, then (optionally)
// partial matches on tokens no full match covers. Partial matching is
// always off in character mode.
std::vector<BioKind> annotate_row(const Sentence& sentence, const MatchIndex& index,
                                  bool enable_partial);

// One index per registry type, in registry order.
class Annotator {
 public:
  Annotator(const TagRegistry& registry, std::vector<MatchIndex> indexes);

  // Builds indexes for every registry type from the gazetteer slice of
  // `language` (all languages when empty) and the chosen sources.
  static Annotator build(const TagRegistry& registry, const Gazetteer& gazetteer,
                         const std::string& language, TokenMode mode, CasePolicy case_policy,
                         const std::set<EntrySource>& sources = {});

  const TagRegistry& registry() const { return registry_; }
  const std::vector<MatchIndex>& indexes() const { return indexes_; }

  FeatureLayers annotate(const Sentence& sentence, bool enable_partial) const;

  // Annotates every sentence, fanning out over up to `jobs` threads;
  // results are in input order.
  std::vector<FeatureLayers> annotate_document(const Document& doc, bool enable_partial,
                                               unsigned jobs = 1) const;

 private:
  TagRegistry registry_;
  std::vector<MatchIndex> indexes_;
};

// Layers for a sentence: per registry type independently.
FeatureLayers annotate(const Sentence& sentence, const Annotator& annotator,
                       bool enable_partial);

}  // namespace gazkit

#endif  // GAZKIT_MATCHER_H_
