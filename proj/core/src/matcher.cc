// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/matcher.h"

#include <algorithm>
#include <exception>
#include <thread>

#include "gazkit/error.h"

namespace gazkit {

namespace {

using NodeId = MatchIndex::NodeId;

// Trie nodes reached from every start position: paths[s][L-1] is the node
// for the n-gram of length L starting at s, for as long as it exists.
class PathTable {
 public:
  PathTable(const Sentence& sentence, const MatchIndex& index) : index_(index) {
    auto surfaces = sentence.surfaces();
    auto ids = index.encode(surfaces);
    paths_.resize(ids.size());
    const size_t max_len = index.max_entry_length();
    for (size_t s = 0; s < ids.size(); ++s) {
      NodeId node = MatchIndex::kRoot;
      for (size_t k = s; k < ids.size() && k - s < max_len; ++k) {
        node = index.child(node, ids[k]);
        if (node == MatchIndex::kNoNode) break;
        paths_[s].push_back(node);
      }
    }
  }

  size_t size() const { return paths_.size(); }
  size_t depth(size_t s) const { return paths_[s].size(); }

  NodeId node(size_t s, size_t len) const {
    if (s >= paths_.size() || len == 0 || len > paths_[s].size()) return MatchIndex::kNoNode;
    return paths_[s][len - 1];
  }

  int64_t occurrences(size_t s, size_t len) const {
    NodeId n = node(s, len);
    return n == MatchIndex::kNoNode ? 0 : index_.occurrences(n);
  }

  int64_t prefix_occurrences(size_t s, size_t len) const {
    NodeId n = node(s, len);
    return n == MatchIndex::kNoNode ? 0 : index_.prefix_occurrences(n);
  }

  bool is_entry(size_t s, size_t len) const {
    NodeId n = node(s, len);
    return n != MatchIndex::kNoNode && index_.is_entry(n);
  }

 private:
  const MatchIndex& index_;
  std::vector<std::vector<NodeId>> paths_;
};

struct Candidate {
  size_t start;
  size_t length;
  bool offset_zero;
};

// Longest first, then leftmost; keeps spans that do not overlap an earlier
// pick.
std::vector<Candidate> select_non_overlapping(std::vector<Candidate> candidates, size_t n) {
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.start < b.start;
  });
  std::vector<bool> covered(n, false);
  std::vector<Candidate> picked;
  for (const auto& c : candidates) {
    bool free = true;
    for (size_t i = c.start; i < c.start + c.length && free; ++i) free = !covered[i];
    if (!free) continue;
    for (size_t i = c.start; i < c.start + c.length; ++i) covered[i] = true;
    picked.push_back(c);
  }
  std::sort(picked.begin(), picked.end(),
            [](const Candidate& a, const Candidate& b) { return a.start < b.start; });
  return picked;
}

void check_mode(const Sentence& sentence, const MatchIndex& index) {
  if (sentence.mode != index.mode()) {
    throw DataError("sentence is in " + std::string(to_string(sentence.mode)) +
                    " mode but the index for '" + index.type() + "' is in " +
                    std::string(to_string(index.mode())) + " mode");
  }
}

std::vector<MatchSpan> full_matches(const PathTable& paths, const MatchIndex& index) {
  std::vector<Candidate> candidates;
  for (size_t s = 0; s < paths.size(); ++s) {
    for (size_t len = 1; len <= paths.depth(s); ++len) {
      if (paths.is_entry(s, len)) candidates.push_back({s, len, true});
    }
  }
  std::vector<MatchSpan> out;
  for (const auto& c : select_non_overlapping(std::move(candidates), paths.size())) {
    MatchSpan span{c.start, c.start + c.length, index.type(), MatchKind::kFull, {}};
    span.tags.assign(c.length, BioKind::kI);
    span.tags[0] = BioKind::kB;
    out.push_back(std::move(span));
  }
  return out;
}

std::vector<MatchSpan> partial_matches(const PathTable& paths, const MatchIndex& index,
                                       const std::vector<bool>& blocked) {
  const size_t n = paths.size();
  const size_t min_len = min_partial_length(index.type());
  std::vector<Candidate> candidates;
  for (size_t s = 0; s < n; ++s) {
    for (size_t len = min_len; len <= paths.depth(s); ++len) {
      const size_t e = s + len;
      bool touches_blocked = false;
      for (size_t i = s; i < e && !blocked.empty() && !touches_blocked; ++i) {
        touches_blocked = blocked[i];
      }
      if (touches_blocked) continue;
      // Occurrences of sent[s:e] that extend left, right or both map one to
      // one onto occurrences of the widened n-grams.
      const int64_t total = paths.occurrences(s, len);
      const int64_t left = s > 0 ? paths.occurrences(s - 1, len + 1) : 0;
      const int64_t right = e < n ? paths.occurrences(s, len + 1) : 0;
      const int64_t both = (s > 0 && e < n) ? paths.occurrences(s - 1, len + 2) : 0;
      const int64_t complete = paths.is_entry(s, len) ? 1 : 0;
      const int64_t maximal = total - left - right + both - complete;
      if (maximal <= 0) continue;
      const int64_t at_zero = paths.prefix_occurrences(s, len) -
                              (e < n ? paths.prefix_occurrences(s, len + 1) : 0) - complete;
      candidates.push_back({s, len, at_zero > 0});
    }
  }
  std::vector<MatchSpan> out;
  for (const auto& c : select_non_overlapping(std::move(candidates), n)) {
    MatchSpan span{c.start, c.start + c.length, index.type(), MatchKind::kPartial, {}};
    span.tags.assign(c.length, BioKind::kI);
    if (c.offset_zero) span.tags[0] = BioKind::kB;
    out.push_back(std::move(span));
  }
  return out;
}

}  // namespace

size_t min_partial_length(const std::string& type) { return type == "PER" ? 1 : 2; }

std::vector<MatchSpan> find_full_matches(const Sentence& sentence, const MatchIndex& index) {
  check_mode(sentence, index);
  if (index.empty()) return {};
  return full_matches(PathTable(sentence, index), index);
}

std::vector<MatchSpan> find_partial_matches(const Sentence& sentence, const MatchIndex& index,
                                            const std::vector<bool>& blocked) {
  check_mode(sentence, index);
  if (sentence.mode == TokenMode::kCharacter) {
    throw DataError("partial matching is not defined for character-mode text");
  }
  if (!blocked.empty() && blocked.size() != sentence.size()) {
    throw DataError("blocked mask length differs from sentence length");
  }
  if (index.empty()) return {};
  return partial_matches(PathTable(sentence, index), index, blocked);
}

std::vector<BioKind> annotate_row(const Sentence& sentence, const MatchIndex& index,
                                  bool enable_partial) {
  check_mode(sentence, index);
  std::vector<BioKind> row(sentence.size(), BioKind::kO);
  if (index.empty() || sentence.size() == 0) return row;
  PathTable paths(sentence, index);
  std::vector<bool> covered(sentence.size(), false);
  for (const auto& span : full_matches(paths, index)) {
    for (size_t i = span.start; i < span.end; ++i) {
      row[i] = span.tags[i - span.start];
      covered[i] = true;
    }
  }
  if (enable_partial && sentence.mode == TokenMode::kWord) {
    for (const auto& span : partial_matches(paths, index, covered)) {
      for (size_t i = span.start; i < span.end; ++i) row[i] = span.tags[i - span.start];
    }
  }
  return row;
}

Annotator::Annotator(const TagRegistry& registry, std::vector<MatchIndex> indexes)
    : registry_(registry), indexes_(std::move(indexes)) {
  if (indexes_.size() != registry_.size()) {
    throw DataError("annotator needs one index per registry type (" +
                    std::to_string(registry_.size()) + "), got " +
                    std::to_string(indexes_.size()));
  }
  for (size_t k = 0; k < indexes_.size(); ++k) {
    if (indexes_[k].type() != registry_[k].code) {
      throw DataError("index " + std::to_string(k) + " is for '" + indexes_[k].type() +
                      "', registry expects '" + registry_[k].code + "'");
    }
  }
}

Annotator Annotator::build(const TagRegistry& registry, const Gazetteer& gazetteer,
                           const std::string& language, TokenMode mode,
                           CasePolicy case_policy, const std::set<EntrySource>& sources) {
  std::vector<MatchIndex> indexes;
  indexes.reserve(registry.size());
  for (const auto& t : registry.types()) {
    indexes.push_back(build_index(gazetteer, language, t.code, case_policy, mode, sources));
  }
  return Annotator(registry, std::move(indexes));
}

FeatureLayers Annotator::annotate(const Sentence& sentence, bool enable_partial) const {
  FeatureLayers layers;
  layers.rows.reserve(indexes_.size());
  for (const auto& index : indexes_) {
    layers.rows.push_back(annotate_row(sentence, index, enable_partial));
  }
  return layers;
}

std::vector<FeatureLayers> Annotator::annotate_document(const Document& doc,
                                                        bool enable_partial,
                                                        unsigned jobs) const {
  std::vector<FeatureLayers> out(doc.sentences.size());
  const size_t n = doc.sentences.size();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<size_t>(n, 1))));
  if (jobs == 1) {
    for (size_t i = 0; i < n; ++i) out[i] = annotate(doc.sentences[i], enable_partial);
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (size_t i = w; i < n; i += jobs) {
            out[i] = annotate(doc.sentences[i], enable_partial);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

FeatureLayers annotate(const Sentence& sentence, const Annotator& annotator,
                       bool enable_partial) {
  return annotator.annotate(sentence, enable_partial);
}

}  // namespace gazkit
