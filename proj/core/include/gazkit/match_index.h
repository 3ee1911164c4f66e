// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_MATCH_INDEX_H_
#define GAZKIT_MATCH_INDEX_H_

#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "gazkit/corpus.h"
#include "gazkit/gazetteer.h"

namespace gazkit {

enum class CasePolicy { kSensitive, kFold };

CasePolicy parse_case_policy(std::string_view text);  // "sensitive" | "fold"

// Immutable multi-pattern index over the entries of one (language, type)
// gazetteer slice.
//
// Every suffix E[o..] of every entry E is inserted into a token trie, so a
// trie node stands for an n-gram g and the set of (entry, offset) pairs at
// which g occurs. Each node keeps two counts: all occurrences of g, and the
// occurrences at offset 0 (entries that start with g); nodes reached by a
// complete entry from offset 0 are flagged as entries. These three facts
// answer both full-match queries (is g an entry?) and the maximality
// arithmetic of partial matching without touching entries at query time,
// so lookups cost O(sentence length x longest entry) regardless of the
// number of entries.
//
// Children are stored in CSR form sorted by token id.
class MatchIndex {
 public:
  using NodeId = uint32_t;
  using TokenId = uint32_t;
  static constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
  static constexpr TokenId kUnknownToken = std::numeric_limits<TokenId>::max();
  static constexpr NodeId kRoot = 0;

  MatchIndex() : MatchIndex(std::string(), {}, TokenMode::kWord, CasePolicy::kSensitive) {}

  // Duplicate sequences (after case folding) are indexed once. In
  // character mode each entry is re-split into code points with whitespace
  // removed.
  MatchIndex(std::string type, std::span<const std::vector<std::string>* const> entries,
             TokenMode mode, CasePolicy case_policy);

  const std::string& type() const { return type_; }
  TokenMode mode() const { return mode_; }
  CasePolicy case_policy() const { return case_policy_; }

  size_t entry_count() const { return entry_count_; }
  size_t node_count() const { return occurrences_.size(); }
  size_t max_entry_length() const { return max_entry_length_; }
  bool empty() const { return entry_count_ == 0; }

  // Approximate resident size of the built index in bytes.
  size_t memory_bytes() const;

  // Exact lookup of a complete entry.
  bool contains(const std::vector<std::string>& tokens) const;

  // Maps surfaces to token ids (kUnknownToken when absent), applying the
  // index's case policy.
  std::vector<TokenId> encode(std::span<const std::string> surfaces) const;
  TokenId token_id(std::string_view surface) const;

  NodeId child(NodeId node, TokenId token) const;

  // Number of (entry, offset) pairs whose suffix passes through `node`.
  uint32_t occurrences(NodeId node) const { return occurrences_[node]; }
  // Same, restricted to offset 0.
  uint32_t prefix_occurrences(NodeId node) const { return prefix_occurrences_[node]; }
  bool is_entry(NodeId node) const { return is_entry_[node] != 0; }

 private:
  std::string normalize(std::string_view surface) const;

  std::string type_;
  TokenMode mode_;
  CasePolicy case_policy_;
  size_t entry_count_ = 0;
  size_t max_entry_length_ = 0;

  absl::flat_hash_map<std::string, TokenId> vocab_;
  std::vector<uint32_t> occurrences_;
  std::vector<uint32_t> prefix_occurrences_;
  std::vector<uint8_t> is_entry_;
  std::vector<uint32_t> first_edge_;  // node_count + 1
  std::vector<TokenId> edge_token_;
  std::vector<NodeId> edge_child_;
};

// Builds the index for one (language, type) slice over the chosen sources
// (all sources when `sources` is empty).
MatchIndex build_index(const Gazetteer& gazetteer, const std::string& language,
                       const std::string& type, CasePolicy case_policy,
                       TokenMode mode = TokenMode::kWord,
                       const std::set<EntrySource>& sources = {});

}  // namespace gazkit

#endif  // GAZKIT_MATCH_INDEX_H_
