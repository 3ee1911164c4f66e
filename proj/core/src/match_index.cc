// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/match_index.h"

#include <algorithm>
#include <numeric>

#include "gazkit/error.h"
#include "gazkit/utf8.h"

namespace gazkit {

namespace {

struct BuildEdge {
  uint32_t parent;
  uint32_t token;
  uint32_t child;
};

}  // namespace

CasePolicy parse_case_policy(std::string_view text) {
  if (text == "sensitive") return CasePolicy::kSensitive;
  if (text == "fold") return CasePolicy::kFold;
  throw ParseError("unknown case policy '" + std::string(text) +
                   "' (expected sensitive|fold)");
}

std::string MatchIndex::normalize(std::string_view surface) const {
  return case_policy_ == CasePolicy::kFold ? utf8::fold_case(surface) : std::string(surface);
}

MatchIndex::MatchIndex(std::string type,
                       std::span<const std::vector<std::string>* const> entries,
                       TokenMode mode, CasePolicy case_policy)
    : type_(std::move(type)), mode_(mode), case_policy_(case_policy) {
  // Intern tokens and lay sequences out flat.
  std::vector<TokenId> ids;
  std::vector<uint32_t> starts;
  starts.reserve(entries.size() + 1);
  auto intern = [&](std::string key) {
    auto [it, inserted] = vocab_.try_emplace(std::move(key), static_cast<TokenId>(vocab_.size()));
    ids.push_back(it->second);
  };
  for (const auto* entry : entries) {
    const size_t before = ids.size();
    starts.push_back(static_cast<uint32_t>(before));
    if (mode_ == TokenMode::kWord) {
      for (const auto& tok : *entry) {
        if (!tok.empty()) intern(normalize(tok));
      }
    } else {
      for (const auto& tok : *entry) {
        for (char32_t cp : utf8::decode(tok)) {
          if (utf8::is_space(cp)) continue;
          std::string ch;
          utf8::append(ch, case_policy_ == CasePolicy::kFold ? utf8::fold(cp) : cp);
          intern(std::move(ch));
        }
      }
    }
    if (ids.size() == before) starts.pop_back();  // nothing indexable
  }
  starts.push_back(static_cast<uint32_t>(ids.size()));
  const size_t n = starts.size() - 1;
  auto seq = [&](size_t i) {
    return std::span<const TokenId>(ids.data() + starts[i], starts[i + 1] - starts[i]);
  };

  // Deduplicate sequences.
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    auto sa = seq(a);
    auto sb = seq(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](uint32_t a, uint32_t b) {
                            auto sa = seq(a);
                            auto sb = seq(b);
                            return std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
                          }),
              order.end());
  entry_count_ = order.size();

  // Suffix trie with build-time hashed edges.
  occurrences_.push_back(0);
  prefix_occurrences_.push_back(0);
  is_entry_.push_back(0);
  absl::flat_hash_map<uint64_t, NodeId> edges;
  std::vector<BuildEdge> edge_list;
  for (uint32_t e : order) {
    auto s = seq(e);
    max_entry_length_ = std::max(max_entry_length_, s.size());
    for (size_t off = 0; off < s.size(); ++off) {
      NodeId node = kRoot;
      for (size_t k = off; k < s.size(); ++k) {
        const uint64_t key = (static_cast<uint64_t>(node) << 32) | s[k];
        auto [it, inserted] = edges.try_emplace(key, static_cast<NodeId>(occurrences_.size()));
        if (inserted) {
          edge_list.push_back({node, s[k], it->second});
          occurrences_.push_back(0);
          prefix_occurrences_.push_back(0);
          is_entry_.push_back(0);
        }
        node = it->second;
        ++occurrences_[node];
        if (off == 0) ++prefix_occurrences_[node];
      }
      if (off == 0) is_entry_[node] = 1;
    }
  }
  edges = {};

  // Compact into CSR sorted by (parent, token).
  std::sort(edge_list.begin(), edge_list.end(), [](const BuildEdge& a, const BuildEdge& b) {
    return a.parent != b.parent ? a.parent < b.parent : a.token < b.token;
  });
  first_edge_.assign(occurrences_.size() + 1, 0);
  for (const auto& e : edge_list) ++first_edge_[e.parent + 1];
  std::partial_sum(first_edge_.begin(), first_edge_.end(), first_edge_.begin());
  edge_token_.reserve(edge_list.size());
  edge_child_.reserve(edge_list.size());
  for (const auto& e : edge_list) {
    edge_token_.push_back(e.token);
    edge_child_.push_back(e.child);
  }
}

MatchIndex::NodeId MatchIndex::child(NodeId node, TokenId token) const {
  if (node == kNoNode || token == kUnknownToken) return kNoNode;
  auto begin = edge_token_.begin() + first_edge_[node];
  auto end = edge_token_.begin() + first_edge_[node + 1];
  auto it = std::lower_bound(begin, end, token);
  if (it == end || *it != token) return kNoNode;
  return edge_child_[static_cast<size_t>(it - edge_token_.begin())];
}

MatchIndex::TokenId MatchIndex::token_id(std::string_view surface) const {
  auto it = vocab_.find(normalize(surface));
  return it == vocab_.end() ? kUnknownToken : it->second;
}

std::vector<MatchIndex::TokenId> MatchIndex::encode(std::span<const std::string> surfaces) const {
  std::vector<TokenId> out;
  out.reserve(surfaces.size());
  for (const auto& s : surfaces) out.push_back(token_id(s));
  return out;
}

bool MatchIndex::contains(const std::vector<std::string>& tokens) const {
  std::vector<std::string> units;
  if (mode_ == TokenMode::kWord) {
    units = tokens;
  } else {
    for (const auto& t : tokens) {
      for (auto& ch : utf8::split_chars(t)) {
        if (!utf8::is_space(utf8::decode(ch).front())) units.push_back(std::move(ch));
      }
    }
  }
  if (units.empty()) return false;
  NodeId node = kRoot;
  for (const auto& u : units) {
    node = child(node, token_id(u));
    if (node == kNoNode) return false;
  }
  return is_entry(node);
}

size_t MatchIndex::memory_bytes() const {
  size_t bytes = sizeof(*this);
  bytes += occurrences_.capacity() * sizeof(uint32_t);
  bytes += prefix_occurrences_.capacity() * sizeof(uint32_t);
  bytes += is_entry_.capacity();
  bytes += first_edge_.capacity() * sizeof(uint32_t);
  bytes += edge_token_.capacity() * sizeof(TokenId);
  bytes += edge_child_.capacity() * sizeof(NodeId);
  // Slot array plus one control byte per slot, plus out-of-line string data.
  bytes += vocab_.capacity() * (sizeof(std::pair<const std::string, TokenId>) + 1);
  for (const auto& [key, id] : vocab_) {
    if (key.capacity() > 15) bytes += key.capacity() + 1;
  }
  return bytes;
}

MatchIndex build_index(const Gazetteer& gazetteer, const std::string& language,
                       const std::string& type, CasePolicy case_policy, TokenMode mode,
                       const std::set<EntrySource>& sources) {
  std::set<std::string> languages;
  if (!language.empty()) languages.insert(language);
  auto entries = gazetteer.select(type, languages, sources);
  return MatchIndex(type, entries, mode, case_policy);
}

}  // namespace gazkit
