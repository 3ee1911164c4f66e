// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_TESTS_ORACLE_H_
#define GAZKIT_TESTS_ORACLE_H_

// Exhaustive reference matcher: enumerates every (n-gram, entry, offset)
// triple and applies the selection rules directly. Shares no code with
// the index-based matcher.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gazkit/bio.h"
#include "gazkit/matcher.h"

namespace gazkit::oracle {

using Entries = std::vector<std::vector<std::string>>;

struct Span {
  size_t start;
  size_t end;
  std::vector<BioKind> tags;

  friend bool operator==(const Span&, const Span&) = default;
};

inline bool equal_at(const std::vector<std::string>& sent, size_t i, const std::vector<std::string>& e,
                     size_t o, size_t len) {
  if (o + len > e.size() || i + len > sent.size()) return false;
  for (size_t k = 0; k < len; ++k) {
    if (sent[i + k] != e[o + k]) return false;
  }
  return true;
}

inline std::vector<Span> pick(std::vector<Span> cands, size_t n) {
  std::stable_sort(cands.begin(), cands.end(), [](const Span& a, const Span& b) {
    if (a.end - a.start != b.end - b.start) return a.end - a.start > b.end - b.start;
    if (a.start != b.start) return a.start < b.start;
    // offset 0 (a B tag) first
    return a.tags[0] == BioKind::kB && b.tags[0] != BioKind::kB;
  });
  std::vector<bool> used(n, false);
  std::vector<Span> out;
  for (const auto& c : cands) {
    bool ok = true;
    for (size_t i = c.start; i < c.end; ++i) ok = ok && !used[i];
    if (!ok) continue;
    for (size_t i = c.start; i < c.end; ++i) used[i] = true;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Span& a, const Span& b) { return a.start < b.start; });
  return out;
}

inline std::vector<Span> full(const std::vector<std::string>& sent, const Entries& entries) {
  std::vector<Span> cands;
  for (size_t i = 0; i < sent.size(); ++i) {
    for (size_t j = i + 1; j <= sent.size(); ++j) {
      for (const auto& e : entries) {
        if (e.size() == j - i && equal_at(sent, i, e, 0, j - i)) {
          Span s{i, j, std::vector<BioKind>(j - i, BioKind::kI)};
          s.tags[0] = BioKind::kB;
          cands.push_back(s);
          break;
        }
      }
    }
  }
  return pick(cands, sent.size());
}

inline std::vector<Span> partial(const std::vector<std::string>& sent, const Entries& entries,
                                 size_t min_len, const std::vector<bool>& blocked) {
  std::vector<Span> cands;
  const size_t n = sent.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + min_len; j <= n; ++j) {
      bool hit_block = false;
      for (size_t k = i; k < j; ++k) hit_block = hit_block || (!blocked.empty() && blocked[k]);
      if (hit_block) continue;
      const size_t len = j - i;
      for (const auto& e : entries) {
        for (size_t o = 0; o + len <= e.size(); ++o) {
          if (!equal_at(sent, i, e, o, len)) continue;
          if (o == 0 && len == e.size()) continue;  // the whole entry
          bool grows_left = i > 0 && o > 0 && sent[i - 1] == e[o - 1];
          bool grows_right = j < n && o + len < e.size() && sent[j] == e[o + len];
          if (grows_left || grows_right) continue;
          Span s{i, j, std::vector<BioKind>(len, BioKind::kI)};
          if (o == 0) s.tags[0] = BioKind::kB;
          cands.push_back(s);
        }
      }
    }
  }
  return pick(cands, n);
}

inline std::vector<BioKind> row(const std::vector<std::string>& sent, Entries entries,
                                const std::string& type, bool partial_on) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  std::vector<BioKind> out(sent.size(), BioKind::kO);
  std::vector<bool> blocked(sent.size(), false);
  for (const auto& s : full(sent, entries)) {
    for (size_t i = s.start; i < s.end; ++i) {
      out[i] = s.tags[i - s.start];
      blocked[i] = true;
    }
  }
  if (partial_on) {
    for (const auto& s : partial(sent, entries, type == "PER" ? 1 : 2, blocked)) {
      for (size_t i = s.start; i < s.end; ++i) out[i] = s.tags[i - s.start];
    }
  }
  return out;
}

}  // namespace gazkit::oracle

#endif  // GAZKIT_TESTS_ORACLE_H_
