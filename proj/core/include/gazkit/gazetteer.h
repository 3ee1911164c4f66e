// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_GAZETTEER_H_
#define GAZKIT_GAZETTEER_H_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gazkit {

enum class EntrySource { kCanonical, kAlias, kInflected };

std::string_view to_string(EntrySource source);
EntrySource parse_entry_source(std::string_view text);  // throws ParseError

struct GazetteerEntry {
  std::vector<std::string> tokens;
  std::string type;
  EntrySource source = EntrySource::kCanonical;
  std::string language;

  friend bool operator==(const GazetteerEntry&, const GazetteerEntry&) = default;
};

// Throws DataError unless tokens are non-empty and the language is two
// lowercase ASCII letters.
void validate_entry(const GazetteerEntry& entry);

struct GroupKey {
  std::string language;
  std::string type;
  EntrySource source = EntrySource::kCanonical;

  friend bool operator==(const GroupKey&, const GroupKey&) = default;
  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

// Token sequences of one (language, type, source) group, in insertion
// order, with duplicates rejected.
class GazetteerGroup {
 public:
  bool insert(std::vector<std::string> tokens);
  bool contains(const std::vector<std::string>& tokens) const;

  const std::vector<std::vector<std::string>>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Reorders entries lexicographically by token sequence.
  void sort();

 private:
  std::vector<std::vector<std::string>> entries_;
  std::set<std::vector<std::string>> seen_;
};

// Entity-name lists grouped by (language, type, source). Canonical names,
// aliases and inflected forms stay in separate groups.
class Gazetteer {
 public:
  // Returns false when the token sequence already exists in its group.
  bool insert(const GazetteerEntry& entry);
  bool insert(const GroupKey& key, std::vector<std::string> tokens);

  const GazetteerGroup* group(const GroupKey& key) const;
  const std::map<GroupKey, GazetteerGroup>& groups() const { return groups_; }

  // All token sequences of a type across the given languages and sources.
  // Empty language/source filters mean "any".
  std::vector<const std::vector<std::string>*> select(
      std::string_view type, const std::set<std::string>& languages = {},
      const std::set<EntrySource>& sources = {}) const;

  size_t size() const;
  bool empty() const { return size() == 0; }
  void sort_groups();

 private:
  std::map<GroupKey, GazetteerGroup> groups_;
};

}  // namespace gazkit

#endif  // GAZKIT_GAZETTEER_H_
