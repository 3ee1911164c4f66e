// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/gazetteer.h"

#include <algorithm>

#include "gazkit/error.h"

namespace gazkit {

std::string_view to_string(EntrySource source) {
  switch (source) {
    case EntrySource::kCanonical:
      return "canonical";
    case EntrySource::kAlias:
      return "alias";
    case EntrySource::kInflected:
      return "inflected";
  }
  return "canonical";
}

EntrySource parse_entry_source(std::string_view text) {
  if (text == "canonical") return EntrySource::kCanonical;
  if (text == "alias") return EntrySource::kAlias;
  if (text == "inflected") return EntrySource::kInflected;
  throw ParseError("unknown entry source '" + std::string(text) +
                   "' (expected canonical|alias|inflected)");
}

void validate_entry(const GazetteerEntry& entry) {
  if (entry.tokens.empty()) throw DataError("gazetteer entry has no tokens");
  for (const auto& t : entry.tokens) {
    if (t.empty()) throw DataError("gazetteer entry has an empty token");
  }
  const auto& lang = entry.language;
  if (lang.size() != 2 || !std::all_of(lang.begin(), lang.end(),
                                       [](char c) { return c >= 'a' && c <= 'z'; })) {
    throw DataError("language must be a lowercase ISO 639-1 code, got '" + lang + "'");
  }
}

bool GazetteerGroup::insert(std::vector<std::string> tokens) {
  if (!seen_.insert(tokens).second) return false;
  entries_.push_back(std::move(tokens));
  return true;
}

bool GazetteerGroup::contains(const std::vector<std::string>& tokens) const {
  return seen_.contains(tokens);
}

void GazetteerGroup::sort() { std::sort(entries_.begin(), entries_.end()); }

bool Gazetteer::insert(const GazetteerEntry& entry) {
  validate_entry(entry);
  return groups_[{entry.language, entry.type, entry.source}].insert(entry.tokens);
}

bool Gazetteer::insert(const GroupKey& key, std::vector<std::string> tokens) {
  validate_entry({tokens, key.type, key.source, key.language});
  return groups_[key].insert(std::move(tokens));
}

const GazetteerGroup* Gazetteer::group(const GroupKey& key) const {
  auto it = groups_.find(key);
  return it == groups_.end() ? nullptr : &it->second;
}

std::vector<const std::vector<std::string>*> Gazetteer::select(
    std::string_view type, const std::set<std::string>& languages,
    const std::set<EntrySource>& sources) const {
  std::vector<const std::vector<std::string>*> out;
  for (const auto& [key, group] : groups_) {
    if (key.type != type) continue;
    if (!languages.empty() && !languages.contains(key.language)) continue;
    if (!sources.empty() && !sources.contains(key.source)) continue;
    for (const auto& e : group.entries()) out.push_back(&e);
  }
  return out;
}

size_t Gazetteer::size() const {
  size_t n = 0;
  for (const auto& [key, group] : groups_) n += group.size();
  return n;
}

void Gazetteer::sort_groups() {
  for (auto& [key, group] : groups_) group.sort();
}

}  // namespace gazkit
