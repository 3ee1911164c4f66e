// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/tags.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gazkit/error.h"
#include "text.h"

namespace gazkit {

TagRegistry::TagRegistry(std::vector<TagType> types) : types_(std::move(types)) {
  for (size_t i = 0; i < types_.size(); ++i) {
    const auto& t = types_[i];
    if (t.code.empty()) throw ParseError("tag registry: empty type code");
    if (!index_.emplace(t.code, i).second) {
      throw ParseError("tag registry: duplicate type code '" + t.code + "'");
    }
  }
  for (const auto& t : types_) {
    if (t.parent && !index_.contains(*t.parent)) {
      throw ParseError("tag registry: type '" + t.code + "' has unknown parent '" +
                       *t.parent + "'");
    }
  }
}

bool TagRegistry::contains(std::string_view code) const {
  return index_.contains(std::string(code));
}

std::optional<size_t> TagRegistry::index_of(std::string_view code) const {
  auto it = index_.find(std::string(code));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const TagType& TagRegistry::get(std::string_view code) const {
  auto idx = index_of(code);
  if (!idx) throw DataError("unknown tag type '" + std::string(code) + "'");
  return types_[*idx];
}

std::vector<std::string> TagRegistry::codes() const {
  std::vector<std::string> out;
  out.reserve(types_.size());
  for (const auto& t : types_) out.push_back(t.code);
  return out;
}

const TagRegistry& default_registry() {
  static const TagRegistry registry({
      {"PER", true, std::nullopt, "Person"},
      {"ORG", true, std::nullopt, "Organization"},
      {"COMM", false, "ORG", "Commercial Org."},
      {"POL", false, "ORG", "Political Organization"},
      {"GPE", true, std::nullopt, "Geo-political Entity"},
      {"LOC", true, std::nullopt, "Natural Location"},
      {"FAC", false, std::nullopt, "Facility"},
      {"GOVT", false, "FAC", "Government Building"},
      {"AIR", false, "FAC", "Airport"},
      {"EVNT", false, std::nullopt, "Named Event"},
      {"VEH", false, std::nullopt, "Vehicle"},
      {"COMP", false, std::nullopt, "Computer Hard/Software"},
      {"MIL", false, std::nullopt, "Military Equip."},
      {"MIL_G", false, "MIL", "Generic Military Equip."},
      {"MIL_N", false, "MIL", "Named Military Equip."},
      {"CHEM", false, std::nullopt, "Chemical"},
      {"MISC", false, std::nullopt, "Other named entity"},
  });
  return registry;
}

TagRegistry read_registry(std::istream& in) {
  std::vector<TagType> types;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError("registry line " + std::to_string(line_no) +
                       ": expected code<TAB>core|ext<TAB>parent<TAB>description: '" +
                       line + "'");
    }
    TagType t;
    t.code = std::string(fields[0]);
    if (fields[1] == "core") {
      t.core = true;
    } else if (fields[1] != "ext") {
      throw ParseError("registry line " + std::to_string(line_no) +
                       ": expected 'core' or 'ext', got '" + std::string(fields[1]) + "'");
    }
    if (fields[2] != "-") t.parent = std::string(fields[2]);
    if (fields.size() == 4) t.description = std::string(fields[3]);
    types.push_back(std::move(t));
  }
  return TagRegistry(std::move(types));
}

void write_registry(const TagRegistry& registry, std::ostream& out) {
  for (const auto& t : registry.types()) {
    out << t.code << '\t' << (t.core ? "core" : "ext") << '\t'
        << (t.parent ? *t.parent : "-") << '\t' << t.description << '\n';
  }
}

TagRegistry load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open registry file: " + path);
  return read_registry(in);
}

}  // namespace gazkit
