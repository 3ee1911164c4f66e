// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/type_map.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "gazkit/error.h"
#include "gazkit/name_record.h"
#include "text.h"

namespace gazkit {

namespace {

// Orders Q-ids by their numeric part so Q9 precedes Q10.
bool qid_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void TypeMap::add(const std::string& qid, const std::string& code) {
  if (!is_entity_id(qid)) throw DataError("type map: '" + qid + "' is not a Q-id");
  if (code.empty()) throw DataError("type map: empty type code for " + qid);
  map_[qid].insert(code);
}

const std::set<std::string>& TypeMap::lookup(std::string_view qid) const {
  static const std::set<std::string> kEmpty;
  auto it = map_.find(qid);
  return it == map_.end() ? kEmpty : it->second;
}

std::set<std::string> resolve_target_types(std::span<const std::string> instance_of,
                                           const TypeMap& map) {
  std::set<std::string> out;
  for (const auto& id : instance_of) {
    const auto& types = map.lookup(id);
    out.insert(types.begin(), types.end());
  }
  return out;
}

TypeMap build_type_map(std::span<const TargetRoots> targets,
                       const std::map<std::string, std::vector<std::string>>& discovery) {
  TypeMap map;
  for (const auto& target : targets) {
    for (const auto& root : target.roots) {
      auto it = discovery.find(root);
      if (it == discovery.end()) continue;
      for (const auto& sub : it->second) map.add(sub, target.type);
    }
  }
  return map;
}

void write_type_map(const TypeMap& map, std::ostream& out) {
  std::vector<const std::string*> ids;
  ids.reserve(map.size());
  for (const auto& [id, types] : map.entries()) ids.push_back(&id);
  std::sort(ids.begin(), ids.end(),
            [](const std::string* a, const std::string* b) { return qid_less(*a, *b); });
  for (const auto* id : ids) {
    out << *id << '\t';
    bool first = true;
    for (const auto& t : map.lookup(*id)) {
      if (!first) out << ',';
      out << t;
      first = false;
    }
    out << '\n';
  }
}

TypeMap read_type_map(std::istream& in) {
  TypeMap map;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError("type map line " + std::to_string(line_no) +
                       ": expected Qid<TAB>codes, got '" + line + "'");
    }
    std::string qid(fields[0]);
    if (!is_entity_id(qid)) {
      throw ParseError("type map line " + std::to_string(line_no) + ": bad Q-id '" + qid + "'");
    }
    bool any = false;
    for (auto code : text::split(fields[1], ',')) {
      if (code.empty()) continue;
      map.add(qid, std::string(code));
      any = true;
    }
    if (!any) {
      throw ParseError("type map line " + std::to_string(line_no) + ": no type codes for " + qid);
    }
  }
  return map;
}

TypeMap load_type_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open type map: " + path);
  return read_type_map(in);
}

std::vector<TargetRoots> read_target_roots(std::istream& in) {
  std::vector<TargetRoots> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    if (text::is_blank(line) || line[0] == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError("roots line " + std::to_string(line_no) +
                       ": expected TYPE<TAB>Qid[,Qid...], got '" + line + "'");
    }
    TargetRoots t;
    t.type = std::string(fields[0]);
    for (auto id : text::split(fields[1], ',')) {
      if (id.empty()) continue;
      if (!is_entity_id(id)) {
        throw ParseError("roots line " + std::to_string(line_no) + ": bad Q-id '" +
                         std::string(id) + "'");
      }
      t.roots.emplace_back(id);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TargetRoots> load_target_roots_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open roots file: " + path);
  return read_target_roots(in);
}

}  // namespace gazkit
