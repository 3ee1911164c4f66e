// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_TYPE_MAP_H_
#define GAZKIT_TYPE_MAP_H_

#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gazkit {

// Fine-grained knowledge-graph type (Q-id) -> target tag types.
class TypeMap {
 public:
  // Throws DataError when the id is not a Q-id or the code is empty.
  void add(const std::string& qid, const std::string& code);

  // Empty set for unmapped ids.
  const std::set<std::string>& lookup(std::string_view qid) const;

  size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const std::map<std::string, std::set<std::string>, std::less<>>& entries() const {
    return map_;
  }

  friend bool operator==(const TypeMap&, const TypeMap&) = default;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> map_;
};

// Union of the map lookups of an entity's instance-of ids. Empty means the
// entity is not of interest.
std::set<std::string> resolve_target_types(std::span<const std::string> instance_of,
                                           const TypeMap& map);

// A target tag type and the knowledge-graph types whose subclass closure
// defines it.
struct TargetRoots {
  std::string type;
  std::vector<std::string> roots;

  friend bool operator==(const TargetRoots&, const TargetRoots&) = default;
};

// Maps every instantiated subtype discovered under a target's roots to that
// target; subtypes reachable from several targets map to all of them.
// `discovery` is keyed by root id; roots without results contribute nothing.
TypeMap build_type_map(std::span<const TargetRoots> targets,
                       const std::map<std::string, std::vector<std::string>>& discovery);

// Type-map file: `Qid<TAB>code[,code...]`, one line per id, ids in
// ascending numeric order and codes sorted, so equal maps serialize to
// identical bytes.
void write_type_map(const TypeMap& map, std::ostream& out);
TypeMap read_type_map(std::istream& in);
TypeMap load_type_map_file(const std::string& path);

// Root configuration: `TYPE<TAB>Qid[,Qid...]`, '#' comments allowed.
std::vector<TargetRoots> read_target_roots(std::istream& in);
std::vector<TargetRoots> load_target_roots_file(const std::string& path);

}  // namespace gazkit

#endif  // GAZKIT_TYPE_MAP_H_
