// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_TAGS_H_
#define GAZKIT_TAGS_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gazkit {

// One entity type of the tag set, e.g. PER or MIL_G.
struct TagType {
  std::string code;
  bool core = false;
  std::optional<std::string> parent;
  std::string description;

  friend bool operator==(const TagType&, const TagType&) = default;
};

// Ordered, closed set of tag types. The order is the feature-column order
// used by every downstream output.
class TagRegistry {
 public:
  TagRegistry() = default;

  // Throws ParseError on duplicate codes or parents that are not
  // registered earlier or later in the list.
  explicit TagRegistry(std::vector<TagType> types);

  const std::vector<TagType>& types() const { return types_; }
  size_t size() const { return types_.size(); }
  const TagType& operator[](size_t i) const { return types_[i]; }

  bool contains(std::string_view code) const;
  std::optional<size_t> index_of(std::string_view code) const;
  const TagType& get(std::string_view code) const;  // throws DataError

  std::vector<std::string> codes() const;

  friend bool operator==(const TagRegistry& a, const TagRegistry& b) {
    return a.types_ == b.types_;
  }

 private:
  std::vector<TagType> types_;
  std::unordered_map<std::string, size_t> index_;
};

// The 17-row tag set: four core types and the extended types, with
// COMM/POL under ORG, GOVT/AIR under FAC and MIL_G/MIL_N under MIL.
const TagRegistry& default_registry();

// Registry file: one type per line,
//   code<TAB>core|ext<TAB>parent-or-"-"<TAB>description
// Blank lines and lines starting with '#' are ignored.
TagRegistry read_registry(std::istream& in);
void write_registry(const TagRegistry& registry, std::ostream& out);
TagRegistry load_registry_file(const std::string& path);

}  // namespace gazkit

#endif  // GAZKIT_TAGS_H_
