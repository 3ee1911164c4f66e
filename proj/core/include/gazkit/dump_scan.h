// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_DUMP_SCAN_H_
#define GAZKIT_DUMP_SCAN_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gazkit/name_record.h"
#include "gazkit/type_map.h"

namespace gazkit {

// The parts of a Wikidata entity the scanner keeps.
struct DumpEntity {
  std::string id;
  std::map<std::string, std::string> labels;                // lang -> label
  std::map<std::string, std::vector<std::string>> aliases;  // lang -> aliases
  std::vector<std::string> instance_of;                     // P31 targets
};

// Extracts id, labels, aliases and instance-of targets from one entity
// object with a streaming (SAX) parse; nothing else of the entity is
// materialized. Labels and aliases are kept only for `languages` (all when
// empty). Returns nullopt on malformed JSON or a missing id.
std::optional<DumpEntity> parse_dump_entity(std::string_view json,
                                            const std::set<std::string>& languages = {});

struct DumpScanOptions {
  // Lines longer than this are skipped and counted as oversized; the line
  // buffer never grows past it.
  size_t max_record_bytes = 64u << 20;
  unsigned jobs = 1;
};

struct DumpScanStats {
  size_t lines = 0;
  size_t entities = 0;
  size_t matched = 0;     // entities with a non-empty target type set
  size_t records = 0;
  size_t malformed = 0;
  size_t oversized = 0;
  size_t peak_line_bytes = 0;
};

// Streams a Wikidata JSON dump (a JSON array with one entity per line, as
// published; decompress first). For each entity whose instance-of ids
// resolve to at least one target type, emits its label and aliases in each
// requested language (in language order: label first, then aliases), with
// the resolved type set. Memory is bounded by the largest single line.
DumpScanStats scan_dump(std::istream& dump, const TypeMap& map,
                        const std::set<std::string>& languages, const NameRecordSink& sink,
                        const DumpScanOptions& options = {});

}  // namespace gazkit

#endif  // GAZKIT_DUMP_SCAN_H_
