// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_NAME_RECORD_H_
#define GAZKIT_NAME_RECORD_H_

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

#include "gazkit/gazetteer.h"

namespace gazkit {

// One label or alias of a knowledge-graph entity, as retrieved.
struct RawNameRecord {
  std::string entity_id;                         // Q<digits>
  EntrySource kind = EntrySource::kCanonical;    // canonical or alias
  std::string text;
  std::string language;

  friend bool operator==(const RawNameRecord&, const RawNameRecord&) = default;
  friend auto operator<=>(const RawNameRecord&, const RawNameRecord&) = default;
};

// A record together with the target types its entity resolves to.
struct TypedNameRecord {
  RawNameRecord record;
  std::set<std::string> types;

  friend bool operator==(const TypedNameRecord&, const TypedNameRecord&) = default;
};

using NameRecordSink = std::function<void(const TypedNameRecord&)>;

// True for "Q" followed by one or more digits.
bool is_entity_id(std::string_view id);

// Strips a Wikidata entity URI down to its id
// ("http://www.wikidata.org/entity/Q42" -> "Q42"); ids pass through.
std::string entity_id_from_uri(std::string_view uri);

// Name-record interchange file, one record per line:
//   entity<TAB>canonical|alias<TAB>lang<TAB>TYPE[,TYPE...]<TAB>text
// The text is the remainder of the line. Output is what `fetch` and
// `scan-dump` write and `clean` reads.
void write_name_record(std::ostream& out, const TypedNameRecord& record);
// Returns the number of records read. Throws ParseError with line number.
size_t read_name_records(std::istream& in, const NameRecordSink& sink);

}  // namespace gazkit

#endif  // GAZKIT_NAME_RECORD_H_
