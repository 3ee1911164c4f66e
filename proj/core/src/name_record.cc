// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/name_record.h"

#include <istream>
#include <ostream>

#include "gazkit/error.h"
#include "text.h"

namespace gazkit {

bool is_entity_id(std::string_view id) {
  if (id.size() < 2 || id[0] != 'Q') return false;
  for (size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return false;
  }
  return true;
}

std::string entity_id_from_uri(std::string_view uri) {
  size_t slash = uri.rfind('/');
  return std::string(slash == std::string_view::npos ? uri : uri.substr(slash + 1));
}

void write_name_record(std::ostream& out, const TypedNameRecord& r) {
  out << r.record.entity_id << '\t' << to_string(r.record.kind) << '\t' << r.record.language
      << '\t';
  bool first = true;
  for (const auto& t : r.types) {
    if (!first) out << ',';
    out << t;
    first = false;
  }
  out << '\t' << r.record.text << '\n';
}

size_t read_name_records(std::istream& in, const NameRecordSink& sink) {
  std::string line;
  size_t line_no = 0;
  size_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("name record line " + std::to_string(line_no) + ": " + why);
    };
    std::vector<std::string_view> head;
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) throw fail("expected 5 tab-separated fields");
      head.push_back(std::string_view(line).substr(pos, tab - pos));
      pos = tab + 1;
    }
    TypedNameRecord r;
    r.record.entity_id = std::string(head[0]);
    if (!is_entity_id(r.record.entity_id)) throw fail("bad entity id '" + r.record.entity_id + "'");
    r.record.kind = parse_entry_source(head[1]);
    if (r.record.kind == EntrySource::kInflected) throw fail("kind must be canonical or alias");
    r.record.language = std::string(head[2]);
    for (auto t : text::split(head[3], ',')) {
      if (!t.empty()) r.types.emplace(t);
    }
    r.record.text = line.substr(pos);
    sink(r);
    ++count;
  }
  return count;
}

}  // namespace gazkit
