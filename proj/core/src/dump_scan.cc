// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/dump_scan.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <istream>
#include <thread>

#include <json.hpp>

#include "gazkit/error.h"

namespace gazkit {

namespace {

using json = nlohmann::json;

// Walks SAX events keeping only the key path, and copies the few string
// values the scanner needs.
class EntityHandler : public nlohmann::json_sax<json> {
 public:
  EntityHandler(DumpEntity* entity, const std::set<std::string>& languages)
      : entity_(entity), languages_(languages) {}

  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t v) override { return numeric(v); }
  bool number_unsigned(number_unsigned_t v) override {
    return numeric(static_cast<number_integer_t>(v));
  }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }

  bool string(string_t& value) override {
    const size_t depth = frames_.size();
    if (depth == 1 && frames_[0].key == "id") {
      entity_->id = value;
    } else if (depth == 3 && frames_[0].key == "labels" && frames_[2].key == "value") {
      if (wanted(frames_[1].key)) entity_->labels[frames_[1].key] = value;
    } else if (depth == 4 && frames_[0].key == "aliases" && frames_[2].array &&
               frames_[3].key == "value") {
      if (wanted(frames_[1].key)) entity_->aliases[frames_[1].key].push_back(value);
    } else if (is_p31_value() && frames_[6].key == "id") {
      entity_->instance_of.push_back(value);
      saw_p31_id_ = true;
    }
    return true;
  }

  bool start_object(std::size_t) override {
    frames_.push_back({false, {}});
    return true;
  }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool end_object() override {
    frames_.pop_back();
    if (frames_.size() == 6 && pending_numeric_) {
      // Older dumps carry only numeric-id; use it if no id string came.
      if (!saw_p31_id_) entity_->instance_of.push_back("Q" + std::to_string(*pending_numeric_));
      pending_numeric_.reset();
      saw_p31_id_ = false;
    } else if (frames_.size() == 6) {
      saw_p31_id_ = false;
    }
    return true;
  }
  bool start_array(std::size_t) override {
    frames_.push_back({true, {}});
    return true;
  }
  bool end_array() override {
    frames_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  struct Frame {
    bool array;
    std::string key;
  };

  bool wanted(const std::string& lang) const {
    return languages_.empty() || languages_.contains(lang);
  }

  // claims.P31[].mainsnak.datavalue.value.<field>
  bool is_p31_value() const {
    return frames_.size() == 7 && frames_[0].key == "claims" && frames_[1].key == "P31" &&
           frames_[2].array && frames_[3].key == "mainsnak" && frames_[4].key == "datavalue" &&
           frames_[5].key == "value";
  }

  bool numeric(number_integer_t v) {
    if (is_p31_value() && frames_[6].key == "numeric-id") pending_numeric_ = v;
    return true;
  }

  DumpEntity* entity_;
  const std::set<std::string>& languages_;
  std::vector<Frame> frames_;
  std::optional<number_integer_t> pending_numeric_;
  bool saw_p31_id_ = false;
};

// Reads newline-terminated lines without letting the buffer grow past a
// cap; longer lines are drained and flagged.
class BoundedLineReader {
 public:
  BoundedLineReader(std::istream& in, size_t cap) : in_(in), cap_(cap) {}

  // Returns false at end of input. `oversized` is set when the line was
  // longer than the cap (its content is then empty).
  bool next(std::string& line, bool& oversized) {
    line.clear();
    oversized = false;
    bool any = false;
    while (true) {
      if (pos_ == len_) {
        in_.read(buf_, sizeof(buf_));
        len_ = static_cast<size_t>(in_.gcount());
        pos_ = 0;
        if (len_ == 0) return any;
      }
      any = true;
      const char* start = buf_ + pos_;
      const char* nl = static_cast<const char*>(memchr(start, '\n', len_ - pos_));
      const size_t chunk = nl ? static_cast<size_t>(nl - start) : len_ - pos_;
      if (!oversized) {
        if (line.size() + chunk > cap_) {
          oversized = true;
          line.clear();
          line.shrink_to_fit();
        } else {
          line.append(start, chunk);
          peak_ = std::max(peak_, line.capacity());
        }
      }
      pos_ += chunk;
      if (nl) {
        ++pos_;
        return true;
      }
    }
  }

  size_t peak() const { return peak_; }

 private:
  std::istream& in_;
  size_t cap_;
  char buf_[1 << 16];
  size_t pos_ = 0;
  size_t len_ = 0;
  size_t peak_ = 0;
};

// Trims the array punctuation around one dump line. Empty means "not an
// entity line".
std::string_view entity_payload(std::string_view line) {
  while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t' ||
                           line.back() == ',')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  if (line == "[" || line == "]") return {};
  return line;
}

void emit(const DumpEntity& e, const TypeMap& map, const std::set<std::string>& languages,
          const NameRecordSink& sink, DumpScanStats& stats) {
  ++stats.entities;
  auto types = resolve_target_types(e.instance_of, map);
  if (types.empty()) return;
  ++stats.matched;
  std::set<std::string> langs = languages;
  if (langs.empty()) {
    for (const auto& [l, v] : e.labels) langs.insert(l);
    for (const auto& [l, v] : e.aliases) langs.insert(l);
  }
  for (const auto& lang : langs) {
    if (auto it = e.labels.find(lang); it != e.labels.end()) {
      sink({{e.id, EntrySource::kCanonical, it->second, lang}, types});
      ++stats.records;
    }
    if (auto it = e.aliases.find(lang); it != e.aliases.end()) {
      for (const auto& alias : it->second) {
        sink({{e.id, EntrySource::kAlias, alias, lang}, types});
        ++stats.records;
      }
    }
  }
}

}  // namespace

std::optional<DumpEntity> parse_dump_entity(std::string_view text,
                                            const std::set<std::string>& languages) {
  DumpEntity entity;
  EntityHandler handler(&entity, languages);
  bool ok = false;
  try {
    ok = json::sax_parse(text.begin(), text.end(), &handler);
  } catch (const json::exception&) {
    ok = false;
  }
  if (!ok || entity.id.empty()) return std::nullopt;
  return entity;
}

DumpScanStats scan_dump(std::istream& dump, const TypeMap& map,
                        const std::set<std::string>& languages, const NameRecordSink& sink,
                        const DumpScanOptions& options) {
  DumpScanStats stats;
  BoundedLineReader reader(dump, options.max_record_bytes);
  std::string line;
  bool oversized = false;
  const unsigned jobs = std::max(1u, options.jobs);

  if (jobs == 1) {
    while (reader.next(line, oversized)) {
      ++stats.lines;
      if (oversized) {
        ++stats.oversized;
        continue;
      }
      auto payload = entity_payload(line);
      if (payload.empty()) continue;
      auto entity = parse_dump_entity(payload, languages);
      if (!entity) {
        ++stats.malformed;
        continue;
      }
      emit(*entity, map, languages, sink, stats);
    }
    stats.peak_line_bytes = reader.peak();
    return stats;
  }

  // Parallel: parse a batch of lines across workers, emit in input order.
  const size_t batch_size = static_cast<size_t>(jobs) * 64;
  std::vector<std::string> batch;
  std::vector<std::optional<DumpEntity>> parsed;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size && (more = reader.next(line, oversized))) {
      ++stats.lines;
      if (oversized) {
        ++stats.oversized;
        continue;
      }
      auto payload = entity_payload(line);
      if (!payload.empty()) batch.emplace_back(payload);
    }
    parsed.assign(batch.size(), std::nullopt);
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (size_t i = w; i < batch.size(); i += jobs) {
            parsed[i] = parse_dump_entity(batch[i], languages);
          }
        });
      }
    }
    for (auto& entity : parsed) {
      if (!entity) {
        ++stats.malformed;
        continue;
      }
      emit(*entity, map, languages, sink, stats);
    }
  }
  stats.peak_line_bytes = reader.peak();
  return stats;
}

}  // namespace gazkit
