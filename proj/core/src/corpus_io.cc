// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "gazkit/error.h"
#include "gazkit/tags.h"
#include "gazkit/utf8.h"
#include "text.h"

namespace gazkit {

namespace {

void finish_sentence(Sentence& sentence, size_t first_line, Document& doc,
                     std::vector<Diagnostic>* warnings) {
  if (sentence.tokens.empty()) return;
  if (warnings) {
    auto labels = sentence.gold_labels();
    for (const auto& v : validate_bio_sequence(labels)) {
      warnings->push_back({first_line + v.index, "BIO violation: " + v.reason});
    }
  }
  doc.sentences.push_back(std::move(sentence));
  sentence = Sentence{};
}

}  // namespace

Document read_bio(std::istream& in, TokenMode mode, const TagRegistry& registry,
                  std::vector<Diagnostic>* warnings) {
  Document doc;
  Sentence current;
  current.mode = mode;
  size_t first_line = 0;
  size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    text::strip_cr(line);
    if (text::is_blank(line)) {
      finish_sentence(current, first_line, doc, warnings);
      current.mode = mode;
      continue;
    }
    auto fields = text::split_blank(line);
    if (fields.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<surface> <label>', got '" + line + "'");
    }
    Token token;
    token.surface = std::string(fields.front());
    if (mode == TokenMode::kCharacter && utf8::length(token.surface) != 1) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": character mode requires single-character tokens, got '" +
                       token.surface + "'");
    }
    try {
      token.gold = parse_bio_label(fields.back(), &registry);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (current.tokens.empty()) first_line = line_no;
    current.tokens.push_back(std::move(token));
  }
  finish_sentence(current, first_line, doc, warnings);
  return doc;
}

Document read_bio_file(const std::filesystem::path& path, TokenMode mode,
                       const TagRegistry& registry, std::vector<Diagnostic>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + path.string());
  Document doc = read_bio(in, mode, registry, warnings);
  doc.source = path.string();
  return doc;
}

void write_bio(const Document& doc, std::ostream& out) {
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) out << t.surface << '\t' << t.gold.render() << '\n';
    out << '\n';
  }
}

void write_features(const Document& doc, std::span<const FeatureColumns> features,
                    const TagRegistry& registry, std::ostream& out) {
  if (features.size() != doc.sentences.size()) {
    throw DataError("feature columns for " + std::to_string(features.size()) +
                    " sentences, document has " + std::to_string(doc.sentences.size()));
  }
  for (size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& s = doc.sentences[si];
    const auto& f = features[si];
    if (f.num_types != registry.size()) {
      throw DataError("sentence " + std::to_string(si) + ": " + std::to_string(f.num_types) +
                      " feature columns, registry has " + std::to_string(registry.size()));
    }
    if (f.num_tokens != s.size() || f.labels.size() != f.num_tokens * f.num_types) {
      throw DataError("sentence " + std::to_string(si) + ": " + std::to_string(f.num_tokens) +
                      " feature rows for " + std::to_string(s.size()) + " tokens");
    }
    for (size_t ti = 0; ti < s.size(); ++ti) {
      out << s.tokens[ti].surface;
      for (size_t k = 0; k < f.num_types; ++k) out << '\t' << f.label(ti, k).render();
      out << '\t' << s.tokens[ti].gold.render() << '\n';
    }
    out << '\n';
  }
}

GazetteerFileResult read_gazetteer_file(std::istream& in, const std::string& type,
                                        EntrySource source, const std::string& language,
                                        TokenMode mode) {
  GazetteerFileResult result;
  std::set<std::vector<std::string>> seen;
  std::string line;
  while (std::getline(in, line)) {
    text::strip_cr(line);
    GazetteerEntry entry;
    entry.type = type;
    entry.source = source;
    entry.language = language;
    if (mode == TokenMode::kWord) {
      for (auto part : text::split(line, ' ')) {
        if (!part.empty()) entry.tokens.emplace_back(part);
      }
    } else {
      for (char32_t cp : utf8::decode(line)) {
        if (utf8::is_space(cp)) continue;
        std::string s;
        utf8::append(s, cp);
        entry.tokens.push_back(std::move(s));
      }
    }
    if (entry.tokens.empty()) {
      ++result.empty_lines;
      continue;
    }
    if (!seen.insert(entry.tokens).second) {
      ++result.duplicates;
      continue;
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

void write_gazetteer_group(const GazetteerGroup& group, TokenMode mode, std::ostream& out) {
  for (const auto& tokens : group.entries()) out << join_surface(tokens, mode) << '\n';
}

std::string gazetteer_file_name(const GroupKey& key) {
  return key.language + "_" + key.type + "_" + std::string(to_string(key.source)) + ".txt";
}

bool parse_gazetteer_file_name(const std::string& name, GroupKey* key) {
  constexpr std::string_view kExt = ".txt";
  if (name.size() <= kExt.size() || !name.ends_with(kExt)) return false;
  std::string stem = name.substr(0, name.size() - kExt.size());
  size_t first = stem.find('_');
  size_t last = stem.rfind('_');
  if (first == std::string::npos || first == last) return false;
  std::string lang = stem.substr(0, first);
  std::string type = stem.substr(first + 1, last - first - 1);
  std::string source = stem.substr(last + 1);
  if (lang.size() != 2 || type.empty()) return false;
  if (source != "canonical" && source != "alias" && source != "inflected") return false;
  if (key) *key = {lang, type, parse_entry_source(source)};
  return true;
}

Gazetteer load_gazetteer_dir(const std::filesystem::path& dir, TokenMode mode,
                             const TagRegistry& registry, GazetteerDirStats* stats,
                             std::vector<std::string>* skipped) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("not a gazetteer directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  Gazetteer g;
  GazetteerDirStats local;
  for (const auto& path : files) {
    GroupKey key;
    if (!parse_gazetteer_file_name(path.filename().string(), &key) ||
        !registry.contains(key.type)) {
      if (skipped) skipped->push_back(path.string());
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open gazetteer file: " + path.string());
    auto result = read_gazetteer_file(in, key.type, key.source, key.language, mode);
    ++local.files;
    local.duplicates += result.duplicates;
    local.empty_lines += result.empty_lines;
    for (auto& e : result.entries) {
      if (g.insert(key, std::move(e.tokens))) ++local.entries;
    }
  }
  if (stats) *stats = local;
  return g;
}

void write_gazetteer_dir(const Gazetteer& gazetteer, TokenMode mode,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [key, group] : gazetteer.groups()) {
    auto path = dir / gazetteer_file_name(key);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write gazetteer file: " + path.string());
    write_gazetteer_group(group, mode, out);
  }
}

}  // namespace gazkit
