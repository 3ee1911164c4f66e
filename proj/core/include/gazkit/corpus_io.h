// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_CORPUS_IO_H_
#define GAZKIT_CORPUS_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gazkit/corpus.h"
#include "gazkit/features.h"
#include "gazkit/gazetteer.h"

namespace gazkit {

class TagRegistry;

struct Diagnostic {
  size_t line = 0;
  std::string message;
};

// Reads a BIO corpus: sentences are maximal runs of non-blank lines, each
// line `surface<SEP>...<SEP>label` with SEP a run of tabs/spaces. The first
// field is the surface and the last field the gold label, so feature files
// written by write_features read back as plain BIO. Malformed lines throw
// ParseError with the line number; BIO-invalid gold sequences only add a
// warning.
Document read_bio(std::istream& in, TokenMode mode, const TagRegistry& registry,
                  std::vector<Diagnostic>* warnings = nullptr);
Document read_bio_file(const std::filesystem::path& path, TokenMode mode,
                       const TagRegistry& registry,
                       std::vector<Diagnostic>* warnings = nullptr);

// `surface<TAB>gold`, blank line after each sentence.
void write_bio(const Document& doc, std::ostream& out);

// `surface<TAB>f_1<TAB>...<TAB>f_k<TAB>gold` with one feature label per
// registry type in registry order; blank line after each sentence.
// Throws DataError on sentence/token/type-count mismatches.
void write_features(const Document& doc, std::span<const FeatureColumns> features,
                    const TagRegistry& registry, std::ostream& out);

struct GazetteerFileResult {
  std::vector<GazetteerEntry> entries;
  size_t duplicates = 0;
  size_t empty_lines = 0;
};

// One name per line. Word mode splits on spaces, character mode into code
// points (whitespace dropped). Duplicate lines are dropped and counted;
// empty lines are skipped and counted.
GazetteerFileResult read_gazetteer_file(std::istream& in, const std::string& type,
                                        EntrySource source, const std::string& language,
                                        TokenMode mode = TokenMode::kWord);

void write_gazetteer_group(const GazetteerGroup& group, TokenMode mode, std::ostream& out);

// Gazetteer directories hold one file per group, named
// `<lang>_<TYPE>_<source>.txt` (e.g. en_GPE_canonical.txt, ru_MIL_G_alias.txt).
std::string gazetteer_file_name(const GroupKey& key);
bool parse_gazetteer_file_name(const std::string& name, GroupKey* key);

struct GazetteerDirStats {
  size_t files = 0;
  size_t entries = 0;
  size_t duplicates = 0;
  size_t empty_lines = 0;
};

// Loads every conforming file in `dir`. Files whose type is not in the
// registry are skipped (reported through `skipped`).
Gazetteer load_gazetteer_dir(const std::filesystem::path& dir, TokenMode mode,
                             const TagRegistry& registry, GazetteerDirStats* stats = nullptr,
                             std::vector<std::string>* skipped = nullptr);
void write_gazetteer_dir(const Gazetteer& gazetteer, TokenMode mode,
                         const std::filesystem::path& dir);

}  // namespace gazkit

#endif  // GAZKIT_CORPUS_IO_H_
