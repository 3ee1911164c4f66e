// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_EVAL_H_
#define GAZKIT_EVAL_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gazkit/corpus.h"
#include "gazkit/gazetteer.h"
#include "gazkit/match_index.h"

namespace gazkit {

struct CoverageRow {
  size_t covered = 0;
  size_t total = 0;

  // Nothing when total is 0 (printed as "n/a").
  std::optional<double> percent() const;
};

struct CoverageReport {
  std::map<std::string, CoverageRow> rows;  // by type
  bool unique = false;
};

struct CoverageOptions {
  std::set<std::string> types;  // empty = every attested type
  std::set<std::string> languages;
  std::set<EntrySource> sources;
  CasePolicy case_policy = CasePolicy::kSensitive;
  // Count distinct surfaces per type instead of mentions.
  bool unique = false;
};

// A gold mention is covered when its surface (join_surface of its tokens)
// is a complete entry of the same type. Requested types that never occur
// get a 0/0 row. Throws DataError on a BIO-invalid sentence.
CoverageReport coverage(const Document& doc, const Gazetteer& g, const CoverageOptions& options = {});

struct PrfRow {
  size_t correct = 0;
  size_t predicted = 0;
  size_t gold = 0;

  double precision() const;  // percent, 0 when nothing predicted
  double recall() const;
  double f1() const;
};

struct ScoreReport {
  std::map<std::string, PrfRow> per_type;
  PrfRow micro;
};

// Exact span and type. Predicted labels are chunked leniently (an I after
// O or another type opens a chunk), gold must be BIO-valid. Throws
// DataError naming the first diverging sentence/token when the two
// documents do not align.
ScoreReport score(const Document& gold, const Document& predicted);

struct Agreement {
  size_t tokens = 0;
  size_t exact = 0;
  size_t boundary = 0;

  double exact_rate() const;     // percent
  double boundary_rate() const;  // percent
};

// Token-level agreement between two annotations of the same text.
Agreement token_agreement(const Document& a, const Document& b);

struct TTestResult {
  bool degenerate = false;
  std::string reason;  // set when degenerate
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
};

// Welch's unequal-variance t-test. Degenerate when a sample has fewer than
// two values or both variances are zero (the standard error vanishes); one
// zero-variance sample is fine.
TTestResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b);

// One number per line, '#' comments and blank lines ignored.
std::vector<double> read_samples(std::istream& in);
std::vector<double> load_samples_file(const std::string& path);

void write_coverage_table(const CoverageReport& r, std::ostream& out);
void write_coverage_tsv(const CoverageReport& r, std::ostream& out);
void write_score_table(const ScoreReport& r, std::ostream& out);
void write_score_tsv(const ScoreReport& r, std::ostream& out);
void write_agreement(const Agreement& a, std::ostream& out);
void write_ttest(const TTestResult& r, std::ostream& out);

}  // namespace gazkit

#endif  // GAZKIT_EVAL_H_
