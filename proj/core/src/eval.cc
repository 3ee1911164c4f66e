// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/eval.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <boost/math/distributions/students_t.hpp>

#include "gazkit/augment.h"
#include "gazkit/error.h"
#include "gazkit/utf8.h"
#include "text.h"

namespace gazkit {

namespace {

double percent(size_t num, size_t den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

void check_aligned(const Document& a, const Document& b) {
  if (a.sentences.size() != b.sentences.size()) {
    throw DataError("documents differ in sentence count: " + std::to_string(a.sentences.size()) +
                    " vs " + std::to_string(b.sentences.size()));
  }
  for (size_t s = 0; s < a.sentences.size(); ++s) {
    const auto& x = a.sentences[s].tokens;
    const auto& y = b.sentences[s].tokens;
    for (size_t t = 0; t < std::min(x.size(), y.size()); ++t) {
      if (x[t].surface != y[t].surface) {
        throw DataError("documents diverge at sentence " + std::to_string(s + 1) + ", token " +
                        std::to_string(t + 1) + ": '" + x[t].surface + "' vs '" + y[t].surface +
                        "'");
      }
    }
    if (x.size() != y.size()) {
      throw DataError("documents diverge at sentence " + std::to_string(s + 1) + ", token " +
                      std::to_string(std::min(x.size(), y.size()) + 1) + ": length " +
                      std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
  }
}

std::string fmt_pct(std::optional<double> v) {
  if (!v) return "n/a";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << *v;
  return os.str();
}

std::string fmt_pct(double v) { return fmt_pct(std::optional<double>(v)); }

}  // namespace

std::optional<double> CoverageRow::percent() const {
  if (total == 0) return std::nullopt;
  return gazkit::percent(covered, total);
}

CoverageReport coverage(const Document& doc, const Gazetteer& g, const CoverageOptions& options) {
  CoverageReport report;
  report.unique = options.unique;
  const bool fold = options.case_policy == CasePolicy::kFold;
  auto key = [&](std::string s) { return fold ? utf8::fold_case(s) : s; };

  std::map<std::string, std::unordered_set<std::string>> known;  // type -> surfaces
  std::map<std::string, std::set<std::string>> seen;              // for unique counting
  for (const auto& t : options.types) report.rows[t];

  for (const auto& s : doc.sentences) {
    for (const auto& m : extract_entities(s)) {
      if (!options.types.empty() && !options.types.count(m.type)) continue;
      auto it = known.find(m.type);
      if (it == known.end()) {
        it = known.emplace(m.type, std::unordered_set<std::string>()).first;
        for (const auto* tokens : g.select(m.type, options.languages, options.sources)) {
          it->second.insert(key(join_surface(*tokens, s.mode)));
        }
      }
      std::string surface = key(m.surface);
      if (options.unique && !seen[m.type].insert(surface).second) continue;
      auto& row = report.rows[m.type];
      ++row.total;
      if (it->second.count(surface)) ++row.covered;
    }
  }
  return report;
}

double PrfRow::precision() const { return percent(correct, predicted); }
double PrfRow::recall() const { return percent(correct, gold); }
double PrfRow::f1() const {
  double p = precision();
  double r = recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

ScoreReport score(const Document& gold, const Document& predicted) {
  check_aligned(gold, predicted);
  ScoreReport report;
  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    auto g = chunk_labels(gold.sentences[s].gold_labels());
    auto p = chunk_labels(predicted.sentences[s].gold_labels());
    std::set<std::tuple<size_t, size_t, std::string>> gold_set;
    for (const auto& c : g) {
      gold_set.emplace(c.start, c.end, c.type);
      ++report.per_type[c.type].gold;
    }
    for (const auto& c : p) {
      auto& row = report.per_type[c.type];
      ++row.predicted;
      if (gold_set.count({c.start, c.end, c.type})) ++row.correct;
    }
  }
  for (const auto& [type, row] : report.per_type) {
    report.micro.correct += row.correct;
    report.micro.predicted += row.predicted;
    report.micro.gold += row.gold;
  }
  return report;
}

double Agreement::exact_rate() const { return percent(exact, tokens); }
double Agreement::boundary_rate() const { return percent(boundary, tokens); }

Agreement token_agreement(const Document& a, const Document& b) {
  check_aligned(a, b);
  Agreement r;
  for (size_t s = 0; s < a.sentences.size(); ++s) {
    const auto& x = a.sentences[s].tokens;
    const auto& y = b.sentences[s].tokens;
    for (size_t t = 0; t < x.size(); ++t) {
      ++r.tokens;
      if (x[t].gold == y[t].gold) ++r.exact;
      if (x[t].gold.is_outside() == y[t].gold.is_outside()) ++r.boundary;
    }
  }
  return r;
}

TTestResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b) {
  TTestResult r;
  if (a.size() < 2 || b.size() < 2) {
    r.degenerate = true;
    r.reason = "each sample needs at least two values";
    return r;
  }
  auto moments = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::pair{mean, ss / static_cast<double>(v.size() - 1)};
  };
  auto [ma, va] = moments(a);
  auto [mb, vb] = moments(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double qa = va / na;
  const double qb = vb / nb;
  const double se2 = qa + qb;
  if (!(se2 > 0.0)) {
    r.degenerate = true;
    r.reason = "both samples have zero variance";
    return r;
  }
  r.t = (ma - mb) / std::sqrt(se2);
  r.df = se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  boost::math::students_t dist(r.df);
  r.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  if (r.p > 1.0) r.p = 1.0;
  return r;
}

std::vector<double> read_samples(std::istream& in) {
  std::vector<double> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::strip_cr(line);
    auto fields = text::split_blank(line);
    if (fields.empty() || fields[0][0] == '#') continue;
    std::string f(fields[0]);
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(f, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != f.size() || fields.size() != 1 || !std::isfinite(v)) {
      throw ParseError("samples line " + std::to_string(lineno) + ": not a number: '" + line + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> load_samples_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open samples file: " + path);
  return read_samples(in);
}

void write_coverage_table(const CoverageReport& r, std::ostream& out) {
  if (r.unique) out << "# distinct surfaces\n";
  out << std::left << std::setw(8) << "type" << std::right << std::setw(10) << "covered" << std::setw(10) << "total" << std::setw(10) << "pct"
      << "\n";
  for (const auto& [type, row] : r.rows) {
    out << std::left << std::setw(8) << type << std::right << std::setw(10) << row.covered
        << std::setw(10) << row.total << std::setw(10) << fmt_pct(row.percent()) << "\n";
  }
}

void write_coverage_tsv(const CoverageReport& r, std::ostream& out) {
  out << "type\tcovered\ttotal\tpercent\n";
  for (const auto& [type, row] : r.rows) {
    out << type << '\t' << row.covered << '\t' << row.total << '\t' << fmt_pct(row.percent())
        << "\n";
  }
}

void write_score_table(const ScoreReport& r, std::ostream& out) {
  auto line = [&](const std::string& name, const PrfRow& row) {
    out << std::left << std::setw(8) << name << std::right << std::setw(10)
        << fmt_pct(row.precision()) << std::setw(10) << fmt_pct(row.recall()) << std::setw(10)
        << fmt_pct(row.f1()) << std::setw(8) << row.gold << std::setw(8) << row.predicted
        << std::setw(8) << row.correct << "\n";
  };
  out << std::left << std::setw(8) << "type" << std::right << std::setw(10) << "P" << std::setw(10)
      << "R" << std::setw(10) << "F1" << std::setw(8) << "gold" << std::setw(8) << "pred"
      << std::setw(8) << "correct" << "\n";
  for (const auto& [type, row] : r.per_type) line(type, row);
  line("micro", r.micro);
}

void write_score_tsv(const ScoreReport& r, std::ostream& out) {
  out << "type\tprecision\trecall\tf1\tgold\tpredicted\tcorrect\n";
  auto line = [&](const std::string& name, const PrfRow& row) {
    out << name << '\t' << fmt_pct(row.precision()) << '\t' << fmt_pct(row.recall()) << '\t'
        << fmt_pct(row.f1()) << '\t' << row.gold << '\t' << row.predicted << '\t' << row.correct
        << "\n";
  };
  for (const auto& [type, row] : r.per_type) line(type, row);
  line("micro", r.micro);
}

void write_agreement(const Agreement& a, std::ostream& out) {
  out << "tokens\t" << a.tokens << "\nexact\t" << fmt_pct(a.exact_rate()) << "\nboundary\t"
      << fmt_pct(a.boundary_rate()) << "\n";
}

void write_ttest(const TTestResult& r, std::ostream& out) {
  if (r.degenerate) {
    out << "degenerate\t" << r.reason << "\n";
    return;
  }
  out << std::setprecision(10) << "t\t" << r.t << "\ndf\t" << r.df << "\np\t" << r.p << "\n";
}

}  // namespace gazkit
