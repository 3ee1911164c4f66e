// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Pass --skip-perf to leave out the
// large performance run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "gazkit/augment.h"
#include "gazkit/bio.h"
#include "gazkit/corpus_io.h"
#include "gazkit/eval.h"
#include "gazkit/inflect.h"
#include "gazkit/matcher.h"
#include "gazkit/tags.h"
#include "gazkit/type_map.h"
#include "oracle.h"
#include "synthetic.h"

using namespace gazkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::string> render_row(const std::vector<BioKind>& row, const std::string& type) {
  std::vector<std::string> out;
  for (auto k : row) out.push_back(BioLabel{k, k == BioKind::kO ? "" : type}.render());
  return out;
}

std::vector<std::string> data_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

Outcome airport_rows() {
  auto t0 = Clock::now();
  const auto& reg = default_registry();
  auto ann = Annotator::build(reg, fixtures::airport_gazetteer(), "en", TokenMode::kWord,
                              CasePolicy::kSensitive);
  auto layers = ann.annotate(fixtures::airport_sentence(), true);
  double secs = seconds_since(t0);
  for (const std::string code : {"PER", "LOC", "GPE", "ORG"}) {
    size_t k = *reg.index_of(code);
    if (render_row(layers.rows[k], code) != fixtures::airport_row(code)) {
      return {false, code + " row differs"};
    }
  }
  for (size_t k = 0; k < reg.size(); ++k) {
    const auto& code = reg[k].code;
    if (code == "PER" || code == "LOC" || code == "GPE" || code == "ORG") continue;
    for (auto b : layers.rows[k]) {
      if (b != BioKind::kO) return {false, code + " row not empty"};
    }
  }
  return {secs < 1.0, "4 rows exact, " + std::to_string(secs) + " s"};
}

Outcome partial_thresholds() {
  // entry "x y" against the sentence "q y": the lone "y" is a maximal
  // length-1 partial; "x y z" against "x y" gives a length-2 one.
  const auto& reg = default_registry();
  size_t checked = 0;
  for (const auto& t : reg.types()) {
    std::vector<std::string> e1{"x", "y"};
    std::vector<const std::vector<std::string>*> one{&e1};
    MatchIndex idx1(t.code, one, TokenMode::kWord, CasePolicy::kSensitive);
    auto r1 = annotate_row(fixtures::make_sentence({"q", "y"}), idx1, true);
    bool single_hit = r1[1] != BioKind::kO;
    if (single_hit != (t.code == "PER")) return {false, t.code + " single-token partial"};

    std::vector<std::string> e2{"x", "y", "z"};
    std::vector<const std::vector<std::string>*> two{&e2};
    MatchIndex idx2(t.code, two, TokenMode::kWord, CasePolicy::kSensitive);
    auto r2 = annotate_row(fixtures::make_sentence({"x", "y"}), idx2, true);
    if (r2 != std::vector<BioKind>{BioKind::kB, BioKind::kI}) {
      return {false, t.code + " two-token partial"};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " registry types"};
}

Outcome char_mode() {
  std::mt19937_64 rng(7);
  const std::vector<std::string> alphabet{"a", "b", "c", "d", "e"};
  for (int c = 0; c < 100; ++c) {
    auto draw = [&](size_t lo, size_t hi) {
      std::vector<std::string> out;
      size_t n = lo + rng() % (hi - lo + 1);
      for (size_t i = 0; i < n; ++i) out.push_back(alphabet[rng() % alphabet.size()]);
      return out;
    };
    std::vector<std::vector<std::string>> entries;
    size_t n_entries = 1 + rng() % 10;
    for (size_t i = 0; i < n_entries; ++i) entries.push_back(draw(1, 5));
    std::vector<const std::vector<std::string>*> ptrs;
    for (const auto& e : entries) ptrs.push_back(&e);
    const std::string type = (c % 2) ? "PER" : "ORG";
    MatchIndex idx(type, ptrs, TokenMode::kCharacter, CasePolicy::kSensitive);
    auto s = fixtures::make_sentence(draw(1, 20), TokenMode::kCharacter);
    if (annotate_row(s, idx, true) != annotate_row(s, idx, false)) {
      return {false, "fixture " + std::to_string(c)};
    }
  }
  return {true, "100 fixtures"};
}

Outcome oracle_equivalence() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  size_t mismatches = 0;
  for (int c = 0; c < 1000; ++c) {
    size_t vocab = 2 + rng() % 19;
    size_t n_entries = 1 + rng() % 50;
    std::vector<std::vector<std::string>> entries;
    for (size_t i = 0; i < n_entries; ++i) entries.push_back(fixtures::words(rng, 1, 4, vocab));
    auto sent = fixtures::words(rng, 1, 15, vocab);
    std::vector<const std::vector<std::string>*> ptrs;
    for (const auto& e : entries) ptrs.push_back(&e);
    const std::string type = (c % 3 == 0) ? "PER" : "GPE";
    MatchIndex idx(type, ptrs, TokenMode::kWord, CasePolicy::kSensitive);
    bool partial = c % 5 != 0;
    if (annotate_row(fixtures::make_sentence(sent), idx, partial) !=
        oracle::row(sent, entries, type, partial)) {
      ++mismatches;
    }
  }
  double secs = seconds_since(t0);
  return {mismatches == 0 && secs < 30.0,
          std::to_string(mismatches) + " mismatches in 1000, " + std::to_string(secs) + " s"};
}

// Plain tokens and whole mentions, in order; target mentions are reduced
// to their type so replaced spans still line up.
std::vector<std::string> skeleton(const Sentence& s, const AugmentConfig& cfg) {
  std::vector<std::string> out;
  auto mentions = extract_entities(s);
  size_t m = 0;
  for (size_t i = 0; i < s.size();) {
    if (m < mentions.size() && mentions[m].start == i) {
      const auto& e = mentions[m++];
      out.push_back(cfg.targets(e.type) ? "<" + e.type + ">" : e.type + ":" + e.surface);
      i = e.end;
    } else {
      out.push_back(s.tokens[i++].surface);
    }
  }
  return out;
}

Outcome augmentation() {
  std::mt19937_64 rng(99);
  const std::vector<std::string> types{"PER", "GPE", "ORG", "LOC"};
  Gazetteer source;
  std::map<std::string, std::vector<std::vector<std::string>>> names;
  for (const auto& t : types) {
    for (int i = 0; i < 30; ++i) {
      auto toks = fixtures::words(rng, 1, 3, 200);
      for (auto& w : toks) w = t + w;
      source.insert(GazetteerEntry{toks, t, EntrySource::kCanonical, "en"});
      names[t].push_back(toks);
    }
  }
  Document doc;
  for (int i = 0; i < 500; ++i) {
    Sentence s;
    size_t n = 3 + rng() % 10;
    for (size_t k = 0; k < n; ++k) {
      if (rng() % 3 == 0) {
        const auto& t = types[rng() % types.size()];
        // reuse a small pool so surfaces repeat across the document
        const auto& toks = names[t][rng() % 5];
        for (size_t j = 0; j < toks.size(); ++j) {
          s.tokens.push_back(Token{toks[j], j == 0 ? BioLabel::begin(t) : BioLabel::inside(t)});
        }
      } else {
        s.tokens.push_back(Token{fixtures::word(rng, 50), BioLabel::outside()});
      }
    }
    doc.sentences.push_back(std::move(s));
  }

  AugmentConfig cfg;
  cfg.types = {"PER", "GPE", "ORG"};
  cfg.seed = 12345;
  cfg.probability = 0.7;
  cfg.source = &source;

  auto a = augment_document(doc, cfg);
  auto b = augment_document(doc, cfg);
  std::ostringstream sa, sb;
  write_bio(a, sa);
  write_bio(b, sb);
  if (sa.str() != sb.str()) return {false, "same seed, different bytes"};
  if (a.sentences.size() != doc.sentences.size()) return {false, "sentence count changed"};
  for (size_t i = 0; i < a.sentences.size(); ++i) {
    auto labels = a.sentences[i].gold_labels();
    if (!validate_bio_sequence(labels).empty()) return {false, "BIO-invalid sentence"};
    if (skeleton(a.sentences[i], cfg) != skeleton(doc.sentences[i], cfg)) {
      return {false, "non-target tokens changed in sentence " + std::to_string(i)};
    }
  }

  cfg.consistent = true;
  auto c = augment_document(doc, cfg);
  std::map<std::pair<std::string, std::string>, std::string> seen;
  size_t pairs = 0;
  for (size_t i = 0; i < c.sentences.size(); ++i) {
    auto before = extract_entities(doc.sentences[i]);
    auto after = extract_entities(c.sentences[i]);
    if (before.size() != after.size()) return {false, "mention count changed"};
    for (size_t k = 0; k < before.size(); ++k) {
      if (!cfg.targets(before[k].type)) continue;
      auto key = std::make_pair(before[k].type, before[k].surface);
      auto [it, fresh] = seen.emplace(key, after[k].surface);
      if (!fresh && it->second != after[k].surface) return {false, "inconsistent replacement"};
      ++pairs;
    }
  }
  return {true, "500 sentences, " + std::to_string(pairs) + " consistent mentions"};
}

Outcome coverage_oracle() {
  const auto& reg = default_registry();
  auto doc = read_bio_file(GAZKIT_TEST_DATA "/coverage.bio", TokenMode::kWord, reg);
  auto gaz = load_gazetteer_dir(GAZKIT_TEST_DATA "/coverage_gaz", TokenMode::kWord, reg);
  auto report = coverage(doc, gaz);
  std::ostringstream got;
  write_coverage_tsv(report, got);
  std::vector<std::string> got_lines;
  std::istringstream gs(got.str());
  for (std::string line; std::getline(gs, line);) got_lines.push_back(line);
  if (got_lines != data_lines(GAZKIT_TEST_DATA "/coverage_expected.tsv")) {
    return {false, "hand counts differ"};
  }

  Gazetteer saturated;
  for (const auto& s : doc.sentences) {
    for (const auto& m : extract_entities(s)) {
      std::vector<std::string> toks;
      for (size_t i = m.start; i < m.end; ++i) toks.push_back(s.tokens[i].surface);
      saturated.insert(GazetteerEntry{toks, m.type, EntrySource::kCanonical, "en"});
    }
  }
  for (const auto& [type, row] : coverage(doc, saturated).rows) {
    if (row.percent() != 100.0) return {false, type + " not saturated"};
  }
  for (const auto& [type, row] : coverage(doc, Gazetteer{}).rows) {
    if (row.percent() != 0.0) return {false, type + " covered by empty gazetteer"};
  }
  return {true, std::to_string(report.rows.size()) + " types, saturation and empty checked"};
}

Outcome scorer() {
  const auto& reg = default_registry();
  auto gold = read_bio_file(GAZKIT_TEST_DATA "/score_gold.bio", TokenMode::kWord, reg);
  auto pred = read_bio_file(GAZKIT_TEST_DATA "/score_pred.bio", TokenMode::kWord, reg);
  if (gold.sentences.size() != 20) return {false, "fixture is not 20 sentences"};
  auto r = score(gold, pred);
  for (const auto& line : data_lines(GAZKIT_TEST_DATA "/score_expected.tsv")) {
    std::istringstream in(line);
    std::string type;
    double p, rc, f;
    in >> type >> p >> rc >> f;
    const PrfRow* row = type == "micro" ? &r.micro : nullptr;
    if (!row) {
      auto it = r.per_type.find(type);
      if (it == r.per_type.end()) return {false, type + " missing"};
      row = &it->second;
    }
    if (std::abs(row->precision() - p) > 0.01 || std::abs(row->recall() - rc) > 0.01 ||
        std::abs(row->f1() - f) > 0.01) {
      return {false, type + " differs from hand count"};
    }
  }
  auto self = score(gold, gold);
  for (const auto& [type, row] : self.per_type) {
    if (row.precision() != 100.0 || row.recall() != 100.0 || row.f1() != 100.0) {
      return {false, type + " self-score below 100"};
    }
  }
  if (self.micro.f1() != 100.0) return {false, "micro self-score below 100"};
  return {true, "per-type and micro within 0.01, self-score 100"};
}

Outcome type_resolution() {
  auto map = load_type_map_file(GAZKIT_TEST_DATA "/moma_type_map.tsv");
  std::vector<std::string> instance_of{"Q207694", "Q1497649", "Q20897549"};
  auto got = resolve_target_types(instance_of, map);
  std::string joined;
  for (const auto& t : got) joined += (joined.empty() ? "" : " ") + t;
  return {got == std::set<std::string>{"ORG", "LOC", "FAC"}, joined};
}

Outcome inflection_count() {
  auto rules = load_inflection_rules_file(GAZKIT_CONFIG_DIR "/ru_inflection_rules.tsv");
  auto familiar = load_familiar_forms_file(GAZKIT_CONFIG_DIR "/ru_familiar_forms.tsv");
  const std::vector<std::string> input{"Владимир", "Владимирович", "Путин"};
  auto v = inflect_name(GazetteerEntry{input, "PER", EntrySource::kCanonical, "ru"}, rules,
                        familiar);
  std::set<std::vector<std::string>> distinct;
  for (const auto& e : v) {
    if (e.tokens == input) return {false, "input among variants"};
    distinct.insert(e.tokens);
  }
  return {distinct.size() > 100, std::to_string(distinct.size()) + " distinct variants"};
}

Outcome welch() {
  auto same = welch_t_test({1.5, 2.0, 2.5, 3.0}, {1.5, 2.0, 2.5, 3.0});
  if (same.degenerate || same.t != 0.0 || std::abs(same.p - 1.0) > 1e-12) {
    return {false, "identical samples"};
  }
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int c = 0; c < 100; ++c) {
    std::vector<double> a(2 + rng() % 8), b(2 + rng() % 8);
    for (auto& x : a) x = noise(rng);
    for (auto& x : b) x = 0.5 + 2.0 * noise(rng);
    auto ab = welch_t_test(a, b);
    auto ba = welch_t_test(b, a);
    if (ab.t != -ba.t || ab.df != ba.df || ab.p != ba.p) return {false, "swap not antisymmetric"};
  }
  // [1,2,3] vs [1,2,3,4]: means 2 and 2.5, variances 1 and 5/3.
  double se2 = 1.0 / 3.0 + (5.0 / 3.0) / 4.0;
  double t = (2.0 - 2.5) / std::sqrt(se2);
  double df = se2 * se2 / ((1.0 / 9.0) / 2.0 + (25.0 / 144.0) / 3.0);
  auto r = welch_t_test({1, 2, 3}, {1, 2, 3, 4});
  if (std::abs(r.t - t) > 1e-9 || std::abs(r.df - df) > 1e-9 ||
      std::abs(r.p - 0.5889215492858255) > 1e-9) {
    return {false, "hand fixture"};
  }
  return {true, "identity, 100 swaps, fixture within 1e-9"};
}

long peak_rss_kb() {
  std::ifstream in("/proc/self/status");
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("VmHWM:", 0) == 0) return std::stol(line.substr(6));
  }
  return -1;
}

constexpr double kMemoryMultiple = 16.0;

Outcome performance() {
  synthetic::Vocabulary vocab(200000, 11);
  auto entries = synthetic::entries(1000000, vocab);
  auto sentences = synthetic::sentences(10000, 25, entries, vocab);
  std::vector<const std::vector<std::string>*> ptrs;
  ptrs.reserve(entries.size());
  for (const auto& e : entries) ptrs.push_back(&e);
  size_t input = synthetic::input_bytes(entries);

  auto t0 = Clock::now();
  MatchIndex idx("PER", ptrs, TokenMode::kWord, CasePolicy::kSensitive);
  double build = seconds_since(t0);
  auto t1 = Clock::now();
  size_t tagged = 0;
  for (const auto& s : sentences) {
    for (auto k : annotate_row(s, idx, true)) tagged += k != BioKind::kO;
  }
  double run = seconds_since(t1);
  double multiple = static_cast<double>(idx.memory_bytes()) / static_cast<double>(input);
  std::ostringstream d;
  d.precision(3);
  d << "build " << build << " s, annotate " << run << " s, index " << idx.memory_bytes() / 1048576
    << " MiB = " << multiple << "x input, peak rss " << peak_rss_kb() / 1024 << " MiB, "
    << tagged << " tagged tokens";
  return {build + run <= 60.0 && multiple <= kMemoryMultiple, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_perf = argc > 1 && std::strcmp(argv[1], "--skip-perf") == 0;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"airport sentence golden rows", airport_rows},
      {"partial-match thresholds", partial_thresholds},
      {"character mode is full-match only", char_mode},
      {"brute-force oracle equivalence", oracle_equivalence},
      {"augmentation properties", augmentation},
      {"coverage oracle", coverage_oracle},
      {"scorer fixture", scorer},
      {"type resolution", type_resolution},
      {"russian inflection count", inflection_count},
      {"welch t-test", welch},
      {"performance smoke", performance},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    if (skip_perf && i + 1 == criteria.size()) {
      std::printf("SKIP %2zu %s\n", i + 1, name.c_str());
      continue;
    }
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
