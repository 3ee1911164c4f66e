// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

// gazkit: build gazetteers from Wikidata and use them on BIO corpora.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gazkit/augment.h"
#include "gazkit/corpus_io.h"
#include "gazkit/dump_scan.h"
#include "gazkit/error.h"
#include "gazkit/eval.h"
#include "gazkit/features.h"
#include "gazkit/inflect.h"
#include "gazkit/matcher.h"
#include "gazkit/name_record.h"
#include "gazkit/normalize.h"
#include "gazkit/sparql.h"
#include "gazkit/tags.h"
#include "gazkit/type_map.h"

namespace fs = std::filesystem;
using namespace gazkit;

namespace {

constexpr int kUsage = 1;
constexpr int kDataError = 2;

struct Globals {
  std::string registry_path;
  unsigned jobs = 0;
  bool quiet = false;
};

Globals g_opts;

void note(const std::string& msg) {
  if (!g_opts.quiet) std::cerr << "gazkit: " << msg << "\n";
}

unsigned jobs() {
  if (g_opts.jobs > 0) return g_opts.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

TagRegistry registry() {
  if (g_opts.registry_path.empty()) return default_registry();
  return load_registry_file(g_opts.registry_path);
}

// All inputs are checked before any work starts.
void require_file(const std::string& path, const char* what) {
  if (path == "-") return;
  if (!fs::is_regular_file(path)) throw DataError(std::string(what) + " not found: " + path);
}

void require_dir(const std::string& path, const char* what) {
  if (!fs::is_directory(path)) throw DataError(std::string(what) + " not found: " + path);
}

// "-" is stdout. Files are written to a temporary name and renamed when
// the command succeeds, so a failed run leaves no partial output.
class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {
    if (path_ == "-") return;
    tmp_ = path_ + ".tmp";
    file_.open(tmp_, std::ios::binary);
    if (!file_) throw DataError("cannot write " + path_);
  }
  ~Output() {
    if (!tmp_.empty() && !committed_) {
      file_.close();
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }
  void commit() {
    if (path_ == "-") {
      std::cout.flush();
      return;
    }
    file_.close();
    if (!file_) throw DataError("write failed: " + path_);
    fs::rename(tmp_, path_);
    committed_ = true;
  }

 private:
  std::string path_;
  std::string tmp_;
  std::ofstream file_;
  bool committed_ = false;
};

std::set<std::string> split_list(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

std::set<EntrySource> parse_sources(const std::string& s) {
  std::set<EntrySource> out;
  for (const auto& item : split_list(s)) out.insert(parse_entry_source(item));
  return out;
}

bool parse_on_off(const std::string& s, const char* flag) {
  if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
  if (s == "off" || s == "false" || s == "0" || s == "no") return false;
  throw CLI::ValidationError(flag, "expected on|off, got '" + s + "'");
}

std::string default_endpoint() {
  const char* env = std::getenv("GAZKIT_ENDPOINT");
  return env && *env ? env : "https://query.wikidata.org/sparql";
}

Document load_corpus(const std::string& path, TokenMode mode, const TagRegistry& reg) {
  std::vector<Diagnostic> warnings;
  Document doc;
  if (path == "-") {
    doc = read_bio(std::cin, mode, reg, &warnings);
  } else {
    doc = read_bio_file(path, mode, reg, &warnings);
  }
  for (const auto& w : warnings) {
    std::cerr << path << ":" << w.line << ": warning: " << w.message << "\n";
  }
  return doc;
}

// Network access, optionally replayed from or recorded to a fixture.
struct Transport {
  std::string endpoint = default_endpoint();
  std::string replay;
  std::string record;

  std::unique_ptr<SparqlTransport> live;
  std::unique_ptr<RecordingTransport> recorder;

  SparqlTransport& open() {
    if (!replay.empty()) {
      live = std::make_unique<ReplayTransport>(replay);
    } else {
      live = std::make_unique<HttpSparqlTransport>(endpoint);
    }
    if (record.empty()) return *live;
    recorder = std::make_unique<RecordingTransport>(*live);
    return *recorder;
  }

  void finish() {
    if (recorder) recorder->save(record);
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--endpoint", endpoint, "SPARQL endpoint (default: $GAZKIT_ENDPOINT or Wikidata)");
    cmd->add_option("--replay", replay, "answer queries from a recorded fixture instead of the network");
    cmd->add_option("--record", record, "record all exchanges to this fixture file");
  }
};

// ---- fetch

struct FetchArgs {
  std::string type;
  std::string type_map;
  std::vector<std::string> type_ids;
  std::string language = "en";
  size_t page_size = 10000;
  int timeout_seconds = 60;
  std::string output = "-";
  Transport transport;
};

void run_fetch(FetchArgs& a) {
  if (a.type_ids.empty()) {
    if (a.type_map.empty()) throw DataError("fetch needs --type-map or --type-ids");
    require_file(a.type_map, "type map");
  }
  if (!a.transport.replay.empty()) require_file(a.transport.replay, "replay fixture");
  if (!registry().contains(a.type)) throw DataError("unknown type " + a.type);

  FetchPlan plan;
  plan.type = a.type;
  plan.language = a.language;
  plan.page_size = a.page_size;
  plan.endpoint = a.transport.endpoint;
  plan.timeout_seconds = a.timeout_seconds;
  plan.type_ids = a.type_ids;
  if (plan.type_ids.empty()) {
    for (const auto& [qid, codes] : load_type_map_file(a.type_map).entries()) {
      if (codes.count(a.type)) plan.type_ids.push_back(qid);
    }
  }
  plan.validate();
  if (plan.type_ids.empty()) note("no fine-grained types map to " + a.type);

  Output out(a.output);
  auto& transport = a.transport.open();
  auto sink = [&](const RawNameRecord& r) {
    write_name_record(out.stream(), TypedNameRecord{r, {a.type}});
  };
  auto progress = [&](const FetchStats& s) {
    if (!g_opts.quiet) {
      std::cerr << "gazkit: fetch " << a.type << ": pages " << s.pages << ", records " << s.records
                << ", timeouts " << s.timeouts << ", page size " << s.page_size << "\n";
    }
  };
  FetchStats stats;
  try {
    stats = fetch_names(plan, transport, sink, progress);
  } catch (...) {
    // Flush what arrived so nothing is silently dropped.
    out.commit();
    a.transport.finish();
    throw;
  }
  out.commit();
  a.transport.finish();
  note("fetched " + std::to_string(stats.records) + " records for " + a.type);
}

// ---- map-types

struct MapTypesArgs {
  std::string roots = "config/type_roots.tsv";
  std::string output = "-";
  int timeout_seconds = 60;
  size_t batch_size = 50;
  Transport transport;
};

void run_map_types(MapTypesArgs& a) {
  require_file(a.roots, "roots file");
  if (!a.transport.replay.empty()) require_file(a.transport.replay, "replay fixture");
  auto targets = load_target_roots_file(a.roots);
  auto reg = registry();
  for (const auto& t : targets) {
    if (!reg.contains(t.type)) throw DataError("roots file names unknown type " + t.type);
  }
  if (a.timeout_seconds <= 0 || a.timeout_seconds > 60) {
    throw DataError("--timeout-seconds must be within 1..60");
  }
  DiscoveryOptions opts;
  opts.budget = std::chrono::seconds(a.timeout_seconds);
  opts.batch_size = a.batch_size;

  auto& transport = a.transport.open();
  std::map<std::string, std::vector<std::string>> discovery;
  for (const auto& t : targets) {
    for (const auto& root : t.roots) {
      if (discovery.count(root)) continue;
      DiscoveryStats stats;
      discovery[root] = discover_instantiated_subtypes(root, transport, opts, &stats);
      note(t.type + " " + root + ": " + std::to_string(discovery[root].size()) +
           " instantiated subtypes, " + std::to_string(stats.queries) + " queries" +
           (stats.split ? ", split" : ""));
    }
  }
  a.transport.finish();
  Output out(a.output);
  write_type_map(build_type_map(targets, discovery), out.stream());
  out.commit();
}

// ---- scan-dump

struct ScanArgs {
  std::string dump;
  std::string type_map;
  std::string languages = "en";
  std::string output = "-";
  size_t max_record_mib = 64;
};

void run_scan_dump(ScanArgs& a) {
  require_file(a.dump, "dump");
  require_file(a.type_map, "type map");
  auto map = load_type_map_file(a.type_map);
  DumpScanOptions opts;
  opts.max_record_bytes = a.max_record_mib << 20;
  opts.jobs = jobs();

  std::ifstream file;
  std::istream* in = &std::cin;
  if (a.dump != "-") {
    file.open(a.dump, std::ios::binary);
    if (!file) throw DataError("cannot open dump: " + a.dump);
    in = &file;
  }
  Output out(a.output);
  auto stats = scan_dump(*in, map, split_list(a.languages),
                         [&](const TypedNameRecord& r) { write_name_record(out.stream(), r); },
                         opts);
  out.commit();
  note("scanned " + std::to_string(stats.entities) + " entities, " + std::to_string(stats.matched) +
       " matched, " + std::to_string(stats.records) + " records, " +
       std::to_string(stats.malformed) + " malformed, " + std::to_string(stats.oversized) +
       " oversized");
}

// ---- clean

struct CleanArgs {
  std::vector<std::string> inputs;
  std::string rules;
  std::string output_dir;
  std::string reject_log;
  std::string mode = "word";
};

void run_clean(CleanArgs& a) {
  for (const auto& p : a.inputs) require_file(p, "name records");
  if (!a.rules.empty()) require_file(a.rules, "filter rules");
  auto mode = parse_token_mode(a.mode);
  auto rules = a.rules.empty() ? FilterRuleSet() : load_filter_rules_file(a.rules);
  auto reg = registry();

  std::optional<Output> log;
  if (!a.reject_log.empty()) log.emplace(a.reject_log);
  RejectLog reject;
  if (log) {
    reject = [&](std::string_view name, std::string_view type, std::string_view reason) {
      log->stream() << name << '\t' << type << '\t' << reason << '\n';
    };
  }
  GazetteerBuilder builder(rules, mode, reject);
  for (const auto& p : a.inputs) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (p != "-") {
      file.open(p);
      in = &file;
    }
    read_name_records(*in, [&](const TypedNameRecord& r) {
      for (const auto& t : r.types) {
        if (!reg.contains(t)) throw DataError(p + ": record type " + t + " is not in the registry");
      }
      builder.add(r);
    });
  }
  Gazetteer g = builder.take();
  g.sort_groups();
  fs::create_directories(a.output_dir);
  write_gazetteer_dir(g, mode, a.output_dir);
  if (log) log->commit();
  for (const auto& [key, c] : builder.counters()) {
    note(gazetteer_file_name(key) + ": accepted " + std::to_string(c.accepted) + ", rejected " +
         std::to_string(c.rejected) + ", duplicates " + std::to_string(c.duplicates));
  }
}

// ---- inflect

struct InflectArgs {
  std::string gazetteer_dir;
  std::string output_dir;
  std::string rules = "config/ru_inflection_rules.tsv";
  std::string familiar = "config/ru_familiar_forms.tsv";
  std::string types;
};

void run_inflect(InflectArgs& a) {
  require_dir(a.gazetteer_dir, "gazetteer directory");
  require_file(a.rules, "inflection rules");
  if (!a.familiar.empty()) require_file(a.familiar, "familiar-form table");
  auto rules = load_inflection_rules_file(a.rules);
  FamiliarFormTable familiar;
  if (!a.familiar.empty()) familiar = load_familiar_forms_file(a.familiar);
  auto types = a.types.empty() ? default_inflected_types() : split_list(a.types);
  auto g = load_gazetteer_dir(a.gazetteer_dir, TokenMode::kWord, registry());
  auto inflected = inflect_gazetteer(g, rules, familiar, types);
  fs::create_directories(a.output_dir);
  write_gazetteer_dir(inflected, TokenMode::kWord, a.output_dir);
  note("generated " + std::to_string(inflected.size()) + " inflected names");
}

// ---- match

struct MatchArgs {
  std::string gazetteer_dir;
  std::string input;
  std::string output = "-";
  std::string mode = "word";
  std::string partial = "on";
  std::string case_policy = "sensitive";
  std::string language = "en";
  std::string sources;
};

void run_match(MatchArgs& a) {
  require_dir(a.gazetteer_dir, "gazetteer directory");
  require_file(a.input, "input corpus");
  auto mode = parse_token_mode(a.mode);
  bool partial = parse_on_off(a.partial, "--partial");
  auto case_policy = parse_case_policy(a.case_policy);
  auto reg = registry();
  GazetteerDirStats gstats;
  std::vector<std::string> skipped;
  auto g = load_gazetteer_dir(a.gazetteer_dir, mode, reg, &gstats, &skipped);
  for (const auto& s : skipped) note("skipped gazetteer file " + s);
  auto doc = load_corpus(a.input, mode, reg);
  if (partial && mode == TokenMode::kCharacter) note("character mode: partial matching disabled");

  auto annotator = Annotator::build(reg, g, a.language, mode, case_policy, parse_sources(a.sources));
  auto layers = annotator.annotate_document(doc, partial, jobs());
  std::vector<FeatureColumns> cols;
  cols.reserve(layers.size());
  for (const auto& l : layers) cols.push_back(encode_one_hot(l, reg));
  Output out(a.output);
  write_features(doc, cols, reg, out.stream());
  out.commit();
  note("annotated " + std::to_string(doc.sentences.size()) + " sentences with " +
       std::to_string(gstats.entries) + " gazetteer entries");
}

// ---- augment

struct AugmentArgs {
  std::string input;
  std::string output = "-";
  std::string types = "all";
  uint64_t seed = 0;
  std::string consistent = "false";
  double prob = 1.0;
  std::string gazetteer_dir;
  std::string mode = "word";
  std::string languages;
  std::string sources;
};

void run_augment(AugmentArgs& a) {
  require_file(a.input, "input corpus");
  require_dir(a.gazetteer_dir, "gazetteer directory");
  auto mode = parse_token_mode(a.mode);
  auto reg = registry();
  auto g = load_gazetteer_dir(a.gazetteer_dir, mode, reg);
  auto doc = load_corpus(a.input, mode, reg);

  AugmentConfig cfg;
  cfg.all_types = a.types == "all";
  if (!cfg.all_types) cfg.types = split_list(a.types);
  for (const auto& t : cfg.types) {
    if (!reg.contains(t)) throw DataError("unknown type " + t);
  }
  cfg.consistent = parse_on_off(a.consistent, "--consistent");
  cfg.seed = a.seed;
  cfg.probability = a.prob;
  cfg.source = &g;
  cfg.languages = split_list(a.languages);
  cfg.sources = parse_sources(a.sources);
  auto augmented = augment_document(doc, cfg);
  Output out(a.output);
  write_bio(augmented, out.stream());
  out.commit();
}

// ---- coverage

struct CoverageArgs {
  std::string input;
  std::string gazetteer_dir;
  std::string mode = "word";
  std::string types;
  std::string languages;
  std::string sources;
  std::string case_policy = "sensitive";
  bool unique = false;
  std::string format = "table";
  std::string output = "-";
};

void run_coverage(CoverageArgs& a) {
  require_file(a.input, "input corpus");
  require_dir(a.gazetteer_dir, "gazetteer directory");
  auto mode = parse_token_mode(a.mode);
  auto reg = registry();
  auto g = load_gazetteer_dir(a.gazetteer_dir, mode, reg);
  auto doc = load_corpus(a.input, mode, reg);
  CoverageOptions opts;
  opts.types = split_list(a.types);
  opts.languages = split_list(a.languages);
  opts.sources = parse_sources(a.sources);
  opts.case_policy = parse_case_policy(a.case_policy);
  opts.unique = a.unique;
  auto report = coverage(doc, g, opts);
  Output out(a.output);
  if (a.format == "tsv") {
    write_coverage_tsv(report, out.stream());
  } else {
    write_coverage_table(report, out.stream());
  }
  out.commit();
}

// ---- score

struct ScoreArgs {
  std::string gold;
  std::string pred;
  std::string mode = "word";
  std::string format = "table";
  bool agreement = false;
  std::string output = "-";
};

void run_score(ScoreArgs& a) {
  require_file(a.gold, "gold corpus");
  require_file(a.pred, "predicted corpus");
  auto mode = parse_token_mode(a.mode);
  auto reg = registry();
  auto gold = load_corpus(a.gold, mode, reg);
  auto pred = load_corpus(a.pred, mode, reg);
  auto report = score(gold, pred);
  Output out(a.output);
  if (a.format == "tsv") {
    write_score_tsv(report, out.stream());
  } else {
    write_score_table(report, out.stream());
  }
  if (a.agreement) write_agreement(token_agreement(gold, pred), out.stream());
  out.commit();
}

// ---- ttest

struct TTestArgs {
  std::string a;
  std::string b;
};

int run_ttest(TTestArgs& a) {
  require_file(a.a, "sample file");
  require_file(a.b, "sample file");
  auto r = welch_t_test(load_samples_file(a.a), load_samples_file(a.b));
  write_ttest(r, std::cout);
  return r.degenerate ? kDataError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gazkit: Wikidata gazetteers for NER corpora"};
  app.set_config("--config", "", "TOML/INI file with default flag values; flags override it");
  app.require_subcommand(1);
  app.add_option("--registry", g_opts.registry_path, "tag registry file (default: built-in)");
  app.add_option("--jobs", g_opts.jobs, "worker threads (default: hardware threads)");
  app.add_flag("-q,--quiet", g_opts.quiet, "no progress output");

  FetchArgs fetch;
  auto* c = app.add_subcommand("fetch", "page names of one target type from a SPARQL endpoint");
  c->add_option("--type", fetch.type, "target tag type")->required();
  c->add_option("--type-map", fetch.type_map, "type map file; all ids mapped to --type are fetched");
  c->add_option("--type-ids", fetch.type_ids, "fine-grained Q-ids instead of --type-map")
      ->delimiter(',');
  c->add_option("--language", fetch.language, "label language");
  c->add_option("--page-size", fetch.page_size, "rows per page");
  c->add_option("--timeout-seconds", fetch.timeout_seconds, "per-query budget, at most 60");
  c->add_option("-o,--output", fetch.output, "name-record file");
  fetch.transport.add_flags(c);

  MapTypesArgs map_types;
  c = app.add_subcommand("map-types", "discover instantiated subtypes and write a type map");
  c->add_option("--roots", map_types.roots, "target roots file");
  c->add_option("-o,--output", map_types.output, "type map file");
  c->add_option("--timeout-seconds", map_types.timeout_seconds, "per-query budget, at most 60");
  c->add_option("--batch-size", map_types.batch_size, "parents per query after a split");
  map_types.transport.add_flags(c);

  ScanArgs scan;
  c = app.add_subcommand("scan-dump", "stream names out of a decompressed Wikidata JSON dump");
  c->add_option("--dump", scan.dump, "dump path, - for stdin")->required();
  c->add_option("--type-map", scan.type_map, "type map file")->required();
  c->add_option("--languages", scan.languages, "comma-separated languages");
  c->add_option("-o,--output", scan.output, "name-record file");
  c->add_option("--max-record-mib", scan.max_record_mib, "skip entity lines larger than this");

  CleanArgs clean;
  c = app.add_subcommand("clean", "filter name records into a gazetteer directory");
  c->add_option("--input", clean.inputs, "name-record files")->required();
  c->add_option("--rules", clean.rules, "filter rules JSON (default: built-in bounds)");
  c->add_option("--output-dir", clean.output_dir, "gazetteer directory")->required();
  c->add_option("--reject-log", clean.reject_log, "write rejected names here");
  c->add_option("--mode", clean.mode, "word|char");

  InflectArgs inflect;
  c = app.add_subcommand("inflect", "generate Russian inflected and familiar forms");
  c->add_option("--gazetteer-dir", inflect.gazetteer_dir, "input gazetteer directory")->required();
  c->add_option("--output-dir", inflect.output_dir, "where the inflected files go")->required();
  c->add_option("--rules", inflect.rules, "inflection rule file");
  c->add_option("--familiar", inflect.familiar, "familiar-form table");
  c->add_option("--types", inflect.types, "types to inflect (default PER,GPE,LOC,ORG)");

  MatchArgs match;
  c = app.add_subcommand("match", "write gazetteer feature columns for a BIO corpus");
  c->add_option("--gazetteer-dir", match.gazetteer_dir, "gazetteer directory")->required();
  c->add_option("--input", match.input, "BIO corpus")->required();
  c->add_option("-o,--output", match.output, "feature file");
  c->add_option("--mode", match.mode, "word|char");
  c->add_option("--partial", match.partial, "on|off");
  c->add_option("--case", match.case_policy, "sensitive|fold");
  c->add_option("--language", match.language, "gazetteer language");
  c->add_option("--sources", match.sources, "canonical,alias,inflected (default: all)");

  AugmentArgs augment;
  c = app.add_subcommand("augment", "replace entities with random same-type gazetteer names");
  c->add_option("--input", augment.input, "BIO corpus")->required();
  c->add_option("-o,--output", augment.output, "augmented BIO corpus");
  c->add_option("--types", augment.types, "comma-separated types or 'all'");
  c->add_option("--seed", augment.seed, "random seed");
  c->add_option("--consistent", augment.consistent, "same surface, same replacement (true|false)");
  c->add_option("--prob", augment.prob, "replacement probability")->check(CLI::Range(0.0, 1.0));
  c->add_option("--gazetteer-dir", augment.gazetteer_dir, "gazetteer directory")->required();
  c->add_option("--mode", augment.mode, "word|char");
  c->add_option("--languages", augment.languages, "restrict replacements to these languages");
  c->add_option("--sources", augment.sources, "restrict replacements to these sources");

  CoverageArgs cov;
  c = app.add_subcommand("coverage", "share of gold mentions found in the gazetteer");
  c->add_option("--input", cov.input, "BIO corpus")->required();
  c->add_option("--gazetteer-dir", cov.gazetteer_dir, "gazetteer directory")->required();
  c->add_option("--mode", cov.mode, "word|char");
  c->add_option("--types", cov.types, "types to report (default: attested)");
  c->add_option("--languages", cov.languages, "gazetteer languages (default: all)");
  c->add_option("--sources", cov.sources, "gazetteer sources (default: all)");
  c->add_option("--case", cov.case_policy, "sensitive|fold");
  c->add_flag("--unique", cov.unique, "count distinct surfaces instead of mentions");
  c->add_option("--format", cov.format, "table|tsv");
  c->add_option("-o,--output", cov.output, "report file");

  ScoreArgs sc;
  c = app.add_subcommand("score", "entity-level precision, recall and F1");
  c->add_option("--gold", sc.gold, "gold BIO corpus")->required();
  c->add_option("--pred", sc.pred, "predicted BIO corpus")->required();
  c->add_option("--mode", sc.mode, "word|char");
  c->add_option("--format", sc.format, "table|tsv");
  c->add_flag("--agreement", sc.agreement, "also print token-level agreement");
  c->add_option("-o,--output", sc.output, "report file");

  TTestArgs tt;
  c = app.add_subcommand("ttest", "Welch's t-test on two lists of scores");
  c->add_option("--a", tt.a, "first sample file")->required();
  c->add_option("--b", tt.b, "second sample file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "fetch") run_fetch(fetch);
    else if (name == "map-types") run_map_types(map_types);
    else if (name == "scan-dump") run_scan_dump(scan);
    else if (name == "clean") run_clean(clean);
    else if (name == "inflect") run_inflect(inflect);
    else if (name == "match") run_match(match);
    else if (name == "augment") run_augment(augment);
    else if (name == "coverage") run_coverage(cov);
    else if (name == "score") run_score(sc);
    else if (name == "ttest") return run_ttest(tt);
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "gazkit: " << e.what() << "\n";
    return kUsage;
  } catch (const TransportError& e) {
    std::cerr << "gazkit: " << e.what() << "\n  query: " << e.query() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "gazkit: " << e.what() << "\n";
    return kDataError;
  }
}
