// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/sparql.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gazkit/error.h"

namespace gazkit {

namespace {

using json = nlohmann::json;

std::string values_clause(const std::string& var, const std::vector<std::string>& ids) {
  std::string out = "  VALUES ?" + var + " {";
  for (const auto& id : ids) out += " wd:" + id;
  out += " }\n";
  return out;
}

// Escapes a language tag for a SPARQL string literal.
std::string quote_literal(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

bool qid_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

json rows_to_json(const std::vector<SparqlRow>& rows) {
  json bindings = json::array();
  std::set<std::string> vars;
  for (const auto& row : rows) {
    json b = json::object();
    for (const auto& [var, value] : row) {
      b[var] = {{"type", "literal"}, {"value", value}};
      vars.insert(var);
    }
    bindings.push_back(std::move(b));
  }
  return {{"head", {{"vars", vars}}}, {"results", {{"bindings", bindings}}}};
}

bool truthy(const std::string& v) { return v == "true" || v == "1"; }

}  // namespace

SparqlQuery instantiated_closure_query(const std::string& root) {
  SparqlQuery q;
  q.kind = SparqlQuery::Kind::kInstantiatedClosure;
  q.ids = {root};
  q.text =
      "SELECT DISTINCT ?type WHERE {\n"
      "  ?type wdt:P279* wd:" + root + " .\n"
      "  FILTER EXISTS { ?item wdt:P31 ?type . }\n"
      "}\n";
  return q;
}

SparqlQuery instance_check_query(const std::vector<std::string>& ids) {
  SparqlQuery q;
  q.kind = SparqlQuery::Kind::kInstanceCheck;
  q.ids = ids;
  q.text = "SELECT ?type ?instantiated WHERE {\n" + values_clause("type", ids) +
           "  BIND(EXISTS { ?item wdt:P31 ?type . } AS ?instantiated)\n"
           "}\n";
  return q;
}

SparqlQuery children_query(const std::vector<std::string>& parents) {
  SparqlQuery q;
  q.kind = SparqlQuery::Kind::kChildren;
  q.ids = parents;
  q.text = "SELECT DISTINCT ?type ?instantiated WHERE {\n" + values_clause("parent", parents) +
           "  ?type wdt:P279 ?parent .\n"
           "  BIND(EXISTS { ?item wdt:P31 ?type . } AS ?instantiated)\n"
           "}\n";
  return q;
}

SparqlQuery names_query(const std::vector<std::string>& type_ids, const std::string& language,
                        size_t limit, size_t offset) {
  SparqlQuery q;
  q.kind = SparqlQuery::Kind::kNames;
  q.ids = type_ids;
  q.language = language;
  q.limit = limit;
  q.offset = offset;
  q.text = "SELECT DISTINCT ?item ?kind ?name WHERE {\n" + values_clause("type", type_ids) +
           "  ?item wdt:P31 ?type .\n"
           "  { ?item rdfs:label ?name . BIND(\"canonical\" AS ?kind) }\n"
           "  UNION\n"
           "  { ?item skos:altLabel ?name . BIND(\"alias\" AS ?kind) }\n"
           "  FILTER(LANG(?name) = " + quote_literal(language) + ")\n"
           "}\n"
           "ORDER BY ?item ?kind ?name\n"
           "LIMIT " + std::to_string(limit) + " OFFSET " + std::to_string(offset) + "\n";
  return q;
}

std::vector<SparqlRow> parse_sparql_results(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("SPARQL results are not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("results") || !doc["results"].contains("bindings") ||
      !doc["results"]["bindings"].is_array()) {
    throw ParseError("SPARQL results lack results.bindings");
  }
  std::vector<SparqlRow> rows;
  for (const auto& b : doc["results"]["bindings"]) {
    SparqlRow row;
    for (const auto& [var, term] : b.items()) {
      if (!term.is_object() || !term.contains("value") || !term["value"].is_string()) {
        throw ParseError("SPARQL binding for '" + var + "' has no string value");
      }
      row[var] = term["value"].get<std::string>();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::unique_lock<std::mutex> RequestGate::acquire() {
  std::unique_lock<std::mutex> lock(mu_);
  auto now = std::chrono::steady_clock::now();
  if (last_ != std::chrono::steady_clock::time_point{} && now - last_ < min_interval_) {
    std::this_thread::sleep_for(min_interval_ - (now - last_));
  }
  last_ = std::chrono::steady_clock::now();
  return lock;
}

ReplayTransport::ReplayTransport(const std::filesystem::path& fixture) {
  std::ifstream in(fixture);
  if (!in) throw DataError("cannot open replay fixture: " + fixture.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("replay fixture " + fixture.string() + ": " + e.what());
  }
  for (const auto& r : doc.at("responses")) {
    SparqlResponse resp;
    resp.timed_out = r.value("timeout", false);
    if (!resp.timed_out) resp.rows = parse_sparql_results(r.at("results").dump());
    responses_[r.at("query").get<std::string>()] = std::move(resp);
  }
}

SparqlResponse ReplayTransport::execute(const SparqlQuery& query, std::chrono::seconds) {
  auto it = responses_.find(query.text);
  if (it == responses_.end()) throw TransportError("query not in replay fixture", query.text);
  return it->second;
}

SparqlResponse RecordingTransport::execute(const SparqlQuery& query,
                                           std::chrono::seconds budget) {
  auto resp = inner_.execute(query, budget);
  log_.emplace_back(query.text, resp);
  return resp;
}

void RecordingTransport::save(const std::filesystem::path& fixture) const {
  json responses = json::array();
  for (const auto& [text, resp] : log_) {
    json r = {{"query", text}, {"timeout", resp.timed_out}};
    if (!resp.timed_out) r["results"] = rows_to_json(resp.rows);
    responses.push_back(std::move(r));
  }
  std::ofstream out(fixture);
  if (!out) throw DataError("cannot write fixture: " + fixture.string());
  out << json{{"responses", responses}}.dump(1) << '\n';
}

void sort_qids(std::vector<std::string>& ids) {
  std::sort(ids.begin(), ids.end(), qid_less);
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::vector<std::string> discover_instantiated_subtypes(const std::string& root,
                                                        SparqlTransport& transport,
                                                        const DiscoveryOptions& options,
                                                        DiscoveryStats* stats) {
  if (!is_entity_id(root)) throw DataError("discovery root '" + root + "' is not a Q-id");
  DiscoveryStats local;
  std::vector<std::string> found;

  auto run = [&](const SparqlQuery& q) {
    ++local.queries;
    auto resp = transport.execute(q, options.budget);
    if (resp.timed_out) ++local.timeouts;
    return resp;
  };

  auto closure = run(instantiated_closure_query(root));
  if (!closure.timed_out) {
    for (const auto& row : closure.rows) {
      auto it = row.find("type");
      if (it != row.end()) found.push_back(entity_id_from_uri(it->second));
    }
    sort_qids(found);
    if (stats) *stats = local;
    return found;
  }

  local.split = true;
  {
    auto q = instance_check_query({root});
    auto resp = run(q);
    if (resp.timed_out) throw TransportError("instance check timed out", q.text);
    for (const auto& row : resp.rows) {
      auto inst = row.find("instantiated");
      if (inst != row.end() && truthy(inst->second)) found.push_back(root);
    }
  }

  std::set<std::string> visited = {root};
  std::vector<std::string> frontier = {root};
  const size_t batch = std::max<size_t>(1, options.batch_size);
  while (!frontier.empty()) {
    ++local.levels;
    std::vector<std::string> next;
    // Work list of parent batches; a batch that times out is split in two.
    std::vector<std::vector<std::string>> pending;
    for (size_t i = 0; i < frontier.size(); i += batch) {
      pending.emplace_back(frontier.begin() + static_cast<ptrdiff_t>(i),
                           frontier.begin() + static_cast<ptrdiff_t>(std::min(frontier.size(), i + batch)));
    }
    std::reverse(pending.begin(), pending.end());
    while (!pending.empty()) {
      auto parents = std::move(pending.back());
      pending.pop_back();
      auto q = children_query(parents);
      auto resp = run(q);
      if (resp.timed_out) {
        if (parents.size() == 1) throw TransportError("subclass query timed out", q.text);
        const auto mid = parents.begin() + static_cast<ptrdiff_t>(parents.size() / 2);
        pending.emplace_back(mid, parents.end());
        pending.emplace_back(parents.begin(), mid);
        continue;
      }
      for (const auto& row : resp.rows) {
        auto t = row.find("type");
        if (t == row.end()) continue;
        std::string id = entity_id_from_uri(t->second);
        if (!visited.insert(id).second) continue;
        next.push_back(id);
        auto inst = row.find("instantiated");
        if (inst != row.end() && truthy(inst->second)) found.push_back(id);
      }
    }
    sort_qids(next);
    frontier = std::move(next);
  }
  sort_qids(found);
  if (stats) *stats = local;
  return found;
}

void FetchPlan::validate() const {
  if (type_ids.empty()) throw DataError("fetch plan for '" + type + "' has no type ids");
  for (const auto& id : type_ids) {
    if (!is_entity_id(id)) throw DataError("fetch plan: '" + id + "' is not a Q-id");
  }
  if (page_size == 0) throw DataError("fetch plan: page size must be positive");
  if (timeout_seconds <= 0 || timeout_seconds > 60) {
    throw DataError("fetch plan: time budget must be in (0, 60] seconds, got " +
                    std::to_string(timeout_seconds));
  }
  if (language.empty()) throw DataError("fetch plan: empty language");
}

namespace {

class NameFetcher {
 public:
  NameFetcher(const FetchPlan& plan, SparqlTransport& transport, const RawRecordSink& sink,
              const FetchProgress& progress)
      : plan_(plan), transport_(transport), sink_(sink), progress_(progress) {
    stats_.page_size = plan.page_size;
  }

  void run(const std::vector<std::string>& ids, const std::set<RawNameRecord>* suppress) {
    size_t offset = 0;
    size_t page = stats_.page_size;
    // Records emitted by a multi-type query, handed down if it has to be
    // split so the per-type queries do not repeat them.
    std::set<RawNameRecord> emitted;
    const bool may_split = ids.size() > 1;
    while (true) {
      auto q = names_query(ids, plan_.language, page, offset);
      auto resp = transport_.execute(q, std::chrono::seconds(plan_.timeout_seconds));
      if (resp.timed_out) {
        ++stats_.timeouts;
        if (page > kMinPageSize) {
          page = std::max(kMinPageSize, page / 2);
          stats_.page_size = page;
          report();
          continue;
        }
        if (ids.size() == 1) {
          throw TransportError("names query timed out at the minimum page size", q.text);
        }
        ++stats_.splits;
        report();
        if (suppress) emitted.insert(suppress->begin(), suppress->end());
        for (const auto& id : ids) run({id}, &emitted);
        return;
      }
      for (const auto& row : resp.rows) {
        auto item = row.find("item");
        auto name = row.find("name");
        auto kind = row.find("kind");
        if (item == row.end() || name == row.end() || kind == row.end()) {
          throw TransportError("names query returned a row without item/name/kind", q.text);
        }
        RawNameRecord r;
        r.entity_id = entity_id_from_uri(item->second);
        r.kind = kind->second == "alias" ? EntrySource::kAlias : EntrySource::kCanonical;
        r.text = name->second;
        r.language = plan_.language;
        if (suppress && suppress->contains(r)) continue;
        if (may_split) emitted.insert(r);
        sink_(r);
        ++stats_.records;
      }
      ++stats_.pages;
      report();
      if (resp.rows.size() < page) return;
      offset += resp.rows.size();
    }
  }

  const FetchStats& stats() const { return stats_; }

 private:
  void report() {
    if (progress_) progress_(stats_);
  }

  const FetchPlan& plan_;
  SparqlTransport& transport_;
  const RawRecordSink& sink_;
  const FetchProgress& progress_;
  FetchStats stats_;
};

}  // namespace

FetchStats fetch_names(const FetchPlan& plan, SparqlTransport& transport,
                       const RawRecordSink& sink, const FetchProgress& progress) {
  plan.validate();
  auto ids = plan.type_ids;
  sort_qids(ids);
  NameFetcher fetcher(plan, transport, sink, progress);
  fetcher.run(ids, nullptr);
  return fetcher.stats();
}

}  // namespace gazkit
