// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_SPARQL_H_
#define GAZKIT_SPARQL_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "gazkit/name_record.h"

namespace gazkit {

// A query together with the parameters it was rendered from. Live
// transports send `text`; test doubles may answer from the parameters.
struct SparqlQuery {
  enum class Kind {
    kInstantiatedClosure,  // all instantiated subtypes of ids[0], one shot
    kInstanceCheck,        // which of ids have an immediate instance
    kChildren,             // direct subclasses of ids, with instance flag
    kNames,                // labels/aliases of instances of ids
  };

  Kind kind = Kind::kInstantiatedClosure;
  std::string text;
  std::vector<std::string> ids;
  std::string language;
  size_t limit = 0;
  size_t offset = 0;
};

SparqlQuery instantiated_closure_query(const std::string& root);
SparqlQuery instance_check_query(const std::vector<std::string>& ids);
SparqlQuery children_query(const std::vector<std::string>& parents);
SparqlQuery names_query(const std::vector<std::string>& type_ids, const std::string& language,
                        size_t limit, size_t offset);

// One solution: variable name -> lexical value.
using SparqlRow = std::map<std::string, std::string>;

struct SparqlResponse {
  bool timed_out = false;
  std::vector<SparqlRow> rows;
};

// Parses the W3C SPARQL 1.1 JSON results format. Throws ParseError.
std::vector<SparqlRow> parse_sparql_results(std::string_view json);

class SparqlTransport {
 public:
  virtual ~SparqlTransport() = default;

  // Returns rows, or timed_out = true when the endpoint gave up within the
  // budget. Any other failure throws TransportError carrying the query.
  virtual SparqlResponse execute(const SparqlQuery& query, std::chrono::seconds budget) = 0;
};

// Serializes requests to one endpoint and spaces them by a minimum
// interval. Shared by all plans that talk to the same server.
class RequestGate {
 public:
  explicit RequestGate(std::chrono::milliseconds min_interval) : min_interval_(min_interval) {}

  // Blocks until the caller may send; the returned lock is held for the
  // duration of the request.
  std::unique_lock<std::mutex> acquire();

 private:
  std::mutex mu_;
  std::chrono::milliseconds min_interval_;
  std::chrono::steady_clock::time_point last_{};
};

// HTTP POST transport (form-encoded `query`, JSON results). The gate is
// shared per endpoint URL.
class HttpSparqlTransport : public SparqlTransport {
 public:
  explicit HttpSparqlTransport(std::string endpoint,
                               std::chrono::milliseconds min_interval = std::chrono::seconds(1),
                               std::string user_agent = "gazkit/0.1 (gazetteer builder)");

  SparqlResponse execute(const SparqlQuery& query, std::chrono::seconds budget) override;

 private:
  std::string endpoint_;
  std::string user_agent_;
  std::shared_ptr<RequestGate> gate_;
};

// Replays responses recorded in a JSON fixture:
//   {"responses": [{"query": "<text>", "timeout": false,
//                   "results": <SPARQL JSON results>}, ...]}
// Unknown queries throw TransportError.
class ReplayTransport : public SparqlTransport {
 public:
  explicit ReplayTransport(const std::filesystem::path& fixture);

  SparqlResponse execute(const SparqlQuery& query, std::chrono::seconds budget) override;

 private:
  std::map<std::string, SparqlResponse> responses_;
};

// Forwards to another transport and records every exchange; save() writes
// a fixture ReplayTransport can load.
class RecordingTransport : public SparqlTransport {
 public:
  explicit RecordingTransport(SparqlTransport& inner) : inner_(inner) {}

  SparqlResponse execute(const SparqlQuery& query, std::chrono::seconds budget) override;
  void save(const std::filesystem::path& fixture) const;

 private:
  SparqlTransport& inner_;
  std::vector<std::pair<std::string, SparqlResponse>> log_;
};

struct DiscoveryOptions {
  std::chrono::seconds budget{60};
  size_t batch_size = 50;  // parents per children query in split mode
};

struct DiscoveryStats {
  size_t queries = 0;
  size_t timeouts = 0;
  bool split = false;  // fell back to level-by-level queries
  size_t levels = 0;
};

// Subtypes of `root` under the reflexive subclass-of closure that have at
// least one immediate instance, deduplicated and sorted by numeric id.
// Tries one closure query first; on timeout walks the hierarchy one level
// at a time with batched children queries, halving a batch that times out.
// A single-parent query that still times out throws TransportError.
std::vector<std::string> discover_instantiated_subtypes(const std::string& root,
                                                        SparqlTransport& transport,
                                                        const DiscoveryOptions& options = {},
                                                        DiscoveryStats* stats = nullptr);

struct FetchPlan {
  std::string type;                   // target tag type
  std::vector<std::string> type_ids;  // fine-grained types to enumerate
  std::string language = "en";
  size_t page_size = 10000;
  std::string endpoint = "https://query.wikidata.org/sparql";
  int timeout_seconds = 60;

  // Throws DataError: empty ids, non-Q-ids, zero page size, or a time
  // budget outside (0, 60] seconds (the public endpoint's limit).
  void validate() const;
};

struct FetchStats {
  size_t pages = 0;
  size_t records = 0;
  size_t timeouts = 0;
  size_t splits = 0;
  size_t page_size = 0;  // current page size
};

inline constexpr size_t kMinPageSize = 100;

using RawRecordSink = std::function<void(const RawNameRecord&)>;
using FetchProgress = std::function<void(const FetchStats&)>;

// Pages through labels and aliases of instances of the plan's types in the
// plan's language. Records are handed to `sink` as each page arrives, so a
// later failure never loses earlier pages. On timeout the page size is
// halved down to kMinPageSize; past that the plan is split into one query
// per type id (records already emitted are not repeated).
FetchStats fetch_names(const FetchPlan& plan, SparqlTransport& transport,
                       const RawRecordSink& sink, const FetchProgress& progress = {});

// Sorts Q-ids by numeric value and removes duplicates.
void sort_qids(std::vector<std::string>& ids);

}  // namespace gazkit

#endif  // GAZKIT_SPARQL_H_
