// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include <httplib.h>

#include "gazkit/error.h"
#include "gazkit/sparql.h"

namespace gazkit {

namespace {

std::shared_ptr<RequestGate> gate_for(const std::string& endpoint,
                                      std::chrono::milliseconds interval) {
  static std::mutex mu;
  static std::map<std::string, std::weak_ptr<RequestGate>> gates;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = gates[endpoint];
  if (auto gate = slot.lock()) return gate;
  auto gate = std::make_shared<RequestGate>(interval);
  slot = gate;
  return gate;
}

// Splits "https://host[:port]/path" into the client base and the path.
void split_endpoint(const std::string& endpoint, std::string* base, std::string* path) {
  size_t scheme = endpoint.find("://");
  size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
  size_t slash = endpoint.find('/', host_start);
  if (slash == std::string::npos) {
    *base = endpoint;
    *path = "/";
  } else {
    *base = endpoint.substr(0, slash);
    *path = endpoint.substr(slash);
  }
}

}  // namespace

HttpSparqlTransport::HttpSparqlTransport(std::string endpoint,
                                         std::chrono::milliseconds min_interval,
                                         std::string user_agent)
    : endpoint_(std::move(endpoint)),
      user_agent_(std::move(user_agent)),
      gate_(gate_for(endpoint_, min_interval)) {}

SparqlResponse HttpSparqlTransport::execute(const SparqlQuery& query,
                                            std::chrono::seconds budget) {
  std::string base;
  std::string path;
  split_endpoint(endpoint_, &base, &path);
  httplib::Client client(base);
  client.set_connection_timeout(std::chrono::seconds(15));
  // The server enforces the budget; leave slack for the response to arrive.
  client.set_read_timeout(budget + std::chrono::seconds(10));
  client.set_follow_location(true);
  httplib::Headers headers = {{"Accept", "application/sparql-results+json"},
                              {"User-Agent", user_agent_}};
  httplib::Params params = {{"query", query.text}};

  auto lock = gate_->acquire();
  auto res = client.Post(path, headers, params);
  lock.unlock();

  if (!res) {
    if (res.error() == httplib::Error::Read) return {true, {}};
    throw TransportError("request to " + endpoint_ + " failed: " + httplib::to_string(res.error()),
                         query.text);
  }
  const bool timeout_body = res->body.find("TimeoutException") != std::string::npos;
  if (res->status == 504 || (res->status >= 500 && timeout_body)) return {true, {}};
  if (res->status != 200) {
    throw TransportError("endpoint " + endpoint_ + " returned HTTP " +
                             std::to_string(res->status) + ": " + res->body.substr(0, 300),
                         query.text);
  }
  try {
    return {false, parse_sparql_results(res->body)};
  } catch (const ParseError& e) {
    // A timeout can also cut a 200 response short mid-stream.
    if (timeout_body) return {true, {}};
    throw TransportError(e.what(), query.text);
  }
}

}  // namespace gazkit
