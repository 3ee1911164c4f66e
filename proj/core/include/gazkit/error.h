// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_ERROR_H_
#define GAZKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace gazkit {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: labels, config lines, corpus lines.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a data contract (length mismatch,
// misaligned corpora, empty replacement pools, missing files).
class DataError : public Error {
 public:
  using Error::Error;
};

// Failure talking to a query endpoint. Carries the query that failed.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, std::string query)
      : Error(message), query_(std::move(query)) {}

  const std::string& query() const { return query_; }

 private:
  std::string query_;
};

}  // namespace gazkit

#endif  // GAZKIT_ERROR_H_
