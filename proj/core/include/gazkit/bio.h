// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_BIO_H_
#define GAZKIT_BIO_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gazkit {

class TagRegistry;

enum class BioKind : uint8_t { kB, kI, kO };

struct BioLabel {
  BioKind kind = BioKind::kO;
  std::string type;  // empty iff kind == kO

  static BioLabel outside() { return {}; }
  static BioLabel begin(std::string type) { return {BioKind::kB, std::move(type)}; }
  static BioLabel inside(std::string type) { return {BioKind::kI, std::move(type)}; }

  bool is_outside() const { return kind == BioKind::kO; }
  std::string render() const;

  friend bool operator==(const BioLabel&, const BioLabel&) = default;
};

// Parses "O", "B-<code>" or "I-<code>". When a registry is given, the code
// must be registered. Throws ParseError naming the offending text.
BioLabel parse_bio_label(std::string_view text, const TagRegistry* registry = nullptr);

struct BioViolation {
  size_t index = 0;
  std::string reason;

  friend bool operator==(const BioViolation&, const BioViolation&) = default;
};

// An I-<t> is valid only after B-<t> or I-<t>. The position before the
// first label counts as O.
std::vector<BioViolation> validate_bio_sequence(std::span<const BioLabel> labels);

// Half-open token span with a type.
struct Chunk {
  size_t start = 0;
  size_t end = 0;
  std::string type;

  friend bool operator==(const Chunk&, const Chunk&) = default;
  friend auto operator<=>(const Chunk&, const Chunk&) = default;
};

// Lenient chunking in the conlleval convention: a chunk starts at every B,
// and at every I whose type differs from the running chunk (or that
// follows O). Never fails, so it is safe on system output.
std::vector<Chunk> chunk_labels(std::span<const BioLabel> labels);

}  // namespace gazkit

#endif  // GAZKIT_BIO_H_
