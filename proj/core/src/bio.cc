// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/bio.h"

#include "gazkit/error.h"
#include "gazkit/tags.h"

namespace gazkit {

std::string BioLabel::render() const {
  switch (kind) {
    case BioKind::kB:
      return "B-" + type;
    case BioKind::kI:
      return "I-" + type;
    case BioKind::kO:
      break;
  }
  return "O";
}

BioLabel parse_bio_label(std::string_view text, const TagRegistry* registry) {
  auto fail = [&](const char* why) {
    return ParseError("malformed BIO label '" + std::string(text) + "': " + why);
  };
  if (text == "O") return BioLabel::outside();
  if (text.size() < 3 || text[1] != '-') throw fail("expected O, B-<type> or I-<type>");
  BioKind kind;
  if (text[0] == 'B') {
    kind = BioKind::kB;
  } else if (text[0] == 'I') {
    kind = BioKind::kI;
  } else {
    throw fail("prefix must be B or I");
  }
  std::string_view code = text.substr(2);
  for (char c : code) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') throw fail("type contains whitespace");
  }
  if (registry && !registry->contains(code)) throw fail("unknown type");
  return {kind, std::string(code)};
}

std::vector<BioViolation> validate_bio_sequence(std::span<const BioLabel> labels) {
  std::vector<BioViolation> out;
  const BioLabel* prev = nullptr;
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& cur = labels[i];
    if (cur.kind == BioKind::kI) {
      if (prev == nullptr || prev->is_outside()) {
        out.push_back({i, cur.render() + " follows " + (prev ? "O" : "sentence start")});
      } else if (prev->type != cur.type) {
        out.push_back({i, cur.render() + " follows " + prev->render()});
      }
    }
    prev = &cur;
  }
  return out;
}

std::vector<Chunk> chunk_labels(std::span<const BioLabel> labels) {
  std::vector<Chunk> out;
  bool open = false;
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    if (l.is_outside()) {
      open = false;
      continue;
    }
    const bool continues = l.kind == BioKind::kI && open && out.back().type == l.type;
    if (continues) {
      out.back().end = i + 1;
    } else {
      out.push_back({i, i + 1, l.type});
      open = true;
    }
  }
  return out;
}

}  // namespace gazkit
