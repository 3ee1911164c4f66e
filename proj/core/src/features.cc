// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/features.h"

#include "gazkit/error.h"
#include "gazkit/tags.h"

namespace gazkit {

FeatureColumns encode_one_hot(const FeatureLayers& layers, const TagRegistry& registry) {
  if (layers.rows.size() != registry.size()) {
    throw DataError("feature layers have " + std::to_string(layers.rows.size()) +
                    " rows, registry has " + std::to_string(registry.size()) + " types");
  }
  FeatureColumns out;
  out.num_types = registry.size();
  out.num_tokens = layers.rows.empty() ? 0 : layers.rows.front().size();
  for (const auto& row : layers.rows) {
    if (row.size() != out.num_tokens) throw DataError("feature rows have unequal lengths");
  }
  out.labels.reserve(out.num_tokens * out.num_types);
  out.one_hot.assign(out.num_tokens * out.num_types * 3, 0);
  for (size_t t = 0; t < out.num_tokens; ++t) {
    for (size_t k = 0; k < out.num_types; ++k) {
      const BioKind kind = layers.rows[k][t];
      const auto& code = registry[k].code;
      switch (kind) {
        case BioKind::kB:
          out.labels.push_back(BioLabel::begin(code));
          break;
        case BioKind::kI:
          out.labels.push_back(BioLabel::inside(code));
          break;
        case BioKind::kO:
          out.labels.push_back(BioLabel::outside());
          break;
      }
      out.one_hot[(t * out.num_types + k) * 3 + static_cast<size_t>(kind)] = 1;
    }
  }
  return out;
}

FeatureLayers decode_one_hot(const FeatureColumns& columns) {
  FeatureLayers layers;
  layers.rows.assign(columns.num_types, std::vector<BioKind>(columns.num_tokens, BioKind::kO));
  for (size_t t = 0; t < columns.num_tokens; ++t) {
    for (size_t k = 0; k < columns.num_types; ++k) {
      const uint8_t* g = columns.group(t, k);
      if (g[0] + g[1] + g[2] != 1 || g[0] > 1 || g[1] > 1 || g[2] > 1) {
        throw DataError("one-hot group at token " + std::to_string(t) + ", type " +
                        std::to_string(k) + " is not one-hot");
      }
      layers.rows[k][t] = g[0] ? BioKind::kB : (g[1] ? BioKind::kI : BioKind::kO);
    }
  }
  return layers;
}

}  // namespace gazkit
