// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_FEATURES_H_
#define GAZKIT_FEATURES_H_

#include <cstdint>
#include <vector>

#include "gazkit/bio.h"

namespace gazkit {

class TagRegistry;

// Per-type gazetteer match rows over one sentence: rows[type][token].
// Unlike gold labels, a row may begin with I (tags copied from inside an
// entry).
struct FeatureLayers {
  std::vector<std::vector<BioKind>> rows;

  friend bool operator==(const FeatureLayers&, const FeatureLayers&) = default;
};

// Feature labels for one sentence plus their one-hot encoding. Both are
// token-major with types in registry order; the encoding holds three
// values per type in the order (B, I, O).
struct FeatureColumns {
  size_t num_types = 0;
  size_t num_tokens = 0;
  std::vector<BioLabel> labels;  // num_tokens * num_types
  std::vector<uint8_t> one_hot;  // num_tokens * num_types * 3

  const BioLabel& label(size_t token, size_t type) const {
    return labels[token * num_types + type];
  }
  const uint8_t* group(size_t token, size_t type) const {
    return &one_hot[(token * num_types + type) * 3];
  }
};

// B -> (1,0,0), I -> (0,1,0), O -> (0,0,1). Throws DataError when the layer
// count differs from the registry size or rows have unequal lengths.
FeatureColumns encode_one_hot(const FeatureLayers& layers, const TagRegistry& registry);

// Inverse of encode_one_hot. Throws DataError on a group that is not one-hot.
FeatureLayers decode_one_hot(const FeatureColumns& columns);

}  // namespace gazkit

#endif  // GAZKIT_FEATURES_H_
