// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/augment.h"

#include <limits>
#include <map>
#include <optional>

#include "gazkit/error.h"

namespace gazkit {

std::vector<EntityMention> extract_entities(const Sentence& sentence) {
  auto labels = sentence.gold_labels();
  auto violations = validate_bio_sequence(labels);
  if (!violations.empty()) {
    std::string msg = "BIO-invalid sentence:";
    for (const auto& v : violations) msg += " [" + std::to_string(v.index) + "] " + v.reason + ";";
    msg.pop_back();
    throw DataError(msg);
  }
  std::vector<EntityMention> out;
  for (const auto& c : chunk_labels(labels)) {
    out.push_back(EntityMention{c.start, c.end, c.type, span_surface(sentence, c.start, c.end)});
  }
  return out;
}

uint64_t AugmentRng::below(uint64_t n) {
  const uint64_t max = std::numeric_limits<uint64_t>::max();
  const uint64_t limit = max - (max % n + 1) % n;  // largest multiple of n, minus one
  uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % n;
}

double AugmentRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Document augment_document(const Document& doc, const AugmentConfig& config) {
  if (config.probability < 0.0 || config.probability > 1.0) {
    throw DataError("replacement probability must be within [0, 1]");
  }
  // Validate everything first so no partial output exists on error.
  std::vector<std::vector<EntityMention>> mentions;
  mentions.reserve(doc.sentences.size());
  std::map<std::string, std::vector<const std::vector<std::string>*>> pools;
  for (const auto& s : doc.sentences) {
    mentions.push_back(extract_entities(s));
    for (const auto& m : mentions.back()) {
      if (!config.targets(m.type) || pools.count(m.type)) continue;
      if (!config.source) throw DataError("augmentation needs a replacement gazetteer");
      auto pool = config.source->select(m.type, config.languages, config.sources);
      if (pool.empty()) throw DataError("no gazetteer entries for targeted type " + m.type);
      pools.emplace(m.type, std::move(pool));
    }
  }

  AugmentRng rng(config.seed);
  std::map<std::pair<std::string, std::string>, const std::vector<std::string>*> decided;

  Document out;
  out.source = doc.source;
  out.sentences.reserve(doc.sentences.size());
  for (size_t si = 0; si < doc.sentences.size(); ++si) {
    const Sentence& s = doc.sentences[si];
    Sentence ns;
    ns.mode = s.mode;
    size_t pos = 0;
    for (const auto& m : mentions[si]) {
      if (!config.targets(m.type)) continue;
      const std::vector<std::string>* pick = nullptr;
      auto key = std::make_pair(m.type, m.surface);
      auto hit = config.consistent ? decided.find(key) : decided.end();
      if (hit != decided.end()) {
        pick = hit->second;
      } else {
        if (config.probability >= 1.0 || rng.unit() < config.probability) {
          const auto& pool = pools.at(m.type);
          pick = pool[rng.below(pool.size())];
        }
        if (config.consistent) decided.emplace(key, pick);
      }
      if (!pick) continue;
      ns.tokens.insert(ns.tokens.end(), s.tokens.begin() + pos, s.tokens.begin() + m.start);
      for (size_t i = 0; i < pick->size(); ++i) {
        ns.tokens.push_back(
            Token{(*pick)[i], i == 0 ? BioLabel::begin(m.type) : BioLabel::inside(m.type)});
      }
      pos = m.end;
    }
    ns.tokens.insert(ns.tokens.end(), s.tokens.begin() + pos, s.tokens.end());
    out.sentences.push_back(std::move(ns));
  }
  return out;
}

}  // namespace gazkit
