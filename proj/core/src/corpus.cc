// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/corpus.h"

#include "gazkit/error.h"

namespace gazkit {

TokenMode parse_token_mode(std::string_view text) {
  if (text == "word") return TokenMode::kWord;
  if (text == "char" || text == "character") return TokenMode::kCharacter;
  throw ParseError("unknown token mode '" + std::string(text) + "' (expected word|char)");
}

std::string_view to_string(TokenMode mode) {
  return mode == TokenMode::kWord ? "word" : "char";
}

std::vector<BioLabel> Sentence::gold_labels() const {
  std::vector<BioLabel> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.gold);
  return out;
}

std::vector<std::string> Sentence::surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

size_t Document::token_count() const {
  size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::string join_surface(const std::vector<std::string>& tokens, TokenMode mode) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i && mode == TokenMode::kWord) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string span_surface(const Sentence& sentence, size_t start, size_t end) {
  std::string out;
  for (size_t i = start; i < end; ++i) {
    if (i > start && sentence.mode == TokenMode::kWord) out.push_back(' ');
    out += sentence.tokens[i].surface;
  }
  return out;
}

}  // namespace gazkit
