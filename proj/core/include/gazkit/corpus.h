// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_CORPUS_H_
#define GAZKIT_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "gazkit/bio.h"

namespace gazkit {

// Word mode: tokens are whitespace-free words. Character mode: every token
// is a single code point (Chinese-style character tokenization).
enum class TokenMode { kWord, kCharacter };

TokenMode parse_token_mode(std::string_view text);  // "word" | "char"
std::string_view to_string(TokenMode mode);

struct Token {
  std::string surface;
  BioLabel gold;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  TokenMode mode = TokenMode::kWord;

  size_t size() const { return tokens.size(); }
  std::vector<BioLabel> gold_labels() const;
  std::vector<std::string> surfaces() const;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::vector<Sentence> sentences;
  std::string source;

  size_t token_count() const;

  // Equality ignores the source identifier.
  friend bool operator==(const Document& a, const Document& b) {
    return a.sentences == b.sentences;
  }
};

// Joins a token span into the surface used for dictionary lookups: single
// spaces in word mode, plain concatenation in character mode.
std::string join_surface(const std::vector<std::string>& tokens, TokenMode mode);
std::string span_surface(const Sentence& sentence, size_t start, size_t end);

}  // namespace gazkit

#endif  // GAZKIT_CORPUS_H_
