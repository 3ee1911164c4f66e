// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_UTF8_H_
#define GAZKIT_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace gazkit::utf8 {

// Decodes UTF-8 into code points. Invalid bytes decode to U+FFFD one byte
// at a time, so decoding never fails.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

// Number of code points.
size_t length(std::string_view text);

// Splits into one string per code point.
std::vector<std::string> split_chars(std::string_view text);

// Simple case folding for Latin, Latin-1, Latin Extended-A, Greek and
// Cyrillic. Other scripts pass through unchanged.
char32_t fold(char32_t cp);
std::string fold_case(std::string_view text);

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_upper(char32_t cp);

// Everything that is neither whitespace nor punctuation.
inline bool is_word_char(char32_t cp) { return !is_space(cp) && !is_punct(cp); }

}  // namespace gazkit::utf8

#endif  // GAZKIT_UTF8_H_
