// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAZKIT_NORMALIZE_H_
#define GAZKIT_NORMALIZE_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "gazkit/corpus.h"
#include "gazkit/gazetteer.h"
#include "gazkit/name_record.h"

namespace gazkit {

enum class PunctuationPolicy {
  kKeep,        // only reject names made of punctuation
  kStripEdges,  // also trim leading/trailing punctuation (abbreviation dots stay)
  kStripAll,    // also drop punctuation not flanked by word characters
};

PunctuationPolicy parse_punctuation_policy(std::string_view text);
std::string_view to_string(PunctuationPolicy policy);

// Filters for one tag type. Lengths count code points and space-separated
// tokens.
struct FilterRule {
  std::vector<std::string> reject_patterns;  // ECMAScript regex, searched
  size_t min_tokens = 1;
  size_t max_tokens = 10;
  size_t min_chars = 2;
  size_t max_chars = 60;
  bool strip_parenthetical = true;
  PunctuationPolicy punctuation = PunctuationPolicy::kStripEdges;
};

// Per-type rules with a fallback. Patterns are compiled once, with
// std::regex ECMAScript grammar; matching is byte-oriented, so non-ASCII
// text matches only as literal byte sequences (no character classes over
// Cyrillic or CJK ranges).
class FilterRuleSet {
 public:
  FilterRuleSet() : FilterRuleSet(FilterRule{}, {}) {}
  // Throws ParseError on min > max or a pattern that does not compile.
  FilterRuleSet(FilterRule fallback, std::map<std::string, FilterRule> per_type);

  const FilterRule& rule_for(const std::string& type) const;
  const std::vector<std::regex>& patterns_for(const std::string& type) const;

  const FilterRule& fallback() const { return fallback_; }
  const std::map<std::string, FilterRule>& per_type() const { return per_type_; }

 private:
  FilterRule fallback_;
  std::map<std::string, FilterRule> per_type_;
  std::vector<std::regex> fallback_patterns_;
  std::map<std::string, std::vector<std::regex>> compiled_;
};

// JSON rule file:
//   {"default": {<rule>}, "types": {"PER": {<rule>}, ...}}
// with <rule> fields reject_patterns, min_tokens, max_tokens, min_chars,
// max_chars, strip_parenthetical, punctuation ("keep" | "strip-edges" |
// "strip-all"). Type rules inherit unset fields from "default".
FilterRuleSet read_filter_rules(std::istream& in);
FilterRuleSet load_filter_rules_file(const std::string& path);

enum class RejectReason {
  kEmpty,
  kPunctuationOnly,
  kPattern,
  kTooShort,
  kTooLong,
  kTooFewTokens,
  kTooManyTokens,
};

std::string_view to_string(RejectReason reason);

struct CleanResult {
  std::optional<std::string> name;
  RejectReason reason = RejectReason::kEmpty;  // meaningful when !name
  std::string detail;                          // e.g. the pattern that fired

  explicit operator bool() const { return name.has_value(); }
};

// Applies, in order: whitespace normalization (collapse, trim), trailing
// parenthetical removal (repeated while the name ends in a balanced
// "(...)" group), the punctuation policy, rejection patterns, then the
// length bounds. The first rule that rejects is reported.
CleanResult clean_name(std::string_view raw, const std::string& type, const FilterRuleSet& rules);

// Splits a cleaned name into entry tokens: on spaces in word mode, into
// code points in character mode.
std::vector<std::string> tokenize_name(std::string_view name, TokenMode mode);

struct GroupCounters {
  size_t accepted = 0;
  size_t rejected = 0;
  size_t duplicates = 0;
};

// `name<TAB>type<TAB>reason` lines.
using RejectLog = std::function<void(std::string_view name, std::string_view type,
                                     std::string_view reason)>;

// Incremental gazetteer construction from typed name records. A record
// resolving to several types is cleaned and inserted once per type.
class GazetteerBuilder {
 public:
  GazetteerBuilder(const FilterRuleSet& rules, TokenMode mode, RejectLog reject_log = {});

  void add(const TypedNameRecord& record);

  const Gazetteer& gazetteer() const { return gazetteer_; }
  Gazetteer take() { return std::move(gazetteer_); }
  const std::map<GroupKey, GroupCounters>& counters() const { return counters_; }

 private:
  const FilterRuleSet& rules_;
  TokenMode mode_;
  RejectLog reject_log_;
  Gazetteer gazetteer_;
  std::map<GroupKey, GroupCounters> counters_;
};

Gazetteer build_gazetteer(const std::vector<TypedNameRecord>& records, const FilterRuleSet& rules,
                          TokenMode mode = TokenMode::kWord,
                          std::map<GroupKey, GroupCounters>* counters = nullptr,
                          const RejectLog& reject_log = {});

}  // namespace gazkit

#endif  // GAZKIT_NORMALIZE_H_
