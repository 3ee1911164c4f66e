// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "gazkit/normalize.h"

#include <fstream>
#include <istream>

#include <json.hpp>

#include "gazkit/error.h"
#include "gazkit/utf8.h"

namespace gazkit {

namespace {

using json = nlohmann::json;

std::u32string collapse_whitespace(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char32_t cp : s) {
    if (utf8::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return out;
}

void trim_trailing_spaces(std::u32string& s) {
  while (!s.empty() && s.back() == U' ') s.pop_back();
}

// Removes "(...)" groups from the end while the name ends with a balanced
// one.
void strip_trailing_parentheticals(std::u32string& s) {
  while (!s.empty() && s.back() == U')') {
    int depth = 0;
    size_t open = std::u32string::npos;
    for (size_t i = s.size(); i-- > 0;) {
      if (s[i] == U')') {
        ++depth;
      } else if (s[i] == U'(') {
        if (--depth == 0) {
          open = i;
          break;
        }
      }
    }
    if (open == std::u32string::npos) return;
    s.erase(open);
    trim_trailing_spaces(s);
  }
}

bool is_abbreviation(std::u32string_view token) {
  if (token.empty()) return false;
  if (token.find(U'.') != std::u32string_view::npos) return true;  // U.S, e.g
  if (!utf8::is_word_char(token.front())) return false;
  return token.size() == 1 || (token.size() <= 3 && utf8::is_upper(token.front()));
}

void strip_edges(std::u32string& s) {
  auto strippable = [](char32_t cp) { return utf8::is_punct(cp) || cp == U' '; };
  size_t begin = 0;
  while (begin < s.size() && strippable(s[begin])) ++begin;
  s.erase(0, begin);
  size_t end = s.size();
  while (end > 0 && strippable(s[end - 1])) --end;
  if (end < s.size() && s[end] == U'.') {
    size_t token_start = s.rfind(U' ', end == 0 ? 0 : end - 1);
    token_start = token_start == std::u32string::npos ? 0 : token_start + 1;
    if (end > token_start &&
        is_abbreviation(std::u32string_view(s).substr(token_start, end - token_start))) {
      ++end;
    }
  }
  s.erase(end);
}

void strip_interior(std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (utf8::is_punct(s[i])) {
      const bool left = i > 0 && utf8::is_word_char(s[i - 1]);
      const bool right = i + 1 < s.size() && utf8::is_word_char(s[i + 1]);
      if (!(left && right)) continue;
    }
    out.push_back(s[i]);
  }
  s = collapse_whitespace(out);
}

FilterRule parse_rule(const json& j, const FilterRule& base, const std::string& where) {
  FilterRule r = base;
  try {
    if (j.contains("reject_patterns")) {
      r.reject_patterns = j.at("reject_patterns").get<std::vector<std::string>>();
    }
    if (j.contains("min_tokens")) r.min_tokens = j.at("min_tokens").get<size_t>();
    if (j.contains("max_tokens")) r.max_tokens = j.at("max_tokens").get<size_t>();
    if (j.contains("min_chars")) r.min_chars = j.at("min_chars").get<size_t>();
    if (j.contains("max_chars")) r.max_chars = j.at("max_chars").get<size_t>();
    if (j.contains("strip_parenthetical")) {
      r.strip_parenthetical = j.at("strip_parenthetical").get<bool>();
    }
    if (j.contains("punctuation")) {
      r.punctuation = parse_punctuation_policy(j.at("punctuation").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ParseError("filter rules (" + where + "): " + e.what());
  }
  return r;
}

std::vector<std::regex> compile(const FilterRule& rule, const std::string& where) {
  if (rule.min_tokens > rule.max_tokens || rule.min_chars > rule.max_chars) {
    throw ParseError("filter rules (" + where + "): minimum exceeds maximum");
  }
  std::vector<std::regex> out;
  for (const auto& p : rule.reject_patterns) {
    try {
      out.emplace_back(p, std::regex::ECMAScript | std::regex::optimize);
    } catch (const std::regex_error& e) {
      throw ParseError("filter rules (" + where + "): bad pattern '" + p + "': " + e.what());
    }
  }
  return out;
}

}  // namespace

PunctuationPolicy parse_punctuation_policy(std::string_view text) {
  if (text == "keep") return PunctuationPolicy::kKeep;
  if (text == "strip-edges") return PunctuationPolicy::kStripEdges;
  if (text == "strip-all") return PunctuationPolicy::kStripAll;
  throw ParseError("unknown punctuation policy '" + std::string(text) + "'");
}

std::string_view to_string(PunctuationPolicy policy) {
  switch (policy) {
    case PunctuationPolicy::kKeep:
      return "keep";
    case PunctuationPolicy::kStripEdges:
      return "strip-edges";
    case PunctuationPolicy::kStripAll:
      return "strip-all";
  }
  return "keep";
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::kEmpty:
      return "empty";
    case RejectReason::kPunctuationOnly:
      return "punctuation-only";
    case RejectReason::kPattern:
      return "pattern";
    case RejectReason::kTooShort:
      return "too-short";
    case RejectReason::kTooLong:
      return "too-long";
    case RejectReason::kTooFewTokens:
      return "too-few-tokens";
    case RejectReason::kTooManyTokens:
      return "too-many-tokens";
  }
  return "empty";
}

FilterRuleSet::FilterRuleSet(FilterRule fallback, std::map<std::string, FilterRule> per_type)
    : fallback_(std::move(fallback)), per_type_(std::move(per_type)) {
  fallback_patterns_ = compile(fallback_, "default");
  for (const auto& [type, rule] : per_type_) compiled_[type] = compile(rule, type);
}

const FilterRule& FilterRuleSet::rule_for(const std::string& type) const {
  auto it = per_type_.find(type);
  return it == per_type_.end() ? fallback_ : it->second;
}

const std::vector<std::regex>& FilterRuleSet::patterns_for(const std::string& type) const {
  auto it = compiled_.find(type);
  return it == compiled_.end() ? fallback_patterns_ : it->second;
}

FilterRuleSet read_filter_rules(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("filter rules: ") + e.what());
  }
  FilterRule fallback;
  if (doc.contains("default")) fallback = parse_rule(doc["default"], fallback, "default");
  std::map<std::string, FilterRule> per_type;
  if (doc.contains("types")) {
    for (const auto& [type, j] : doc["types"].items()) {
      per_type[type] = parse_rule(j, fallback, type);
    }
  }
  return FilterRuleSet(std::move(fallback), std::move(per_type));
}

FilterRuleSet load_filter_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open filter rules: " + path);
  return read_filter_rules(in);
}

CleanResult clean_name(std::string_view raw, const std::string& type, const FilterRuleSet& rules) {
  const FilterRule& rule = rules.rule_for(type);
  auto reject = [](RejectReason reason, std::string detail = {}) {
    CleanResult r;
    r.reason = reason;
    r.detail = std::move(detail);
    return r;
  };

  std::u32string s = collapse_whitespace(utf8::decode(raw));
  if (rule.strip_parenthetical) strip_trailing_parentheticals(s);
  if (s.empty()) return reject(RejectReason::kEmpty);
  if (rule.punctuation == PunctuationPolicy::kStripAll) strip_interior(s);
  if (rule.punctuation != PunctuationPolicy::kKeep) strip_edges(s);
  if (s.empty()) return reject(RejectReason::kPunctuationOnly);
  bool has_word = false;
  for (char32_t cp : s) has_word = has_word || utf8::is_word_char(cp);
  if (!has_word) return reject(RejectReason::kPunctuationOnly);

  std::string name = utf8::encode(s);
  const auto& patterns = rules.patterns_for(type);
  for (size_t i = 0; i < patterns.size(); ++i) {
    if (std::regex_search(name, patterns[i])) {
      return reject(RejectReason::kPattern, rule.reject_patterns[i]);
    }
  }

  const size_t chars = s.size();
  if (chars < rule.min_chars) return reject(RejectReason::kTooShort);
  if (chars > rule.max_chars) return reject(RejectReason::kTooLong);
  const size_t tokens = static_cast<size_t>(std::count(s.begin(), s.end(), U' ')) + 1;
  if (tokens < rule.min_tokens) return reject(RejectReason::kTooFewTokens);
  if (tokens > rule.max_tokens) return reject(RejectReason::kTooManyTokens);

  CleanResult ok;
  ok.name = std::move(name);
  return ok;
}

std::vector<std::string> tokenize_name(std::string_view name, TokenMode mode) {
  std::vector<std::string> out;
  if (mode == TokenMode::kWord) {
    size_t start = 0;
    while (start <= name.size()) {
      size_t sp = name.find(' ', start);
      if (sp == std::string_view::npos) sp = name.size();
      if (sp > start) out.emplace_back(name.substr(start, sp - start));
      start = sp + 1;
    }
    return out;
  }
  for (char32_t cp : utf8::decode(name)) {
    if (utf8::is_space(cp)) continue;
    std::string ch;
    utf8::append(ch, cp);
    out.push_back(std::move(ch));
  }
  return out;
}

GazetteerBuilder::GazetteerBuilder(const FilterRuleSet& rules, TokenMode mode,
                                   RejectLog reject_log)
    : rules_(rules), mode_(mode), reject_log_(std::move(reject_log)) {}

void GazetteerBuilder::add(const TypedNameRecord& record) {
  const auto& r = record.record;
  for (const auto& type : record.types) {
    GroupKey key{r.language, type, r.kind};
    auto& counters = counters_[key];
    auto cleaned = clean_name(r.text, type, rules_);
    if (!cleaned) {
      ++counters.rejected;
      if (reject_log_) {
        std::string reason(to_string(cleaned.reason));
        if (!cleaned.detail.empty()) reason += ":" + cleaned.detail;
        reject_log_(r.text, type, reason);
      }
      continue;
    }
    if (gazetteer_.insert(key, tokenize_name(*cleaned.name, mode_))) {
      ++counters.accepted;
    } else {
      ++counters.duplicates;
    }
  }
}

Gazetteer build_gazetteer(const std::vector<TypedNameRecord>& records, const FilterRuleSet& rules,
                          TokenMode mode, std::map<GroupKey, GroupCounters>* counters,
                          const RejectLog& reject_log) {
  GazetteerBuilder builder(rules, mode, reject_log);
  for (const auto& r : records) builder.add(r);
  if (counters) *counters = builder.counters();
  return builder.take();
}

}  // namespace gazkit
