// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gazkit/error.h"
#include "gazkit/normalize.h"

#ifndef GAZKIT_CONFIG_DIR
#define GAZKIT_CONFIG_DIR "config"
#endif

namespace gazkit {
namespace {

FilterRuleSet defaults() { return FilterRuleSet(); }

TEST(CleanName, Parenthetical) {
  auto r = clean_name("Paris (mythology)", "GPE", defaults());
  ASSERT_TRUE(r);
  EXPECT_EQ(*r.name, "Paris");
  EXPECT_EQ(*clean_name("Paris (a) (b)", "GPE", defaults()).name, "Paris");
  EXPECT_EQ(*clean_name("Guinea-Bissau (country)", "GPE", defaults()).name, "Guinea-Bissau");
}

TEST(CleanName, TooShort) {
  auto r = clean_name("X", "PER", defaults());
  EXPECT_FALSE(r);
  EXPECT_EQ(r.reason, RejectReason::kTooShort);
}

TEST(CleanName, Bounds) {
  FilterRule rule;
  rule.max_tokens = 2;
  rule.max_chars = 12;
  FilterRuleSet rules(rule, {});
  EXPECT_EQ(clean_name("a b c", "ORG", rules).reason, RejectReason::kTooManyTokens);
  EXPECT_EQ(clean_name("abcdefghijklm", "ORG", rules).reason, RejectReason::kTooLong);
  FilterRule two;
  two.min_tokens = 2;
  EXPECT_EQ(clean_name("Madonna", "PER", FilterRuleSet(two, {})).reason,
            RejectReason::kTooFewTokens);
  EXPECT_THROW(FilterRuleSet(FilterRule{{}, 3, 2}, {}), ParseError);
}

TEST(CleanName, ShippedPersonPattern) {
  auto rules = load_filter_rules_file(GAZKIT_CONFIG_DIR "/filter_rules.json");
  auto r = clean_name("Francis of Assisi", "PER", rules);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.reason, RejectReason::kPattern);
  EXPECT_TRUE(clean_name("Francis Bacon", "PER", rules));
  // the pattern is PER-only
  EXPECT_TRUE(clean_name("Bank of America", "ORG", rules));
}

TEST(CleanName, Punctuation) {
  auto rules = defaults();
  EXPECT_EQ(*clean_name("  \"Hong   Kong\"  ", "GPE", rules).name, "Hong Kong");
  EXPECT_EQ(*clean_name("Washington, D.C.", "GPE", rules).name, "Washington, D.C.");
  EXPECT_EQ(*clean_name("Acme Inc.", "ORG", rules).name, "Acme Inc.");
  EXPECT_EQ(*clean_name("Hello!", "ORG", rules).name, "Hello");
  EXPECT_EQ(clean_name("?!...", "ORG", rules).reason, RejectReason::kPunctuationOnly);
  EXPECT_EQ(clean_name("   ", "ORG", rules).reason, RejectReason::kEmpty);

  FilterRule all;
  all.punctuation = PunctuationPolicy::kStripAll;
  FilterRuleSet strip_all(all, {});
  EXPECT_EQ(*clean_name("Rock 'n' Roll Hall", "ORG", strip_all).name, "Rock n Roll Hall");
  EXPECT_EQ(*clean_name("Coca-Cola", "ORG", strip_all).name, "Coca-Cola");

  FilterRule keep;
  keep.punctuation = PunctuationPolicy::kKeep;
  EXPECT_EQ(*clean_name("\"Yes\"", "ORG", FilterRuleSet(keep, {})).name, "\"Yes\"");
}

TEST(CleanName, IdempotentOnRandomInput) {
  std::mt19937_64 rng(17);
  const std::vector<std::string> pieces{"A",  "bc", " ",   "  ", "(", ")", ".", ",", "-", "'",
                                        "Д", "é",  "St.", "x",  "!", "\t", "U.S", "Q1"};
  FilterRule all;
  all.punctuation = PunctuationPolicy::kStripAll;
  FilterRule keep;
  keep.punctuation = PunctuationPolicy::kKeep;
  FilterRule noparen;
  noparen.strip_parenthetical = false;
  std::vector<FilterRuleSet> sets{defaults(), FilterRuleSet(all, {}), FilterRuleSet(keep, {}),
                                  FilterRuleSet(noparen, {})};
  for (int i = 0; i < 5000; ++i) {
    std::string raw;
    size_t n = 1 + rng() % 10;
    for (size_t k = 0; k < n; ++k) raw += pieces[rng() % pieces.size()];
    for (const auto& rules : sets) {
      auto once = clean_name(raw, "ORG", rules);
      if (!once) continue;
      auto twice = clean_name(*once.name, "ORG", rules);
      ASSERT_TRUE(twice) << "'" << raw << "' -> '" << *once.name << "'";
      EXPECT_EQ(*twice.name, *once.name) << "'" << raw << "'";
    }
  }
}

TEST(FilterRules, JsonInheritsDefault) {
  std::istringstream in(R"({"default":{"min_chars":3,"reject_patterns":["^x"]},
                            "types":{"PER":{"max_tokens":2}}})");
  auto rules = read_filter_rules(in);
  EXPECT_EQ(rules.rule_for("PER").min_chars, 3u);
  EXPECT_EQ(rules.rule_for("PER").max_tokens, 2u);
  EXPECT_EQ(rules.rule_for("ORG").max_tokens, 10u);
  EXPECT_EQ(clean_name("xyz", "PER", rules).reason, RejectReason::kPattern);
  std::istringstream bad(R"({"default":{"reject_patterns":["("]}})");
  EXPECT_THROW(read_filter_rules(bad), ParseError);
  std::istringstream bad_policy(R"({"default":{"punctuation":"sometimes"}})");
  EXPECT_THROW(read_filter_rules(bad_policy), ParseError);
}

TypedNameRecord rec(std::string id, std::string text, std::set<std::string> types,
                    EntrySource kind = EntrySource::kCanonical) {
  return TypedNameRecord{{std::move(id), kind, std::move(text), "en"}, std::move(types)};
}

TEST(BuildGazetteer, Dedup) {
  std::map<GroupKey, GroupCounters> c;
  auto g = build_gazetteer({rec("Q1", "Paris", {"GPE"}), rec("Q2", "Paris (France)", {"GPE"})},
                           defaults(), TokenMode::kWord, &c);
  EXPECT_EQ(g.size(), 1u);
  auto& k = c.at(GroupKey{"en", "GPE", EntrySource::kCanonical});
  EXPECT_EQ(k.accepted, 1u);
  EXPECT_EQ(k.duplicates, 1u);
}

TEST(BuildGazetteer, MultiTypeRecord) {
  auto g = build_gazetteer({rec("Q188740", "Museum of Modern Art", {"ORG", "FAC"})}, defaults());
  EXPECT_NE(g.group(GroupKey{"en", "ORG", EntrySource::kCanonical}), nullptr);
  EXPECT_NE(g.group(GroupKey{"en", "FAC", EntrySource::kCanonical}), nullptr);
  EXPECT_EQ(g.size(), 2u);
}

TEST(BuildGazetteer, Empty) {
  std::map<GroupKey, GroupCounters> c{{GroupKey{}, GroupCounters{1, 1, 1}}};
  auto g = build_gazetteer({}, defaults(), TokenMode::kWord, &c);
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(c.empty());
}

TEST(BuildGazetteer, RejectLogAndNoRejectedNames) {
  std::vector<std::string> log;
  auto rules = load_filter_rules_file(GAZKIT_CONFIG_DIR "/filter_rules.json");
  std::vector<TypedNameRecord> in{rec("Q1", "Francis of Assisi", {"PER"}),
                                  rec("Q2", "X", {"PER"}), rec("Q3", "Ada Lovelace", {"PER"})};
  auto g = build_gazetteer(in, rules, TokenMode::kWord, nullptr,
                           [&](std::string_view n, std::string_view t, std::string_view r) {
                             log.push_back(std::string(n) + "\t" + std::string(t) + "\t" +
                                           std::string(r));
                           });
  EXPECT_EQ(g.size(), 1u);
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log[1], "X\tPER\ttoo-short");
  for (const auto& [key, group] : g.groups()) {
    for (const auto& tokens : group.entries()) {
      std::string name;
      for (const auto& t : tokens) name += (name.empty() ? "" : " ") + t;
      EXPECT_TRUE(clean_name(name, key.type, rules));
    }
  }
}

TEST(BuildGazetteer, OrderInvariantGroupSizes) {
  std::mt19937_64 rng(2);
  std::vector<TypedNameRecord> in;
  for (int i = 0; i < 300; ++i) {
    in.push_back(rec("Q" + std::to_string(i), "Name " + std::to_string(rng() % 80),
                     {rng() % 2 ? "PER" : "ORG"}, rng() % 2 ? EntrySource::kAlias
                                                            : EntrySource::kCanonical));
  }
  auto a = build_gazetteer(in, defaults());
  std::shuffle(in.begin(), in.end(), rng);
  auto b = build_gazetteer(in, defaults());
  ASSERT_EQ(a.groups().size(), b.groups().size());
  for (const auto& [k, grp] : a.groups()) EXPECT_EQ(grp.size(), b.group(k)->size());
}

TEST(TokenizeName, Modes) {
  EXPECT_EQ(tokenize_name("Hong Kong", TokenMode::kWord),
            (std::vector<std::string>{"Hong", "Kong"}));
  EXPECT_EQ(tokenize_name("香港", TokenMode::kCharacter), (std::vector<std::string>{"香", "港"}));
}

}  // namespace
}  // namespace gazkit
