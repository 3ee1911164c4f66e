// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "gazkit/bio.h"
#include "gazkit/corpus.h"
#include "gazkit/error.h"
#include "gazkit/gazetteer.h"
#include "gazkit/tags.h"

namespace gazkit {
namespace {

TEST(TagRegistry, DefaultHasSeventeenRowsFourCore) {
  const auto& reg = default_registry();
  EXPECT_EQ(reg.size(), 17u);
  std::vector<std::string> core;
  for (const auto& t : reg.types()) {
    if (t.core) core.push_back(t.code);
  }
  EXPECT_EQ(core, (std::vector<std::string>{"PER", "ORG", "GPE", "LOC"}));
  EXPECT_EQ(reg.codes(),
            (std::vector<std::string>{"PER", "ORG", "COMM", "POL", "GPE", "LOC", "FAC", "GOVT",
                                      "AIR", "EVNT", "VEH", "COMP", "MIL", "MIL_G", "MIL_N",
                                      "CHEM", "MISC"}));
}

TEST(TagRegistry, Parents) {
  const auto& reg = default_registry();
  std::map<std::string, std::string> parents;
  for (const auto& t : reg.types()) {
    if (t.parent) parents[t.code] = *t.parent;
  }
  std::map<std::string, std::string> want = {{"COMM", "ORG"}, {"POL", "ORG"},   {"GOVT", "FAC"},
                                             {"AIR", "FAC"},  {"MIL_G", "MIL"}, {"MIL_N", "MIL"}};
  EXPECT_EQ(parents, want);
}

TEST(TagRegistry, RoundTripKeepsOrder) {
  std::stringstream ss;
  write_registry(default_registry(), ss);
  EXPECT_EQ(read_registry(ss), default_registry());
}

TEST(TagRegistry, RejectsDuplicatesAndDanglingParents) {
  EXPECT_THROW(TagRegistry({{"A", true, {}, ""}, {"A", false, {}, ""}}), Error);
  EXPECT_THROW(TagRegistry({{"A", true, std::string("B"), ""}}), Error);
  std::stringstream bad("PER\tcore\t-\tperson\nX\tmaybe\t-\tbroken\n");
  EXPECT_THROW(read_registry(bad), ParseError);
}

TEST(BioLabel, ParsesExamples) {
  EXPECT_EQ(parse_bio_label("O"), BioLabel::outside());
  EXPECT_EQ(parse_bio_label("B-GPE"), BioLabel::begin("GPE"));
  EXPECT_EQ(parse_bio_label("I-LOC"), BioLabel::inside("LOC"));
}

TEST(BioLabel, RejectsMalformed) {
  const auto& reg = default_registry();
  for (const char* bad : {"", "B-", "X-PER", "B_PER", "b-PER", "O-PER", "B-PER "}) {
    EXPECT_THROW(parse_bio_label(bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_bio_label("B-FOO", &reg), ParseError);
  try {
    parse_bio_label("X-PER");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("X-PER"), std::string::npos);
  }
}

TEST(BioLabel, ParseRenderBijection) {
  const auto& reg = default_registry();
  std::vector<std::string> all{"O"};
  for (const auto& c : reg.codes()) {
    all.push_back("B-" + c);
    all.push_back("I-" + c);
  }
  std::set<BioLabel, bool (*)(const BioLabel&, const BioLabel&)> seen(
      [](const BioLabel& a, const BioLabel& b) { return a.render() < b.render(); });
  for (const auto& s : all) {
    auto l = parse_bio_label(s, &reg);
    EXPECT_EQ(l.render(), s);
    EXPECT_TRUE(seen.insert(l).second);
  }
}

TEST(BioSequence, Examples) {
  auto seq = [](std::vector<std::string> v) {
    std::vector<BioLabel> out;
    for (const auto& s : v) out.push_back(parse_bio_label(s));
    return out;
  };
  EXPECT_TRUE(validate_bio_sequence(seq({"O", "B-PER", "I-PER"})).empty());
  auto v = validate_bio_sequence(seq({"O", "I-PER"}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].index, 1u);
  v = validate_bio_sequence(seq({"B-PER", "I-ORG"}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].index, 1u);
  v = validate_bio_sequence(seq({"I-PER"}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].index, 0u);
}

// Every ordered pair checked against the transition table written out by
// hand: I-t is allowed only after B-t or I-t.
TEST(BioSequence, AllPairsMatchTransitionTable) {
  std::vector<std::string> labels{"O", "B-PER", "I-PER", "B-ORG", "I-ORG"};
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      bool ok = true;
      if (b[0] == 'I') ok = a != "O" && a.substr(2) == b.substr(2);
      bool first_ok = a[0] != 'I';
      std::vector<BioLabel> seq{parse_bio_label(a), parse_bio_label(b)};
      auto v = validate_bio_sequence(seq);
      size_t expect = (ok ? 0 : 1) + (first_ok ? 0 : 1);
      EXPECT_EQ(v.size(), expect) << a << " " << b;
    }
  }
}

TEST(Chunks, Lenient) {
  std::vector<BioLabel> l{parse_bio_label("I-PER"), parse_bio_label("I-PER"),
                          parse_bio_label("O"),     parse_bio_label("B-ORG"),
                          parse_bio_label("I-LOC"), parse_bio_label("B-GPE")};
  auto c = chunk_labels(l);
  std::vector<Chunk> want{{0, 2, "PER"}, {3, 4, "ORG"}, {4, 5, "LOC"}, {5, 6, "GPE"}};
  EXPECT_EQ(c, want);
}

TEST(Corpus, SurfaceJoin) {
  EXPECT_EQ(join_surface({"Hong", "Kong"}, TokenMode::kWord), "Hong Kong");
  EXPECT_EQ(join_surface({"香", "港"}, TokenMode::kCharacter), "香港");
  EXPECT_EQ(parse_token_mode("char"), TokenMode::kCharacter);
  EXPECT_THROW(parse_token_mode("bytes"), ParseError);
}

TEST(Gazetteer, GroupsAndDedup) {
  Gazetteer g;
  GazetteerEntry e{{"JHU"}, "ORG", EntrySource::kAlias, "en"};
  EXPECT_TRUE(g.insert(e));
  EXPECT_FALSE(g.insert(e));
  e.source = EntrySource::kCanonical;
  EXPECT_TRUE(g.insert(e));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.select("ORG", {}, {EntrySource::kAlias}).size(), 1u);
  EXPECT_THROW(g.insert(GazetteerEntry{{}, "ORG", EntrySource::kAlias, "en"}), DataError);
  EXPECT_THROW(g.insert(GazetteerEntry{{"x"}, "ORG", EntrySource::kAlias, "EN"}), DataError);
}

}  // namespace
}  // namespace gazkit
