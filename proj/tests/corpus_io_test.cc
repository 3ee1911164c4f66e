// Copyright 2026 The Gazkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "gazkit/corpus_io.h"
#include "gazkit/error.h"
#include "gazkit/features.h"
#include "gazkit/matcher.h"
#include "gazkit/tags.h"

namespace gazkit {
namespace {

const TagRegistry& reg() { return default_registry(); }

Document parse(const std::string& text, std::vector<Diagnostic>* w = nullptr,
               TokenMode mode = TokenMode::kWord) {
  std::istringstream in(text);
  return read_bio(in, mode, reg(), w);
}

TEST(ReadBio, Minimal) {
  auto d = parse("Jack B-PER\n\n");
  ASSERT_EQ(d.sentences.size(), 1u);
  ASSERT_EQ(d.sentences[0].size(), 1u);
  EXPECT_EQ(d.sentences[0].tokens[0].gold, BioLabel::begin("PER"));
}

TEST(ReadBio, AirportSentence) {
  std::string text;
  for (const auto& w : fixtures::airport_words()) text += w + "\tO\n";
  auto d = parse(text);
  ASSERT_EQ(d.sentences.size(), 1u);
  EXPECT_EQ(d.sentences[0].size(), 13u);
}

TEST(ReadBio, BlankRunsCollapse) {
  auto one = parse("a O\nb O\n\nc O\n");
  auto two = parse("\n\na O\nb O\n\n\n \t\nc O\n\n");
  EXPECT_EQ(one, two);
  EXPECT_EQ(two.sentences.size(), 2u);
}

TEST(ReadBio, ErrorsCarryLineNumber) {
  try {
    parse("a O\nb\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_THROW(parse("a B-NOPE\n"), ParseError);
}

TEST(ReadBio, InvalidSequenceWarnsButLoads) {
  std::vector<Diagnostic> w;
  auto d = parse("a O\nb I-PER\n", &w);
  EXPECT_EQ(d.sentences.size(), 1u);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].line, 2u);
}

TEST(ReadBio, CharacterModeWantsSingleCodePoints) {
  auto d = parse("香 B-GPE\n港 I-GPE\n", nullptr, TokenMode::kCharacter);
  EXPECT_EQ(d.sentences[0].size(), 2u);
  EXPECT_THROW(parse("香港 B-GPE\n", nullptr, TokenMode::kCharacter), ParseError);
}

TEST(WriteFeatures, AirportHongColumn) {
  auto g = fixtures::airport_gazetteer();
  auto ann = Annotator::build(reg(), g, "en", TokenMode::kWord, CasePolicy::kSensitive);
  Document doc;
  doc.sentences.push_back(fixtures::airport_sentence());
  std::vector<FeatureColumns> cols{encode_one_hot(ann.annotate(doc.sentences[0], true), reg())};
  std::ostringstream out;
  write_features(doc, cols, reg(), out);
  std::istringstream lines(out.str());
  std::string line;
  for (int i = 0; i < 4; ++i) std::getline(lines, line);
  // surface, 17 feature columns, gold
  std::vector<std::string> f;
  std::stringstream ls(line);
  std::string field;
  while (std::getline(ls, field, '\t')) f.push_back(field);
  ASSERT_EQ(f.size(), 19u);
  EXPECT_EQ(f[0], "Hong");
  auto col = [&](const char* code) { return f[1 + *reg().index_of(code)]; };
  EXPECT_EQ(col("GPE"), "B-GPE");
  EXPECT_EQ(col("PER"), "O");
  EXPECT_EQ(col("LOC"), "O");
  EXPECT_EQ(col("ORG"), "O");
  EXPECT_EQ(f.back(), "O");
}

TEST(WriteFeatures, EmptyAndMismatch) {
  std::ostringstream out;
  write_features(Document{}, {}, reg(), out);
  EXPECT_EQ(out.str(), "");
  Document doc;
  doc.sentences.push_back(fixtures::make_sentence({"a", "b"}));
  FeatureLayers layers;
  layers.rows.assign(reg().size(), std::vector<BioKind>(3, BioKind::kO));
  std::vector<FeatureColumns> cols{encode_one_hot(layers, reg())};
  EXPECT_THROW(write_features(doc, cols, reg(), out), DataError);
}

// Random small documents survive write_features -> read_bio.
TEST(WriteFeatures, RoundTripProperty) {
  std::mt19937_64 rng(7);
  const auto codes = reg().codes();
  for (int iter = 0; iter < 200; ++iter) {
    Document doc;
    size_t ns = rng() % 4;
    for (size_t s = 0; s < ns; ++s) {
      Sentence sent;
      size_t nt = 1 + rng() % 6;
      std::string prev;
      for (size_t t = 0; t < nt; ++t) {
        BioLabel gold;
        int r = rng() % 3;
        if (r == 1) gold = BioLabel::begin(codes[rng() % codes.size()]);
        if (r == 2 && !prev.empty()) gold = BioLabel::inside(prev);
        prev = gold.type;
        sent.tokens.push_back(Token{fixtures::word(rng, 9), gold});
      }
      doc.sentences.push_back(sent);
    }
    std::vector<FeatureColumns> cols;
    for (const auto& s : doc.sentences) {
      FeatureLayers l;
      l.rows.assign(reg().size(), std::vector<BioKind>(s.size(), BioKind::kO));
      for (auto& row : l.rows) {
        for (auto& k : row) k = static_cast<BioKind>(rng() % 3);
      }
      cols.push_back(encode_one_hot(l, reg()));
    }
    std::stringstream ss;
    write_features(doc, cols, reg(), ss);
    std::ostringstream again;
    write_features(doc, cols, reg(), again);
    EXPECT_EQ(ss.str(), again.str());
    EXPECT_EQ(read_bio(ss, TokenMode::kWord, reg()), doc);
  }
}

TEST(WriteBio, RoundTrip) {
  auto d = parse("a O\nb B-PER\nc I-PER\n\nd B-LOC\n");
  std::stringstream ss;
  write_bio(d, ss);
  EXPECT_EQ(read_bio(ss, TokenMode::kWord, reg()), d);
}

TEST(GazetteerFile, Examples) {
  std::istringstream a("Lantau Island\n");
  auto r = read_gazetteer_file(a, "LOC", EntrySource::kCanonical, "en");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].tokens, (std::vector<std::string>{"Lantau", "Island"}));

  std::istringstream b("JHU\nJHU\n");
  r = read_gazetteer_file(b, "ORG", EntrySource::kAlias, "en");
  EXPECT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.duplicates, 1u);

  std::istringstream c("Hong Kong Government\n\n");
  r = read_gazetteer_file(c, "GPE", EntrySource::kCanonical, "en");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].tokens.size(), 3u);
  EXPECT_EQ(r.empty_lines, 1u);
}

TEST(GazetteerFile, Names) {
  GroupKey k{"en", "MIL_G", EntrySource::kInflected};
  EXPECT_EQ(gazetteer_file_name(k), "en_MIL_G_inflected.txt");
  GroupKey back;
  ASSERT_TRUE(parse_gazetteer_file_name("en_MIL_G_inflected.txt", &back));
  EXPECT_EQ(back, k);
  EXPECT_FALSE(parse_gazetteer_file_name("README.md", &back));
}

}  // namespace
}  // namespace gazkit
