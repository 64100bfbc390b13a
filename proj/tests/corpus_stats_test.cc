/* Copyright 2026 The trikit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include "fixtures.h"
#include "trikit/corpus_stats.h"

namespace trikit {
namespace {

CorpusEntry Entry(int triples, std::vector<std::string> texts, std::string table = "") {
  CorpusEntry e;
  for (int i = 0; i < triples; ++i) e.tripleset.triples.push_back({"s", "p" + std::to_string(i), "o"});
  for (auto& t : texts) e.realizations.push_back({t, std::nullopt, ""});
  e.table_id = std::move(table);
  return e;
}

void ExpectSame(const CorpusStats& a, const CorpusStats& b) {
  EXPECT_EQ(a.pair_count, b.pair_count);
  EXPECT_EQ(a.entry_count, b.entry_count);
  EXPECT_EQ(a.unique_predicates, b.unique_predicates);
  EXPECT_EQ(a.unique_triples, b.unique_triples);
  EXPECT_EQ(a.triples_min, b.triples_min);
  EXPECT_DOUBLE_EQ(a.triples_median, b.triples_median);
  EXPECT_EQ(a.triples_max, b.triples_max);
  EXPECT_EQ(a.vocab_size, b.vocab_size);
  EXPECT_DOUBLE_EQ(a.words_per_sr, b.words_per_sr);
  EXPECT_DOUBLE_EQ(a.sentences_per_sr, b.sentences_per_sr);
  EXPECT_EQ(a.table_count, b.table_count);
}

TEST(TokenizeTest, WordsAndSentences) {
  const std::string greece = "Greece held its last Summer Olympics in 2004.";
  EXPECT_EQ(CountWords(greece), 8);
  EXPECT_EQ(CountSentences(greece), 1);
  EXPECT_EQ(CountSentences("One. Two! Three? four"), 4);
  EXPECT_EQ(CountSentences("It scored 58.8% of the vote."), 1);
  EXPECT_EQ(CountSentences(""), 0);
  EXPECT_EQ(CountSentences("   "), 0);
  EXPECT_EQ(CountSentences("..."), 1);
  EXPECT_EQ(TokenizeText("Kar-wai's"), (std::vector<std::string>{"Kar", "-", "wai", "'", "s"}));
}

TEST(StatsTest, EmptyCorpus) {
  const CorpusStats s = ComputeStats({});
  ExpectSame(s, CorpusStats{});
}

TEST(StatsTest, SingleGreeceEntry) {
  const std::vector<CorpusEntry> corpus = {
      Entry(1, {"Greece held its last Summer Olympics in 2004."})};
  const CorpusStats s = ComputeStats(corpus);
  EXPECT_EQ(s.triples_min, 1);
  EXPECT_DOUBLE_EQ(s.triples_median, 1.0);
  EXPECT_EQ(s.triples_max, 1);
  EXPECT_DOUBLE_EQ(s.sentences_per_sr, 1.0);
  EXPECT_DOUBLE_EQ(s.words_per_sr, 8.0);
  EXPECT_EQ(s.vocab_size, 8);
  EXPECT_EQ(s.pair_count, 1);
}

TEST(StatsTest, MedianOfEvenCount) {
  const std::vector<CorpusEntry> corpus = {Entry(1, {"a"}), Entry(2, {"b"}), Entry(5, {"c"}),
                                           Entry(6, {"d"})};
  const CorpusStats s = ComputeStats(corpus);
  EXPECT_DOUBLE_EQ(s.triples_median, 3.5);
  EXPECT_EQ(s.unique_predicates, 6);
  EXPECT_EQ(s.unique_triples, 6);
}

TEST(StatsTest, VocabularyIsCaseFolded) {
  const std::vector<CorpusEntry> corpus = {Entry(1, {"The cat.", "the CAT, the Cat!"}, "t1"),
                                           Entry(2, {"A dog"}, "t1")};
  const CorpusStats s = ComputeStats(corpus);
  EXPECT_EQ(s.vocab_size, 4);
  EXPECT_EQ(s.table_count, 1);
  EXPECT_EQ(s.pair_count, 3);
  EXPECT_EQ(s.entry_count, 2);
  EXPECT_DOUBLE_EQ(s.words_per_sr, 8.0 / 3.0);
}

TEST(StatsTest, PartitionsByProvenance) {
  std::vector<CorpusEntry> corpus = {Entry(1, {"x y"}), Entry(2, {"z"}), Entry(3, {"w"})};
  corpus[0].tripleset.provenance = Provenance::kE2e;
  corpus[1].tripleset.provenance = Provenance::kWebNlg;
  corpus[2].tripleset.provenance = Provenance::kE2e;
  const auto parts = ComputeStatsByPartition(corpus);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at("e2e").entry_count, 2);
  EXPECT_EQ(parts.at("webnlg").triples_max, 2);
  const std::string table = FormatStatsTable(parts);
  EXPECT_NE(table.find("e2e"), std::string::npos);
  EXPECT_NE(table.find("words/SR"), std::string::npos);
}

// Merging accumulators in any grouping gives the statistics of the whole.
TEST(StatsProperty, MergeIsOrderIndependent) {
  Rng rng(31);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<CorpusEntry> corpus;
    const int n = static_cast<int>(rng.UniformInt(0, 60));
    for (int i = 0; i < n; ++i) corpus.push_back(testing::RandomEntry(rng, i));
    const CorpusStats whole = ComputeStats(corpus);
    const size_t cut1 = n == 0 ? 0 : static_cast<size_t>(rng.UniformInt(0, n));
    const size_t cut2 = n == 0 ? 0 : static_cast<size_t>(rng.UniformInt(cut1, n));
    StatsAccumulator a, b, c;
    for (size_t i = 0; i < corpus.size(); ++i) {
      (i < cut1 ? a : i < cut2 ? b : c).Add(corpus[i]);
    }
    StatsAccumulator left = a;  // (a + b) + c
    left.Merge(b);
    left.Merge(c);
    StatsAccumulator right = c;  // c + (b + a)
    StatsAccumulator ba = b;
    ba.Merge(a);
    right.Merge(ba);
    ExpectSame(left.Finish(), whole);
    ExpectSame(right.Finish(), whole);
    const CorpusStats s = whole;
    EXPECT_LE(s.triples_min, s.triples_median);
    EXPECT_LE(s.triples_median, s.triples_max);
  }
}

}  // namespace
}  // namespace trikit
