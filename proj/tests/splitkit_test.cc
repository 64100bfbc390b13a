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

#include "oracles.h"
#include "trikit/error.h"
#include "trikit/splitkit.h"

namespace trikit {
namespace {

TableSignature Sig(std::string id, std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  return {std::move(id), std::move(tokens)};
}

TEST(JaccardTest, Examples) {
  EXPECT_DOUBLE_EQ(Jaccard(Sig("a", {"x", "y"}), Sig("b", {"x", "y"})), 1.0);
  EXPECT_DOUBLE_EQ(Jaccard(Sig("a", {"x"}), Sig("b", {"y"})), 0.0);
  EXPECT_DOUBLE_EQ(Jaccard(Sig("a", {"a", "b", "c"}), Sig("b", {"b", "c", "d"})), 0.5);
  EXPECT_DOUBLE_EQ(Jaccard(Sig("a", {}), Sig("b", {})), 0.0);
}

TEST(SignatureTest, TokensFromTitleAndHeaders) {
  const std::vector<std::string> headers = {"Team", "Home Stadium", "City/Town"};
  const TableSignature s = MakeSignature("t", "NFL Europe, 1998", headers);
  const std::vector<std::string> want = {"1998", "city", "europe", "home",
                                         "nfl",  "stadium", "team", "town"};
  EXPECT_EQ(s.tokens, want);
}

TEST(SplitTest, IdenticalTablesCollapse) {
  std::vector<TableSignature> sigs = {Sig("a", {"x", "y"}), Sig("b", {"x", "y"}),
                                      Sig("c", {"x", "y"})};
  SplitConfig cfg;
  cfg.test_seed_fraction = 0.3;
  cfg.dev_seed_fraction = 0.3;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    cfg.seed = seed;
    const auto split = ComputeSplit(sigs, cfg);
    EXPECT_EQ(split.at("a"), Split::kTest);
    EXPECT_EQ(split.at("b"), Split::kTest);
    EXPECT_EQ(split.at("c"), Split::kTest);
    try {
      SplitTables(sigs, cfg);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegenerateSplit);
    }
  }
}

TEST(SplitTest, DisjointTablesMatchSeedSizes) {
  std::vector<TableSignature> sigs;
  for (int i = 0; i < 20; ++i) sigs.push_back(Sig("t" + std::to_string(i), {"w" + std::to_string(i)}));
  SplitConfig cfg;
  cfg.test_seed_fraction = 0.1;
  cfg.dev_seed_fraction = 0.15;
  cfg.seed = 3;
  const auto split = SplitTables(sigs, cfg);
  std::map<Split, int> counts;
  for (const auto& [id, s] : split) ++counts[s];
  EXPECT_EQ(counts[Split::kTest], 2);
  EXPECT_EQ(counts[Split::kDev], 3);
  EXPECT_EQ(counts[Split::kTrain], 15);
}

TEST(SplitTest, ChainIsPulledTogether) {
  // A~B and B~C exceed the threshold; A and C alone do not.
  std::vector<TableSignature> sigs = {
      Sig("A", {"a", "b", "c", "d"}), Sig("B", {"a", "b", "c", "e"}),
      Sig("C", {"b", "c", "e", "f"}), Sig("D", {"p"}), Sig("E", {"q"}), Sig("F", {"r"})};
  ASSERT_GT(Jaccard(sigs[0], sigs[1]), 0.5);
  ASSERT_GT(Jaccard(sigs[1], sigs[2]), 0.5);
  ASSERT_LE(Jaccard(sigs[0], sigs[2]), 0.5);
  SplitConfig cfg;
  cfg.test_seed_fraction = 0.17;
  cfg.dev_seed_fraction = 0.17;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    cfg.seed = seed;
    const auto split = ComputeSplit(sigs, cfg);
    EXPECT_EQ(split.at("A"), split.at("B"));
    EXPECT_EQ(split.at("B"), split.at("C"));
    EXPECT_TRUE(testing::BruteForceLeaks(sigs, split, 0.5).empty());
  }
}

TEST(SplitTest, ConfigAndInputValidation) {
  SplitConfig cfg;
  cfg.threshold = 1.0;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg = SplitConfig();
  cfg.test_seed_fraction = 0.6;
  cfg.dev_seed_fraction = 0.5;
  EXPECT_THROW(cfg.Validate(), Error);
  std::vector<TableSignature> two = {Sig("a", {"x"}), Sig("b", {"y"})};
  EXPECT_THROW(ComputeSplit(two, SplitConfig()), Error);
  std::vector<TableSignature> dup = {Sig("a", {"x"}), Sig("a", {"y"}), Sig("c", {"z"})};
  EXPECT_THROW(ComputeSplit(dup, SplitConfig()), Error);
}

TEST(SplitProperty, NoLeakAcrossSplits) {
  Rng rng(99);
  for (int corpus = 0; corpus < 100; ++corpus) {
    const auto sigs = testing::RandomSignatures(rng, static_cast<int>(rng.UniformInt(3, 200)));
    SplitConfig cfg;
    cfg.seed = rng.Next();
    const auto split = ComputeSplit(sigs, cfg);
    ASSERT_EQ(split.size(), sigs.size());
    const auto leaks = testing::BruteForceLeaks(sigs, split, cfg.threshold);
    ASSERT_TRUE(leaks.empty()) << leaks[0].a << " ~ " << leaks[0].b;
    EXPECT_EQ(ComputeSplit(sigs, cfg), split);
  }
}

TEST(SplitProperty, InputOrderDoesNotMatter) {
  Rng rng(5);
  auto sigs = testing::RandomSignatures(rng, 60);
  SplitConfig cfg;
  cfg.seed = 12;
  const auto a = ComputeSplit(sigs, cfg);
  std::reverse(sigs.begin(), sigs.end());
  EXPECT_EQ(ComputeSplit(sigs, cfg), a);
}

// Lowering the threshold can only grow the test split: its seeds are drawn
// before any propagation.
TEST(SplitProperty, TestSplitMonotoneInThreshold) {
  Rng rng(21);
  for (int corpus = 0; corpus < 30; ++corpus) {
    const auto sigs = testing::RandomSignatures(rng, 80);
    SplitConfig hi, lo;
    hi.seed = lo.seed = rng.Next();
    hi.threshold = 0.7;
    lo.threshold = 0.3;
    const auto a = ComputeSplit(sigs, hi);
    const auto b = ComputeSplit(sigs, lo);
    for (const auto& [id, s] : a) {
      if (s == Split::kTest) EXPECT_EQ(b.at(id), Split::kTest) << id;
    }
  }
}

}  // namespace
}  // namespace trikit
