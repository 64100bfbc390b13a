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
#include "trikit/error.h"
#include "trikit/unify.h"

namespace trikit {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

PredicateMap Hometown() {
  const Pairs pairs = {{"Hometown", "HOMETOWN"},
                       {"Home Town", "HOMETOWN"},
                       {"Home Town/City", "HOMETOWN"}};
  return PredicateMap::FromPairs(pairs);
}

TripleSet Set(std::initializer_list<Triple> triples) {
  TripleSet ts;
  ts.triples = triples;
  return ts;
}

TEST(UnifyTest, HometownVariants) {
  const PredicateMap map = Hometown();
  const TripleSet in = Set({{"Ann", "Hometown", "Oslo"},
                            {"Bob", "Home Town", "Bergen"},
                            {"Cy", "Home Town/City", "Tromso"},
                            {"Di", "HOMETOWN", "Bodo"}});
  const TripleSet out = UnifyTripleSet(in, map);
  for (const Triple& t : out.triples) EXPECT_EQ(t.predicate, "HOMETOWN");
  EXPECT_EQ(out.triples[0].subject, "Ann");
  EXPECT_EQ(out.triples[2].object, "Tromso");
}

TEST(UnifyTest, EmptyMapIsIdentity) {
  const TripleSet in = Set({{"a", "b", "c"}, {"d", "e", "f"}});
  std::set<std::string> unmapped;
  EXPECT_EQ(UnifyTripleSet(in, PredicateMap(), &unmapped), in);
  EXPECT_EQ(unmapped, (std::set<std::string>{"b", "e"}));
}

TEST(UnifyTest, UniquePredicatesAfterUnification) {
  CorpusEntry a, b;
  a.tripleset = UnifyTripleSet(Set({{"Ann", "Hometown", "Oslo"}}), Hometown());
  b.tripleset = UnifyTripleSet(Set({{"Bob", "Home Town", "Bergen"}}), Hometown());
  const std::vector<CorpusEntry> corpus = {a, b};
  EXPECT_EQ(UniquePredicates(corpus), std::vector<std::string>{"HOMETOWN"});
  EXPECT_TRUE(UniquePredicates({}).empty());
}

TEST(UnifyTest, RejectsBadMaps) {
  EXPECT_THROW(PredicateMap::FromPairs(Pairs{{"a", "X"}, {"a", "Y"}}), Error);
  EXPECT_THROW(PredicateMap::FromPairs(Pairs{{"a", "b"}, {"b", "c"}}), Error);
  EXPECT_THROW(PredicateMap::FromPairs(Pairs{{"", "X"}}), Error);
  EXPECT_THROW(PredicateMap::FromPairs(Pairs{{"a", ""}}), Error);
  // Duplicates that agree and self-maps are fine.
  EXPECT_NO_THROW(PredicateMap::FromPairs(Pairs{{"a", "X"}, {"a", "X"}, {"X", "X"}}));
}

TEST(UnifyTest, TsvParsing) {
  const PredicateMap map =
      PredicateMap::FromTsv("# variant\tcanonical\nHometown\tHOMETOWN\n\nHome Town\tHOMETOWN\n");
  EXPECT_EQ(map.size(), 2u);
  ASSERT_NE(map.Find("Home Town"), nullptr);
  EXPECT_EQ(*map.Find(" Home Town "), "HOMETOWN");
  EXPECT_EQ(map.Find("Town"), nullptr);
  try {
    PredicateMap::FromTsv("a\tb\nno tab here\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPredicateMap);
    EXPECT_NE(e.location().find("2"), std::string::npos);
  }
}

TEST(UnifyProperty, IdempotentOnFuzzedSets) {
  Rng rng(8);
  Pairs pairs;
  for (int i = 0; i < 40; ++i) {
    pairs.push_back({testing::RandomField(rng, false) + std::to_string(i),
                     "CANON_" + std::to_string(i % 7)});
  }
  const PredicateMap map = PredicateMap::FromPairs(pairs);
  for (int i = 0; i < 1000; ++i) {
    TripleSet ts = testing::RandomEntry(rng, i).tripleset;
    for (auto& t : ts.triples) {
      if (rng.UniformInt(0, 1)) t.predicate = pairs[rng.UniformInt(0, 39)].first;
    }
    const TripleSet once = UnifyTripleSet(ts, map);
    ASSERT_EQ(UnifyTripleSet(once, map), once);
    ASSERT_EQ(once.size(), ts.size());
  }
}

}  // namespace
}  // namespace trikit
