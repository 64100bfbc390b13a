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
#include "trikit/sampler.h"

namespace trikit {
namespace {

Table Chain(int n) {
  Table t;
  t.id = "chain";
  for (int c = 0; c < n; ++c) t.headers.push_back(std::string(1, static_cast<char>('A' + c)));
  return t;
}

OntologyTree ChainTree(int n) {
  OntologyAnnotation a{"chain", {ParentRef::RootChild()}, {}};
  for (int c = 1; c < n; ++c) a.parents.push_back(ParentRef::Column(c - 1));
  return BuildTree(Chain(n), a);
}

OntologyTree StarTree(int n) {
  Table t = Chain(n);
  return BuildTree(t, {"chain", std::vector<ParentRef>(n, ParentRef::RootChild()), {}});
}

SamplerConfig Fixed(int size, double p, uint64_t seed = 1) {
  SamplerConfig c;
  c.size_min = c.size_max = size;
  c.p_min = c.p_max = p;
  c.seed = seed;
  return c;
}

std::vector<NodeId> Cols(std::initializer_list<int> cols) {
  std::vector<NodeId> out;
  for (int c : cols) out.push_back(NodeId::Column(c));
  return out;
}

TEST(SamplerTest, ChainWithPOneIsDepthFirst) {
  const OntologyTree tree = ChainTree(4);
  Rng rng(5);
  const Component c = SampleComponent(tree, Fixed(3, 1.0), rng);
  EXPECT_EQ(c.nodes, Cols({0, 1, 2}));
  EXPECT_EQ(c.target_size, 3);
  EXPECT_DOUBLE_EQ(c.p_used, 1.0);
}

TEST(SamplerTest, StarWithPZeroTakesSiblings) {
  const OntologyTree tree = StarTree(3);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(SampleComponent(tree, Fixed(3, 0.0), rng).nodes, Cols({0, 1, 2}));
  }
}

TEST(SamplerTest, SmallTreeClampsToReachableSet) {
  const OntologyTree tree = ChainTree(2);
  SamplerConfig c;
  c.size_min = 4;
  c.size_max = 5;
  Rng rng(9);
  EXPECT_EQ(SampleComponent(tree, c, rng).nodes, Cols({0, 1}));
}

TEST(SamplerTest, ConfigValidation) {
  SamplerConfig c;
  c.size_min = 0;
  EXPECT_THROW(c.Validate(), Error);
  c = SamplerConfig();
  c.size_min = 6;
  EXPECT_THROW(c.Validate(), Error);
  c = SamplerConfig();
  c.p_max = 1.5;
  EXPECT_THROW(c.Validate(), Error);
  c = SamplerConfig();
  c.p_min = 0.8;
  EXPECT_THROW(c.Validate(), Error);
}

TEST(SamplerTest, DeterministicUnderSeed) {
  Rng gen(2);
  auto rt = testing::MakeRandomTree(gen, 12, true);
  const OntologyTree tree = BuildTree(rt.table, rt.annotation);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed), b(seed);
    const Component x = SampleComponent(tree, SamplerConfig(), a);
    const Component y = SampleComponent(tree, SamplerConfig(), b);
    EXPECT_EQ(x.nodes, y.nodes);
    EXPECT_EQ(x.p_used, y.p_used);
  }
}

TEST(SamplerProperty, ComponentsAreConnectedAndSized) {
  Rng gen(17);
  for (int iter = 0; iter < 2000; ++iter) {
    auto rt = testing::MakeRandomTree(gen, static_cast<int>(gen.UniformInt(1, 20)),
                                      gen.UniformInt(0, 1) == 1);
    const OntologyTree tree = BuildTree(rt.table, rt.annotation);
    SamplerConfig cfg;
    cfg.size_min = static_cast<int>(gen.UniformInt(1, 4));
    cfg.size_max = static_cast<int>(gen.UniformInt(cfg.size_min, 8));
    Rng rng(gen.Next());
    const Component c = SampleComponent(tree, cfg, rng);
    const int reachable = static_cast<int>(tree.nodes().size()) - 1;
    EXPECT_TRUE(testing::ConnectedWithRoot(tree, c.nodes));
    EXPECT_GE(c.target_size, cfg.size_min);
    EXPECT_LE(c.target_size, cfg.size_max);
    EXPECT_EQ(c.size(), std::min(c.target_size, reachable));
    EXPECT_GE(c.p_used, cfg.p_min);
    EXPECT_LE(c.p_used, cfg.p_max);
    EXPECT_TRUE(std::is_sorted(c.nodes.begin(), c.nodes.end()));
    EXPECT_EQ(std::adjacent_find(c.nodes.begin(), c.nodes.end()), c.nodes.end());
    for (NodeId n : c.nodes) EXPECT_FALSE(n.is_root());
  }
}

TEST(SamplerProperty, RootOnlyTreeRaisesEmptyTree) {
  // A tree whose root has no children cannot be sampled.
  const std::vector<int> none;
  const std::vector<OntologyTree::Link> links;
  const OntologyTree tree({}, false, none, links);
  Rng rng(1);
  try {
    SampleComponent(tree, SamplerConfig(), rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTree);
  }
}

}  // namespace
}  // namespace trikit
