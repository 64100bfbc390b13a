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

#ifndef TRIKIT_SAMPLER_H_
#define TRIKIT_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "trikit/ontology.h"
#include "trikit/random.h"

namespace trikit {

struct SamplerConfig {
  int size_min = 2;
  int size_max = 5;
  double p_min = 0.5;
  double p_max = 0.7;
  uint64_t seed = 0;

  // Throws kInvalidArgument unless 1 <= size_min <= size_max and
  // 0 <= p_min <= p_max <= 1.
  void Validate() const;
};

// A set of non-root tree nodes chosen by one walk. The nodes together with
// the root form a connected subtree.
struct Component {
  std::vector<NodeId> nodes;  // sorted
  double p_used = 0.0;
  int target_size = 0;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Draws one component. The draws consume `rng` in a fixed order: target size,
// expansion probability p, start node, then one coin per step.
//
// The walk starts at a uniformly chosen child of the root. At each step a
// coin with probability p prefers descending to the first unvisited child of
// the current node over moving to the next unvisited sibling (column order,
// wrapping around); if the preferred move is unavailable the other one is
// taken. When neither exists the walk backtracks to the nearest ancestor
// that still has a move, falling back to the most recently added node with
// one. It stops at the target size or when no node is left to add.
//
// Throws kEmptyTree if the tree has no node besides the root.
Component SampleComponent(const OntologyTree& tree, const SamplerConfig& config,
                          Rng& rng);

}  // namespace trikit

#endif  // TRIKIT_SAMPLER_H_
