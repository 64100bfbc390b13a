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

#include "trikit/sampler.h"

#include <algorithm>
#include <optional>
#include <string>

#include "trikit/error.h"

namespace trikit {

void SamplerConfig::Validate() const {
  if (size_min < 1 || size_min > size_max) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampler sizes must satisfy 1 <= size_min <= size_max, got [" +
                    std::to_string(size_min) + ", " + std::to_string(size_max) +
                    "]");
  }
  if (!(p_min >= 0.0 && p_min <= p_max && p_max <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampler probabilities must satisfy 0 <= p_min <= p_max <= 1");
  }
}

namespace {

class Walk {
 public:
  explicit Walk(const OntologyTree& tree)
      : tree_(tree), visited_(tree.num_columns() + 2, false) {}

  bool visited(NodeId n) const { return visited_[n.slot()]; }
  void Add(NodeId n) {
    visited_[n.slot()] = true;
    order_.push_back(n);
  }
  const std::vector<NodeId>& order() const { return order_; }

  std::optional<NodeId> FirstUnvisitedChild(NodeId n) const {
    for (NodeId c : tree_.children(n)) {
      if (!visited(c)) return c;
    }
    return std::nullopt;
  }

  // Next unvisited sibling to the right of `n`, wrapping around.
  std::optional<NodeId> NextUnvisitedSibling(NodeId n) const {
    auto p = tree_.parent(n);
    if (!p) return std::nullopt;
    auto sibs = tree_.children(*p);
    auto pos = std::find(sibs.begin(), sibs.end(), n);
    if (pos == sibs.end()) return std::nullopt;
    const size_t at = pos - sibs.begin();
    for (size_t k = 1; k < sibs.size(); ++k) {
      NodeId s = sibs[(at + k) % sibs.size()];
      if (!visited(s)) return s;
    }
    return std::nullopt;
  }

  bool HasMove(NodeId n) const {
    return FirstUnvisitedChild(n) || NextUnvisitedSibling(n);
  }

  std::optional<NodeId> Backtrack(NodeId from) const {
    for (auto a = tree_.parent(from); a && !a->is_root(); a = tree_.parent(*a)) {
      if (HasMove(*a)) return *a;
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      if (HasMove(*it)) return *it;
    }
    return std::nullopt;
  }

 private:
  const OntologyTree& tree_;
  std::vector<bool> visited_;
  std::vector<NodeId> order_;
};

}  // namespace

Component SampleComponent(const OntologyTree& tree, const SamplerConfig& config,
                          Rng& rng) {
  config.Validate();
  auto starts = tree.children(NodeId::Root());
  if (starts.empty()) {
    throw Error(ErrorCode::kEmptyTree, "ontology tree has no non-root node");
  }
  Component out;
  out.target_size =
      static_cast<int>(rng.UniformInt(config.size_min, config.size_max));
  out.p_used = rng.UniformReal(config.p_min, config.p_max);
  NodeId cur = starts[rng.UniformInt(0, static_cast<int64_t>(starts.size()) - 1)];

  Walk walk(tree);
  walk.Add(cur);
  while (static_cast<int>(walk.order().size()) < out.target_size) {
    auto child = walk.FirstUnvisitedChild(cur);
    auto sib = walk.NextUnvisitedSibling(cur);
    if (!child && !sib) {
      auto back = walk.Backtrack(cur);
      if (!back) break;
      cur = *back;
      continue;
    }
    const bool descend = rng.UniformReal() < out.p_used;
    NodeId next = descend ? (child ? *child : *sib) : (sib ? *sib : *child);
    walk.Add(next);
    cur = next;
  }
  out.nodes = walk.order();
  std::sort(out.nodes.begin(), out.nodes.end());
  return out;
}

}  // namespace trikit
