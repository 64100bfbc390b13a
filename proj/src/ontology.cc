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

#include "trikit/ontology.h"

#include <algorithm>
#include <map>

#include "trikit/error.h"

namespace trikit {

std::string NodeIdToString(NodeId node) {
  if (node.is_root()) return "ROOT";
  if (node.is_title()) return "TITLE";
  return std::to_string(node.column());
}

std::string_view TitleShapeName(TitleShape shape) {
  return shape == TitleShape::kTitleAsSoleChild ? "title_as_sole_child"
                                                : "title_under_root";
}

std::optional<TitleShape> ParseTitleShape(std::string_view name) {
  if (name == "title_under_root") return TitleShape::kTitleUnderRoot;
  if (name == "title_as_sole_child") return TitleShape::kTitleAsSoleChild;
  return std::nullopt;
}

std::string_view FindingKindName(Finding::Kind kind) {
  switch (kind) {
    case Finding::Kind::kDisconnected: return "disconnected";
    case Finding::Kind::kCyclic: return "cyclic";
    case Finding::Kind::kMissingColumn: return "missing-column";
  }
  return "unknown";
}

OntologyTree::OntologyTree(std::vector<std::string> column_labels,
                           bool has_title, std::span<const int> columns,
                           std::span<const Link> links)
    : column_labels_(std::move(column_labels)) {
  const int slots = static_cast<int>(column_labels_.size()) + 2;
  present_.assign(slots, false);
  parent_.assign(slots, -1);
  children_.assign(slots, {});
  present_[NodeId::Root().slot()] = true;
  present_[NodeId::Title().slot()] = has_title;
  for (int c : columns) {
    if (c < 0 || c >= num_columns()) {
      throw Error(ErrorCode::kBadIndex,
                  "column node " + std::to_string(c) + " out of range");
    }
    present_[NodeId::Column(c).slot()] = true;
  }
  for (const Link& link : links) {
    if (link.child.slot() < 0 || link.child.slot() >= slots) continue;
    parent_[link.child.slot()] = link.parent.slot();
  }
  for (int s = 0; s < slots; ++s) {
    if (!present_[s]) continue;
    nodes_.push_back(NodeId::FromSlot(s));
    const int p = parent_[s];
    if (p >= 0 && p < slots && present_[p]) {
      children_[p].push_back(NodeId::FromSlot(s));
    }
  }
}

bool OntologyTree::contains(NodeId node) const {
  return node.slot() >= 0 && node.slot() < num_slots() && present_[node.slot()];
}

std::optional<NodeId> OntologyTree::parent(NodeId node) const {
  if (!contains(node)) return std::nullopt;
  const int p = parent_[node.slot()];
  if (p < 0) return std::nullopt;
  return NodeId::FromSlot(p);
}

std::span<const NodeId> OntologyTree::children(NodeId node) const {
  if (!contains(node)) return {};
  return children_[node.slot()];
}

std::string_view OntologyTree::label(NodeId node) const {
  if (node.is_root()) return kRootLabel;
  if (node.is_title()) return kTitleLabel;
  return column_labels_.at(node.column());
}

int OntologyTree::depth(NodeId node) const {
  int d = 0;
  for (auto p = parent(node); p; p = parent(*p)) {
    ++d;
    if (d > num_slots()) {
      throw Error(ErrorCode::kCycle, "depth() called on a cyclic tree");
    }
  }
  return d;
}

std::vector<NodeId> OntologyTree::PreOrder() const {
  std::vector<NodeId> order;
  order.reserve(nodes_.size());
  std::vector<NodeId> stack = {NodeId::Root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    order.push_back(n);
    const auto& kids = children_[n.slot()];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

bool OntologyTree::IsAncestorOrSelf(NodeId ancestor, NodeId node) const {
  std::optional<NodeId> cur = node;
  for (int steps = 0; cur && steps <= num_slots(); ++steps) {
    if (*cur == ancestor) return true;
    cur = parent(*cur);
  }
  return false;
}

namespace {

bool NeedsTitle(const Table& table, const OntologyAnnotation& annotation) {
  if (!table.title.empty()) return true;
  if (annotation.title_shape == TitleShape::kTitleAsSoleChild) return true;
  return std::any_of(annotation.parents.begin(), annotation.parents.end(),
                     [](const ParentRef& p) {
                       return p.kind == ParentRef::Kind::kTitle;
                     });
}

OntologyTree MakeTree(const Table& table, const OntologyAnnotation& annotation) {
  const int n = table.num_columns();
  const bool has_title = NeedsTitle(table, annotation);
  std::vector<int> columns(n);
  std::vector<OntologyTree::Link> links;
  if (has_title) links.push_back({NodeId::Title(), NodeId::Root()});
  for (int i = 0; i < n; ++i) {
    columns[i] = i;
    if (i >= static_cast<int>(annotation.parents.size())) continue;
    const ParentRef& ref = annotation.parents[i];
    switch (ref.kind) {
      case ParentRef::Kind::kRoot:
        links.push_back({NodeId::Column(i), NodeId::Root()});
        break;
      case ParentRef::Kind::kTitle:
        links.push_back({NodeId::Column(i), NodeId::Title()});
        break;
      case ParentRef::Kind::kColumn:
        // Negative indexes would alias the synthetic slots; leave dangling.
        if (ref.column >= 0) {
          links.push_back({NodeId::Column(i), NodeId::Column(ref.column)});
        }
        break;
    }
  }
  return OntologyTree(table.headers, has_title, columns, links);
}

}  // namespace

OntologyTree BuildTreeUnchecked(const Table& table,
                                const OntologyAnnotation& annotation) {
  return MakeTree(table, annotation);
}

OntologyTree BuildTree(const Table& table, const OntologyAnnotation& annotation) {
  if (annotation.table_id != table.id) {
    throw Error(ErrorCode::kInvalidArgument,
                "annotation for \"" + annotation.table_id +
                    "\" applied to table \"" + table.id + "\"",
                table.id);
  }
  CheckTable(table);
  const int n = table.num_columns();
  if (static_cast<int>(annotation.parents.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "annotation has " + std::to_string(annotation.parents.size()) +
                    " parents for " + std::to_string(n) + " columns",
                table.id);
  }
  for (int i = 0; i < n; ++i) {
    const ParentRef& ref = annotation.parents[i];
    if (ref.kind != ParentRef::Kind::kColumn) continue;
    if (ref.column < 0 || ref.column >= n) {
      throw Error(ErrorCode::kBadIndex,
                  "column " + std::to_string(i) + " (\"" + table.headers[i] +
                      "\") has out-of-range parent " + std::to_string(ref.column),
                  table.id);
    }
    if (ref.column == i) {
      throw Error(ErrorCode::kBadIndex,
                  "column " + std::to_string(i) + " (\"" + table.headers[i] +
                      "\") is its own parent",
                  table.id);
    }
  }

  // Colour walk over the column-to-column links: 0 unseen, 1 on the current
  // path, 2 known to terminate at the root or title.
  std::vector<int> state(n, 0);
  for (int start = 0; start < n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      const ParentRef& ref = annotation.parents[cur];
      cur = ref.kind == ParentRef::Kind::kColumn ? ref.column : -1;
    }
    if (cur >= 0 && state[cur] == 1) {
      std::string names;
      const auto first = std::find(path.begin(), path.end(), cur);
      for (auto it = first; it != path.end(); ++it) {
        names += (it == first ? "" : " -> ") + table.headers[*it];
      }
      names += " -> " + table.headers[cur];
      throw Error(ErrorCode::kCycle, "parent links form a cycle: " + names,
                  table.id);
    }
    for (int c : path) state[c] = 2;
  }

  if (annotation.title_shape == TitleShape::kTitleAsSoleChild) {
    for (int i = 0; i < n; ++i) {
      if (annotation.parents[i].kind == ParentRef::Kind::kRoot) {
        throw Error(ErrorCode::kDisconnected,
                    "column " + std::to_string(i) + " (\"" + table.headers[i] +
                        "\") attaches to the root, whose only child is [TITLE]",
                    table.id);
      }
    }
  }
  return MakeTree(table, annotation);
}

ValidationReport ValidateTree(const OntologyTree& tree, const Table& table) {
  ValidationReport report;
  const auto& nodes = tree.nodes();

  // 0 unknown, 1 reaches root, 2 cannot reach root.
  std::map<NodeId, int> status;
  std::map<NodeId, std::vector<NodeId>> stranded;  // dead-end top -> members
  status[NodeId::Root()] = 1;
  for (NodeId start : nodes) {
    if (status.count(start)) continue;
    std::vector<NodeId> path;
    std::map<NodeId, size_t> on_path;
    NodeId cur = start;
    int outcome = 0;
    std::optional<NodeId> top;
    while (true) {
      if (auto it = status.find(cur); it != status.end()) {
        outcome = it->second;
        if (outcome == 2) {
          // Joins a stranded component found earlier, if any.
          for (auto& [t, members] : stranded) {
            if (std::find(members.begin(), members.end(), cur) != members.end()) {
              top = t;
              break;
            }
          }
        }
        break;
      }
      if (auto it = on_path.find(cur); it != on_path.end()) {
        Finding f{Finding::Kind::kCyclic, {}, ""};
        std::string names;
        for (size_t i = it->second; i < path.size(); ++i) {
          f.nodes.push_back(path[i]);
          names += (names.empty() ? "" : ", ") + std::string(tree.label(path[i]));
        }
        std::sort(f.nodes.begin(), f.nodes.end());
        f.message = "cycle through " + names;
        report.findings.push_back(std::move(f));
        outcome = 2;
        break;
      }
      on_path[cur] = path.size();
      path.push_back(cur);
      auto p = tree.parent(cur);
      if (!p || !tree.contains(*p)) {
        outcome = 2;
        top = cur;
        break;
      }
      cur = *p;
    }
    for (NodeId n : path) status[n] = outcome;
    if (outcome == 2 && top) {
      auto& members = stranded[*top];
      members.insert(members.end(), path.begin(), path.end());
    }
  }
  for (auto& [top, members] : stranded) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Finding f{Finding::Kind::kDisconnected, members, ""};
    f.message = "component under \"" + std::string(tree.label(top)) + "\" (" +
                std::to_string(members.size()) +
                " nodes) does not reach [TABLECONTEXT]";
    report.findings.push_back(std::move(f));
  }
  for (int c = 0; c < table.num_columns(); ++c) {
    if (!tree.contains(NodeId::Column(c))) {
      report.findings.push_back(
          {Finding::Kind::kMissingColumn,
           {NodeId::Column(c)},
           "column \"" + table.headers[c] + "\" has no node in the tree"});
    }
  }
  return report;
}

OntologyStats ComputeOntologyStats(const OntologyTree& tree) {
  OntologyStats stats;
  int edges = 0;
  int non_leaves = 0;
  for (NodeId n : tree.nodes()) {
    if (!n.is_root()) {
      ++stats.node_count;
      stats.depth = std::max(stats.depth, tree.depth(n));
    }
    const auto kids = tree.children(n).size();
    if (kids > 0) {
      ++non_leaves;
      edges += static_cast<int>(kids);
    }
  }
  stats.branching_factor =
      non_leaves == 0 ? 0.0 : static_cast<double>(edges) / non_leaves;
  return stats;
}

}  // namespace trikit
