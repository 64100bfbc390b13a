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

#ifndef TRIKIT_ONTOLOGY_H_
#define TRIKIT_ONTOLOGY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/table.h"

namespace trikit {

inline constexpr std::string_view kRootLabel = "[TABLECONTEXT]";
inline constexpr std::string_view kTitleLabel = "[TITLE]";

// Identifies a node of an ontology tree: the [TABLECONTEXT] root, the [TITLE]
// node, or the node of a table column. Ordering is root, title, then columns
// by index.
class NodeId {
 public:
  static constexpr NodeId Root() { return NodeId(0); }
  static constexpr NodeId Title() { return NodeId(1); }
  static constexpr NodeId Column(int index) { return NodeId(index + 2); }
  static constexpr NodeId FromSlot(int slot) { return NodeId(slot); }

  constexpr bool is_root() const { return slot_ == 0; }
  constexpr bool is_title() const { return slot_ == 1; }
  constexpr bool is_column() const { return slot_ >= 2; }
  constexpr int column() const { return slot_ - 2; }
  constexpr int slot() const { return slot_; }

  constexpr auto operator<=>(const NodeId&) const = default;

 private:
  constexpr explicit NodeId(int slot) : slot_(slot) {}
  int slot_;
};

std::string NodeIdToString(NodeId node);

// Annotated parent of one column.
struct ParentRef {
  enum class Kind { kRoot, kTitle, kColumn };

  static ParentRef RootChild() { return {Kind::kRoot, -1}; }
  static ParentRef TitleChild() { return {Kind::kTitle, -1}; }
  static ParentRef Column(int index) { return {Kind::kColumn, index}; }

  Kind kind = Kind::kRoot;
  int column = -1;

  bool operator==(const ParentRef&) const = default;
};

enum class TitleShape { kTitleUnderRoot, kTitleAsSoleChild };

std::string_view TitleShapeName(TitleShape shape);
std::optional<TitleShape> ParseTitleShape(std::string_view name);

struct OntologyAnnotation {
  std::string table_id;
  std::vector<ParentRef> parents;
  TitleShape title_shape = TitleShape::kTitleUnderRoot;
};

// Rooted tree over the columns of one table plus the synthetic [TABLECONTEXT]
// and [TITLE] nodes. Trees produced by BuildTree are always valid; the raw
// constructor accepts arbitrary parent links so that externally supplied or
// damaged structures can be inspected with ValidateTree.
class OntologyTree {
 public:
  struct Link {
    NodeId child;
    NodeId parent;
  };

  // `column_labels` covers every column of the source table; `columns` lists
  // the column nodes present in this tree. Nodes without a link have no
  // parent (only the root should be in that state).
  OntologyTree(std::vector<std::string> column_labels, bool has_title,
               std::span<const int> columns, std::span<const Link> links);

  int num_columns() const { return static_cast<int>(column_labels_.size()); }
  bool has_title() const { return contains(NodeId::Title()); }
  bool contains(NodeId node) const;

  // All present nodes in canonical order (root first).
  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::optional<NodeId> parent(NodeId node) const;
  // Children in canonical order: [TITLE] first, then columns by index.
  std::span<const NodeId> children(NodeId node) const;
  std::string_view label(NodeId node) const;

  // The following require a valid tree.
  int depth(NodeId node) const;
  std::vector<NodeId> PreOrder() const;
  bool IsAncestorOrSelf(NodeId ancestor, NodeId node) const;

 private:
  int num_slots() const { return static_cast<int>(present_.size()); }

  std::vector<std::string> column_labels_;
  std::vector<bool> present_;
  std::vector<int> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> nodes_;
};

// Builds the tree described by `annotation`. Throws kInvalidArgument when the
// annotation does not belong to the table, kBadIndex for out-of-range or
// self-referential column parents, kCycle when parent links loop, and
// kDisconnected when a column cannot be attached below the root.
OntologyTree BuildTree(const Table& table, const OntologyAnnotation& annotation);

// Same parent links as BuildTree but without any checks; used to inspect
// annotations that may be cyclic or dangling.
OntologyTree BuildTreeUnchecked(const Table& table,
                                const OntologyAnnotation& annotation);

struct Finding {
  enum class Kind { kDisconnected, kCyclic, kMissingColumn };
  Kind kind;
  std::vector<NodeId> nodes;
  std::string message;
};

std::string_view FindingKindName(Finding::Kind kind);

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

ValidationReport ValidateTree(const OntologyTree& tree, const Table& table);

struct OntologyStats {
  int depth = 0;
  int node_count = 0;
  double branching_factor = 0.0;
};

// Root is the origin for depth and is not counted as a node; it does count
// as a non-leaf for the branching factor.
OntologyStats ComputeOntologyStats(const OntologyTree& tree);

}  // namespace trikit

#endif  // TRIKIT_ONTOLOGY_H_
