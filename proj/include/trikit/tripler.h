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

#ifndef TRIKIT_TRIPLER_H_
#define TRIKIT_TRIPLER_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/ontology.h"
#include "trikit/table.h"

namespace trikit {

// Triplesets above this size are discarded.
inline constexpr int kMaxTriples = 10;

struct Highlight {
  std::string table_id;
  int row_index = 0;
  std::vector<NodeId> nodes;
};

struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  auto operator<=>(const Triple&) const = default;
};

enum class Provenance {
  kUnknown,
  kWikiTableQuestions,
  kWikiSql,
  kWebNlg,
  kE2e,
  kSynthetic,
};

std::string_view ProvenanceName(Provenance p);
std::optional<Provenance> ParseProvenance(std::string_view name);
// Human-readable source label used as the lex comment, e.g.
// "WikiTableQuestions".
std::string_view ProvenanceDisplayName(Provenance p);
Provenance ProvenanceForTable(TableSource source);

struct TripleSet {
  std::vector<Triple> triples;
  Provenance provenance = Provenance::kUnknown;

  int size() const { return static_cast<int>(triples.size()); }
  bool operator==(const TripleSet&) const = default;
};

enum class Annotator { kInternal, kMturk, kAutoDeclarative, kExternalDataset };

std::string_view AnnotatorName(Annotator a);
std::optional<Annotator> ParseAnnotator(std::string_view name);

struct Realization {
  std::string text;
  std::optional<Annotator> annotator;
  std::string comment;

  bool operator==(const Realization&) const = default;
};

struct CorpusEntry {
  TripleSet tripleset;
  std::vector<Realization> realizations;
  std::string category;
  std::string eid;
  // Source table, when the entry was extracted from one.
  std::string table_id;
  // Set when some extracted value came from an empty cell.
  bool has_empty_value = false;

  int size() const { return tripleset.size(); }
  bool operator==(const CorpusEntry&) const = default;
};

// Value of every node for one row: cells for columns, the table title for
// [TITLE], and the literal "[TABLECONTEXT]" for the root.
class ValueAssignment {
 public:
  ValueAssignment(const OntologyTree& tree, const Table& table, int row_index);

  const std::string& value(NodeId node) const { return values_.at(node.slot()); }
  // Column nodes whose cell was empty after trimming.
  const std::vector<NodeId>& empty_nodes() const { return empty_; }

 private:
  std::vector<std::string> values_;
  std::vector<NodeId> empty_;
};

inline ValueAssignment Instantiate(const OntologyTree& tree, const Table& table,
                                   int row_index) {
  return ValueAssignment(tree, table, row_index);
}

// Lowest common ancestor of a non-empty node set on a valid tree.
NodeId LowestCommonAncestor(const OntologyTree& tree,
                            std::span<const NodeId> nodes);

// Highlighted nodes plus every node on the paths from each of them up to
// their lowest common ancestor, inclusive. Sorted.
std::vector<NodeId> CompleteSubtree(const OntologyTree& tree,
                                    std::span<const NodeId> highlighted);

// One triple (value(parent(N)), label(N), value(N)) per non-root N in the
// subtree, in tree pre-order. parent(N) need not be in the subtree. Throws
// kOversize above kMaxTriples.
TripleSet ExtractTriples(std::span<const NodeId> subtree,
                         const ValueAssignment& assignment,
                         const OntologyTree& tree);

// Throws kEmptyRealization when `realizations` is empty or holds an empty
// text, kOversize above kMaxTriples, kInvalidArgument for an empty set.
CorpusEntry AssembleEntry(TripleSet tripleset,
                          std::vector<Realization> realizations,
                          std::string category, std::string eid);

struct Extraction {
  TripleSet tripleset;
  std::vector<NodeId> subtree;
  bool has_empty_value = false;
};

// Completion, instantiation and extraction for one highlight.
Extraction ExtractHighlight(const OntologyTree& tree, const Table& table,
                            const Highlight& highlight);

}  // namespace trikit

#endif  // TRIKIT_TRIPLER_H_
