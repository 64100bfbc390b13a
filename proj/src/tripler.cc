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

#include "trikit/tripler.h"

#include <algorithm>
#include <map>

#include "trikit/error.h"

namespace trikit {

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kUnknown: return "unknown";
    case Provenance::kWikiTableQuestions: return "wikitablequestions";
    case Provenance::kWikiSql: return "wikisql";
    case Provenance::kWebNlg: return "webnlg";
    case Provenance::kE2e: return "e2e";
    case Provenance::kSynthetic: return "synthetic";
  }
  return "unknown";
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  for (Provenance p :
       {Provenance::kUnknown, Provenance::kWikiTableQuestions,
        Provenance::kWikiSql, Provenance::kWebNlg, Provenance::kE2e,
        Provenance::kSynthetic}) {
    if (ProvenanceName(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view ProvenanceDisplayName(Provenance p) {
  switch (p) {
    case Provenance::kUnknown: return "";
    case Provenance::kWikiTableQuestions: return "WikiTableQuestions";
    case Provenance::kWikiSql: return "WikiSQL";
    case Provenance::kWebNlg: return "WebNLG";
    case Provenance::kE2e: return "E2E";
    case Provenance::kSynthetic: return "Synthetic";
  }
  return "";
}

Provenance ProvenanceForTable(TableSource source) {
  switch (source) {
    case TableSource::kWikiTableQuestions: return Provenance::kWikiTableQuestions;
    case TableSource::kWikiSql: return Provenance::kWikiSql;
    case TableSource::kSynthetic: return Provenance::kSynthetic;
    case TableSource::kOther: return Provenance::kUnknown;
  }
  return Provenance::kUnknown;
}

std::string_view AnnotatorName(Annotator a) {
  switch (a) {
    case Annotator::kInternal: return "internal";
    case Annotator::kMturk: return "mturk";
    case Annotator::kAutoDeclarative: return "auto_declarative";
    case Annotator::kExternalDataset: return "external_dataset";
  }
  return "internal";
}

std::optional<Annotator> ParseAnnotator(std::string_view name) {
  for (Annotator a : {Annotator::kInternal, Annotator::kMturk,
                      Annotator::kAutoDeclarative, Annotator::kExternalDataset}) {
    if (AnnotatorName(a) == name) return a;
  }
  return std::nullopt;
}

namespace {

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

ValueAssignment::ValueAssignment(const OntologyTree& tree, const Table& table,
                                 int row_index) {
  if (row_index < 0 || row_index >= table.num_rows()) {
    throw Error(ErrorCode::kInvalidArgument,
                "row " + std::to_string(row_index) + " out of range", table.id);
  }
  const auto& row = table.rows[row_index];
  values_.assign(tree.num_columns() + 2, "");
  values_[NodeId::Root().slot()] = std::string(kRootLabel);
  values_[NodeId::Title().slot()] = table.title;
  for (NodeId n : tree.nodes()) {
    if (!n.is_column()) continue;
    if (n.column() >= static_cast<int>(row.size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tree column " + std::to_string(n.column()) +
                      " has no cell in row " + std::to_string(row_index),
                  table.id);
    }
    values_[n.slot()] = row[n.column()];
    if (IsBlank(row[n.column()])) empty_.push_back(n);
  }
}

NodeId LowestCommonAncestor(const OntologyTree& tree,
                            std::span<const NodeId> nodes) {
  if (nodes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "LCA of an empty node set");
  }
  NodeId lca = nodes.front();
  for (NodeId n : nodes.subspan(1)) {
    NodeId a = lca;
    NodeId b = n;
    int da = tree.depth(a);
    int db = tree.depth(b);
    while (da > db) { a = *tree.parent(a); --da; }
    while (db > da) { b = *tree.parent(b); --db; }
    while (a != b) {
      a = *tree.parent(a);
      b = *tree.parent(b);
    }
    lca = a;
  }
  return lca;
}

std::vector<NodeId> CompleteSubtree(const OntologyTree& tree,
                                    std::span<const NodeId> highlighted) {
  for (NodeId n : highlighted) {
    if (!tree.contains(n)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "highlighted node " + NodeIdToString(n) + " is not in the tree");
    }
  }
  const NodeId lca = LowestCommonAncestor(tree, highlighted);
  std::vector<NodeId> out;
  for (NodeId n : highlighted) {
    for (NodeId cur = n;; cur = *tree.parent(cur)) {
      out.push_back(cur);
      if (cur == lca) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TripleSet ExtractTriples(std::span<const NodeId> subtree,
                         const ValueAssignment& assignment,
                         const OntologyTree& tree) {
  std::vector<bool> in_subtree(tree.num_columns() + 2, false);
  for (NodeId n : subtree) in_subtree.at(n.slot()) = true;

  TripleSet out;
  for (NodeId n : tree.PreOrder()) {
    if (n.is_root() || !in_subtree[n.slot()]) continue;
    const NodeId parent = *tree.parent(n);
    out.triples.push_back({assignment.value(parent), std::string(tree.label(n)),
                           assignment.value(n)});
  }
  if (out.size() > kMaxTriples) {
    throw Error(ErrorCode::kOversize,
                "tripleset has " + std::to_string(out.size()) +
                    " triples, limit is " + std::to_string(kMaxTriples));
  }
  return out;
}

CorpusEntry AssembleEntry(TripleSet tripleset,
                          std::vector<Realization> realizations,
                          std::string category, std::string eid) {
  if (tripleset.triples.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tripleset is empty", eid);
  }
  if (tripleset.size() > kMaxTriples) {
    throw Error(ErrorCode::kOversize,
                "tripleset has " + std::to_string(tripleset.size()) + " triples",
                eid);
  }
  if (realizations.empty()) {
    throw Error(ErrorCode::kEmptyRealization, "entry has no realization", eid);
  }
  for (const auto& r : realizations) {
    if (r.text.empty()) {
      throw Error(ErrorCode::kEmptyRealization, "realization text is empty", eid);
    }
  }
  CorpusEntry entry;
  entry.tripleset = std::move(tripleset);
  entry.realizations = std::move(realizations);
  entry.category = std::move(category);
  entry.eid = std::move(eid);
  return entry;
}

Extraction ExtractHighlight(const OntologyTree& tree, const Table& table,
                            const Highlight& highlight) {
  if (highlight.nodes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "highlight has no nodes", table.id);
  }
  ValueAssignment values(tree, table, highlight.row_index);
  Extraction out;
  out.subtree = CompleteSubtree(tree, highlight.nodes);
  out.tripleset = ExtractTriples(out.subtree, values, tree);
  out.tripleset.provenance = ProvenanceForTable(table.source);
  for (NodeId n : values.empty_nodes()) {
    if (std::binary_search(out.subtree.begin(), out.subtree.end(), n)) {
      out.has_empty_value = true;
    }
  }
  return out;
}

}  // namespace trikit
