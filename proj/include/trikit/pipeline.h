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

#ifndef TRIKIT_PIPELINE_H_
#define TRIKIT_PIPELINE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "trikit/adapters.h"
#include "trikit/error.h"
#include "trikit/io.h"
#include "trikit/ontology.h"
#include "trikit/sampler.h"
#include "trikit/splitkit.h"
#include "trikit/table.h"
#include "trikit/tripler.h"

namespace trikit {

// Tables of one corpus with the ontology annotations supplied for them.
class TableCollection {
 public:
  void AddTable(Table table);
  // Throws kInvalidArgument for an unknown table id.
  void SetAnnotation(OntologyAnnotation annotation);

  const std::vector<Table>& tables() const { return tables_; }
  const Table* FindTable(std::string_view id) const;
  const OntologyAnnotation* FindAnnotation(std::string_view id) const;

  // One table object per line.
  static TableCollection FromJsonl(std::string_view text);
  std::string ToJsonl() const;
  // One annotation object per line.
  void LoadAnnotationsJsonl(std::string_view text);

 private:
  std::vector<Table> tables_;
  std::map<std::string, size_t, std::less<>> index_;
  std::map<std::string, OntologyAnnotation, std::less<>> annotations_;
};

struct TableValidation {
  std::string table_id;
  std::optional<Error> build_error;
  std::vector<Finding> findings;
  bool ok() const { return !build_error && findings.empty(); }
};

// Builds and validates the tree of every table. Tables without an annotation
// are reported with a kInvalidArgument build error.
std::vector<TableValidation> ValidateCollection(const TableCollection& tables);
nlohmann::json ValidationReportToJson(const std::vector<TableValidation>& report);

struct SampleOptions {
  SamplerConfig sampler;
  int samples_per_row = 1;
  int jobs = 1;
};

struct SampledHighlight {
  Highlight highlight;
  Component component;
};

struct SampleResult {
  std::vector<SampledHighlight> samples;
  std::vector<std::string> skipped_tables;  // no annotation
};

// Samples components for every row of every annotated table. Each table uses
// its own stream Rng::ForKey(seed, table_id), so the output is independent of
// `jobs`.
SampleResult SampleCollection(const TableCollection& tables,
                              const SampleOptions& options);

struct ExtractOptions {
  std::string category = "MISC";
  int jobs = 1;
};

struct ExtractResult {
  std::vector<CorpusEntry> entries;
  // Extracted triplesets that have no realization yet.
  std::vector<nlohmann::json> pending;
  int oversize_discarded = 0;
};

// Turns highlights into corpus entries. Realizations come from the highlight
// itself and from `sentences`, keyed by (table id, row index). Entries get
// sequential eids Id1, Id2, ... in input order.
ExtractResult ExtractCollection(
    const TableCollection& tables, const std::vector<HighlightRecord>& highlights,
    const std::map<std::pair<std::string, int>, std::vector<Realization>>& sentences,
    const ExtractOptions& options);

// Reads {"table_id", "row_index", "text", "annotator"?, "comment"?} lines.
std::map<std::pair<std::string, int>, std::vector<Realization>> SentencesFromJsonl(
    std::string_view text);

struct AlignResult {
  std::vector<HighlightRecord> aligned;
  std::vector<nlohmann::json> unaligned;
  int rejected_aggregate = 0;
};

// Aligns question/SQL/answer records ({"id"?, "question", "sql", "table_id",
// "answer", "declarative_sentence"?}) to table rows. "sql" is SQL text or a
// structured {"sel", "agg", "conds"} object. Declarative sentences come from
// the record or from `declaratives`, keyed by record id.
AlignResult AlignWikiSqlRecords(const TableCollection& tables,
                                const std::vector<nlohmann::json>& records,
                                const std::map<std::string, std::string>& declaratives);

// Splits the tables of the collection by title/header similarity.
SplitAssignment SplitCollection(const TableCollection& tables, const SplitConfig& config);

}  // namespace trikit

#endif  // TRIKIT_PIPELINE_H_
