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

#ifndef TRIKIT_ADAPTERS_H_
#define TRIKIT_ADAPTERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "trikit/table.h"
#include "trikit/tripler.h"

namespace trikit {

// ---- Dialogue-act meaning representations --------------------------------

struct MeaningRepresentation {
  std::vector<std::pair<std::string, std::string>> slots;
};

// Parses "name[Alimentum], area[city centre]" with optional surrounding
// parentheses. Values may contain commas and nested brackets. Throws kParse.
MeaningRepresentation ParseMeaningRepresentation(std::string_view text);

// Uses the first "name" slot as subject and emits one triple per other slot.
// Returns nullopt (dropped) when there is no name slot or nothing else.
std::optional<TripleSet> E2eToTripleSet(const MeaningRepresentation& mr);

struct E2eConversion {
  std::vector<CorpusEntry> entries;
  int dropped = 0;
};

// Converts a CSV with "mr" and "ref" columns. Rows sharing an MR become one
// entry with several realizations, in first-seen order; eids are Id1, Id2...
E2eConversion ConvertE2eCsv(std::string_view csv, std::string_view category = "E2E");

// ---- WebNLG-style XML -----------------------------------------------------

// Reads entries verbatim. Throws kMalformedEntry (with the eid) when an entry
// has no triples, a size attribute that disagrees with its triples, or an
// empty lex.
std::vector<CorpusEntry> IngestWebNlg(std::string_view document);

// ---- SQL-aligned rows ------------------------------------------------------

struct WhereCondition {
  std::string column_name;
  int column = -1;  // -1 when no header matches
  std::string op;
  std::string value;
};

struct SqlQuery {
  std::string raw;
  bool has_aggregate = false;
  bool select_all = false;
  std::vector<int> select_columns;
  std::vector<int> where_columns;
  std::vector<WhereCondition> conditions;
  // Column names that matched no header.
  std::vector<std::string> unresolved;
};

// True iff, outside string literals and quoted identifiers, the query uses
// MAX, MIN, COUNT, SUM, AVG, JOIN, INTERSECT, UNION, GROUP BY or ORDER BY
// (case-insensitive).
bool SqlHasAggregate(std::string_view raw);

// Tokenizes `raw` and, when `table` is given, resolves SELECT and WHERE
// column names against its headers (exact, then unique case-insensitive).
// Throws kParse on unterminated literals or a missing SELECT/FROM.
SqlQuery ParseSql(std::string_view raw, const Table* table = nullptr);

enum class SqlVerdict { kAccept, kReject };
SqlVerdict FilterSql(const SqlQuery& query);

struct Unaligned {
  std::string reason;
};

using Alignment = std::variant<Highlight, Unaligned>;

// Finds the single row satisfying every WHERE equality (exact match after
// trimming) and highlights the WHERE columns plus the one column of that row
// whose cell equals `answer`.
Alignment AlignRow(const SqlQuery& query, const Table& table,
                   std::string_view answer);

// Renders a structured {"sel", "agg", "conds"} query as SQL text against
// `table`'s headers.
std::string StructuredSqlToText(const nlohmann::json& sql, const Table& table);

}  // namespace trikit

#endif  // TRIKIT_ADAPTERS_H_
