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

#ifndef TRIKIT_TABLE_H_
#define TRIKIT_TABLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trikit {

enum class TableSource { kWikiTableQuestions, kWikiSql, kSynthetic, kOther };

std::string_view TableSourceName(TableSource source);
std::optional<TableSource> ParseTableSource(std::string_view name);

// A rectangular grid of cells with a title and unique column headers.
struct Table {
  std::string id;
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  TableSource source = TableSource::kOther;

  int num_columns() const { return static_cast<int>(headers.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

// Enforces the ingestion invariants: non-empty id, non-empty and pairwise
// distinct headers (DuplicateHeader), and every row exactly as wide as the
// header (InvalidArgument).
void CheckTable(const Table& table);

}  // namespace trikit

#endif  // TRIKIT_TABLE_H_
