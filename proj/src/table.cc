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

#include "trikit/table.h"

#include <set>

#include "trikit/error.h"

namespace trikit {

std::string_view TableSourceName(TableSource source) {
  switch (source) {
    case TableSource::kWikiTableQuestions: return "wikitablequestions";
    case TableSource::kWikiSql: return "wikisql";
    case TableSource::kSynthetic: return "synthetic";
    case TableSource::kOther: return "other";
  }
  return "other";
}

std::optional<TableSource> ParseTableSource(std::string_view name) {
  if (name == "wikitablequestions") return TableSource::kWikiTableQuestions;
  if (name == "wikisql") return TableSource::kWikiSql;
  if (name == "synthetic") return TableSource::kSynthetic;
  if (name == "other") return TableSource::kOther;
  return std::nullopt;
}

void CheckTable(const Table& table) {
  if (table.id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "table id is empty");
  }
  std::set<std::string_view> seen;
  for (size_t i = 0; i < table.headers.size(); ++i) {
    const std::string& h = table.headers[i];
    if (h.empty()) {
      throw Error(ErrorCode::kDuplicateHeader,
                  "header " + std::to_string(i) + " is empty", table.id);
    }
    if (!seen.insert(h).second) {
      throw Error(ErrorCode::kDuplicateHeader,
                  "duplicate header \"" + h + "\"", table.id);
    }
  }
  for (size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.headers.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(table.rows[r].size()) + " cells, expected " +
                      std::to_string(table.headers.size()),
                  table.id);
    }
  }
}

}  // namespace trikit
