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

#ifndef TRIKIT_IO_H_
#define TRIKIT_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "trikit/ontology.h"
#include "trikit/sampler.h"
#include "trikit/table.h"
#include "trikit/tripler.h"

namespace trikit {

// RFC 4180 style reader: quoted fields may hold the delimiter, doubled
// quotes and line breaks. A trailing empty line is ignored.
std::vector<std::vector<std::string>> ParseDelimited(std::string_view text,
                                                     char delimiter);

std::string ReadFile(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view data);

// Reads a .csv or .tsv table whose first row holds the headers. Metadata comes
// from the sidecar "<stem>.meta.json" ({"id", "title", "source"}) when present;
// otherwise the id is the file stem, the title empty and the source "other".
Table ReadTableFile(const std::filesystem::path& path);

nlohmann::json TableToJson(const Table& table);
Table TableFromJson(const nlohmann::json& j);

// {"table_id", "title_shape", "parents": ["ROOT" | "TITLE" | int, ...]}
nlohmann::json AnnotationToJson(const OntologyAnnotation& a);
OntologyAnnotation AnnotationFromJson(const nlohmann::json& j);

// Node lists use the annotation vocabulary: "ROOT", "TITLE" or a column index.
nlohmann::json NodesToJson(std::span<const NodeId> nodes);
std::vector<NodeId> NodesFromJson(const nlohmann::json& j);

// A highlight with the realizations written for it, if any.
struct HighlightRecord {
  Highlight highlight;
  std::vector<Realization> realizations;
};

nlohmann::json HighlightRecordToJson(const HighlightRecord& r);
HighlightRecord HighlightRecordFromJson(const nlohmann::json& j);

// One sampled component of one row.
nlohmann::json ComponentRecordToJson(std::string_view table_id, int row_index,
                                     const Component& c);

// Parses every non-blank line of a JSON lines file; errors carry the line.
std::vector<nlohmann::json> ParseJsonLines(std::string_view text);

}  // namespace trikit

#endif  // TRIKIT_IO_H_
