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

#include "trikit/io.h"

#include <fstream>
#include <sstream>
#include <system_error>

#include "trikit/error.h"

namespace trikit {

using json = nlohmann::json;

std::vector<std::vector<std::string>> ParseDelimited(std::string_view text,
                                                     char delimiter) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  size_t line = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      row_has_content = true;
    } else if (c == delimiter) {
      row.push_back(std::move(field));
      field.clear();
      row_has_content = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++line;
      if (row_has_content || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      field.clear();
      row.clear();
      row_has_content = false;
    } else {
      field += c;
      row_has_content = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kParse, "unterminated quoted field",
                "line " + std::to_string(line));
  }
  if (row_has_content || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open for reading", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed", path.string());
  return ss.str();
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open for writing", tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, "write failed", tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into place", path.string());
  }
}

Table ReadTableFile(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  char delimiter = ',';
  if (ext == ".tsv" || ext == ".tab") {
    delimiter = '\t';
  } else if (ext != ".csv") {
    throw Error(ErrorCode::kInvalidArgument, "expected a .csv or .tsv file",
                path.string());
  }
  Table table;
  table.id = path.stem().string();
  std::filesystem::path meta = path.parent_path() / (path.stem().string() + ".meta.json");
  if (std::filesystem::exists(meta)) {
    try {
      const json j = json::parse(ReadFile(meta));
      table.id = j.value("id", table.id);
      table.title = j.value("title", "");
      const std::string source = j.value("source", "other");
      auto s = ParseTableSource(source);
      if (!s) {
        throw Error(ErrorCode::kParse, "unknown table source \"" + source + "\"");
      }
      table.source = *s;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), meta.string());
    } catch (const Error& e) {
      throw e.WithLocation(meta.string());
    }
  }
  try {
    auto rows = ParseDelimited(ReadFile(path), delimiter);
    if (rows.empty()) throw Error(ErrorCode::kParse, "table has no header row");
    table.headers = std::move(rows.front());
    for (auto& h : table.headers) {
      const auto b = h.find_first_not_of(" \t");
      const auto e = h.find_last_not_of(" \t");
      h = b == std::string::npos ? "" : h.substr(b, e - b + 1);
    }
    table.rows.assign(std::make_move_iterator(rows.begin() + 1),
                      std::make_move_iterator(rows.end()));
    CheckTable(table);
  } catch (const Error& e) {
    throw e.WithLocation(path.string());
  }
  return table;
}

json TableToJson(const Table& t) {
  return {{"id", t.id},
          {"title", t.title},
          {"source", TableSourceName(t.source)},
          {"headers", t.headers},
          {"rows", t.rows}};
}

Table TableFromJson(const json& j) {
  Table t;
  t.id = j.at("id").get<std::string>();
  t.title = j.value("title", "");
  const std::string source = j.value("source", "other");
  auto s = ParseTableSource(source);
  if (!s) throw Error(ErrorCode::kParse, "unknown table source \"" + source + "\"", t.id);
  t.source = *s;
  t.headers = j.at("headers").get<std::vector<std::string>>();
  t.rows = j.value("rows", std::vector<std::vector<std::string>>{});
  CheckTable(t);
  return t;
}

json AnnotationToJson(const OntologyAnnotation& a) {
  json parents = json::array();
  for (const ParentRef& p : a.parents) {
    switch (p.kind) {
      case ParentRef::Kind::kRoot: parents.push_back("ROOT"); break;
      case ParentRef::Kind::kTitle: parents.push_back("TITLE"); break;
      case ParentRef::Kind::kColumn: parents.push_back(p.column); break;
    }
  }
  return {{"table_id", a.table_id},
          {"title_shape", TitleShapeName(a.title_shape)},
          {"parents", parents}};
}

OntologyAnnotation AnnotationFromJson(const json& j) {
  OntologyAnnotation a;
  a.table_id = j.at("table_id").get<std::string>();
  const std::string shape = j.value("title_shape", "title_under_root");
  auto s = ParseTitleShape(shape);
  if (!s) {
    throw Error(ErrorCode::kParse, "unknown title_shape \"" + shape + "\"", a.table_id);
  }
  a.title_shape = *s;
  for (const auto& p : j.at("parents")) {
    if (p.is_number_integer()) {
      a.parents.push_back(ParentRef::Column(p.get<int>()));
    } else if (p.is_null() || (p.is_string() && p.get<std::string>() == "ROOT")) {
      a.parents.push_back(ParentRef::RootChild());
    } else if (p.is_string() && p.get<std::string>() == "TITLE") {
      a.parents.push_back(ParentRef::TitleChild());
    } else {
      throw Error(ErrorCode::kParse, "bad parent reference " + p.dump(), a.table_id);
    }
  }
  return a;
}

json NodesToJson(std::span<const NodeId> nodes) {
  json out = json::array();
  for (NodeId n : nodes) {
    if (n.is_root()) {
      out.push_back("ROOT");
    } else if (n.is_title()) {
      out.push_back("TITLE");
    } else {
      out.push_back(n.column());
    }
  }
  return out;
}

std::vector<NodeId> NodesFromJson(const json& j) {
  std::vector<NodeId> out;
  for (const auto& n : j) {
    if (n.is_number_integer() && n.get<int>() >= 0) {
      out.push_back(NodeId::Column(n.get<int>()));
    } else if (n == "ROOT") {
      out.push_back(NodeId::Root());
    } else if (n == "TITLE") {
      out.push_back(NodeId::Title());
    } else {
      throw Error(ErrorCode::kParse, "bad node reference " + n.dump());
    }
  }
  return out;
}

json HighlightRecordToJson(const HighlightRecord& r) {
  json j = {{"table_id", r.highlight.table_id},
            {"row_index", r.highlight.row_index},
            {"nodes", NodesToJson(r.highlight.nodes)}};
  if (!r.realizations.empty()) {
    json lex = json::array();
    for (const Realization& x : r.realizations) {
      json jx = {{"text", x.text}};
      if (x.annotator) jx["annotator"] = AnnotatorName(*x.annotator);
      if (!x.comment.empty()) jx["comment"] = x.comment;
      lex.push_back(std::move(jx));
    }
    j["realizations"] = std::move(lex);
  }
  return j;
}

HighlightRecord HighlightRecordFromJson(const json& j) {
  HighlightRecord r;
  r.highlight.table_id = j.at("table_id").get<std::string>();
  r.highlight.row_index = j.at("row_index").get<int>();
  r.highlight.nodes = NodesFromJson(j.contains("nodes") ? j.at("nodes") : j.at("node_ids"));
  for (const auto& jx : j.value("realizations", json::array())) {
    Realization x;
    x.text = jx.at("text").get<std::string>();
    x.comment = jx.value("comment", "");
    const std::string who = jx.value("annotator", "internal");
    x.annotator = ParseAnnotator(who);
    if (!x.annotator) throw Error(ErrorCode::kParse, "unknown annotator \"" + who + "\"");
    r.realizations.push_back(std::move(x));
  }
  return r;
}

json ComponentRecordToJson(std::string_view table_id, int row_index,
                           const Component& c) {
  return {{"table_id", table_id},
          {"row_index", row_index},
          {"node_ids", NodesToJson(c.nodes)},
          {"p_used", c.p_used},
          {"target_size", c.target_size}};
}

std::vector<json> ParseJsonLines(std::string_view text) {
  std::vector<json> out;
  size_t pos = 0;
  size_t line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), "line " + std::to_string(line_no));
    }
  }
  return out;
}

}  // namespace trikit
