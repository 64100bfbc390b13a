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

#include "trikit/adapters.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "trikit/error.h"
#include "trikit/formats.h"
#include "trikit/io.h"

namespace trikit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// ---- SQL tokens ----

struct SqlToken {
  enum class Kind { kWord, kString, kIdent, kSymbol };
  Kind kind;
  std::string text;  // unquoted content for kString / kIdent
  size_t begin = 0;
  size_t end = 0;
};

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::vector<SqlToken> TokenizeSql(std::string_view raw) {
  std::vector<SqlToken> out;
  size_t i = 0;
  while (i < raw.size()) {
    const char c = raw[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const size_t begin = i;
    if (c == '\'' || c == '"' || c == '`' || c == '[') {
      const char close = c == '[' ? ']' : c;
      std::string text;
      ++i;
      bool closed = false;
      while (i < raw.size()) {
        if (raw[i] == close) {
          if (close != ']' && i + 1 < raw.size() && raw[i + 1] == close) {
            text += close;
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        text += raw[i++];
      }
      if (!closed) {
        throw Error(ErrorCode::kParse, "unterminated quoted text in SQL",
                    "offset " + std::to_string(begin));
      }
      out.push_back({c == '\'' ? SqlToken::Kind::kString : SqlToken::Kind::kIdent,
                     std::move(text), begin, i});
    } else if (IsWordChar(c)) {
      while (i < raw.size() && IsWordChar(raw[i])) ++i;
      out.push_back({SqlToken::Kind::kWord, std::string(raw.substr(begin, i - begin)),
                     begin, i});
    } else {
      ++i;
      // Two-character comparison operators.
      if (i < raw.size() && (c == '<' || c == '>' || c == '!') && raw[i] == '=') ++i;
      if (c == '<' && i < raw.size() && raw[i] == '>') ++i;
      out.push_back({SqlToken::Kind::kSymbol, std::string(raw.substr(begin, i - begin)),
                     begin, i});
    }
  }
  return out;
}

bool IsKeyword(const SqlToken& t, std::string_view kw) {
  return t.kind == SqlToken::Kind::kWord && Upper(t.text) == kw;
}

int ResolveColumn(const Table& table, std::string_view name) {
  const std::string_view n = Trim(name);
  for (int i = 0; i < table.num_columns(); ++i) {
    if (Trim(table.headers[i]) == n) return i;
  }
  int found = -1;
  const std::string up = Upper(n);
  for (int i = 0; i < table.num_columns(); ++i) {
    if (Upper(Trim(table.headers[i])) == up) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  return found;
}

// Text of a run of tokens as a column name: a single quoted identifier is
// used as-is, otherwise the raw source span.
std::string ColumnText(std::string_view raw, const std::vector<SqlToken>& toks,
                       size_t from, size_t to) {
  if (from >= to) return "";
  if (to - from == 1 && toks[from].kind == SqlToken::Kind::kIdent) {
    return toks[from].text;
  }
  return std::string(Trim(raw.substr(toks[from].begin, toks[to - 1].end - toks[from].begin)));
}

}  // namespace

// ---- Meaning representations ----

MeaningRepresentation ParseMeaningRepresentation(std::string_view text) {
  std::string_view s = Trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = Trim(s.substr(1, s.size() - 2));
  }
  MeaningRepresentation mr;
  size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, what + " in MR \"" + std::string(text) + "\"",
                "offset " + std::to_string(i));
  };
  while (i < s.size()) {
    const size_t open = s.find('[', i);
    if (open == std::string_view::npos) fail("slot without '['");
    const std::string_view name = Trim(s.substr(i, open - i));
    if (name.empty()) fail("empty slot name");
    if (name.find_first_of(",]") != std::string_view::npos) fail("malformed slot name");
    int depth = 1;
    size_t j = open + 1;
    for (; j < s.size() && depth > 0; ++j) {
      if (s[j] == '[') ++depth;
      if (s[j] == ']') --depth;
    }
    if (depth != 0) {
      i = open;
      fail("unbalanced brackets");
    }
    mr.slots.emplace_back(std::string(name),
                          std::string(s.substr(open + 1, j - open - 2)));
    i = j;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size()) {
      if (s[i] != ',') fail("expected ',' between slots");
      ++i;
      if (Trim(s.substr(i)).empty()) fail("trailing ','");
    }
  }
  return mr;
}

std::optional<TripleSet> E2eToTripleSet(const MeaningRepresentation& mr) {
  auto name = std::find_if(mr.slots.begin(), mr.slots.end(),
                           [](const auto& slot) { return slot.first == "name"; });
  if (name == mr.slots.end()) return std::nullopt;
  TripleSet ts;
  ts.provenance = Provenance::kE2e;
  for (auto it = mr.slots.begin(); it != mr.slots.end(); ++it) {
    if (it == name) continue;
    ts.triples.push_back({name->second, it->first, it->second});
  }
  if (ts.triples.empty()) return std::nullopt;
  return ts;
}

E2eConversion ConvertE2eCsv(std::string_view csv, std::string_view category) {
  auto rows = ParseDelimited(csv, ',');
  if (rows.empty()) return {};
  int mr_col = -1;
  int ref_col = -1;
  for (int c = 0; c < static_cast<int>(rows[0].size()); ++c) {
    const std::string h = Upper(Trim(rows[0][c]));
    if (h == "MR" && mr_col < 0) mr_col = c;
    if (h == "REF" && ref_col < 0) ref_col = c;
  }
  if (mr_col < 0 || ref_col < 0) {
    throw Error(ErrorCode::kParse, "E2E CSV needs \"mr\" and \"ref\" columns", "line 1");
  }
  E2eConversion out;
  std::map<std::string, size_t> by_mr;
  std::set<std::string> dropped;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string loc = "record " + std::to_string(r);
    if (static_cast<int>(row.size()) <= std::max(mr_col, ref_col)) {
      throw Error(ErrorCode::kParse, "row is missing columns", loc);
    }
    const std::string& mr_text = row[mr_col];
    const std::string ref(Trim(row[ref_col]));
    if (auto it = by_mr.find(mr_text); it != by_mr.end()) {
      if (!ref.empty()) {
        out.entries[it->second].realizations.push_back(
            {ref, Annotator::kExternalDataset, "E2E"});
      }
      continue;
    }
    if (dropped.count(mr_text)) continue;
    std::optional<TripleSet> ts;
    try {
      ts = E2eToTripleSet(ParseMeaningRepresentation(mr_text));
    } catch (const Error& e) {
      throw e.WithLocation(loc);
    }
    if (!ts) {
      dropped.insert(mr_text);
      ++out.dropped;
      continue;
    }
    CorpusEntry entry;
    entry.tripleset = std::move(*ts);
    entry.category = std::string(category);
    entry.eid = "Id" + std::to_string(out.entries.size() + 1);
    if (!ref.empty()) entry.realizations.push_back({ref, Annotator::kExternalDataset, "E2E"});
    by_mr[mr_text] = out.entries.size();
    out.entries.push_back(std::move(entry));
  }
  // An MR whose references were all blank cannot form a pair.
  std::erase_if(out.entries, [&](const CorpusEntry& e) {
    if (!e.realizations.empty()) return false;
    ++out.dropped;
    return true;
  });
  return out;
}

// ---- WebNLG ----

std::vector<CorpusEntry> IngestWebNlg(std::string_view document) {
  std::vector<CorpusEntry> entries = ReadXml(document);
  for (size_t i = 0; i < entries.size(); ++i) {
    const CorpusEntry& e = entries[i];
    const std::string loc =
        e.eid.empty() ? "entry #" + std::to_string(i + 1) : "eid " + e.eid;
    if (e.tripleset.triples.empty()) {
      throw Error(ErrorCode::kMalformedEntry, "entry has no mtriple", loc);
    }
    for (const Realization& r : e.realizations) {
      if (r.text.empty()) throw Error(ErrorCode::kMalformedEntry, "empty lex", loc);
    }
  }
  return entries;
}

// ---- SQL ----

bool SqlHasAggregate(std::string_view raw) {
  static const std::set<std::string> kSingle = {"MAX", "MIN", "COUNT", "SUM",
                                                "AVG", "JOIN", "INTERSECT", "UNION"};
  const auto toks = TokenizeSql(raw);
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind != SqlToken::Kind::kWord) continue;
    const std::string up = Upper(toks[i].text);
    if (kSingle.count(up)) return true;
    if ((up == "GROUP" || up == "ORDER") && i + 1 < toks.size() &&
        IsKeyword(toks[i + 1], "BY")) {
      return true;
    }
  }
  return false;
}

SqlQuery ParseSql(std::string_view raw, const Table* table) {
  SqlQuery q;
  q.raw = std::string(raw);
  q.has_aggregate = SqlHasAggregate(raw);
  const auto toks = TokenizeSql(raw);
  if (toks.empty() || !IsKeyword(toks[0], "SELECT")) {
    throw Error(ErrorCode::kParse, "query does not start with SELECT");
  }
  // Top-level clause boundaries (outside parentheses).
  size_t from = toks.size();
  size_t where = toks.size();
  size_t tail = toks.size();
  int depth = 0;
  for (size_t i = 1; i < toks.size(); ++i) {
    const SqlToken& t = toks[i];
    if (t.kind == SqlToken::Kind::kSymbol && t.text == "(") ++depth;
    if (t.kind == SqlToken::Kind::kSymbol && t.text == ")") --depth;
    if (depth != 0) continue;
    if (from == toks.size() && IsKeyword(t, "FROM")) from = i;
    else if (from < toks.size() && where == toks.size() && IsKeyword(t, "WHERE")) where = i;
    else if (where < toks.size() && tail == toks.size() &&
             (IsKeyword(t, "ORDER") || IsKeyword(t, "GROUP") || IsKeyword(t, "LIMIT") ||
              IsKeyword(t, "UNION") || IsKeyword(t, "INTERSECT"))) {
      tail = i;
    }
  }
  if (from == toks.size()) throw Error(ErrorCode::kParse, "query has no FROM clause");

  auto resolve = [&](const std::string& name) {
    if (!table) return -1;
    const int c = ResolveColumn(*table, name);
    if (c < 0) q.unresolved.push_back(name);
    return c;
  };

  // SELECT list.
  if (from == 2 && toks[1].kind == SqlToken::Kind::kSymbol && toks[1].text == "*") {
    q.select_all = true;
  } else {
    size_t start = 1;
    depth = 0;
    for (size_t i = 1; i <= from; ++i) {
      const bool at_end = i == from;
      if (!at_end && toks[i].kind == SqlToken::Kind::kSymbol) {
        if (toks[i].text == "(") ++depth;
        if (toks[i].text == ")") --depth;
      }
      if (at_end || (depth == 0 && toks[i].kind == SqlToken::Kind::kSymbol &&
                     toks[i].text == ",")) {
        size_t b = start;
        size_t e = i;
        // Unwrap AGG( column ).
        if (e - b >= 3 && toks[b].kind == SqlToken::Kind::kWord &&
            toks[b + 1].text == "(" && toks[e - 1].text == ")") {
          b += 2;
          e -= 1;
        }
        if (!(e - b == 1 && toks[b].text == "*" && toks[b].kind == SqlToken::Kind::kSymbol)) {
          const std::string name = ColumnText(raw, toks, b, e);
          if (!name.empty()) {
            const int c = resolve(name);
            if (c >= 0) q.select_columns.push_back(c);
          }
        } else {
          q.select_all = true;
        }
        start = i + 1;
      }
    }
  }

  // WHERE conditions joined by AND.
  if (where < toks.size()) {
    size_t start = where + 1;
    for (size_t i = where + 1; i <= tail; ++i) {
      if (i != tail && !IsKeyword(toks[i], "AND")) continue;
      size_t op = start;
      while (op < i && !IsKeyword(toks[op], "LIKE") &&
             !(toks[op].kind == SqlToken::Kind::kSymbol &&
               (toks[op].text == "=" || toks[op].text == "<" ||
                toks[op].text == ">" || toks[op].text == "<=" ||
                toks[op].text == ">=" || toks[op].text == "!=" ||
                toks[op].text == "<>"))) {
        ++op;
      }
      if (op >= i || op == start || op + 1 >= i) {
        const size_t at = start < toks.size() ? toks[start].begin : raw.size();
        throw Error(ErrorCode::kParse, "malformed WHERE condition",
                    "offset " + std::to_string(at));
      }
      WhereCondition cond;
      cond.column_name = ColumnText(raw, toks, start, op);
      cond.op = toks[op].text;
      if (i - op == 2 && toks[op + 1].kind == SqlToken::Kind::kString) {
        cond.value = toks[op + 1].text;
      } else {
        cond.value = std::string(
            Trim(raw.substr(toks[op + 1].begin, toks[i - 1].end - toks[op + 1].begin)));
      }
      cond.column = resolve(cond.column_name);
      if (cond.column >= 0) q.where_columns.push_back(cond.column);
      q.conditions.push_back(std::move(cond));
      start = i + 1;
    }
  }
  return q;
}

SqlVerdict FilterSql(const SqlQuery& query) {
  return query.has_aggregate ? SqlVerdict::kReject : SqlVerdict::kAccept;
}

Alignment AlignRow(const SqlQuery& query, const Table& table,
                   std::string_view answer) {
  if (FilterSql(query) == SqlVerdict::kReject) return Unaligned{"aggregate query"};
  if (!query.unresolved.empty()) {
    return Unaligned{"unknown column \"" + query.unresolved.front() + "\""};
  }
  for (const WhereCondition& c : query.conditions) {
    if (c.op != "=") return Unaligned{"non-equality condition on \"" + c.column_name + "\""};
    if (c.column < 0) return Unaligned{"unknown column \"" + c.column_name + "\""};
  }
  int match = -1;
  for (int r = 0; r < table.num_rows(); ++r) {
    const auto& row = table.rows[r];
    const bool ok = std::all_of(query.conditions.begin(), query.conditions.end(),
                                [&](const WhereCondition& c) {
                                  return Trim(row[c.column]) == Trim(c.value);
                                });
    if (!ok) continue;
    if (match >= 0) return Unaligned{"WHERE matches more than one row"};
    match = r;
  }
  if (match < 0) return Unaligned{"WHERE matches no row"};

  const std::string_view want = Trim(answer);
  int answer_col = -1;
  for (int c = 0; c < table.num_columns(); ++c) {
    if (Trim(table.rows[match][c]) != want) continue;
    if (answer_col >= 0) return Unaligned{"answer matches more than one column"};
    answer_col = c;
  }
  if (answer_col < 0) return Unaligned{"answer matches no cell of the row"};

  Highlight h;
  h.table_id = table.id;
  h.row_index = match;
  std::set<int> cols(query.where_columns.begin(), query.where_columns.end());
  cols.insert(answer_col);
  for (int c : cols) h.nodes.push_back(NodeId::Column(c));
  return h;
}

std::string StructuredSqlToText(const nlohmann::json& sql, const Table& table) {
  static const char* kAgg[] = {"", "MAX", "MIN", "COUNT", "SUM", "AVG"};
  static const char* kOps[] = {"=", ">", "<", "OP"};
  auto header = [&](int c) {
    if (c < 0 || c >= table.num_columns()) {
      throw Error(ErrorCode::kParse, "column index " + std::to_string(c) + " out of range",
                  table.id);
    }
    std::string out = "\"";
    for (char ch : table.headers[c]) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  auto literal = [](const nlohmann::json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out = "'";
    for (char ch : s) {
      if (ch == '\'') out += '\'';
      out += ch;
    }
    return out + "'";
  };
  const int agg = sql.value("agg", 0);
  if (agg < 0 || agg > 5) throw Error(ErrorCode::kParse, "bad aggregate index");
  std::string out = "SELECT ";
  out += agg == 0 ? header(sql.at("sel").get<int>())
                  : std::string(kAgg[agg]) + "(" + header(sql.at("sel").get<int>()) + ")";
  out += " FROM table";
  bool first = true;
  for (const auto& c : sql.value("conds", nlohmann::json::array())) {
    const int op = c.at(1).get<int>();
    if (op < 0 || op > 3) throw Error(ErrorCode::kParse, "bad operator index");
    out += first ? " WHERE " : " AND ";
    first = false;
    out += header(c.at(0).get<int>()) + " " + kOps[op] + " " + literal(c.at(2));
  }
  return out;
}

}  // namespace trikit
