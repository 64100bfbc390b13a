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

#include "trikit/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "trikit/formats.h"

namespace trikit {

using json = nlohmann::json;

namespace {

// Runs fn(0..n-1) on up to `jobs` threads. If several calls throw, the
// exception of the lowest index is rethrown.
void ParallelFor(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  const size_t workers = std::min<size_t>(n, static_cast<size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

void TableCollection::AddTable(Table table) {
  CheckTable(table);
  if (index_.count(table.id)) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate table id", table.id);
  }
  index_[table.id] = tables_.size();
  tables_.push_back(std::move(table));
}

void TableCollection::SetAnnotation(OntologyAnnotation annotation) {
  if (!index_.count(annotation.table_id)) {
    throw Error(ErrorCode::kInvalidArgument, "annotation for unknown table",
                annotation.table_id);
  }
  const std::string id = annotation.table_id;
  annotations_.insert_or_assign(id, std::move(annotation));
}

const Table* TableCollection::FindTable(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &tables_[it->second];
}

const OntologyAnnotation* TableCollection::FindAnnotation(std::string_view id) const {
  auto it = annotations_.find(id);
  return it == annotations_.end() ? nullptr : &it->second;
}

TableCollection TableCollection::FromJsonl(std::string_view text) {
  TableCollection out;
  size_t line = 0;
  for (const json& j : ParseJsonLines(text)) {
    ++line;
    try {
      out.AddTable(TableFromJson(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), "table record " + std::to_string(line));
    } catch (const Error& e) {
      throw e.WithLocation("table record " + std::to_string(line));
    }
  }
  return out;
}

std::string TableCollection::ToJsonl() const {
  std::string out;
  for (const Table& t : tables_) out += TableToJson(t).dump() + "\n";
  return out;
}

void TableCollection::LoadAnnotationsJsonl(std::string_view text) {
  size_t line = 0;
  for (const json& j : ParseJsonLines(text)) {
    ++line;
    try {
      SetAnnotation(AnnotationFromJson(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), "annotation record " + std::to_string(line));
    } catch (const Error& e) {
      throw e.WithLocation("annotation record " + std::to_string(line));
    }
  }
}

std::vector<TableValidation> ValidateCollection(const TableCollection& tables) {
  std::vector<TableValidation> out;
  for (const Table& table : tables.tables()) {
    TableValidation v;
    v.table_id = table.id;
    const OntologyAnnotation* ann = tables.FindAnnotation(table.id);
    if (!ann) {
      v.build_error = Error(ErrorCode::kInvalidArgument, "table has no annotation", table.id);
      out.push_back(std::move(v));
      continue;
    }
    try {
      v.findings = ValidateTree(BuildTree(table, *ann), table).findings;
    } catch (const Error& e) {
      v.build_error = e;
      v.findings = ValidateTree(BuildTreeUnchecked(table, *ann), table).findings;
    }
    out.push_back(std::move(v));
  }
  return out;
}

json ValidationReportToJson(const std::vector<TableValidation>& report) {
  json tables = json::array();
  int invalid = 0;
  for (const TableValidation& v : report) {
    json jt = {{"table_id", v.table_id}, {"valid", v.ok()}};
    if (v.build_error) {
      jt["error"] = {{"code", ErrorCodeName(v.build_error->code())},
                     {"message", v.build_error->what()}};
    }
    json findings = json::array();
    for (const Finding& f : v.findings) {
      findings.push_back({{"kind", FindingKindName(f.kind)},
                          {"nodes", NodesToJson(f.nodes)},
                          {"message", f.message}});
    }
    jt["findings"] = std::move(findings);
    if (!v.ok()) ++invalid;
    tables.push_back(std::move(jt));
  }
  return {{"tables_checked", report.size()}, {"tables_invalid", invalid}, {"tables", tables}};
}

SampleResult SampleCollection(const TableCollection& tables, const SampleOptions& options) {
  options.sampler.Validate();
  if (options.samples_per_row < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples_per_row must be at least 1");
  }
  const auto& all = tables.tables();
  std::vector<std::vector<SampledHighlight>> per_table(all.size());
  std::vector<bool> skipped(all.size(), false);
  ParallelFor(all.size(), options.jobs, [&](size_t i) {
    const Table& table = all[i];
    const OntologyAnnotation* ann = tables.FindAnnotation(table.id);
    if (!ann) {
      skipped[i] = true;
      return;
    }
    try {
      const OntologyTree tree = BuildTree(table, *ann);
      Rng rng = Rng::ForKey(options.sampler.seed, table.id);
      for (int r = 0; r < table.num_rows(); ++r) {
        for (int k = 0; k < options.samples_per_row; ++k) {
          SampledHighlight s;
          s.component = SampleComponent(tree, options.sampler, rng);
          s.highlight = {table.id, r, s.component.nodes};
          per_table[i].push_back(std::move(s));
        }
      }
    } catch (const Error& e) {
      throw e.WithLocation("table " + table.id);
    }
  });
  SampleResult out;
  for (size_t i = 0; i < all.size(); ++i) {
    if (skipped[i]) out.skipped_tables.push_back(all[i].id);
    for (auto& s : per_table[i]) out.samples.push_back(std::move(s));
  }
  return out;
}

ExtractResult ExtractCollection(
    const TableCollection& tables, const std::vector<HighlightRecord>& highlights,
    const std::map<std::pair<std::string, int>, std::vector<Realization>>& sentences,
    const ExtractOptions& options) {
  // Build each referenced tree once.
  std::map<std::string, OntologyTree, std::less<>> trees;
  for (size_t i = 0; i < highlights.size(); ++i) {
    const std::string& id = highlights[i].highlight.table_id;
    if (trees.count(id)) continue;
    const std::string loc = "highlight " + std::to_string(i + 1);
    const Table* table = tables.FindTable(id);
    if (!table) throw Error(ErrorCode::kInvalidArgument, "unknown table \"" + id + "\"", loc);
    const OntologyAnnotation* ann = tables.FindAnnotation(id);
    if (!ann) {
      throw Error(ErrorCode::kInvalidArgument, "table \"" + id + "\" has no annotation", loc);
    }
    try {
      trees.emplace(id, BuildTree(*table, *ann));
    } catch (const Error& e) {
      throw e.WithLocation(loc);
    }
  }

  struct Slot {
    std::optional<Extraction> extraction;
    bool oversize = false;
  };
  std::vector<Slot> slots(highlights.size());
  ParallelFor(highlights.size(), options.jobs, [&](size_t i) {
    const Highlight& h = highlights[i].highlight;
    try {
      slots[i].extraction =
          ExtractHighlight(trees.at(h.table_id), *tables.FindTable(h.table_id), h);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kOversize) {
        slots[i].oversize = true;
        return;
      }
      throw e.WithLocation("highlight " + std::to_string(i + 1));
    }
  });

  ExtractResult out;
  for (size_t i = 0; i < highlights.size(); ++i) {
    if (slots[i].oversize) {
      ++out.oversize_discarded;
      continue;
    }
    const Highlight& h = highlights[i].highlight;
    Extraction& ex = *slots[i].extraction;
    std::vector<Realization> lex = highlights[i].realizations;
    if (auto it = sentences.find({h.table_id, h.row_index}); it != sentences.end()) {
      lex.insert(lex.end(), it->second.begin(), it->second.end());
    }
    if (lex.empty()) {
      json p = TripleSetToJson(ex.tripleset);
      p["table_id"] = h.table_id;
      p["row_index"] = h.row_index;
      p["nodes"] = NodesToJson(ex.subtree);
      p["has_empty_value"] = ex.has_empty_value;
      out.pending.push_back(std::move(p));
      continue;
    }
    for (Realization& r : lex) {
      if (r.comment.empty()) {
        r.comment = std::string(ProvenanceDisplayName(ex.tripleset.provenance));
      }
    }
    const std::string eid = "Id" + std::to_string(out.entries.size() + 1);
    CorpusEntry entry;
    try {
      entry = AssembleEntry(std::move(ex.tripleset), std::move(lex), options.category, eid);
    } catch (const Error& e) {
      throw e.WithLocation("highlight " + std::to_string(i + 1));
    }
    entry.table_id = h.table_id;
    entry.has_empty_value = ex.has_empty_value;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

std::map<std::pair<std::string, int>, std::vector<Realization>> SentencesFromJsonl(
    std::string_view text) {
  std::map<std::pair<std::string, int>, std::vector<Realization>> out;
  size_t line = 0;
  for (const json& j : ParseJsonLines(text)) {
    ++line;
    try {
      Realization r;
      r.text = j.at("text").get<std::string>();
      r.comment = j.value("comment", "");
      const std::string who = j.value("annotator", "internal");
      r.annotator = ParseAnnotator(who);
      if (!r.annotator) throw Error(ErrorCode::kParse, "unknown annotator \"" + who + "\"");
      out[{j.at("table_id").get<std::string>(), j.at("row_index").get<int>()}].push_back(
          std::move(r));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), "sentence record " + std::to_string(line));
    } catch (const Error& e) {
      throw e.WithLocation("sentence record " + std::to_string(line));
    }
  }
  return out;
}

AlignResult AlignWikiSqlRecords(const TableCollection& tables,
                                const std::vector<json>& records,
                                const std::map<std::string, std::string>& declaratives) {
  AlignResult out;
  for (size_t i = 0; i < records.size(); ++i) {
    const json& rec = records[i];
    const std::string loc = "record " + std::to_string(i + 1);
    auto reject = [&](const std::string& reason) {
      json u = rec;
      u["reason"] = reason;
      out.unaligned.push_back(std::move(u));
    };
    try {
      const std::string table_id = rec.at("table_id").get<std::string>();
      const Table* table = tables.FindTable(table_id);
      if (!table) {
        reject("unknown table");
        continue;
      }
      const json& sql = rec.at("sql");
      const std::string raw =
          sql.is_string() ? sql.get<std::string>() : StructuredSqlToText(sql, *table);
      const SqlQuery query = ParseSql(raw, table);
      if (FilterSql(query) == SqlVerdict::kReject) {
        ++out.rejected_aggregate;
        reject("aggregate query");
        continue;
      }
      const json& answer = rec.at("answer");
      const std::string answer_text = answer.is_string()  ? answer.get<std::string>()
                                      : answer.is_array() && answer.size() == 1 &&
                                                answer[0].is_string()
                                          ? answer[0].get<std::string>()
                                          : answer.dump();
      Alignment a = AlignRow(query, *table, answer_text);
      if (auto* u = std::get_if<Unaligned>(&a)) {
        reject(u->reason);
        continue;
      }
      HighlightRecord hr;
      hr.highlight = std::get<Highlight>(std::move(a));
      std::string sentence = rec.value("declarative_sentence", "");
      if (sentence.empty() && rec.contains("id")) {
        const std::string id = rec.at("id").is_string() ? rec.at("id").get<std::string>()
                                                        : rec.at("id").dump();
        if (auto it = declaratives.find(id); it != declaratives.end()) sentence = it->second;
      }
      if (!sentence.empty()) {
        hr.realizations.push_back({sentence, Annotator::kAutoDeclarative, "WikiSQL"});
      }
      out.aligned.push_back(std::move(hr));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, e.what(), loc);
    } catch (const Error& e) {
      throw e.WithLocation(loc);
    }
  }
  return out;
}

SplitAssignment SplitCollection(const TableCollection& tables, const SplitConfig& config) {
  std::vector<TableSignature> sigs;
  for (const Table& t : tables.tables()) sigs.push_back(MakeSignature(t));
  return SplitTables(sigs, config);
}

}  // namespace trikit
