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

#include "trikit/c_api.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "trikit/adapters.h"
#include "trikit/corpus_stats.h"
#include "trikit/error.h"
#include "trikit/formats.h"
#include "trikit/io.h"
#include "trikit/pipeline.h"
#include "trikit/unify.h"

struct trikit_tables {
  trikit::TableCollection collection;
};

struct trikit_corpus {
  std::vector<trikit::CorpusEntry> entries;
};

struct trikit_predicate_map {
  trikit::PredicateMap map;
};

namespace {

using json = nlohmann::json;

thread_local std::string g_error_message;
thread_local std::string g_error_location;

trikit_status ToStatus(trikit::ErrorCode code) {
  using trikit::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return TRIKIT_ERR_INVALID_ARGUMENT;
    case ErrorCode::kIo: return TRIKIT_ERR_IO;
    case ErrorCode::kParse: return TRIKIT_ERR_PARSE;
    case ErrorCode::kCycle: return TRIKIT_ERR_CYCLE;
    case ErrorCode::kDisconnected: return TRIKIT_ERR_DISCONNECTED;
    case ErrorCode::kBadIndex: return TRIKIT_ERR_BAD_INDEX;
    case ErrorCode::kDuplicateHeader: return TRIKIT_ERR_DUPLICATE_HEADER;
    case ErrorCode::kEmptyTree: return TRIKIT_ERR_EMPTY_TREE;
    case ErrorCode::kOversize: return TRIKIT_ERR_OVERSIZE;
    case ErrorCode::kEmptyRealization: return TRIKIT_ERR_EMPTY_REALIZATION;
    case ErrorCode::kMalformedEntry: return TRIKIT_ERR_MALFORMED_ENTRY;
    case ErrorCode::kDegenerateSplit: return TRIKIT_ERR_DEGENERATE_SPLIT;
    case ErrorCode::kPredicateMap: return TRIKIT_ERR_PREDICATE_MAP;
    case ErrorCode::kInternal: return TRIKIT_ERR_INTERNAL;
  }
  return TRIKIT_ERR_INTERNAL;
}

trikit_status Fail(trikit_status status, std::string message, std::string location = "") {
  g_error_message = std::move(message);
  g_error_location = std::move(location);
  return status;
}

template <class F>
trikit_status Guard(F&& body) {
  g_error_message.clear();
  g_error_location.clear();
  try {
    body();
    return TRIKIT_OK;
  } catch (const trikit::Error& e) {
    return Fail(ToStatus(e.code()), e.what(), e.location());
  } catch (const json::exception& e) {
    return Fail(TRIKIT_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(TRIKIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(TRIKIT_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(TRIKIT_ERR_INTERNAL, "unknown exception");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw trikit::Error(trikit::ErrorCode::kInvalidArgument, what);
}

char* CopyString(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void Emit(char** out, std::string_view s) {
  if (out) *out = CopyString(s);
}

std::string JsonLines(const std::vector<json>& records) {
  std::string out;
  for (const json& j : records) out += j.dump() + "\n";
  return out;
}

trikit::SamplerConfig ToSampler(const trikit_sampler_config& c) {
  trikit::SamplerConfig s;
  s.size_min = c.size_min;
  s.size_max = c.size_max;
  s.p_min = c.p_min;
  s.p_max = c.p_max;
  s.seed = c.seed;
  return s;
}

std::string Serialize(const std::vector<trikit::CorpusEntry>& entries, trikit_format format) {
  switch (format) {
    case TRIKIT_FORMAT_JSONL: return trikit::WriteJsonl(entries);
    case TRIKIT_FORMAT_XML: return trikit::WriteXml(entries);
    case TRIKIT_FORMAT_LINEARIZED: {
      std::string out;
      for (const auto& e : entries) out += trikit::Linearize(e.tripleset) + "\n";
      return out;
    }
  }
  throw trikit::Error(trikit::ErrorCode::kInvalidArgument, "unknown format");
}

}  // namespace

extern "C" {

const char* trikit_version(void) { return "1.0.0"; }

const char* trikit_status_name(trikit_status status) {
  switch (status) {
    case TRIKIT_OK: return "ok";
    case TRIKIT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TRIKIT_ERR_IO: return "io_error";
    case TRIKIT_ERR_PARSE: return "parse_error";
    case TRIKIT_ERR_CYCLE: return "cycle_error";
    case TRIKIT_ERR_DISCONNECTED: return "disconnected_error";
    case TRIKIT_ERR_BAD_INDEX: return "bad_index_error";
    case TRIKIT_ERR_DUPLICATE_HEADER: return "duplicate_header_error";
    case TRIKIT_ERR_EMPTY_TREE: return "empty_tree_error";
    case TRIKIT_ERR_OVERSIZE: return "oversize_error";
    case TRIKIT_ERR_EMPTY_REALIZATION: return "empty_realization_error";
    case TRIKIT_ERR_MALFORMED_ENTRY: return "malformed_entry_error";
    case TRIKIT_ERR_DEGENERATE_SPLIT: return "degenerate_split_error";
    case TRIKIT_ERR_PREDICATE_MAP: return "predicate_map_error";
    case TRIKIT_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_error";
}

const char* trikit_last_error_message(void) { return g_error_message.c_str(); }
const char* trikit_last_error_location(void) { return g_error_location.c_str(); }
void trikit_string_free(char* s) { std::free(s); }

void trikit_sampler_config_init(trikit_sampler_config* c) {
  if (!c) return;
  const trikit::SamplerConfig d;
  c->size_min = d.size_min;
  c->size_max = d.size_max;
  c->p_min = d.p_min;
  c->p_max = d.p_max;
  c->seed = d.seed;
  c->samples_per_row = 1;
  c->jobs = 1;
}

void trikit_split_config_init(trikit_split_config* c) {
  if (!c) return;
  const trikit::SplitConfig d;
  c->threshold = d.threshold;
  c->test_seed_fraction = d.test_seed_fraction;
  c->dev_seed_fraction = d.dev_seed_fraction;
  c->seed = d.seed;
}

trikit_status trikit_write_file(const char* path, const char* data, size_t size) {
  return Guard([&] {
    Require(path && (data || size == 0), "null argument");
    trikit::WriteFileAtomic(path, std::string_view(data ? data : "", size));
  });
}

trikit_status trikit_tables_ingest(const char* const* paths, size_t count, trikit_tables** out) {
  return Guard([&] {
    Require(out && (paths || count == 0), "null argument");
    auto t = std::make_unique<trikit_tables>();
    for (size_t i = 0; i < count; ++i) {
      Require(paths[i] != nullptr, "null path");
      try {
        t->collection.AddTable(trikit::ReadTableFile(paths[i]));
      } catch (const trikit::Error& e) {
        throw e.code() == trikit::ErrorCode::kInvalidArgument &&
                      e.location().find(paths[i]) == std::string::npos
                  ? e.WithLocation(paths[i])
                  : e;
      }
    }
    *out = t.release();
  });
}

trikit_status trikit_tables_load(const char* path, trikit_tables** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    auto t = std::make_unique<trikit_tables>();
    try {
      t->collection = trikit::TableCollection::FromJsonl(trikit::ReadFile(path));
    } catch (const trikit::Error& e) {
      if (e.code() == trikit::ErrorCode::kIo) throw;
      throw e.WithLocation(path);
    }
    *out = t.release();
  });
}

trikit_status trikit_tables_save(const trikit_tables* tables, const char* path) {
  return Guard([&] {
    Require(tables && path, "null argument");
    trikit::WriteFileAtomic(path, tables->collection.ToJsonl());
  });
}

trikit_status trikit_tables_load_annotations(trikit_tables* tables, const char* path) {
  return Guard([&] {
    Require(tables && path, "null argument");
    try {
      tables->collection.LoadAnnotationsJsonl(trikit::ReadFile(path));
    } catch (const trikit::Error& e) {
      if (e.code() == trikit::ErrorCode::kIo) throw;
      throw e.WithLocation(path);
    }
  });
}

size_t trikit_tables_count(const trikit_tables* tables) {
  return tables ? tables->collection.tables().size() : 0;
}

void trikit_tables_free(trikit_tables* tables) { delete tables; }

trikit_status trikit_tables_validate(const trikit_tables* tables, char** report_json,
                                     size_t* invalid_count) {
  return Guard([&] {
    Require(tables != nullptr, "null argument");
    const auto report = trikit::ValidateCollection(tables->collection);
    const json j = trikit::ValidationReportToJson(report);
    if (invalid_count) *invalid_count = j.at("tables_invalid").get<size_t>();
    Emit(report_json, j.dump(2) + "\n");
  });
}

trikit_status trikit_tables_sample(const trikit_tables* tables,
                                   const trikit_sampler_config* config, char** jsonl) {
  return Guard([&] {
    Require(tables && config && jsonl, "null argument");
    trikit::SampleOptions opts;
    opts.sampler = ToSampler(*config);
    opts.samples_per_row = config->samples_per_row;
    opts.jobs = config->jobs;
    const auto result = trikit::SampleCollection(tables->collection, opts);
    std::vector<json> lines;
    for (const auto& s : result.samples) {
      lines.push_back(trikit::ComponentRecordToJson(s.highlight.table_id,
                                                    s.highlight.row_index, s.component));
    }
    Emit(jsonl, JsonLines(lines));
  });
}

trikit_status trikit_tables_extract(const trikit_tables* tables,
                                    const trikit_extract_options* options,
                                    trikit_corpus** out, char** pending_jsonl,
                                    size_t* oversize) {
  return Guard([&] {
    Require(tables && options && out, "null argument");
    std::vector<trikit::HighlightRecord> highlights;
    if (options->highlights_path) {
      size_t line = 0;
      for (const json& j : trikit::ParseJsonLines(trikit::ReadFile(options->highlights_path))) {
        ++line;
        try {
          highlights.push_back(trikit::HighlightRecordFromJson(j));
        } catch (const json::exception& e) {
          throw trikit::Error(trikit::ErrorCode::kParse, e.what(),
                              std::string(options->highlights_path) + ": record " +
                                  std::to_string(line));
        }
      }
    } else {
      Require(options->sampler != nullptr, "extract needs highlights or a sampler config");
      trikit::SampleOptions opts;
      opts.sampler = ToSampler(*options->sampler);
      opts.samples_per_row = options->sampler->samples_per_row;
      opts.jobs = options->jobs;
      for (auto& s : trikit::SampleCollection(tables->collection, opts).samples) {
        highlights.push_back({std::move(s.highlight), {}});
      }
    }
    std::map<std::pair<std::string, int>, std::vector<trikit::Realization>> sentences;
    if (options->sentences_path) {
      try {
        sentences = trikit::SentencesFromJsonl(trikit::ReadFile(options->sentences_path));
      } catch (const trikit::Error& e) {
        if (e.code() == trikit::ErrorCode::kIo) throw;
        throw e.WithLocation(options->sentences_path);
      }
    }
    trikit::ExtractOptions eopts;
    if (options->category) eopts.category = options->category;
    eopts.jobs = options->jobs;
    auto result = trikit::ExtractCollection(tables->collection, highlights, sentences, eopts);
    auto corpus = std::make_unique<trikit_corpus>();
    corpus->entries = std::move(result.entries);
    Emit(pending_jsonl, JsonLines(result.pending));
    if (oversize) *oversize = static_cast<size_t>(result.oversize_discarded);
    *out = corpus.release();
  });
}

trikit_status trikit_tables_align_wikisql(const trikit_tables* tables, const char* records_path,
                                          const char* declaratives_path,
                                          char** highlights_jsonl, char** unaligned_jsonl) {
  return Guard([&] {
    Require(tables && records_path && highlights_jsonl, "null argument");
    std::map<std::string, std::string> declaratives;
    if (declaratives_path) {
      for (const json& j : trikit::ParseJsonLines(trikit::ReadFile(declaratives_path))) {
        const json& id = j.at("id");
        declaratives[id.is_string() ? id.get<std::string>() : id.dump()] =
            j.at("sentence").get<std::string>();
      }
    }
    trikit::AlignResult result;
    try {
      result = trikit::AlignWikiSqlRecords(
          tables->collection, trikit::ParseJsonLines(trikit::ReadFile(records_path)),
          declaratives);
    } catch (const trikit::Error& e) {
      if (e.code() == trikit::ErrorCode::kIo) throw;
      throw e.WithLocation(records_path);
    }
    std::vector<json> aligned;
    for (const auto& h : result.aligned) aligned.push_back(trikit::HighlightRecordToJson(h));
    Emit(highlights_jsonl, JsonLines(aligned));
    Emit(unaligned_jsonl, JsonLines(result.unaligned));
  });
}

trikit_status trikit_tables_split(const trikit_tables* tables, const trikit_split_config* config,
                                  char** tsv) {
  return Guard([&] {
    Require(tables && config && tsv, "null argument");
    trikit::SplitConfig c;
    c.threshold = config->threshold;
    c.test_seed_fraction = config->test_seed_fraction;
    c.dev_seed_fraction = config->dev_seed_fraction;
    c.seed = config->seed;
    std::string out;
    for (const auto& [id, split] : trikit::SplitCollection(tables->collection, c)) {
      out += id + "\t" + std::string(trikit::SplitName(split)) + "\n";
    }
    Emit(tsv, out);
  });
}

trikit_status trikit_corpus_create(trikit_corpus** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new trikit_corpus();
  });
}

trikit_status trikit_corpus_load(const char* path, trikit_corpus** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    auto corpus = std::make_unique<trikit_corpus>();
    const std::string text = trikit::ReadFile(path);
    try {
      const std::string_view p(path);
      corpus->entries = p.ends_with(".xml") ? trikit::ReadXml(text) : trikit::ReadJsonl(text);
    } catch (const trikit::Error& e) {
      throw e.WithLocation(path);
    }
    *out = corpus.release();
  });
}

trikit_status trikit_corpus_save(const trikit_corpus* corpus, const char* path,
                                 trikit_format format) {
  return Guard([&] {
    Require(corpus && path, "null argument");
    trikit::WriteFileAtomic(path, Serialize(corpus->entries, format));
  });
}

trikit_status trikit_corpus_serialize(const trikit_corpus* corpus, trikit_format format,
                                      char** out) {
  return Guard([&] {
    Require(corpus && out, "null argument");
    Emit(out, Serialize(corpus->entries, format));
  });
}

trikit_status trikit_corpus_append(trikit_corpus* dst, const trikit_corpus* src) {
  return Guard([&] {
    Require(dst && src, "null argument");
    if (dst == src) {
      auto copy = src->entries;
      dst->entries.insert(dst->entries.end(), copy.begin(), copy.end());
    } else {
      dst->entries.insert(dst->entries.end(), src->entries.begin(), src->entries.end());
    }
  });
}

size_t trikit_corpus_size(const trikit_corpus* corpus) {
  return corpus ? corpus->entries.size() : 0;
}

void trikit_corpus_free(trikit_corpus* corpus) { delete corpus; }

trikit_status trikit_ingest_webnlg(const char* xml_path, int verbatim, trikit_corpus** out) {
  return Guard([&] {
    Require(xml_path && out, "null argument");
    auto corpus = std::make_unique<trikit_corpus>();
    const std::string text = trikit::ReadFile(xml_path);
    try {
      corpus->entries = trikit::IngestWebNlg(text);
    } catch (const trikit::Error& e) {
      throw e.WithLocation(xml_path);
    }
    if (!verbatim) {
      for (auto& e : corpus->entries) {
        if (e.tripleset.provenance == trikit::Provenance::kUnknown) {
          e.tripleset.provenance = trikit::Provenance::kWebNlg;
        }
      }
    }
    *out = corpus.release();
  });
}

trikit_status trikit_convert_e2e(const char* csv_path, const char* category,
                                 trikit_corpus** out, size_t* dropped) {
  return Guard([&] {
    Require(csv_path && out, "null argument");
    const std::string text = trikit::ReadFile(csv_path);
    trikit::E2eConversion conv;
    try {
      conv = trikit::ConvertE2eCsv(text, category ? category : "E2E");
    } catch (const trikit::Error& e) {
      throw e.WithLocation(csv_path);
    }
    auto corpus = std::make_unique<trikit_corpus>();
    corpus->entries = std::move(conv.entries);
    if (dropped) *dropped = static_cast<size_t>(conv.dropped);
    *out = corpus.release();
  });
}

trikit_status trikit_predicate_map_load(const char* tsv_path, trikit_predicate_map** out) {
  return Guard([&] {
    Require(tsv_path && out, "null argument");
    const std::string text = trikit::ReadFile(tsv_path);
    auto m = std::make_unique<trikit_predicate_map>();
    try {
      m->map = trikit::PredicateMap::FromTsv(text);
    } catch (const trikit::Error& e) {
      throw e.WithLocation(tsv_path);
    }
    *out = m.release();
  });
}

size_t trikit_predicate_map_size(const trikit_predicate_map* map) {
  return map ? map->map.size() : 0;
}

void trikit_predicate_map_free(trikit_predicate_map* map) { delete map; }

trikit_status trikit_corpus_unify(trikit_corpus* corpus, const trikit_predicate_map* map,
                                  char** unmapped) {
  return Guard([&] {
    Require(corpus && map, "null argument");
    std::set<std::string> missing;
    for (auto& e : corpus->entries) {
      e.tripleset = trikit::UnifyTripleSet(e.tripleset, map->map, &missing);
    }
    std::string lines;
    for (const auto& p : missing) lines += p + "\n";
    Emit(unmapped, lines);
  });
}

trikit_status trikit_corpus_stats(const trikit_corpus* corpus, int by_partition, char** json_out,
                                  char** text_out) {
  return Guard([&] {
    Require(corpus != nullptr, "null argument");
    const auto overall = trikit::ComputeStats(corpus->entries);
    json j = {{"overall", trikit::StatsToJson(overall)}};
    std::map<std::string, trikit::CorpusStats> columns;
    if (by_partition) {
      json parts = json::object();
      for (const auto& [name, s] : trikit::ComputeStatsByPartition(corpus->entries)) {
        parts[name] = trikit::StatsToJson(s);
        columns[name] = s;
      }
      j["partitions"] = std::move(parts);
    }
    columns["overall"] = overall;
    Emit(json_out, j.dump(2) + "\n");
    Emit(text_out, trikit::FormatStatsTable(columns));
  });
}

int trikit_sql_has_aggregate(const char* sql) {
  if (!sql) return -1;
  try {
    return trikit::SqlHasAggregate(sql) ? 1 : 0;
  } catch (...) {
    return -1;
  }
}

}  // extern "C"
