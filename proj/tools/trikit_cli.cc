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

// Command-line driver. Every stage reads its inputs from files and writes its
// outputs through write-then-rename, so stages can be rerun independently.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trikit/c_api.h"

namespace {

using json = nlohmann::json;

constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

// Thrown when a library call fails; carries the status so main() can report.
struct StatusError {
  trikit_status status;
  std::string message;
  std::string location;
};

void Check(trikit_status s) {
  if (s != TRIKIT_OK) {
    throw StatusError{s, trikit_last_error_message(), trikit_last_error_location()};
  }
}

[[noreturn]] void Usage(const std::string& message) {
  throw StatusError{TRIKIT_ERR_INVALID_ARGUMENT, message, ""};
}

struct StringDeleter {
  void operator()(char* s) const { trikit_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct TablesDeleter {
  void operator()(trikit_tables* t) const { trikit_tables_free(t); }
};
struct CorpusDeleter {
  void operator()(trikit_corpus* c) const { trikit_corpus_free(c); }
};
struct MapDeleter {
  void operator()(trikit_predicate_map* m) const { trikit_predicate_map_free(m); }
};
using Tables = std::unique_ptr<trikit_tables, TablesDeleter>;
using Corpus = std::unique_ptr<trikit_corpus, CorpusDeleter>;
using PredicateMap = std::unique_ptr<trikit_predicate_map, MapDeleter>;

std::string View(const CString& s) { return s ? std::string(s.get()) : std::string(); }

void WriteOut(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  Check(trikit_write_file(path.c_str(), data.data(), data.size()));
}

trikit_format FormatForPath(const std::string& path, const std::string& requested) {
  if (requested == "xml") return TRIKIT_FORMAT_XML;
  if (requested == "jsonl") return TRIKIT_FORMAT_JSONL;
  if (requested == "linearized") return TRIKIT_FORMAT_LINEARIZED;
  if (!requested.empty()) Usage("unknown format '" + requested + "'");
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".xml") == 0
             ? TRIKIT_FORMAT_XML
             : TRIKIT_FORMAT_JSONL;
}

Tables LoadTables(const std::string& tables_path, const std::string& annotations_path) {
  trikit_tables* raw = nullptr;
  Check(trikit_tables_load(tables_path.c_str(), &raw));
  Tables tables(raw);
  if (!annotations_path.empty()) {
    Check(trikit_tables_load_annotations(tables.get(), annotations_path.c_str()));
  }
  return tables;
}

Corpus LoadCorpora(const std::vector<std::string>& paths) {
  trikit_corpus* raw = nullptr;
  Check(trikit_corpus_create(&raw));
  Corpus all(raw);
  for (const auto& p : paths) {
    trikit_corpus* part = nullptr;
    Check(trikit_corpus_load(p.c_str(), &part));
    Corpus owned(part);
    Check(trikit_corpus_append(all.get(), owned.get()));
  }
  return all;
}

void SaveCorpus(const trikit_corpus* corpus, const std::string& path,
                const std::string& format) {
  const trikit_format f = FormatForPath(path, format);
  char* raw = nullptr;
  Check(trikit_corpus_serialize(corpus, f, &raw));
  WriteOut(path, View(CString(raw)));
}

// Options shared by the sampling stages.
struct SamplerFlags {
  trikit_sampler_config config{};
  CLI::Option* seed = nullptr;

  void Register(CLI::App* app) {
    trikit_sampler_config_init(&config);
    app->add_option("--size-min", config.size_min, "Smallest component size")
        ->capture_default_str();
    app->add_option("--size-max", config.size_max, "Largest component size")
        ->capture_default_str();
    app->add_option("--p-min", config.p_min, "Lower bound of the expansion parameter")
        ->capture_default_str();
    app->add_option("--p-max", config.p_max, "Upper bound of the expansion parameter")
        ->capture_default_str();
    app->add_option("--samples-per-row", config.samples_per_row,
                    "Components sampled per table row")
        ->capture_default_str();
    seed = app->add_option("--seed", config.seed, "Random seed (required)");
  }
};

void RequireSeed(const CLI::Option* seed, const std::string& stage) {
  if (seed->count() == 0) Usage(stage + ": --seed is required");
}

void RequireOption(const CLI::Option* opt) {
  if (opt->count() == 0) Usage(opt->get_name() + " is required");
}

// Replaces the values of every option named in the JSON config file. Keys are
// long option names without the leading dashes.
void ApplyConfig(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StatusError{TRIKIT_ERR_IO, "cannot open config file", path};
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw StatusError{TRIKIT_ERR_PARSE, e.what(), path};
  }
  if (!cfg.is_object()) throw StatusError{TRIKIT_ERR_PARSE, "config must be an object", path};
  // A section named after the subcommand takes precedence over top-level keys.
  json merged = json::object();
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    if (!it.value().is_object()) merged[it.key()] = it.value();
  }
  if (cfg.contains(sub->get_name()) && cfg[sub->get_name()].is_object()) {
    for (auto it = cfg[sub->get_name()].begin(); it != cfg[sub->get_name()].end(); ++it) {
      merged[it.key()] = it.value();
    }
  }
  for (auto it = merged.begin(); it != merged.end(); ++it) {
    if (it.key() == "config") continue;
    CLI::Option* opt = nullptr;
    try {
      opt = sub->get_option("--" + it.key());
    } catch (const CLI::OptionNotFound&) {
      continue;  // keys for other stages
    }
    std::vector<std::string> values;
    auto scalar = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (it.value().is_array()) {
      for (const auto& v : it.value()) values.push_back(scalar(v));
    } else {
      values.push_back(scalar(it.value()));
    }
    opt->clear();
    for (auto& v : values) opt->add_result(v);
    opt->run_callback();
  }
}

void ReportError(const StatusError& e) {
  const json j = {{"status", trikit_status_name(e.status)},
                  {"message", e.message},
                  {"location", e.location}};
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds data-to-text corpora of RDF triplesets from annotated tables."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(trikit_version()));

  std::string config_path;
  int jobs = 1;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "JSON file whose keys override flags of the same name");
  };

  // ingest-tables
  auto* ingest = app.add_subcommand("ingest-tables", "Read CSV/TSV tables into a table file");
  std::vector<std::string> table_inputs;
  std::string out_path;
  auto* ingest_in = ingest->add_option("--input", table_inputs,
                                       "Table files (.csv, .tsv) with optional .meta.json");
  auto* ingest_out = ingest->add_option("--output", out_path, "Table file (JSON lines)");
  add_common(ingest);

  // validate-ontology
  auto* validate = app.add_subcommand("validate-ontology",
                                      "Check every ontology annotation; nonzero exit on findings");
  std::string tables_path, annotations_path, report_path;
  auto* val_tables = validate->add_option("--tables", tables_path, "Table file");
  auto* val_ann = validate->add_option("--annotations", annotations_path,
                                       "Annotation file (JSON lines)");
  validate->add_option("--report", report_path, "Report path (default stdout)");
  add_common(validate);

  // sample
  auto* sample = app.add_subcommand("sample", "Sample connected components per table row");
  SamplerFlags sample_flags;
  sample_flags.Register(sample);
  auto* sample_tables = sample->add_option("--tables", tables_path, "Table file");
  auto* sample_ann = sample->add_option("--annotations", annotations_path, "Annotation file");
  sample->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  sample->add_option("--output", out_path, "Component records (default stdout)");
  add_common(sample);

  // extract
  auto* extract = app.add_subcommand(
      "extract", "Extract triplesets from highlights, or from sampled components with --seed");
  SamplerFlags extract_flags;
  extract_flags.Register(extract);
  std::string highlights_path, sentences_path, pending_path, category = "MISC", format;
  auto* ex_tables = extract->add_option("--tables", tables_path, "Table file");
  auto* ex_ann = extract->add_option("--annotations", annotations_path, "Annotation file");
  extract->add_option("--highlights", highlights_path, "Highlight records (JSON lines)");
  extract->add_option("--sentences", sentences_path,
                      "Sentences keyed by table_id and row_index (JSON lines)");
  extract->add_option("--category", category, "Entry category")->capture_default_str();
  extract->add_option("--pending", pending_path,
                      "Where to write triplesets that have no sentence yet");
  extract->add_option("--format", format, "jsonl, xml or linearized (default by extension)");
  extract->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  auto* ex_out = extract->add_option("--output", out_path, "Corpus path");
  add_common(extract);

  // convert-e2e
  auto* e2e = app.add_subcommand("convert-e2e", "Convert an E2E CSV (mr, ref) into a corpus");
  std::string input_path;
  auto* e2e_in = e2e->add_option("--input", input_path, "E2E CSV file");
  e2e->add_option("--category", category, "Entry category (default E2E)");
  e2e->add_option("--format", format, "jsonl, xml or linearized (default by extension)");
  auto* e2e_out = e2e->add_option("--output", out_path, "Corpus path");
  add_common(e2e);

  // ingest-webnlg
  auto* webnlg = app.add_subcommand("ingest-webnlg", "Read a WebNLG XML file into a corpus");
  bool verbatim = false;
  auto* web_in = webnlg->add_option("--input", input_path, "WebNLG XML file");
  webnlg->add_flag("--verbatim", verbatim, "Keep entries untagged instead of marking them WebNLG");
  webnlg->add_option("--format", format, "jsonl, xml or linearized (default by extension)");
  auto* web_out = webnlg->add_option("--output", out_path, "Corpus path");
  add_common(webnlg);

  // align-wikisql
  auto* align = app.add_subcommand("align-wikisql",
                                   "Align question/SQL/answer records to table rows");
  std::string records_path, declaratives_path, unaligned_path;
  auto* al_tables = align->add_option("--tables", tables_path, "Table file");
  auto* al_records = align->add_option("--records", records_path, "Records (JSON lines)");
  align->add_option("--declaratives", declaratives_path,
                    "Declarative sentences {id, sentence} (JSON lines)");
  align->add_option("--unaligned", unaligned_path, "Where to write unaligned records");
  auto* al_out = align->add_option("--output", out_path, "Highlight records");
  add_common(align);

  // unify
  auto* unify = app.add_subcommand("unify", "Canonicalize predicates with a mapping table");
  std::vector<std::string> corpus_inputs;
  std::string map_path, unmapped_path;
  auto* un_in = unify->add_option("--input", corpus_inputs, "Corpus files");
  auto* un_map = unify->add_option("--map", map_path, "Mapping TSV (variant, canonical)");
  unify->add_option("--report-unmapped", unmapped_path, "Where to list unmapped predicates");
  unify->add_option("--format", format, "jsonl, xml or linearized (default by extension)");
  auto* un_out = unify->add_option("--output", out_path, "Corpus path");
  add_common(unify);

  // split
  auto* split = app.add_subcommand("split", "Assign tables to train/dev/test");
  trikit_split_config split_config;
  trikit_split_config_init(&split_config);
  auto* sp_tables = split->add_option("--tables", tables_path, "Table file");
  split->add_option("--threshold", split_config.threshold, "Jaccard threshold")
      ->capture_default_str();
  split->add_option("--test-seed-frac", split_config.test_seed_fraction,
                    "Fraction of tables seeding the test split")
      ->capture_default_str();
  split->add_option("--dev-seed-frac", split_config.dev_seed_fraction,
                    "Fraction of tables seeding the dev split")
      ->capture_default_str();
  auto* sp_seed = split->add_option("--seed", split_config.seed, "Random seed (required)");
  split->add_option("--output", out_path, "TSV of table_id and split (default stdout)");
  add_common(split);

  // stats
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  bool by_partition = false;
  std::string json_path;
  auto* st_in = stats->add_option("--input", corpus_inputs, "Corpus files");
  stats->add_flag("--by-partition", by_partition, "Add one column per provenance");
  stats->add_option("--json", json_path, "Where to write the JSON report");
  stats->add_option("--output", out_path, "Where to write the text table (default stdout)");
  add_common(stats);

  // export-xml
  auto* export_xml = app.add_subcommand("export-xml", "Write corpora as one XML document");
  auto* xml_in = export_xml->add_option("--input", corpus_inputs, "Corpus files");
  auto* xml_out = export_xml->add_option("--output", out_path, "XML path (default stdout)");
  add_common(export_xml);

  // linearize
  auto* linearize = app.add_subcommand("linearize",
                                       "Write one <H> <R> <T> line per entry");
  auto* lin_in = linearize->add_option("--input", corpus_inputs, "Corpus files");
  linearize->add_option("--output", out_path, "Output path (default stdout)");
  add_common(linearize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!config_path.empty()) ApplyConfig(sub, config_path);

    if (sub == ingest) {
      RequireOption(ingest_in);
      RequireOption(ingest_out);
      std::vector<const char*> paths;
      for (const auto& p : table_inputs) paths.push_back(p.c_str());
      trikit_tables* raw = nullptr;
      Check(trikit_tables_ingest(paths.data(), paths.size(), &raw));
      Tables tables(raw);
      Check(trikit_tables_save(tables.get(), out_path.c_str()));
      std::cerr << "ingested " << trikit_tables_count(tables.get()) << " tables\n";
    } else if (sub == validate) {
      RequireOption(val_tables);
      RequireOption(val_ann);
      Tables tables = LoadTables(tables_path, annotations_path);
      char* raw = nullptr;
      size_t invalid = 0;
      Check(trikit_tables_validate(tables.get(), &raw, &invalid));
      WriteOut(report_path, View(CString(raw)));
      if (invalid > 0) {
        std::cerr << invalid << " of " << trikit_tables_count(tables.get())
                  << " tables have invalid ontology annotations\n";
        return kExitFindings;
      }
    } else if (sub == sample) {
      RequireOption(sample_tables);
      RequireOption(sample_ann);
      RequireSeed(sample_flags.seed, "sample");
      Tables tables = LoadTables(tables_path, annotations_path);
      sample_flags.config.jobs = jobs;
      char* raw = nullptr;
      Check(trikit_tables_sample(tables.get(), &sample_flags.config, &raw));
      WriteOut(out_path, View(CString(raw)));
    } else if (sub == extract) {
      RequireOption(ex_tables);
      RequireOption(ex_ann);
      RequireOption(ex_out);
      if (highlights_path.empty()) RequireSeed(extract_flags.seed, "extract");
      Tables tables = LoadTables(tables_path, annotations_path);
      extract_flags.config.jobs = jobs;
      trikit_extract_options opts{};
      opts.highlights_path = highlights_path.empty() ? nullptr : highlights_path.c_str();
      opts.sentences_path = sentences_path.empty() ? nullptr : sentences_path.c_str();
      opts.sampler = &extract_flags.config;
      opts.category = category.c_str();
      opts.jobs = jobs;
      trikit_corpus* raw = nullptr;
      char* pending = nullptr;
      size_t oversize = 0;
      Check(trikit_tables_extract(tables.get(), &opts, &raw, &pending, &oversize));
      Corpus corpus(raw);
      CString pending_text(pending);
      SaveCorpus(corpus.get(), out_path, format);
      if (!pending_path.empty()) WriteOut(pending_path, View(pending_text));
      std::cerr << "extracted " << trikit_corpus_size(corpus.get()) << " entries";
      if (oversize > 0) std::cerr << ", discarded " << oversize << " oversize triplesets";
      std::cerr << "\n";
    } else if (sub == e2e) {
      RequireOption(e2e_in);
      RequireOption(e2e_out);
      trikit_corpus* raw = nullptr;
      size_t dropped = 0;
      const bool has_category = sub->get_option("--category")->count() > 0;
      Check(trikit_convert_e2e(input_path.c_str(), has_category ? category.c_str() : nullptr,
                               &raw, &dropped));
      Corpus corpus(raw);
      SaveCorpus(corpus.get(), out_path, format);
      std::cerr << "converted " << trikit_corpus_size(corpus.get()) << " entries, dropped "
                << dropped << " meaning representations\n";
    } else if (sub == webnlg) {
      RequireOption(web_in);
      RequireOption(web_out);
      trikit_corpus* raw = nullptr;
      Check(trikit_ingest_webnlg(input_path.c_str(), verbatim ? 1 : 0, &raw));
      Corpus corpus(raw);
      SaveCorpus(corpus.get(), out_path, format);
    } else if (sub == align) {
      RequireOption(al_tables);
      RequireOption(al_records);
      RequireOption(al_out);
      Tables tables = LoadTables(tables_path, "");
      char* highlights = nullptr;
      char* unaligned = nullptr;
      Check(trikit_tables_align_wikisql(
          tables.get(), records_path.c_str(),
          declaratives_path.empty() ? nullptr : declaratives_path.c_str(), &highlights,
          &unaligned));
      CString h(highlights), u(unaligned);
      WriteOut(out_path, View(h));
      if (!unaligned_path.empty()) WriteOut(unaligned_path, View(u));
    } else if (sub == unify) {
      RequireOption(un_in);
      RequireOption(un_map);
      RequireOption(un_out);
      Corpus corpus = LoadCorpora(corpus_inputs);
      trikit_predicate_map* raw = nullptr;
      Check(trikit_predicate_map_load(map_path.c_str(), &raw));
      PredicateMap map(raw);
      char* unmapped = nullptr;
      Check(trikit_corpus_unify(corpus.get(), map.get(), &unmapped));
      CString u(unmapped);
      SaveCorpus(corpus.get(), out_path, format);
      if (!unmapped_path.empty()) WriteOut(unmapped_path, View(u));
    } else if (sub == split) {
      RequireOption(sp_tables);
      RequireSeed(sp_seed, "split");
      Tables tables = LoadTables(tables_path, "");
      char* raw = nullptr;
      Check(trikit_tables_split(tables.get(), &split_config, &raw));
      WriteOut(out_path, View(CString(raw)));
    } else if (sub == stats) {
      RequireOption(st_in);
      Corpus corpus = LoadCorpora(corpus_inputs);
      char* js = nullptr;
      char* text = nullptr;
      Check(trikit_corpus_stats(corpus.get(), by_partition ? 1 : 0, &js, &text));
      CString j(js), t(text);
      WriteOut(out_path, View(t));
      if (!json_path.empty()) {
        WriteOut(json_path, View(j));
      } else if (out_path.empty() || out_path == "-") {
        std::cout << View(j);
      }
    } else if (sub == export_xml) {
      RequireOption(xml_in);
      (void)xml_out;
      Corpus corpus = LoadCorpora(corpus_inputs);
      SaveCorpus(corpus.get(), out_path, "xml");
    } else if (sub == linearize) {
      RequireOption(lin_in);
      Corpus corpus = LoadCorpora(corpus_inputs);
      SaveCorpus(corpus.get(), out_path, "linearized");
    }
  } catch (const StatusError& e) {
    ReportError(e);
    return e.status == TRIKIT_ERR_INVALID_ARGUMENT && e.location.empty() ? kExitUsage
                                                                         : kExitError;
  } catch (const std::exception& e) {
    ReportError({TRIKIT_ERR_INTERNAL, e.what(), ""});
    return kExitError;
  }
  return 0;
}
