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

#ifndef TRIKIT_C_API_H_
#define TRIKIT_C_API_H_

/*
 * C interface to trikit. Objects are opaque handles released with the
 * matching *_free function. Functions returning trikit_status store a
 * description of any failure in thread-local storage, readable through
 * trikit_last_error_message() and trikit_last_error_location() until the next
 * call on the same thread. Strings returned through char** out-parameters are
 * NUL-terminated, owned by the caller and released with trikit_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(TRIKIT_BUILDING_LIBRARY)
#define TRIKIT_API __attribute__((visibility("default")))
#else
#define TRIKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trikit_status {
  TRIKIT_OK = 0,
  TRIKIT_ERR_INVALID_ARGUMENT = 1,
  TRIKIT_ERR_IO = 2,
  TRIKIT_ERR_PARSE = 3,
  TRIKIT_ERR_CYCLE = 4,
  TRIKIT_ERR_DISCONNECTED = 5,
  TRIKIT_ERR_BAD_INDEX = 6,
  TRIKIT_ERR_DUPLICATE_HEADER = 7,
  TRIKIT_ERR_EMPTY_TREE = 8,
  TRIKIT_ERR_OVERSIZE = 9,
  TRIKIT_ERR_EMPTY_REALIZATION = 10,
  TRIKIT_ERR_MALFORMED_ENTRY = 11,
  TRIKIT_ERR_DEGENERATE_SPLIT = 12,
  TRIKIT_ERR_PREDICATE_MAP = 13,
  TRIKIT_ERR_INTERNAL = 14
} trikit_status;

typedef enum trikit_format {
  TRIKIT_FORMAT_JSONL = 0,      /* one entry object per line */
  TRIKIT_FORMAT_XML = 1,        /* WebNLG-style entry document */
  TRIKIT_FORMAT_LINEARIZED = 2  /* one "<H> s <R> p <T> o" line per entry */
} trikit_format;

typedef struct trikit_tables trikit_tables;
typedef struct trikit_corpus trikit_corpus;
typedef struct trikit_predicate_map trikit_predicate_map;

typedef struct trikit_sampler_config {
  int size_min;
  int size_max;
  double p_min;
  double p_max;
  uint64_t seed;
  int samples_per_row;
  int jobs;
} trikit_sampler_config;

typedef struct trikit_split_config {
  double threshold;
  double test_seed_fraction;
  double dev_seed_fraction;
  uint64_t seed;
} trikit_split_config;

typedef struct trikit_extract_options {
  const char* highlights_path;  /* JSON lines; NULL to sample instead */
  const char* sentences_path;   /* JSON lines; may be NULL */
  const trikit_sampler_config* sampler; /* required when highlights_path is NULL */
  const char* category;         /* NULL for "MISC" */
  int jobs;
} trikit_extract_options;

TRIKIT_API const char* trikit_version(void);
TRIKIT_API const char* trikit_status_name(trikit_status status);
TRIKIT_API const char* trikit_last_error_message(void);
TRIKIT_API const char* trikit_last_error_location(void);
TRIKIT_API void trikit_string_free(char* s);

/* Defaults: sizes [2, 5], p in [0.5, 0.7], seed 0, one sample per row. */
TRIKIT_API void trikit_sampler_config_init(trikit_sampler_config* config);
/* Defaults: threshold 0.5, seed fractions 0.1 / 0.1, seed 0. */
TRIKIT_API void trikit_split_config_init(trikit_split_config* config);

/* Writes through a temporary file renamed into place. */
TRIKIT_API trikit_status trikit_write_file(const char* path, const char* data,
                                           size_t size);

/* ---- tables ----------------------------------------------------------- */

/* Reads .csv/.tsv tables with optional <stem>.meta.json sidecars. */
TRIKIT_API trikit_status trikit_tables_ingest(const char* const* paths, size_t count,
                                              trikit_tables** out);
TRIKIT_API trikit_status trikit_tables_load(const char* jsonl_path, trikit_tables** out);
TRIKIT_API trikit_status trikit_tables_save(const trikit_tables* tables,
                                            const char* jsonl_path);
TRIKIT_API trikit_status trikit_tables_load_annotations(trikit_tables* tables,
                                                        const char* jsonl_path);
TRIKIT_API size_t trikit_tables_count(const trikit_tables* tables);
TRIKIT_API void trikit_tables_free(trikit_tables* tables);

/* JSON report; *invalid_count receives the number of failing tables. */
TRIKIT_API trikit_status trikit_tables_validate(const trikit_tables* tables,
                                                char** report_json,
                                                size_t* invalid_count);

/* One {table_id, row_index, node_ids, p_used, target_size} line per sample. */
TRIKIT_API trikit_status trikit_tables_sample(const trikit_tables* tables,
                                              const trikit_sampler_config* config,
                                              char** jsonl);

/* *pending_jsonl (may be NULL) receives triplesets that lack realizations;
 * *oversize (may be NULL) the number of discarded oversize triplesets. */
TRIKIT_API trikit_status trikit_tables_extract(const trikit_tables* tables,
                                               const trikit_extract_options* options,
                                               trikit_corpus** out, char** pending_jsonl,
                                               size_t* oversize);

/* declaratives_path may be NULL. */
TRIKIT_API trikit_status trikit_tables_align_wikisql(const trikit_tables* tables,
                                                     const char* records_path,
                                                     const char* declaratives_path,
                                                     char** highlights_jsonl,
                                                     char** unaligned_jsonl);

/* "table_id\tsplit" lines sorted by table id. */
TRIKIT_API trikit_status trikit_tables_split(const trikit_tables* tables,
                                             const trikit_split_config* config,
                                             char** tsv);

/* ---- corpora ---------------------------------------------------------- */

TRIKIT_API trikit_status trikit_corpus_create(trikit_corpus** out);
/* Format chosen by extension: .xml, otherwise JSON lines. */
TRIKIT_API trikit_status trikit_corpus_load(const char* path, trikit_corpus** out);
TRIKIT_API trikit_status trikit_corpus_save(const trikit_corpus* corpus, const char* path,
                                            trikit_format format);
TRIKIT_API trikit_status trikit_corpus_serialize(const trikit_corpus* corpus,
                                                 trikit_format format, char** out);
TRIKIT_API trikit_status trikit_corpus_append(trikit_corpus* dst, const trikit_corpus* src);
TRIKIT_API size_t trikit_corpus_size(const trikit_corpus* corpus);
TRIKIT_API void trikit_corpus_free(trikit_corpus* corpus);

/* Tags every entry whose provenance is unknown as WebNLG unless verbatim. */
TRIKIT_API trikit_status trikit_ingest_webnlg(const char* xml_path, int verbatim,
                                              trikit_corpus** out);
TRIKIT_API trikit_status trikit_convert_e2e(const char* csv_path, const char* category,
                                            trikit_corpus** out, size_t* dropped);

TRIKIT_API trikit_status trikit_predicate_map_load(const char* tsv_path,
                                                   trikit_predicate_map** out);
TRIKIT_API size_t trikit_predicate_map_size(const trikit_predicate_map* map);
TRIKIT_API void trikit_predicate_map_free(trikit_predicate_map* map);
/* Unifies in place; *unmapped (may be NULL) receives one predicate per line. */
TRIKIT_API trikit_status trikit_corpus_unify(trikit_corpus* corpus,
                                             const trikit_predicate_map* map,
                                             char** unmapped);

/* JSON object {"overall": stats, "partitions": {name: stats}?} and an
 * aligned text table. Either output may be NULL. */
TRIKIT_API trikit_status trikit_corpus_stats(const trikit_corpus* corpus, int by_partition,
                                             char** json, char** text);

/* 1 if the query uses an aggregate command, 0 if not, -1 on a parse error. */
TRIKIT_API int trikit_sql_has_aggregate(const char* sql);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* TRIKIT_C_API_H_ */
