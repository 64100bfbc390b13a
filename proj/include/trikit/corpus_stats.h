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

#ifndef TRIKIT_CORPUS_STATS_H_
#define TRIKIT_CORPUS_STATS_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "trikit/tripler.h"

namespace trikit {

// Splits text into word tokens and punctuation tokens. A word is a maximal
// run of characters that are neither whitespace nor ASCII punctuation (bytes
// >= 0x80 count as word characters); every ASCII punctuation character is a
// token of its own.
std::vector<std::string> TokenizeText(std::string_view text);

// Tokens containing at least one character that is not ASCII punctuation.
int CountWords(std::string_view text);

// Segments ending in '.', '!' or '?' followed by whitespace or end of text,
// plus a trailing unterminated segment when it holds anything but whitespace.
int CountSentences(std::string_view text);

struct CorpusStats {
  int64_t pair_count = 0;
  int64_t entry_count = 0;
  int64_t unique_predicates = 0;
  int64_t unique_triples = 0;
  int triples_min = 0;
  double triples_median = 0.0;
  int triples_max = 0;
  int64_t vocab_size = 0;
  double words_per_sr = 0.0;
  double sentences_per_sr = 0.0;
  int64_t table_count = 0;
};

// Partial counts for a slice of a corpus. Merge is associative and
// commutative, so slices can be accumulated in any order or in parallel.
class StatsAccumulator {
 public:
  void Add(const CorpusEntry& entry);
  void Merge(const StatsAccumulator& other);
  CorpusStats Finish() const;

 private:
  int64_t pairs_ = 0;
  int64_t words_ = 0;
  int64_t sentences_ = 0;
  std::map<int, int64_t> set_sizes_;  // triples per set -> entry count
  std::set<std::string> predicates_;
  std::set<Triple> triples_;
  std::set<std::string> vocab_;
  std::set<std::string> tables_;
};

CorpusStats ComputeStats(std::span<const CorpusEntry> corpus);

// Stats per provenance tag, keyed by its name.
std::map<std::string, CorpusStats> ComputeStatsByPartition(
    std::span<const CorpusEntry> corpus);

nlohmann::json StatsToJson(const CorpusStats& stats);
// Fixed-width text table; one row per named column of stats.
std::string FormatStatsTable(const std::map<std::string, CorpusStats>& columns);

}  // namespace trikit

#endif  // TRIKIT_CORPUS_STATS_H_
