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

#include "trikit/corpus_stats.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace trikit {
namespace {

bool IsAsciiPunct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool IsWordToken(std::string_view tok) {
  return std::any_of(tok.begin(), tok.end(), [](char c) { return !IsAsciiPunct(c); });
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<std::string> TokenizeText(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (IsSpace(c) || IsAsciiPunct(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      if (IsAsciiPunct(c)) out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int CountWords(std::string_view text) {
  int n = 0;
  for (const auto& tok : TokenizeText(text)) n += IsWordToken(tok) ? 1 : 0;
  return n;
}

int CountSentences(std::string_view text) {
  int n = 0;
  bool content = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!IsSpace(c)) content = true;
    if ((c == '.' || c == '!' || c == '?') &&
        (i + 1 == text.size() || IsSpace(text[i + 1]))) {
      if (content) ++n;
      content = false;
    }
  }
  if (content) ++n;
  return n;
}

void StatsAccumulator::Add(const CorpusEntry& entry) {
  ++set_sizes_[entry.size()];
  for (const Triple& t : entry.tripleset.triples) {
    predicates_.insert(t.predicate);
    triples_.insert(t);
  }
  if (!entry.table_id.empty()) tables_.insert(entry.table_id);
  for (const Realization& r : entry.realizations) {
    ++pairs_;
    sentences_ += CountSentences(r.text);
    for (const auto& tok : TokenizeText(r.text)) {
      if (!IsWordToken(tok)) continue;
      ++words_;
      vocab_.insert(Lower(tok));
    }
  }
}

void StatsAccumulator::Merge(const StatsAccumulator& other) {
  pairs_ += other.pairs_;
  words_ += other.words_;
  sentences_ += other.sentences_;
  for (const auto& [size, count] : other.set_sizes_) set_sizes_[size] += count;
  predicates_.insert(other.predicates_.begin(), other.predicates_.end());
  triples_.insert(other.triples_.begin(), other.triples_.end());
  vocab_.insert(other.vocab_.begin(), other.vocab_.end());
  tables_.insert(other.tables_.begin(), other.tables_.end());
}

CorpusStats StatsAccumulator::Finish() const {
  CorpusStats s;
  s.pair_count = pairs_;
  s.unique_predicates = static_cast<int64_t>(predicates_.size());
  s.unique_triples = static_cast<int64_t>(triples_.size());
  s.vocab_size = static_cast<int64_t>(vocab_.size());
  s.table_count = static_cast<int64_t>(tables_.size());
  if (pairs_ > 0) {
    s.words_per_sr = static_cast<double>(words_) / static_cast<double>(pairs_);
    s.sentences_per_sr = static_cast<double>(sentences_) / static_cast<double>(pairs_);
  }
  for (const auto& [size, count] : set_sizes_) s.entry_count += count;
  if (s.entry_count > 0) {
    s.triples_min = set_sizes_.begin()->first;
    s.triples_max = set_sizes_.rbegin()->first;
    // k-th smallest set size, 0-based.
    auto kth = [this](int64_t k) {
      for (const auto& [size, count] : set_sizes_) {
        if (k < count) return size;
        k -= count;
      }
      return set_sizes_.rbegin()->first;
    };
    const int64_t n = s.entry_count;
    s.triples_median = n % 2 == 1 ? kth(n / 2) : (kth(n / 2 - 1) + kth(n / 2)) / 2.0;
  }
  return s;
}

CorpusStats ComputeStats(std::span<const CorpusEntry> corpus) {
  StatsAccumulator acc;
  for (const auto& e : corpus) acc.Add(e);
  return acc.Finish();
}

std::map<std::string, CorpusStats> ComputeStatsByPartition(
    std::span<const CorpusEntry> corpus) {
  std::map<std::string, StatsAccumulator> parts;
  for (const auto& e : corpus) {
    parts[std::string(ProvenanceName(e.tripleset.provenance))].Add(e);
  }
  std::map<std::string, CorpusStats> out;
  for (const auto& [name, acc] : parts) out[name] = acc.Finish();
  return out;
}

nlohmann::json StatsToJson(const CorpusStats& s) {
  return {{"pair_count", s.pair_count},
          {"entry_count", s.entry_count},
          {"unique_predicates", s.unique_predicates},
          {"unique_triples", s.unique_triples},
          {"triples_per_set", {{"min", s.triples_min},
                               {"median", s.triples_median},
                               {"max", s.triples_max}}},
          {"vocab_size", s.vocab_size},
          {"words_per_sr", s.words_per_sr},
          {"sentences_per_sr", s.sentences_per_sr},
          {"table_count", s.table_count}};
}

std::string FormatStatsTable(const std::map<std::string, CorpusStats>& columns) {
  auto fixed = [](double v, int digits) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
      {"partition", {}}, {"pairs", {}}, {"entries", {}}, {"tables", {}},
      {"unique predicates", {}}, {"unique triples", {}},
      {"triples/set (min, med, max)", {}}, {"vocab", {}},
      {"words/SR", {}}, {"sentences/SR", {}}};
  for (const auto& [name, s] : columns) {
    rows[0].second.push_back(name);
    rows[1].second.push_back(std::to_string(s.pair_count));
    rows[2].second.push_back(std::to_string(s.entry_count));
    rows[3].second.push_back(std::to_string(s.table_count));
    rows[4].second.push_back(std::to_string(s.unique_predicates));
    rows[5].second.push_back(std::to_string(s.unique_triples));
    rows[6].second.push_back("(" + std::to_string(s.triples_min) + ", " +
                             fixed(s.triples_median, 1) + ", " +
                             std::to_string(s.triples_max) + ")");
    rows[7].second.push_back(std::to_string(s.vocab_size));
    rows[8].second.push_back(fixed(s.words_per_sr, 2));
    rows[9].second.push_back(fixed(s.sentences_per_sr, 2));
  }
  size_t label_w = 0;
  std::vector<size_t> col_w(columns.size(), 0);
  for (const auto& [label, cells] : rows) {
    label_w = std::max(label_w, label.size());
    for (size_t c = 0; c < cells.size(); ++c) col_w[c] = std::max(col_w[c], cells[c].size());
  }
  std::ostringstream out;
  for (const auto& [label, cells] : rows) {
    out << std::left << std::setw(static_cast<int>(label_w)) << label;
    for (size_t c = 0; c < cells.size(); ++c) {
      out << "  " << std::right << std::setw(static_cast<int>(col_w[c])) << cells[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace trikit
