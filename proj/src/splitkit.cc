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

#include "trikit/splitkit.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>

#include "trikit/error.h"
#include "trikit/random.h"

namespace trikit {

std::vector<std::string> SignatureTokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || (u < 0x80 && std::ispunct(u))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += static_cast<char>(std::tolower(u));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

TableSignature MakeSignature(std::string table_id, std::string_view title,
                             std::span<const std::string> headers) {
  TableSignature sig{std::move(table_id), SignatureTokens(title)};
  for (const auto& h : headers) {
    auto t = SignatureTokens(h);
    sig.tokens.insert(sig.tokens.end(), t.begin(), t.end());
  }
  std::sort(sig.tokens.begin(), sig.tokens.end());
  sig.tokens.erase(std::unique(sig.tokens.begin(), sig.tokens.end()), sig.tokens.end());
  return sig;
}

TableSignature MakeSignature(const Table& table) {
  return MakeSignature(table.id, table.title, table.headers);
}

double Jaccard(const TableSignature& a, const TableSignature& b) {
  size_t common = 0;
  auto i = a.tokens.begin();
  auto j = b.tokens.begin();
  while (i != a.tokens.end() && j != b.tokens.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const size_t uni = a.tokens.size() + b.tokens.size() - common;
  return uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
}

std::string_view SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

void SplitConfig::Validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must lie in (0, 1)");
  }
  if (!(test_seed_fraction > 0.0 && test_seed_fraction < 1.0) ||
      !(dev_seed_fraction > 0.0 && dev_seed_fraction < 1.0) ||
      !(test_seed_fraction + dev_seed_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "seed fractions must lie in (0, 1) and sum to less than 1");
  }
}

namespace {

// Moves `count` uniformly drawn members of `pool` into `chosen` and then
// closes `chosen` under similarity within `pool`.
void SeedAndPropagate(std::span<const TableSignature* const> sigs,
                      std::vector<size_t>& pool, size_t count, double threshold,
                      Rng& rng, std::vector<size_t>& chosen) {
  count = std::min(count, pool.size());
  for (size_t k = 0; k < count; ++k) {
    const auto pick = static_cast<size_t>(
        rng.UniformInt(static_cast<int64_t>(k), static_cast<int64_t>(pool.size()) - 1));
    std::swap(pool[k], pool[pick]);
  }
  chosen.assign(pool.begin(), pool.begin() + count);
  std::vector<size_t> rest(pool.begin() + count, pool.end());
  std::sort(rest.begin(), rest.end());

  std::deque<size_t> frontier(chosen.begin(), chosen.end());
  while (!frontier.empty()) {
    const size_t t = frontier.front();
    frontier.pop_front();
    std::vector<size_t> keep;
    keep.reserve(rest.size());
    for (size_t u : rest) {
      if (Jaccard(*sigs[t], *sigs[u]) > threshold) {
        chosen.push_back(u);
        frontier.push_back(u);
      } else {
        keep.push_back(u);
      }
    }
    rest.swap(keep);
  }
  pool = std::move(rest);
}

}  // namespace

SplitAssignment ComputeSplit(std::span<const TableSignature> tables,
                             const SplitConfig& config) {
  config.Validate();
  const size_t n = tables.size();
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "splitting needs at least 3 tables");
  }
  std::vector<const TableSignature*> sigs;
  for (const auto& t : tables) sigs.push_back(&t);
  std::sort(sigs.begin(), sigs.end(),
            [](const auto* a, const auto* b) { return a->table_id < b->table_id; });
  for (size_t i = 1; i < n; ++i) {
    if (sigs[i]->table_id == sigs[i - 1]->table_id) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate table id", sigs[i]->table_id);
    }
  }

  auto seed_count = [n](double f) {
    return std::max<size_t>(1, static_cast<size_t>(std::llround(f * static_cast<double>(n))));
  };
  Rng rng(config.seed);
  std::vector<size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<size_t> test;
  std::vector<size_t> dev;
  SeedAndPropagate(sigs, pool, seed_count(config.test_seed_fraction), config.threshold,
                   rng, test);
  SeedAndPropagate(sigs, pool, seed_count(config.dev_seed_fraction), config.threshold,
                   rng, dev);
  SplitAssignment out;
  for (size_t i : test) out[sigs[i]->table_id] = Split::kTest;
  for (size_t i : dev) out[sigs[i]->table_id] = Split::kDev;
  for (size_t i : pool) out[sigs[i]->table_id] = Split::kTrain;
  return out;
}

SplitAssignment SplitTables(std::span<const TableSignature> tables,
                            const SplitConfig& config) {
  SplitAssignment out = ComputeSplit(tables, config);
  size_t counts[3] = {0, 0, 0};
  for (const auto& [id, split] : out) ++counts[static_cast<int>(split)];
  if (counts[0] == 0 || counts[1] == 0 || counts[2] == 0) {
    throw Error(ErrorCode::kDegenerateSplit,
                "split sizes train/dev/test = " + std::to_string(counts[0]) + "/" +
                    std::to_string(counts[1]) + "/" + std::to_string(counts[2]));
  }
  return out;
}

}  // namespace trikit
