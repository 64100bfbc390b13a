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

#ifndef TRIKIT_SPLITKIT_H_
#define TRIKIT_SPLITKIT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/table.h"

namespace trikit {

struct TableSignature {
  std::string table_id;
  std::vector<std::string> tokens;  // sorted, unique
};

// Lowercased tokens of `text`, split on whitespace and ASCII punctuation.
std::vector<std::string> SignatureTokens(std::string_view text);
TableSignature MakeSignature(std::string table_id, std::string_view title,
                             std::span<const std::string> headers);
TableSignature MakeSignature(const Table& table);

// |a ∩ b| / |a ∪ b|; 0 when both are empty.
double Jaccard(const TableSignature& a, const TableSignature& b);

enum class Split { kTrain, kDev, kTest };
std::string_view SplitName(Split s);

struct SplitConfig {
  double threshold = 0.5;
  double test_seed_fraction = 0.1;
  double dev_seed_fraction = 0.1;
  uint64_t seed = 0;

  // Throws kInvalidArgument unless 0 < threshold < 1, both fractions lie in
  // (0, 1) and their sum is below 1.
  void Validate() const;
};

using SplitAssignment = std::map<std::string, Split>;

// Seeds the test set with round(test_seed_fraction * n) tables (at least one)
// drawn uniformly from the id-sorted input, then adds every remaining table
// whose similarity with some test table exceeds the threshold, repeating until
// nothing changes. The dev set is built the same way from what is left, with
// round(dev_seed_fraction * n) seeds; the rest is train.
//
// Throws kInvalidArgument for fewer than three tables or duplicate ids.
// Splits may come out empty.
SplitAssignment ComputeSplit(std::span<const TableSignature> tables,
                             const SplitConfig& config);

// ComputeSplit, throwing kDegenerateSplit when any split is empty.
SplitAssignment SplitTables(std::span<const TableSignature> tables,
                            const SplitConfig& config);

}  // namespace trikit

#endif  // TRIKIT_SPLITKIT_H_
