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

#ifndef TRIKIT_UNIFY_H_
#define TRIKIT_UNIFY_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trikit/tripler.h"

namespace trikit {

// Raw predicate -> canonical predicate. Keys and values are non-empty and
// trimmed; a canonical value that is also a key maps to itself.
class PredicateMap {
 public:
  PredicateMap() = default;

  // Throws kPredicateMap on empty keys or values, conflicting duplicate keys
  // or chains (a -> b with b -> c, c != b).
  static PredicateMap FromPairs(
      std::span<const std::pair<std::string, std::string>> pairs);

  // Two tab-separated columns (raw, canonical) per line. Blank lines and
  // lines starting with '#' are skipped. Errors carry the line number.
  static PredicateMap FromTsv(std::string_view text);

  // Canonical form of `predicate` (trimmed), or nullptr when unmapped.
  const std::string* Find(std::string_view predicate) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Replaces each mapped predicate; subjects, objects and order are untouched.
// Distinct unmapped predicates are added to `unmapped` when given.
TripleSet UnifyTripleSet(const TripleSet& ts, const PredicateMap& map,
                         std::set<std::string>* unmapped = nullptr);

// Distinct predicates across the corpus, sorted.
std::vector<std::string> UniquePredicates(std::span<const CorpusEntry> corpus);

}  // namespace trikit

#endif  // TRIKIT_UNIFY_H_
