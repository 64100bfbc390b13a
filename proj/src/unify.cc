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

#include "trikit/unify.h"

#include "trikit/error.h"

namespace trikit {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

PredicateMap PredicateMap::FromPairs(
    std::span<const std::pair<std::string, std::string>> pairs) {
  PredicateMap map;
  for (const auto& [raw_key, raw_value] : pairs) {
    const std::string key(Trim(raw_key));
    const std::string value(Trim(raw_value));
    if (key.empty() || value.empty()) {
      throw Error(ErrorCode::kPredicateMap, "empty predicate in mapping",
                  "\"" + raw_key + "\"");
    }
    auto [it, inserted] = map.entries_.emplace(key, value);
    if (!inserted && it->second != value) {
      throw Error(ErrorCode::kPredicateMap,
                  "\"" + key + "\" maps to both \"" + it->second + "\" and \"" +
                      value + "\"");
    }
  }
  for (const auto& [key, value] : map.entries_) {
    auto it = map.entries_.find(value);
    if (it != map.entries_.end() && it->second != value) {
      throw Error(ErrorCode::kPredicateMap,
                  "chain \"" + key + "\" -> \"" + value + "\" -> \"" + it->second +
                      "\"; canonical predicates must map to themselves");
    }
  }
  return map;
}

PredicateMap PredicateMap::FromTsv(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || Trim(line).front() == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw Error(ErrorCode::kPredicateMap, "expected two tab-separated columns",
                  "line " + std::to_string(line_no));
    }
    pairs.emplace_back(std::string(line.substr(0, tab)), std::string(line.substr(tab + 1)));
    if (Trim(pairs.back().first).empty() || Trim(pairs.back().second).empty()) {
      throw Error(ErrorCode::kPredicateMap, "empty predicate in mapping",
                  "line " + std::to_string(line_no));
    }
  }
  return FromPairs(pairs);
}

const std::string* PredicateMap::Find(std::string_view predicate) const {
  auto it = entries_.find(Trim(predicate));
  return it == entries_.end() ? nullptr : &it->second;
}

TripleSet UnifyTripleSet(const TripleSet& ts, const PredicateMap& map,
                         std::set<std::string>* unmapped) {
  TripleSet out = ts;
  for (Triple& t : out.triples) {
    if (const std::string* canonical = map.Find(t.predicate)) {
      t.predicate = *canonical;
    } else if (unmapped) {
      unmapped->insert(t.predicate);
    }
  }
  return out;
}

std::vector<std::string> UniquePredicates(std::span<const CorpusEntry> corpus) {
  std::set<std::string> seen;
  for (const CorpusEntry& e : corpus) {
    for (const Triple& t : e.tripleset.triples) seen.insert(t.predicate);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace trikit
