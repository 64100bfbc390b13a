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

#include "trikit/error.h"

namespace trikit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kCycle: return "cycle_error";
    case ErrorCode::kDisconnected: return "disconnected_error";
    case ErrorCode::kBadIndex: return "bad_index_error";
    case ErrorCode::kDuplicateHeader: return "duplicate_header_error";
    case ErrorCode::kEmptyTree: return "empty_tree_error";
    case ErrorCode::kOversize: return "oversize_error";
    case ErrorCode::kEmptyRealization: return "empty_realization_error";
    case ErrorCode::kMalformedEntry: return "malformed_entry_error";
    case ErrorCode::kDegenerateSplit: return "degenerate_split_error";
    case ErrorCode::kPredicateMap: return "predicate_map_error";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown_error";
}

Error Error::WithLocation(std::string_view outer) const {
  std::string loc(outer);
  if (!location_.empty()) loc += ": " + location_;
  return Error(code_, what(), loc);
}

}  // namespace trikit
