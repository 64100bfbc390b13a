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

#ifndef TRIKIT_ERROR_H_
#define TRIKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace trikit {

// Failure categories raised by the core library. The C API maps each one to
// a distinct trikit_status value.
enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kParse,
  kCycle,
  kDisconnected,
  kBadIndex,
  kDuplicateHeader,
  kEmptyTree,
  kOversize,
  kEmptyRealization,
  kMalformedEntry,
  kDegenerateSplit,
  kPredicateMap,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Exception carrying a category and an optional location (file, record id,
// table id, line) describing where the failure was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = "")
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  ErrorCode code() const { return code_; }
  const std::string& location() const { return location_; }

  // Returns a copy of this error with `outer` prefixed to the location.
  Error WithLocation(std::string_view outer) const;

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace trikit

#endif  // TRIKIT_ERROR_H_
