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

#ifndef TRIKIT_RANDOM_H_
#define TRIKIT_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace trikit {

// Seedable random stream with a fixed, platform-independent output sequence.
//
// The engine is std::mt19937_64, whose output is pinned by the standard.
// The standard distributions are not, so integer and real draws are derived
// here:
//   UniformInt(lo, hi)  rejection sampling on the top bits of one 64-bit
//                       word, so every value in [lo, hi] is equally likely;
//   UniformReal()       (word >> 11) * 2^-53, a double in [0, 1).
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Stream for one table: seeded with Mix(seed ^ Fnv1a64(table_id)), so
  // per-table results do not depend on processing order.
  static Rng ForKey(uint64_t seed, std::string_view key);

  uint64_t Next() { return engine_(); }
  // Uniform over the closed range [lo, hi]; requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);
  double UniformReal();
  // Uniform over [lo, hi]; returns lo exactly when lo == hi.
  double UniformReal(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

uint64_t Fnv1a64(std::string_view bytes);
// splitmix64 finalizer.
uint64_t Mix64(uint64_t x);

}  // namespace trikit

#endif  // TRIKIT_RANDOM_H_
