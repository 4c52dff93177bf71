// core/include/diarsim/rng.h

// Copyright 2026  Diarsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARSIM_RNG_H_
#define DIARSIM_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace diarsim {

/// Derives the seed of work item `index` from a batch seed (splitmix64 mix).
/// Work items seeded this way are independent of execution order, which is
/// what makes parallel and serial batch generation produce identical output.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random source. All samplers are defined on top of the raw
/// mt19937_64 output with explicit arithmetic, so a given seed yields the
/// same stream on every standard-conforming platform. Generation code must
/// never use std:: distributions directly: their mapping from engine output
/// to values is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Rejection sampling, unbiased. n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n);

  /// Exponential with the given mean; mean == 0 returns 0 exactly.
  double exponential(double mean);

  /// Fisher-Yates shuffle driven by uniform_int.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace diarsim

#endif  // DIARSIM_RNG_H_
