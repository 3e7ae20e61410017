// Copyright 2026 The groupmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROUPMATCH_RANDOM_H_
#define GROUPMATCH_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace groupmatch {

// Seeded random stream with distributions implemented here rather than via
// <random>'s distribution classes, whose output is implementation-defined.
// The engine (mt19937_64) has a standardized output sequence, so a given
// seed yields the same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for a named stage, e.g. Rng::Derive(seed, "split").
  static Rng Derive(std::uint64_t seed, std::string_view stream);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t Uniform(std::uint64_t n);
  // Uniform in [lo, hi].
  std::uint64_t UniformIn(std::uint64_t lo, std::uint64_t hi) {
    return lo + Uniform(hi - lo + 1);
  }
  // Uniform in [0, 1).
  double UnitReal() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return p >= 1.0 || UnitReal() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Uniform(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t MixSeed(std::uint64_t seed, std::string_view stream);

}  // namespace groupmatch

#endif  // GROUPMATCH_RANDOM_H_
