// phonevote/random.h

// Copyright 2026 The phonevote Authors

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

// Platform-independent random numbers.
//
// std::mt19937_64 is fully specified by the standard, but the std::*
// distributions are not, so outputs built on them differ between standard
// libraries. Rng layers its own distributions on top of the engine:
//
//   UniformInt(n)  - rejection sampling on the raw 64-bit output:
//                    draw r until r >= (2^64 mod n), return r mod n
//   UniformReal()  - top 53 bits of one draw, times 2^-53, in [0, 1)
//
// DeriveSeed mixes a base seed with a stream index through SplitMix64 so
// independent streams (one per utterance, say) can be generated in any
// order.

#ifndef PHONEVOTE_RANDOM_H_
#define PHONEVOTE_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace phonevote {

std::uint64_t SplitMix64(std::uint64_t x);

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(SplitMix64(seed) ^ (stream * 0x9E3779B97F4A7C15ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  /// Uniform in [0, n). n must be > 0.
  std::uint64_t UniformInt(std::uint64_t n);

  /// Uniform in [lo, hi], inclusive.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  /// Uniform in [0, 1).
  double UniformReal();

  bool Bernoulli(double p) { return UniformReal() < p; }

  /// Index i drawn with probability weights[i] / sum(weights).
  std::size_t Categorical(std::span<const double> weights);

  /// Fisher-Yates, last element first.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[UniformInt(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace phonevote

#endif  // PHONEVOTE_RANDOM_H_
