// Copyright 2026 The textaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEXTAUG_RANDOM_H_
#define TEXTAUG_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace textaug {

// Source of randomness consumed by the augmentation and sampling code.
// Everything that draws random numbers goes through this interface so the
// draw sequence is reproducible across platforms and can be scripted in
// tests.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform integer in [0, n). `n` must be positive.
  virtual std::uint64_t UniformIndex(std::uint64_t n) = 0;

  // Uniform real in [0, 1).
  virtual double UniformReal() = 0;
};

// 64-bit Mersenne Twister with portable (implementation-independent)
// integer and real mapping.
class Rng final : public RandomSource {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t UniformIndex(std::uint64_t n) override;
  double UniformReal() override;

  std::uint64_t NextU64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer over (seed, salt).
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t salt);

// FNV-1a 64-bit. Stable across runs and platforms.
std::uint64_t StableHash(std::string_view text);

// Seed for a named stage, derived from a master seed.
inline std::uint64_t DeriveSeed(std::uint64_t master, std::string_view label) {
  return MixSeed(master, StableHash(label));
}

// Fisher-Yates shuffle.
template <typename T>
void Shuffle(std::span<T> items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.UniformIndex(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace textaug

#endif  // TEXTAUG_RANDOM_H_
