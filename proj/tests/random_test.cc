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

#include "textaug/random.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace textaug {
namespace {

TEST(RngTest, EngineIsStandardMersenneTwister) {
  // The C++ standard pins the 10000th output of a default-seeded mt19937_64.
  Rng rng(5489);
  std::uint64_t value = 0;
  for (int i = 0; i < 10000; ++i) value = rng.NextU64();
  EXPECT_EQ(value, 9981545732273789042ULL);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(7), b(7), c(8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.UniformIndex(1000);
    EXPECT_EQ(x, b.UniformIndex(1000));
    differs |= x != c.UniformIndex(1000);
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, UniformIndexStaysInRange) {
  Rng rng(1);
  for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 10ULL, 1ULL << 40}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.UniformIndex(n), n);
  }
  EXPECT_EQ(rng.UniformIndex(1), 0u);
}

TEST(RngTest, UniformIndexIsRoughlyUniform) {
  Rng rng(3);
  std::vector<int> counts(6, 0);
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[rng.UniformIndex(6)];
  // Chi-square with 5 degrees of freedom; 20.5 is the 0.999 quantile.
  double chi2 = 0;
  for (const int c : counts) chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  EXPECT_LT(chi2, 20.5);
}

TEST(RngTest, UniformRealInUnitInterval) {
  Rng rng(11);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.UniformReal();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}

TEST(StableHashTest, MatchesFnv1aReferenceVectors) {
  EXPECT_EQ(StableHash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(StableHash("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(StableHash("foobar"), 0x85944171f73967e8ULL);
}

TEST(DeriveSeedTest, LabelsAndMastersSeparateStreams) {
  EXPECT_EQ(DeriveSeed(42, "split"), DeriveSeed(42, "split"));
  EXPECT_NE(DeriveSeed(42, "split"), DeriveSeed(42, "eda"));
  EXPECT_NE(DeriveSeed(42, "split"), DeriveSeed(43, "split"));
  EXPECT_NE(MixSeed(0, 0), MixSeed(0, 1));
}

TEST(ShuffleTest, ProducesAPermutation) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> v(17);
    std::iota(v.begin(), v.end(), 0);
    Shuffle(std::span<int>(v), rng);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 17; ++i) ASSERT_EQ(sorted[i], i);
  }
}

TEST(ShuffleTest, EveryOrderOfThreeAppears) {
  Rng rng(9);
  std::vector<std::vector<int>> seen;
  for (int i = 0; i < 600; ++i) {
    std::vector<int> v{0, 1, 2};
    Shuffle(std::span<int>(v), rng);
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  EXPECT_EQ(seen.size(), 6u);
}

}  // namespace
}  // namespace textaug
