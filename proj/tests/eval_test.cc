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

#include "textaug/eval.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "textaug/errors.h"

namespace textaug {
namespace {

TEST(ConfusionTest, MatchesRecountOnRandomPairs) {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(50);
    std::vector<Label> pred(n), gold(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = static_cast<Label>(rng.UniformIndex(2));
      gold[i] = static_cast<Label>(rng.UniformIndex(2));
    }
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int p = ToInt(pred[i]), g = ToInt(gold[i]);
      tp += p & g;
      fp += p & (1 - g);
      fn += (1 - p) & g;
      tn += (1 - p) & (1 - g);
    }
    const auto cm = Confusion(pred, gold);
    ASSERT_EQ(cm, (ConfusionMatrix{tp, fp, fn, tn}));
    ASSERT_EQ(cm.total(), n);

    const auto m = PrecisionRecallF1(cm);
    const double precision = tp + fp ? static_cast<double>(tp) / (tp + fp) : 0.0;
    const double recall = tp + fn ? static_cast<double>(tp) / (tp + fn) : 0.0;
    const double f1 = tp ? 2.0 * tp / (2.0 * tp + fp + fn) : 0.0;
    EXPECT_NEAR(m.precision, precision, 1e-12);
    EXPECT_NEAR(m.recall, recall, 1e-12);
    EXPECT_NEAR(m.f1, f1, 1e-12);
    // Without a true positive one of P, R or P + R (for F1) is 0 / 0.
    EXPECT_EQ(m.zero_denominator, tp == 0);
  }
}

TEST(MetricsTest, KnownValues) {
  const auto m = PrecisionRecallF1({6, 2, 4, 88});
  EXPECT_DOUBLE_EQ(m.precision, 0.75);
  EXPECT_DOUBLE_EQ(m.recall, 0.6);
  EXPECT_DOUBLE_EQ(m.f1, 2 * 0.75 * 0.6 / 1.35);
  EXPECT_FALSE(m.zero_denominator);
}

TEST(MetricsTest, ZeroDenominatorsGiveZero) {
  const auto none_predicted = PrecisionRecallF1({0, 0, 5, 95});
  EXPECT_EQ(none_predicted.precision, 0.0);
  EXPECT_EQ(none_predicted.f1, 0.0);
  EXPECT_TRUE(none_predicted.zero_denominator);
  const auto no_positives = PrecisionRecallF1({0, 3, 0, 97});
  EXPECT_EQ(no_positives.recall, 0.0);
  EXPECT_TRUE(no_positives.zero_denominator);
}

TEST(ConfusionTest, RejectsBadInput) {
  const std::vector<Label> a{Label::kToxic}, b{Label::kToxic, Label::kNonToxic}, empty;
  EXPECT_THROW(Confusion(a, b), UsageError);
  EXPECT_THROW(Confusion(empty, empty), UsageError);
}

}  // namespace
}  // namespace textaug
