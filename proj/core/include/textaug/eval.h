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

#ifndef TEXTAUG_EVAL_H_
#define TEXTAUG_EVAL_H_

#include <cstddef>
#include <span>

#include "textaug/corpus.h"

namespace textaug {

// 2x2 contingency counts with toxic (1) as the positive class.
struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

// Throws UsageError when the lengths differ or the input is empty.
ConfusionMatrix Confusion(std::span<const Label> predictions,
                          std::span<const Label> labels);

// Positive-class metrics. A zero denominator yields 0 and sets
// `zero_denominator` instead of producing NaN.
struct Metrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool zero_denominator = false;
};

Metrics PrecisionRecallF1(const ConfusionMatrix& cm);

}  // namespace textaug

#endif  // TEXTAUG_EVAL_H_
