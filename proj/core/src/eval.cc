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

#include <string>

#include "textaug/errors.h"

namespace textaug {

ConfusionMatrix Confusion(std::span<const Label> predictions,
                          std::span<const Label> labels) {
  if (predictions.size() != labels.size()) {
    throw UsageError("got " + std::to_string(predictions.size()) +
                     " predictions for " + std::to_string(labels.size()) +
                     " labels");
  }
  if (labels.empty()) throw UsageError("cannot evaluate zero examples");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool predicted = predictions[i] == Label::kToxic;
    const bool actual = labels[i] == Label::kToxic;
    if (predicted && actual) {
      ++cm.tp;
    } else if (predicted) {
      ++cm.fp;
    } else if (actual) {
      ++cm.fn;
    } else {
      ++cm.tn;
    }
  }
  return cm;
}

Metrics PrecisionRecallF1(const ConfusionMatrix& cm) {
  Metrics m;
  const std::size_t predicted = cm.tp + cm.fp;
  const std::size_t actual = cm.tp + cm.fn;
  if (predicted > 0) {
    m.precision = static_cast<double>(cm.tp) / static_cast<double>(predicted);
  } else {
    m.zero_denominator = true;
  }
  if (actual > 0) {
    m.recall = static_cast<double>(cm.tp) / static_cast<double>(actual);
  } else {
    m.zero_denominator = true;
  }
  if (m.precision + m.recall > 0.0) {
    m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
  } else {
    m.zero_denominator = true;
  }
  return m;
}

}  // namespace textaug
