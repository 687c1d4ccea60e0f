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

#ifndef TEXTAUG_MODELS_H_
#define TEXTAUG_MODELS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textaug/corpus.h"
#include "textaug/features.h"

namespace textaug {

enum class LossKind { kLogistic, kHinge };

std::string_view LossKindName(LossKind kind);  // "logistic" / "hinge"
LossKind ParseLossKind(std::string_view name);  // also accepts "lr", "svm"

enum class LearningRateSchedule {
  kConstant,        // lr0
  kInverseScaling,  // lr0 / (1 + decay * t), t = updates so far
};

enum class ClassWeighting {
  kNone,
  kBalanced,  // example loss scaled by n / (2 * n_class)
};

struct TrainConfig {
  int epochs = 30;
  double lr0 = 0.5;
  LearningRateSchedule schedule = LearningRateSchedule::kInverseScaling;
  double decay = 5e-5;
  double l2_lambda = 1e-4;
  std::uint64_t seed = 42;
  ClassWeighting class_weighting = ClassWeighting::kNone;

  // epochs 30, lambda 1e-4, lr0 0.5 (logistic) or 0.1 (hinge), decay
  // lr0 * lambda.
  static TrainConfig Defaults(LossKind kind);
  void Validate() const;
};

// L2-regularized linear classifier over TF-IDF columns.
class LinearModel {
 public:
  LinearModel() = default;
  LinearModel(std::vector<double> weights, double bias, LossKind kind,
              double l2_lambda);

  // w.x + b. Throws UsageError when x has an index outside the weights.
  double Margin(const SparseVector& x) const;
  // sigmoid(w.x + b) for logistic, the raw margin for hinge.
  double Score(const SparseVector& x) const;
  // Logistic: 1 iff score >= threshold. Hinge: 1 iff margin >= 0 (the
  // threshold is ignored).
  Label Predict(const SparseVector& x, double threshold = 0.5) const;

  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }
  LossKind loss_kind() const { return loss_kind_; }
  double l2_lambda() const { return l2_lambda_; }
  std::size_t dimension() const { return weights_.size(); }

  // Recorded by Train().
  TrainConfig train_config;

  // Versioned text dump (hex floats, only non-zero weights listed).
  void Save(std::ostream& out) const;
  static LinearModel Load(std::istream& in);
  void SaveFile(const std::filesystem::path& path) const;
  static LinearModel LoadFile(const std::filesystem::path& path);

 private:
  std::vector<double> weights_;
  double bias_ = 0.0;
  LossKind loss_kind_ = LossKind::kLogistic;
  double l2_lambda_ = 0.0;
};

double Sigmoid(double z);

// Per-example loss l(y, z) with y mapped to {-1, +1}:
//   logistic: ln(1 + exp(-y z)),  hinge: max(0, 1 - y z).
double ExampleLoss(LossKind kind, double margin, Label label);
// dl/dz. For hinge the subgradient at the kink y z = 1 is taken as 0.
double LossDerivative(LossKind kind, double margin, Label label);

struct Gradient {
  std::vector<double> weights;
  double bias = 0.0;
};

// Single-example SGD objective  c * l(y, w.x + b) + (lambda / 2) |w|^2 and
// its gradient (c is the class weight). The bias is not regularized.
double ExampleObjective(LossKind kind, std::span<const double> w, double b,
                        const SparseVector& x, Label label, double lambda,
                        double class_weight = 1.0);
Gradient ExampleGradient(LossKind kind, std::span<const double> w, double b,
                         const SparseVector& x, Label label, double lambda,
                         double class_weight = 1.0);

// Full objective (1/n) sum c_i l(y_i, w.x_i + b) + (lambda / 2) |w|^2.
double TrainingObjective(const LinearModel& model,
                         std::span<const SparseVector> x,
                         std::span<const Label> y,
                         ClassWeighting weighting = ClassWeighting::kNone);

// Plain SGD from zero initialization. Each update takes the loss step and
// then applies the L2 shrinkage implicitly, w <- (w - eta c l'(z) x) /
// (1 + eta lambda), which stays stable for any lambda. The shuffle order is
// drawn from cfg.seed, so the result is bitwise reproducible.
//
// Throws UsageError for |x| != |y| or an out-of-range feature index, and
// TrainingError for fewer than two examples, a single class or a
// non-finite loss (naming the epoch).
LinearModel Train(std::span<const SparseVector> x, std::span<const Label> y,
                  const TrainConfig& cfg, LossKind kind, std::size_t dimension);

struct FeatureWeight {
  std::string term;
  double weight = 0.0;

  bool operator==(const FeatureWeight&) const = default;
};

// The k terms with the largest weights (most toxic-indicative), ordered by
// weight descending then term ascending. k beyond the vocabulary returns
// the full ranking.
std::vector<FeatureWeight> FeatureImportance(const LinearModel& model,
                                             const TfIdfModel& tfidf,
                                             std::size_t k);

}  // namespace textaug

#endif  // TEXTAUG_MODELS_H_
