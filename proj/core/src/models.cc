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

#include "textaug/models.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "textaug/errors.h"
#include "textaug/random.h"

namespace textaug {
namespace {

constexpr std::string_view kMagic = "textaug-linear";
constexpr int kFormatVersion = 1;

double Signed(Label label) { return label == Label::kToxic ? 1.0 : -1.0; }

std::string ReadLine(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("linear model dump truncated");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string Field(std::istream& in, std::string_view key) {
  const std::string line = ReadLine(in);
  if (line.rfind(std::string(key) + " ", 0) != 0) {
    throw ParseError("linear model dump: expected '" + std::string(key) +
                     "', got '" + line + "'");
  }
  return line.substr(key.size() + 1);
}

std::uint64_t ParseUnsigned(const std::string& text) {
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') {
    throw ParseError("linear model dump: bad integer '" + text + "'");
  }
  return value;
}

void CheckIndices(const SparseVector& x, std::size_t dimension) {
  if (!x.indices.empty() && x.indices.back() >= dimension) {
    throw UsageError("feature index " + std::to_string(x.indices.back()) +
                     " out of range for dimension " +
                     std::to_string(dimension));
  }
}

std::array<double, 2> ClassWeights(std::span<const Label> y,
                                   ClassWeighting weighting) {
  if (weighting == ClassWeighting::kNone) return {1.0, 1.0};
  std::array<std::size_t, 2> counts{};
  for (const Label label : y) ++counts[ToInt(label)];
  const double n = static_cast<double>(y.size());
  std::array<double, 2> weights{};
  for (std::size_t c = 0; c < 2; ++c) {
    weights[c] = counts[c] == 0 ? 0.0 : n / (2.0 * static_cast<double>(counts[c]));
  }
  return weights;
}

}  // namespace

std::string_view LossKindName(LossKind kind) {
  return kind == LossKind::kLogistic ? "logistic" : "hinge";
}

LossKind ParseLossKind(std::string_view name) {
  if (name == "logistic" || name == "lr") return LossKind::kLogistic;
  if (name == "hinge" || name == "svm") return LossKind::kHinge;
  throw ConfigError("unknown classifier '" + std::string(name) +
                    "' (expected logistic or hinge)");
}

TrainConfig TrainConfig::Defaults(LossKind kind) {
  TrainConfig cfg;
  cfg.epochs = 30;
  cfg.l2_lambda = 1e-4;
  cfg.lr0 = kind == LossKind::kLogistic ? 0.5 : 0.1;
  cfg.schedule = LearningRateSchedule::kInverseScaling;
  cfg.decay = cfg.lr0 * cfg.l2_lambda;
  return cfg;
}

void TrainConfig::Validate() const {
  if (epochs < 0) throw ConfigError("epochs must be non-negative");
  if (!(lr0 > 0.0) || !std::isfinite(lr0)) {
    throw ConfigError("lr0 must be positive");
  }
  if (!(decay >= 0.0)) throw ConfigError("decay must be non-negative");
  if (!(l2_lambda >= 0.0)) throw ConfigError("l2_lambda must be non-negative");
}

LinearModel::LinearModel(std::vector<double> weights, double bias,
                         LossKind kind, double l2_lambda)
    : weights_(std::move(weights)),
      bias_(bias),
      loss_kind_(kind),
      l2_lambda_(l2_lambda) {}

double LinearModel::Margin(const SparseVector& x) const {
  CheckIndices(x, weights_.size());
  return x.Dot(weights_) + bias_;
}

double LinearModel::Score(const SparseVector& x) const {
  const double margin = Margin(x);
  return loss_kind_ == LossKind::kLogistic ? Sigmoid(margin) : margin;
}

Label LinearModel::Predict(const SparseVector& x, double threshold) const {
  const double score = Score(x);
  const bool positive =
      loss_kind_ == LossKind::kLogistic ? score >= threshold : score >= 0.0;
  return positive ? Label::kToxic : Label::kNonToxic;
}

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double ExampleLoss(LossKind kind, double margin, Label label) {
  const double m = Signed(label) * margin;
  if (kind == LossKind::kHinge) return std::max(0.0, 1.0 - m);
  return m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

double LossDerivative(LossKind kind, double margin, Label label) {
  const double y = Signed(label);
  const double m = y * margin;
  if (kind == LossKind::kHinge) return m < 1.0 ? -y : 0.0;
  return -y * Sigmoid(-m);
}

double ExampleObjective(LossKind kind, std::span<const double> w, double b,
                        const SparseVector& x, Label label, double lambda,
                        double class_weight) {
  CheckIndices(x, w.size());
  const double margin = x.Dot(w) + b;
  const double reg = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
  return class_weight * ExampleLoss(kind, margin, label) + 0.5 * lambda * reg;
}

Gradient ExampleGradient(LossKind kind, std::span<const double> w, double b,
                         const SparseVector& x, Label label, double lambda,
                         double class_weight) {
  CheckIndices(x, w.size());
  const double g = class_weight * LossDerivative(kind, x.Dot(w) + b, label);
  Gradient grad;
  grad.weights.resize(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) grad.weights[j] = lambda * w[j];
  for (std::size_t k = 0; k < x.nnz(); ++k) {
    grad.weights[x.indices[k]] += g * x.values[k];
  }
  grad.bias = g;
  return grad;
}

double TrainingObjective(const LinearModel& model,
                         std::span<const SparseVector> x,
                         std::span<const Label> y, ClassWeighting weighting) {
  if (x.size() != y.size() || x.empty()) {
    throw UsageError("objective needs equally many, non-zero examples and labels");
  }
  const auto weights = ClassWeights(y, weighting);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += weights[ToInt(y[i])] *
           ExampleLoss(model.loss_kind(), model.Margin(x[i]), y[i]);
  }
  const auto& w = model.weights();
  const double reg = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
  return sum / static_cast<double>(x.size()) + 0.5 * model.l2_lambda() * reg;
}

LinearModel Train(std::span<const SparseVector> x, std::span<const Label> y,
                  const TrainConfig& cfg, LossKind kind, std::size_t dimension) {
  cfg.Validate();
  if (x.size() != y.size()) {
    throw UsageError("got " + std::to_string(x.size()) + " examples but " +
                     std::to_string(y.size()) + " labels");
  }
  if (x.size() < 2) throw TrainingError("need at least two examples");
  const auto positives = static_cast<std::size_t>(
      std::count(y.begin(), y.end(), Label::kToxic));
  if (positives == 0 || positives == y.size()) {
    throw TrainingError("training data contains a single class");
  }
  for (const auto& example : x) CheckIndices(example, dimension);

  const auto class_weight = ClassWeights(y, cfg.class_weighting);
  const double lambda = cfg.l2_lambda;

  // w = scale * v keeps the shrinkage step O(1) per update.
  std::vector<double> v(dimension, 0.0);
  double scale = 1.0;
  double bias = 0.0;

  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(cfg.seed);
  std::uint64_t t = 0;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    Shuffle(std::span<std::size_t>(order), rng);
    double loss_sum = 0.0;
    for (const std::size_t i : order) {
      const double eta =
          cfg.schedule == LearningRateSchedule::kConstant
              ? cfg.lr0
              : cfg.lr0 / (1.0 + cfg.decay * static_cast<double>(t));
      const SparseVector& xi = x[i];
      const double c = class_weight[ToInt(y[i])];
      const double margin = scale * xi.Dot(v) + bias;
      loss_sum += c * ExampleLoss(kind, margin, y[i]);
      const double g = c * LossDerivative(kind, margin, y[i]);
      if (g != 0.0) {
        const double step = eta * g / scale;
        for (std::size_t k = 0; k < xi.nnz(); ++k) {
          v[xi.indices[k]] -= step * xi.values[k];
        }
        bias -= eta * g;
      }
      scale /= 1.0 + eta * lambda;
      if (scale < 1e-9) {
        for (double& value : v) value *= scale;
        scale = 1.0;
      }
      ++t;
    }
    const double reg =
        scale * scale * std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    const double objective =
        loss_sum / static_cast<double>(x.size()) + 0.5 * lambda * reg;
    if (!std::isfinite(objective) || !std::isfinite(bias)) {
      throw TrainingError("training loss is not finite", epoch);
    }
  }

  for (double& value : v) value *= scale;
  LinearModel model(std::move(v), bias, kind, lambda);
  model.train_config = cfg;
  return model;
}

std::vector<FeatureWeight> FeatureImportance(const LinearModel& model,
                                             const TfIdfModel& tfidf,
                                             std::size_t k) {
  if (model.dimension() != tfidf.vocab_size()) {
    throw UsageError("model dimension " + std::to_string(model.dimension()) +
                     " does not match vocabulary size " +
                     std::to_string(tfidf.vocab_size()));
  }
  std::vector<FeatureWeight> ranked;
  ranked.reserve(model.dimension());
  for (std::size_t j = 0; j < model.dimension(); ++j) {
    ranked.push_back({tfidf.terms()[j], model.weights()[j]});
  }
  const std::size_t count = std::min(k, ranked.size());
  auto better = [](const FeatureWeight& a, const FeatureWeight& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.term < b.term;
  };
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(count),
                    ranked.end(), better);
  ranked.resize(count);
  return ranked;
}

void LinearModel::Save(std::ostream& out) const {
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "loss " << LossKindName(loss_kind_) << '\n';
  out << "l2_lambda " << FormatHexDouble(l2_lambda_) << '\n';
  out << "bias " << FormatHexDouble(bias_) << '\n';
  out << "epochs " << train_config.epochs << '\n';
  out << "lr0 " << FormatHexDouble(train_config.lr0) << '\n';
  out << "schedule "
      << (train_config.schedule == LearningRateSchedule::kConstant ? "constant"
                                                                   : "inverse")
      << '\n';
  out << "decay " << FormatHexDouble(train_config.decay) << '\n';
  out << "seed " << train_config.seed << '\n';
  out << "class_weighting "
      << (train_config.class_weighting == ClassWeighting::kBalanced ? "balanced"
                                                                    : "none")
      << '\n';
  out << "dimension " << weights_.size() << '\n';
  const auto nonzero = static_cast<std::size_t>(std::count_if(
      weights_.begin(), weights_.end(), [](double w) { return w != 0.0; }));
  out << "nonzero " << nonzero << '\n';
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] != 0.0) {
      out << j << '\t' << FormatHexDouble(weights_[j]) << '\n';
    }
  }
}

LinearModel LinearModel::Load(std::istream& in) {
  const std::string header = ReadLine(in);
  if (header != std::string(kMagic) + " " + std::to_string(kFormatVersion)) {
    throw ParseError("not a textaug linear model dump (version " +
                     std::to_string(kFormatVersion) + "): '" + header + "'");
  }
  const LossKind kind = ParseLossKind(Field(in, "loss"));
  const double lambda = ParseHexDouble(Field(in, "l2_lambda"));
  const double bias = ParseHexDouble(Field(in, "bias"));
  TrainConfig cfg;
  cfg.epochs = static_cast<int>(ParseUnsigned(Field(in, "epochs")));
  cfg.lr0 = ParseHexDouble(Field(in, "lr0"));
  const std::string schedule = Field(in, "schedule");
  if (schedule != "constant" && schedule != "inverse") {
    throw ParseError("linear model dump: unknown schedule '" + schedule + "'");
  }
  cfg.schedule = schedule == "constant" ? LearningRateSchedule::kConstant
                                        : LearningRateSchedule::kInverseScaling;
  cfg.decay = ParseHexDouble(Field(in, "decay"));
  cfg.seed = ParseUnsigned(Field(in, "seed"));
  const std::string weighting = Field(in, "class_weighting");
  if (weighting != "none" && weighting != "balanced") {
    throw ParseError("linear model dump: unknown class weighting '" +
                     weighting + "'");
  }
  cfg.class_weighting = weighting == "balanced" ? ClassWeighting::kBalanced
                                                : ClassWeighting::kNone;
  cfg.l2_lambda = lambda;
  const std::size_t dimension = ParseUnsigned(Field(in, "dimension"));
  const std::size_t nonzero = ParseUnsigned(Field(in, "nonzero"));
  std::vector<double> weights(dimension, 0.0);
  for (std::size_t k = 0; k < nonzero; ++k) {
    const std::string line = ReadLine(in);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("linear model dump: bad weight line", k + 1);
    }
    const std::size_t index = ParseUnsigned(line.substr(0, tab));
    if (index >= dimension) {
      throw ParseError("linear model dump: weight index out of range", k + 1);
    }
    weights[index] = ParseHexDouble(line.substr(tab + 1));
  }
  LinearModel model(std::move(weights), bias, kind, lambda);
  model.train_config = cfg;
  return model;
}

void LinearModel::SaveFile(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  Save(out);
  if (!out) throw IoError("failed writing " + path.string());
}

LinearModel LinearModel::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return Load(in);
}

}  // namespace textaug
