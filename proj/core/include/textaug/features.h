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

#ifndef TEXTAUG_FEATURES_H_
#define TEXTAUG_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/corpus.h"

namespace textaug {

// Sparse real vector: strictly increasing indices, no stored zeros.
struct SparseVector {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;

  std::size_t nnz() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  double Dot(std::span<const double> dense) const;
  double SquaredNorm() const;

  bool operator==(const SparseVector&) const = default;
};

enum class Norm { kL2, kNone };

struct TfIdfOptions {
  std::size_t min_df = 1;
  // Keep only the `max_features` most frequent terms (df desc, term asc);
  // 0 keeps everything.
  std::size_t max_features = 0;
  Norm norm = Norm::kL2;
};

// Unigram TF-IDF with raw term counts and smoothed idf:
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1
// Vocabulary columns are assigned in lexicographic term order.
class TfIdfModel {
 public:
  TfIdfModel() = default;

  // Throws FitError for an empty corpus or min_df == 0.
  static TfIdfModel Fit(const Corpus& corpus, const TfIdfOptions& options = {});
  static TfIdfModel Fit(std::span<const std::vector<std::string>> documents,
                        const TfIdfOptions& options = {});

  // Out-of-vocabulary tokens are ignored. Under L2 norm a non-empty result
  // has unit length.
  SparseVector Transform(std::span<const std::string> tokens) const;
  SparseVector Transform(const Document& doc) const {
    return Transform(doc.tokens);
  }
  std::vector<SparseVector> TransformAll(const Corpus& corpus) const;

  std::size_t vocab_size() const { return terms_.size(); }
  std::optional<std::uint32_t> IndexOf(std::string_view term) const;
  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<double>& idf() const { return idf_; }
  const std::vector<std::size_t>& df() const { return df_; }
  std::size_t doc_count() const { return doc_count_; }
  Norm norm() const { return norm_; }

  // Text dump; doubles are written as hex floats so Load(Save(m))
  // reproduces every transform bit for bit.
  void Save(std::ostream& out) const;
  static TfIdfModel Load(std::istream& in);
  void SaveFile(const std::filesystem::path& path) const;
  static TfIdfModel LoadFile(const std::filesystem::path& path);

 private:
  void BuildIndex();

  std::vector<std::string> terms_;
  std::vector<double> idf_;
  std::vector<std::size_t> df_;
  std::size_t doc_count_ = 0;
  Norm norm_ = Norm::kL2;
  std::map<std::string, std::uint32_t, std::less<>> index_;
};

// Shared by the model dumps.
std::string FormatHexDouble(double value);
double ParseHexDouble(std::string_view text);

}  // namespace textaug

#endif  // TEXTAUG_FEATURES_H_
