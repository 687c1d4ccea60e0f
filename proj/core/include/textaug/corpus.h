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

#ifndef TEXTAUG_CORPUS_H_
#define TEXTAUG_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "textaug/text.h"

namespace textaug {

enum class Label : std::uint8_t { kNonToxic = 0, kToxic = 1 };

inline int ToInt(Label label) { return static_cast<int>(label); }

// One labeled comment. `tokens` only ever holds clean, non-empty tokens.
struct Document {
  std::string id;
  std::string raw_text;
  std::vector<std::string> tokens;
  Label label = Label::kNonToxic;

  bool operator==(const Document&) const = default;
};

// Immutable, ordered collection of documents with unique ids.
class Corpus {
 public:
  Corpus() = default;
  // Throws UsageError on duplicate ids.
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const Document& operator[](std::size_t i) const { return documents_[i]; }
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  auto begin() const { return documents_.begin(); }
  auto end() const { return documents_.end(); }

  std::size_t positive_count() const { return positive_count_; }
  // (count of label 1) / size, 0 for an empty corpus.
  double positive_fraction() const;

  std::vector<Label> labels() const;

 private:
  std::vector<Document> documents_;
  std::size_t positive_count_ = 0;
};

// Column names of the input CSV. A row is toxic iff any label column is 1.
struct CsvSchema {
  std::string id_column = "id";
  std::string text_column = "comment_text";
  std::vector<std::string> label_columns = {
      "toxic", "severe_toxic", "obscene", "threat", "insult", "identity_hate"};
};

struct SplitSpec {
  double test_fraction = 0.2;
  double small_train_fraction = 0.05;
  std::uint64_t seed = 42;
  bool stratified = true;

  // Throws ConfigError unless both fractions lie strictly in (0, 1).
  void Validate() const;
};

struct TrainTestSplit {
  Corpus train;
  Corpus test;
};

// Throws IoError for a missing file and ParseError naming the data row for
// wrong column counts or label values other than 0/1.
Corpus LoadCsv(const std::filesystem::path& path, const CsvSchema& schema,
               const TextCleaner& cleaner);

// Deterministic given spec.seed. Both sides keep the corpus order. When
// stratified, each class is allocated round(test_fraction * |class|) test
// documents (largest remainder so the total is round(test_fraction * N)).
TrainTestSplit SplitCorpus(const Corpus& corpus, const SplitSpec& spec);

// round(small_train_fraction * |train|) documents, stratified when
// spec.stratified. Throws ConfigError when a class would get no document.
Corpus SampleSmallTrain(const Corpus& train, const SplitSpec& spec);

// Same as SampleSmallTrain with an explicit fraction in (0, 1]; a fraction
// of exactly 1 returns `train` unchanged.
Corpus SampleFraction(const Corpus& train, double fraction, std::uint64_t seed,
                      bool stratified);

// Round half up, the rounding used for every derived count.
std::size_t RoundHalfUp(double value);

// Tab-separated interchange format: header `id<TAB>label<TAB>text`, text is
// the space-joined token list.
void WriteTsv(const Corpus& corpus, const std::filesystem::path& path);
Corpus ReadTsv(const std::filesystem::path& path);

// Distinct token count.
std::size_t VocabularySize(const Corpus& corpus);

// Concatenates corpora in order. Throws UsageError on duplicate ids.
Corpus Concat(const std::vector<const Corpus*>& parts);

}  // namespace textaug

#endif  // TEXTAUG_CORPUS_H_
