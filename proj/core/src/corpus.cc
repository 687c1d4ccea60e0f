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

#include "textaug/corpus.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "textaug/csv.h"
#include "textaug/errors.h"
#include "textaug/random.h"

namespace textaug {
namespace {

std::size_t ColumnIndex(const std::vector<std::string>& header,
                        const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw ParseError("header has no column named '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

// Per-class counts whose total is round(fraction * sum) and where each class
// receives floor(fraction * n_c) or one more (largest remainder, ties to the
// lower label).
std::array<std::size_t, 2> AllocateStratified(
    const std::array<std::size_t, 2>& class_sizes, double fraction) {
  const std::size_t total_size = class_sizes[0] + class_sizes[1];
  const std::size_t target =
      RoundHalfUp(fraction * static_cast<double>(total_size));
  std::array<std::size_t, 2> alloc{};
  std::array<double, 2> remainder{};
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < 2; ++c) {
    const double quota = fraction * static_cast<double>(class_sizes[c]);
    alloc[c] = static_cast<std::size_t>(std::floor(quota));
    remainder[c] = quota - std::floor(quota);
    assigned += alloc[c];
  }
  std::array<std::size_t, 2> order{0, 1};
  if (remainder[1] > remainder[0]) std::swap(order[0], order[1]);
  for (std::size_t k = 0; assigned < target && k < 2; ++k) {
    const std::size_t c = order[k];
    if (alloc[c] < class_sizes[c]) {
      ++alloc[c];
      ++assigned;
    }
  }
  return alloc;
}

// Returns a membership mask over `corpus` selecting `fraction` of it.
std::vector<bool> SelectSubset(const Corpus& corpus, double fraction,
                               std::uint64_t seed, bool stratified,
                               bool require_complement) {
  Rng rng(seed);
  std::vector<bool> selected(corpus.size(), false);
  if (!stratified) {
    const std::size_t count =
        RoundHalfUp(fraction * static_cast<double>(corpus.size()));
    if (count == 0 || (require_complement && count >= corpus.size())) {
      throw ConfigError("fraction " + std::to_string(fraction) +
                        " leaves an empty side for " +
                        std::to_string(corpus.size()) + " documents");
    }
    std::vector<std::size_t> indices(corpus.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    Shuffle(std::span<std::size_t>(indices), rng);
    for (std::size_t i = 0; i < count; ++i) selected[indices[i]] = true;
    return selected;
  }

  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    by_class[ToInt(corpus[i].label)].push_back(i);
  }
  const std::array<std::size_t, 2> sizes{by_class[0].size(),
                                         by_class[1].size()};
  const auto alloc = AllocateStratified(sizes, fraction);
  for (std::size_t c = 0; c < 2; ++c) {
    if (alloc[c] == 0 || (require_complement && alloc[c] >= sizes[c])) {
      throw ConfigError("stratified sampling impossible: class " +
                        std::to_string(c) + " has " +
                        std::to_string(sizes[c]) +
                        " documents, fraction " + std::to_string(fraction) +
                        " allocates " + std::to_string(alloc[c]));
    }
    Shuffle(std::span<std::size_t>(by_class[c]), rng);
    for (std::size_t i = 0; i < alloc[c]; ++i) selected[by_class[c][i]] = true;
  }
  return selected;
}

}  // namespace

Corpus::Corpus(std::vector<Document> documents)
    : documents_(std::move(documents)) {
  std::unordered_set<std::string_view> ids;
  ids.reserve(documents_.size());
  for (const Document& doc : documents_) {
    if (!ids.insert(doc.id).second) {
      throw UsageError("duplicate document id '" + doc.id + "'");
    }
    if (doc.label == Label::kToxic) ++positive_count_;
  }
}

double Corpus::positive_fraction() const {
  if (documents_.empty()) return 0.0;
  return static_cast<double>(positive_count_) /
         static_cast<double>(documents_.size());
}

std::vector<Label> Corpus::labels() const {
  std::vector<Label> out;
  out.reserve(documents_.size());
  for (const Document& doc : documents_) out.push_back(doc.label);
  return out;
}

void SplitSpec::Validate() const {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ConfigError("test_fraction must lie in (0, 1)");
  }
  if (!(small_train_fraction > 0.0 && small_train_fraction < 1.0)) {
    throw ConfigError("small_train_fraction must lie in (0, 1)");
  }
}

std::size_t RoundHalfUp(double value) {
  if (!(value > 0.0)) return 0;
  return static_cast<std::size_t>(std::floor(value + 0.5));
}

Corpus LoadCsv(const std::filesystem::path& path, const CsvSchema& schema,
               const TextCleaner& cleaner) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  CsvReader reader(in);
  const auto header = reader.Next();
  if (!header) throw ParseError(path.string() + ": empty file");
  if (schema.label_columns.empty()) {
    throw ConfigError("schema names no label columns");
  }

  const std::size_t id_col = ColumnIndex(*header, schema.id_column);
  const std::size_t text_col = ColumnIndex(*header, schema.text_column);
  std::vector<std::size_t> label_cols;
  for (const auto& name : schema.label_columns) {
    label_cols.push_back(ColumnIndex(*header, name));
  }

  std::vector<Document> docs;
  std::size_t row = 0;
  while (auto record = reader.Next()) {
    ++row;
    if (record->size() == 1 && record->front().empty()) continue;
    if (record->size() != header->size()) {
      throw ParseError("expected " + std::to_string(header->size()) +
                           " columns, found " + std::to_string(record->size()),
                       row);
    }
    bool toxic = false;
    for (const std::size_t col : label_cols) {
      const std::string value = Trim((*record)[col]);
      if (value == "1") {
        toxic = true;
      } else if (value != "0") {
        throw ParseError("label column '" + (*header)[col] +
                             "' has non-binary value '" + value + "'",
                         row);
      }
    }
    Document doc;
    doc.id = (*record)[id_col];
    doc.raw_text = std::move((*record)[text_col]);
    doc.tokens = cleaner.CleanAndTokenize(doc.raw_text);
    doc.label = toxic ? Label::kToxic : Label::kNonToxic;
    docs.push_back(std::move(doc));
  }
  try {
    return Corpus(std::move(docs));
  } catch (const UsageError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

TrainTestSplit SplitCorpus(const Corpus& corpus, const SplitSpec& spec) {
  spec.Validate();
  if (corpus.size() < 2) {
    throw ConfigError("cannot split a corpus of fewer than 2 documents");
  }
  const std::vector<bool> in_test = SelectSubset(
      corpus, spec.test_fraction, spec.seed, spec.stratified, true);
  std::vector<Document> train, test;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (in_test[i] ? test : train).push_back(corpus[i]);
  }
  return {Corpus(std::move(train)), Corpus(std::move(test))};
}

Corpus SampleSmallTrain(const Corpus& train, const SplitSpec& spec) {
  spec.Validate();
  return SampleFraction(train, spec.small_train_fraction, spec.seed,
                        spec.stratified);
}

Corpus SampleFraction(const Corpus& train, double fraction, std::uint64_t seed,
                      bool stratified) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ConfigError("sample fraction must lie in (0, 1]");
  }
  if (fraction == 1.0) return train;
  const std::vector<bool> keep =
      SelectSubset(train, fraction, seed, stratified, false);
  std::vector<Document> out;
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (keep[i]) out.push_back(train[i]);
  }
  return Corpus(std::move(out));
}

void WriteTsv(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << "id\tlabel\ttext\n";
  for (const Document& doc : corpus) {
    if (doc.id.find_first_of("\t\n\r") != std::string::npos) {
      throw UsageError("document id contains a tab or line break: '" +
                       doc.id + "'");
    }
    out << doc.id << '\t' << ToInt(doc.label) << '\t' << JoinTokens(doc.tokens)
        << '\n';
  }
  if (!out) throw IoError("failed writing " + path.string());
}

Corpus ReadTsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "id\tlabel\ttext") {
    throw ParseError(path.string() + ": expected header id<TAB>label<TAB>text");
  }
  std::vector<Document> docs;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("expected 3 tab-separated columns", row);
    }
    const std::string label = line.substr(t1 + 1, t2 - t1 - 1);
    if (label != "0" && label != "1") {
      throw ParseError("non-binary label '" + label + "'", row);
    }
    Document doc;
    doc.id = line.substr(0, t1);
    doc.raw_text = line.substr(t2 + 1);
    doc.tokens = Tokenize(doc.raw_text);
    for (const auto& token : doc.tokens) {
      if (!IsCleanToken(token)) {
        throw ParseError("text is not cleaned (token '" + token + "')", row);
      }
    }
    doc.label = label == "1" ? Label::kToxic : Label::kNonToxic;
    docs.push_back(std::move(doc));
  }
  try {
    return Corpus(std::move(docs));
  } catch (const UsageError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::size_t VocabularySize(const Corpus& corpus) {
  std::unordered_set<std::string_view> vocab;
  for (const Document& doc : corpus) {
    for (const auto& token : doc.tokens) vocab.insert(token);
  }
  return vocab.size();
}

Corpus Concat(const std::vector<const Corpus*>& parts) {
  std::vector<Document> docs;
  std::size_t total = 0;
  for (const Corpus* part : parts) total += part->size();
  docs.reserve(total);
  for (const Corpus* part : parts) {
    docs.insert(docs.end(), part->begin(), part->end());
  }
  return Corpus(std::move(docs));
}

}  // namespace textaug
