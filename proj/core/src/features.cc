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

#include "textaug/features.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "textaug/errors.h"

namespace textaug {
namespace {

constexpr std::string_view kMagic = "textaug-tfidf";
constexpr int kFormatVersion = 1;

std::string ReadLine(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(std::string("tfidf dump truncated before ") + what);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string ExpectField(const std::string& line, std::string_view key) {
  if (line.rfind(std::string(key) + " ", 0) != 0) {
    throw ParseError("tfidf dump: expected '" + std::string(key) + "', got '" +
                     line + "'");
  }
  return line.substr(key.size() + 1);
}

std::size_t ParseCount(const std::string& text) {
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') {
    throw ParseError("tfidf dump: bad integer '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

double SparseVector::Dot(std::span<const double> dense) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    sum += values[k] * dense[indices[k]];
  }
  return sum;
}

double SparseVector::SquaredNorm() const {
  double sum = 0.0;
  for (const double v : values) sum += v * v;
  return sum;
}

std::string FormatHexDouble(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", value);
  return buf;
}

double ParseHexDouble(std::string_view text) {
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || *end != '\0') {
    throw ParseError("bad floating point value '" + copy + "'");
  }
  return value;
}

TfIdfModel TfIdfModel::Fit(const Corpus& corpus, const TfIdfOptions& options) {
  std::vector<std::vector<std::string>> docs;
  docs.reserve(corpus.size());
  for (const Document& doc : corpus) docs.push_back(doc.tokens);
  return Fit(docs, options);
}

TfIdfModel TfIdfModel::Fit(std::span<const std::vector<std::string>> documents,
                           const TfIdfOptions& options) {
  if (documents.empty()) throw FitError("cannot fit TF-IDF on an empty corpus");
  if (options.min_df == 0) throw FitError("min_df must be at least 1");

  std::unordered_map<std::string_view, std::size_t> df;
  for (const auto& doc : documents) {
    std::vector<std::string_view> seen(doc.begin(), doc.end());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (const auto term : seen) ++df[term];
  }

  std::vector<std::pair<std::string_view, std::size_t>> kept;
  for (const auto& [term, count] : df) {
    if (count >= options.min_df) kept.emplace_back(term, count);
  }
  if (options.max_features > 0 && kept.size() > options.max_features) {
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    kept.resize(options.max_features);
  }
  std::sort(kept.begin(), kept.end());

  TfIdfModel model;
  model.doc_count_ = documents.size();
  model.norm_ = options.norm;
  const double n = static_cast<double>(documents.size());
  for (const auto& [term, count] : kept) {
    model.terms_.emplace_back(term);
    model.df_.push_back(count);
    model.idf_.push_back(
        std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  model.BuildIndex();
  return model;
}

void TfIdfModel::BuildIndex() {
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> TfIdfModel::IndexOf(std::string_view term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector TfIdfModel::Transform(std::span<const std::string> tokens) const {
  std::vector<std::uint32_t> hits;
  hits.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (const auto index = IndexOf(token)) hits.push_back(*index);
  }
  std::sort(hits.begin(), hits.end());

  SparseVector out;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    out.indices.push_back(hits[i]);
    out.values.push_back(static_cast<double>(j - i) * idf_[hits[i]]);
    i = j;
  }
  if (norm_ == Norm::kL2 && !out.empty()) {
    const double length = std::sqrt(out.SquaredNorm());
    for (double& v : out.values) v /= length;
  }
  return out;
}

std::vector<SparseVector> TfIdfModel::TransformAll(const Corpus& corpus) const {
  std::vector<SparseVector> out;
  out.reserve(corpus.size());
  for (const Document& doc : corpus) out.push_back(Transform(doc));
  return out;
}

void TfIdfModel::Save(std::ostream& out) const {
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "doc_count " << doc_count_ << '\n';
  out << "norm " << (norm_ == Norm::kL2 ? "l2" : "none") << '\n';
  out << "vocab_size " << terms_.size() << '\n';
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    out << terms_[i] << '\t' << df_[i] << '\t' << FormatHexDouble(idf_[i])
        << '\n';
  }
}

TfIdfModel TfIdfModel::Load(std::istream& in) {
  const std::string header = ReadLine(in, "header");
  if (header != std::string(kMagic) + " " + std::to_string(kFormatVersion)) {
    throw ParseError("not a textaug TF-IDF dump (version " +
                     std::to_string(kFormatVersion) + "): '" + header + "'");
  }
  TfIdfModel model;
  model.doc_count_ = ParseCount(ExpectField(ReadLine(in, "doc_count"), "doc_count"));
  const std::string norm = ExpectField(ReadLine(in, "norm"), "norm");
  if (norm == "l2") {
    model.norm_ = Norm::kL2;
  } else if (norm == "none") {
    model.norm_ = Norm::kNone;
  } else {
    throw ParseError("tfidf dump: unknown norm '" + norm + "'");
  }
  const std::size_t size =
      ParseCount(ExpectField(ReadLine(in, "vocab_size"), "vocab_size"));
  for (std::size_t i = 0; i < size; ++i) {
    const std::string line = ReadLine(in, "vocabulary");
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw ParseError("tfidf dump: bad vocabulary line", i + 1);
    }
    model.terms_.push_back(line.substr(0, t1));
    model.df_.push_back(ParseCount(line.substr(t1 + 1, t2 - t1 - 1)));
    model.idf_.push_back(ParseHexDouble(line.substr(t2 + 1)));
  }
  model.BuildIndex();
  if (model.index_.size() != model.terms_.size()) {
    throw ParseError("tfidf dump: duplicate vocabulary terms");
  }
  return model;
}

void TfIdfModel::SaveFile(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  Save(out);
  if (!out) throw IoError("failed writing " + path.string());
}

TfIdfModel TfIdfModel::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return Load(in);
}

}  // namespace textaug
