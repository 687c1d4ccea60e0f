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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "test_util.h"
#include "textaug/errors.h"

namespace textaug {
namespace {

using Docs = std::vector<std::vector<std::string>>;

// Dense reference: every quantity recomputed from its definition.
struct DenseTfIdf {
  std::vector<std::string> vocab;
  std::vector<double> idf;

  explicit DenseTfIdf(const Docs& docs) {
    std::set<std::string> terms;
    for (const auto& d : docs) terms.insert(d.begin(), d.end());
    vocab.assign(terms.begin(), terms.end());
    for (const auto& term : vocab) {
      double df = 0;
      for (const auto& d : docs) df += std::count(d.begin(), d.end(), term) > 0 ? 1 : 0;
      idf.push_back(std::log((1.0 + docs.size()) / (1.0 + df)) + 1.0);
    }
  }

  std::vector<double> Transform(const std::vector<std::string>& doc, bool l2) const {
    std::vector<double> out(vocab.size(), 0.0);
    for (std::size_t j = 0; j < vocab.size(); ++j) {
      out[j] = static_cast<double>(std::count(doc.begin(), doc.end(), vocab[j])) * idf[j];
    }
    if (l2) {
      double sq = 0;
      for (double v : out) sq += v * v;
      if (sq > 0) for (double& v : out) v /= std::sqrt(sq);
    }
    return out;
  }
};

std::vector<double> Densify(const SparseVector& v, std::size_t n) {
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < v.nnz(); ++k) out[v.indices[k]] = v.values[k];
  return out;
}

Docs RandomDocs(Rng& rng) {
  Docs docs(1 + rng.UniformIndex(15));
  for (auto& d : docs) {
    d.resize(rng.UniformIndex(12));
    for (auto& t : d) t = "t" + std::to_string(rng.UniformIndex(20));
  }
  return docs;
}

TEST(TfIdfTest, MatchesDenseOracleOnRandomCorpora) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Docs docs = RandomDocs(rng);
    if (std::all_of(docs.begin(), docs.end(), [](const auto& d) { return d.empty(); })) {
      docs[0].push_back("t0");
    }
    const DenseTfIdf oracle(docs);
    for (Norm norm : {Norm::kL2, Norm::kNone}) {
      TfIdfOptions options;
      options.norm = norm;
      const auto model = TfIdfModel::Fit(std::span<const std::vector<std::string>>(docs), options);
      ASSERT_EQ(model.terms(), oracle.vocab);
      for (std::size_t j = 0; j < oracle.idf.size(); ++j) {
        EXPECT_NEAR(model.idf()[j], oracle.idf[j], 1e-9);
      }
      // Includes a document of unseen terms.
      Docs probes = docs;
      probes.push_back({"unseen", "t3", "t3"});
      for (const auto& doc : probes) {
        const auto sparse = model.Transform(doc);
        for (std::size_t k = 0; k < sparse.nnz(); ++k) {
          ASSERT_NE(sparse.values[k], 0.0);
          if (k > 0) {
            ASSERT_LT(sparse.indices[k - 1], sparse.indices[k]);
          }
        }
        const auto got = Densify(sparse, model.vocab_size());
        const auto want = oracle.Transform(doc, norm == Norm::kL2);
        for (std::size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(got[j], want[j], 1e-9);
      }
    }
  }
}

TEST(TfIdfTest, UnitNormAndEmptyTransform) {
  const Docs docs{{"a", "b", "b"}, {"b", "c"}};
  const auto model = TfIdfModel::Fit(std::span<const std::vector<std::string>>(docs));
  EXPECT_NEAR(model.Transform(docs[0]).SquaredNorm(), 1.0, 1e-12);
  EXPECT_TRUE(model.Transform(std::vector<std::string>{"zzz"}).empty());
  EXPECT_EQ(model.IndexOf("b"), 1u);
  EXPECT_FALSE(model.IndexOf("zzz").has_value());
  EXPECT_EQ(model.df(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(model.doc_count(), 2u);
}

TEST(TfIdfTest, MinDfAndMaxFeatures) {
  const Docs docs{{"a", "b", "c"}, {"a", "b"}, {"a", "d"}};
  TfIdfOptions options;
  options.min_df = 2;
  EXPECT_EQ(TfIdfModel::Fit(std::span<const std::vector<std::string>>(docs), options).terms(),
            (std::vector<std::string>{"a", "b"}));
  options.min_df = 1;
  options.max_features = 3;
  // df: a 3, b 2, c 1, d 1; the tie between c and d keeps c.
  EXPECT_EQ(TfIdfModel::Fit(std::span<const std::vector<std::string>>(docs), options).terms(),
            (std::vector<std::string>{"a", "b", "c"}));
  options.min_df = 0;
  EXPECT_THROW(TfIdfModel::Fit(std::span<const std::vector<std::string>>(docs), options), FitError);
  EXPECT_THROW(TfIdfModel::Fit(Corpus()), FitError);
}

TEST(TfIdfTest, SaveLoadIsBitExact) {
  Rng rng(5);
  const Docs docs = RandomDocs(rng);
  auto model = TfIdfModel::Fit(std::span<const std::vector<std::string>>(docs));
  std::stringstream buffer;
  model.Save(buffer);
  const auto loaded = TfIdfModel::Load(buffer);
  EXPECT_EQ(loaded.terms(), model.terms());
  EXPECT_EQ(loaded.idf(), model.idf());
  EXPECT_EQ(loaded.df(), model.df());
  for (const auto& d : docs) EXPECT_EQ(loaded.Transform(d), model.Transform(d));
  std::stringstream junk("not a model\n");
  EXPECT_THROW(TfIdfModel::Load(junk), ParseError);
}

TEST(HexDoubleTest, RoundTrips) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.UniformReal() - 0.5) * std::pow(10.0, static_cast<int>(rng.UniformIndex(40)) - 20);
    EXPECT_EQ(ParseHexDouble(FormatHexDouble(v)), v);
  }
  EXPECT_EQ(ParseHexDouble(FormatHexDouble(0.0)), 0.0);
  EXPECT_THROW(ParseHexDouble("zz"), ParseError);
}

TEST(SparseVectorTest, DotAndNorm) {
  SparseVector v{{0, 2}, {3.0, 4.0}};
  const std::vector<double> dense{1.0, 10.0, 0.5};
  EXPECT_DOUBLE_EQ(v.Dot(dense), 5.0);
  EXPECT_DOUBLE_EQ(v.SquaredNorm(), 25.0);
}

}  // namespace
}  // namespace textaug
