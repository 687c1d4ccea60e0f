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

#include "textaug/eda.h"

#include <algorithm>
#include <thread>

#include "textaug/errors.h"
#include "textaug/text.h"

namespace textaug {
namespace {

// Up to `n` eligible positions drawn uniformly without replacement, in draw
// order (partial Fisher-Yates over the eligible list).
std::vector<std::size_t> ChooseEligible(std::span<const std::string> tokens,
                                        std::size_t n,
                                        const SynonymLexicon& lexicon,
                                        RandomSource& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (lexicon.IsEligible(tokens[i])) eligible.push_back(i);
  }
  const std::size_t k = std::min(n, eligible.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(
                           rng.UniformIndex(eligible.size() - i));
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(k);
  return eligible;
}

const std::string& PickSynonym(const std::string& token,
                               const SynonymLexicon& lexicon,
                               RandomSource& rng) {
  const auto& alternatives = lexicon.AlternativesOf(token);
  return alternatives[rng.UniformIndex(alternatives.size())];
}

}  // namespace

std::string_view EdaOpName(EdaOp op) {
  switch (op) {
    case EdaOp::kSynonymReplacement: return "sr";
    case EdaOp::kRandomSwap: return "rs";
    case EdaOp::kRandomInsertion: return "ri";
    case EdaOp::kRandomDeletion: return "rd";
  }
  return "?";
}

EdaOp ParseEdaOp(std::string_view name) {
  if (name == "sr") return EdaOp::kSynonymReplacement;
  if (name == "rs") return EdaOp::kRandomSwap;
  if (name == "ri") return EdaOp::kRandomInsertion;
  if (name == "rd") return EdaOp::kRandomDeletion;
  throw ConfigError("unknown EDA operation '" + std::string(name) +
                    "' (expected sr, rs, ri or rd)");
}

void AugmentationConfig::Validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
  if (n_aug < 1) throw ConfigError("n_aug must be at least 1");
}

Tokens SynonymReplacement(std::span<const std::string> tokens, std::size_t n,
                          const SynonymLexicon& lexicon, RandomSource& rng) {
  Tokens out(tokens.begin(), tokens.end());
  for (const std::size_t pos : ChooseEligible(tokens, n, lexicon, rng)) {
    out[pos] = PickSynonym(tokens[pos], lexicon, rng);
  }
  return out;
}

Tokens RandomSwap(std::span<const std::string> tokens, std::size_t n,
                  RandomSource& rng) {
  Tokens out(tokens.begin(), tokens.end());
  if (out.size() < 2) return out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(rng.UniformIndex(out.size()));
    auto j = static_cast<std::size_t>(rng.UniformIndex(out.size() - 1));
    if (j >= i) ++j;
    std::swap(out[i], out[j]);
  }
  return out;
}

Tokens RandomInsertion(std::span<const std::string> tokens, std::size_t n,
                       const SynonymLexicon& lexicon, RandomSource& rng) {
  Tokens out(tokens.begin(), tokens.end());
  for (const std::size_t pos : ChooseEligible(tokens, n, lexicon, rng)) {
    const std::string& synonym = PickSynonym(tokens[pos], lexicon, rng);
    const auto at = static_cast<std::ptrdiff_t>(rng.UniformIndex(out.size() + 1));
    out.insert(out.begin() + at, synonym);
  }
  return out;
}

Tokens RandomDeletion(std::span<const std::string> tokens, double p,
                      RandomSource& rng) {
  Tokens out;
  if (tokens.empty()) return out;
  for (const auto& token : tokens) {
    if (!(rng.UniformReal() < p)) out.push_back(token);
  }
  if (out.empty()) out.push_back(tokens[rng.UniformIndex(tokens.size())]);
  return out;
}

std::size_t PerturbationCount(double alpha, std::size_t length) {
  return std::max<std::size_t>(
      1, RoundHalfUp(alpha * static_cast<double>(length)));
}

Tokens ApplyEdaOp(EdaOp op, std::span<const std::string> tokens, double alpha,
                  const SynonymLexicon& lexicon, RandomSource& rng) {
  const std::size_t n = PerturbationCount(alpha, tokens.size());
  switch (op) {
    case EdaOp::kSynonymReplacement:
      return SynonymReplacement(tokens, n, lexicon, rng);
    case EdaOp::kRandomSwap:
      return RandomSwap(tokens, n, rng);
    case EdaOp::kRandomInsertion:
      return RandomInsertion(tokens, n, lexicon, rng);
    case EdaOp::kRandomDeletion:
      return RandomDeletion(tokens, alpha, rng);
  }
  return Tokens(tokens.begin(), tokens.end());
}

std::vector<Document> AugmentEda(const Document& doc,
                                 const AugmentationConfig& cfg,
                                 const SynonymLexicon& lexicon,
                                 std::vector<std::string>* warnings) {
  Rng rng(MixSeed(cfg.seed, StableHash(doc.id)));
  return AugmentEda(doc, cfg, lexicon, rng, warnings);
}

std::vector<Document> AugmentEda(const Document& doc,
                                 const AugmentationConfig& cfg,
                                 const SynonymLexicon& lexicon,
                                 RandomSource& rng,
                                 std::vector<std::string>* warnings) {
  cfg.Validate();
  std::vector<Document> out;
  if (doc.tokens.empty()) {
    if (warnings != nullptr) {
      warnings->push_back("eda: document '" + doc.id +
                          "' has no tokens; skipped");
    }
    return out;
  }
  out.reserve(static_cast<std::size_t>(cfg.n_aug));
  for (int k = 0; k < cfg.n_aug; ++k) {
    const EdaOp op = cfg.fixed_op.has_value()
                         ? *cfg.fixed_op
                         : static_cast<EdaOp>(rng.UniformIndex(4));
    Document copy;
    copy.id = doc.id + "#eda" + std::to_string(k);
    copy.tokens = ApplyEdaOp(op, doc.tokens, cfg.alpha, lexicon, rng);
    copy.raw_text = JoinTokens(copy.tokens);
    copy.label = doc.label;
    out.push_back(std::move(copy));
  }
  return out;
}

Corpus EdaCopies(const Corpus& source, const AugmentationConfig& cfg,
                 const SynonymLexicon& lexicon,
                 std::vector<std::string>* warnings, unsigned threads) {
  cfg.Validate();
  std::vector<std::vector<Document>> per_doc(source.size());
  std::vector<std::vector<std::string>> per_doc_warnings(source.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < source.size(); i += stride) {
      per_doc[i] = AugmentEda(source[i], cfg, lexicon, &per_doc_warnings[i]);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || source.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  std::vector<Document> docs;
  docs.reserve(source.size() * static_cast<std::size_t>(cfg.n_aug));
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (auto& copy : per_doc[i]) docs.push_back(std::move(copy));
    if (warnings != nullptr) {
      warnings->insert(warnings->end(), per_doc_warnings[i].begin(),
                       per_doc_warnings[i].end());
    }
  }
  return Corpus(std::move(docs));
}

Corpus AugmentCorpusEda(const Corpus& source, const AugmentationConfig& cfg,
                        const SynonymLexicon& lexicon,
                        std::vector<std::string>* warnings, unsigned threads) {
  const Corpus copies = EdaCopies(source, cfg, lexicon, warnings, threads);
  return Concat({&source, &copies});
}

}  // namespace textaug
