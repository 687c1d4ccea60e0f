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

#ifndef TEXTAUG_EDA_H_
#define TEXTAUG_EDA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/corpus.h"
#include "textaug/lexicon.h"
#include "textaug/random.h"

namespace textaug {

enum class EdaOp {
  kSynonymReplacement,
  kRandomSwap,
  kRandomInsertion,
  kRandomDeletion,
};

std::string_view EdaOpName(EdaOp op);  // "sr", "rs", "ri", "rd"
EdaOp ParseEdaOp(std::string_view name);

struct AugmentationConfig {
  // Fraction of tokens perturbed by SR/RS/RI, and the RD deletion
  // probability.
  double alpha = 0.1;
  // Augmented sentences generated per input sentence.
  int n_aug = 9;
  std::uint64_t seed = 42;
  // nullopt draws one of the four operations uniformly per sentence.
  std::optional<EdaOp> fixed_op;

  void Validate() const;  // 0 < alpha < 1, n_aug >= 1
};

using Tokens = std::vector<std::string>;

// Replaces up to `n` distinct eligible positions (non-stopwords with a
// lexicon entry), chosen uniformly without replacement, with a synonym
// drawn uniformly from the alternatives to the original token.
Tokens SynonymReplacement(std::span<const std::string> tokens, std::size_t n,
                          const SynonymLexicon& lexicon, RandomSource& rng);

// `n` times: exchange two distinct, uniformly chosen positions.
Tokens RandomSwap(std::span<const std::string> tokens, std::size_t n,
                  RandomSource& rng);

// Chooses up to `n` distinct eligible positions as in SynonymReplacement
// and, for each, inserts one of its synonyms at a uniform position of the
// growing sentence.
Tokens RandomInsertion(std::span<const std::string> tokens, std::size_t n,
                       const SynonymLexicon& lexicon, RandomSource& rng);

// Deletes each token with probability `p`; keeps one uniformly chosen
// token when everything would be deleted.
Tokens RandomDeletion(std::span<const std::string> tokens, double p,
                      RandomSource& rng);

// max(1, round_half_up(alpha * length)).
std::size_t PerturbationCount(double alpha, std::size_t length);

Tokens ApplyEdaOp(EdaOp op, std::span<const std::string> tokens, double alpha,
                  const SynonymLexicon& lexicon, RandomSource& rng);

// `cfg.n_aug` augmented copies of `doc`, ids `<doc.id>#eda<k>`, labels
// unchanged. The generator is seeded from (cfg.seed, doc.id) so each document
// is reproducible on its own. A document without tokens yields no copies and
// a warning is appended to `warnings` when given.
std::vector<Document> AugmentEda(const Document& doc,
                                 const AugmentationConfig& cfg,
                                 const SynonymLexicon& lexicon,
                                 std::vector<std::string>* warnings = nullptr);

// Variant that draws from a caller-supplied source.
std::vector<Document> AugmentEda(const Document& doc,
                                 const AugmentationConfig& cfg,
                                 const SynonymLexicon& lexicon,
                                 RandomSource& rng,
                                 std::vector<std::string>* warnings = nullptr);

// Augmented copies only, in source order (all copies of document 0 first).
// `threads` > 1 processes documents concurrently; output is identical.
Corpus EdaCopies(const Corpus& source, const AugmentationConfig& cfg,
                 const SynonymLexicon& lexicon,
                 std::vector<std::string>* warnings = nullptr,
                 unsigned threads = 1);

// `source` followed by its EDA copies: (n_aug + 1) x the documents.
Corpus AugmentCorpusEda(const Corpus& source, const AugmentationConfig& cfg,
                        const SynonymLexicon& lexicon,
                        std::vector<std::string>* warnings = nullptr,
                        unsigned threads = 1);

}  // namespace textaug

#endif  // TEXTAUG_EDA_H_
