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

#ifndef TEXTAUG_EXPERIMENT_H_
#define TEXTAUG_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/backtranslate.h"
#include "textaug/corpus.h"
#include "textaug/eda.h"
#include "textaug/eval.h"
#include "textaug/features.h"
#include "textaug/lexicon.h"
#include "textaug/models.h"

namespace textaug {

enum class MethodKind {
  kBaseline,               // small-train as is
  kEda,                    // + n_aug EDA copies per document
  kBacktranslation,        // + one copy through a single pivot
  kBacktranslationAll,     // + one copy per configured pivot
  kBacktranslationAllEda,  // + one copy per pivot + the EDA copies
  kOracle,                 // the full training split
};

// A training-set construction. Names: "baseline", "eda", "bt(es)",
// "bt(all)", "bt(all)+eda", "oracle".
struct Method {
  MethodKind kind = MethodKind::kBaseline;
  std::optional<LanguageCode> language;  // set iff kind == kBacktranslation

  std::string Name() const;
  static Method Parse(std::string_view name);
  bool operator==(const Method&) const = default;
};

struct ExperimentPlan {
  std::vector<Method> methods;
  std::vector<LossKind> classifiers;
  // Every seed of the run derives from this one (see the *Seed helpers).
  std::uint64_t master_seed = 42;
  // Fractions and stratification; the seed field is not used.
  SplitSpec split;
  // alpha, n_aug and op policy; the seed field is not used.
  AugmentationConfig aug;
  std::vector<LanguageCode> bt_langs = DefaultPivotLanguages();
  // Small-train fractions for the F1-vs-size sweep, strictly increasing.
  std::vector<double> fractions = {0.05, 0.1, 0.25, 0.5, 1.0};
  // Per-classifier overrides of TrainConfig::Defaults (seed is derived).
  std::map<LossKind, TrainConfig> train;
  TfIdfOptions tfidf;
  std::size_t top_k = 20;
  double threshold = 0.5;
  BtOptions bt;
  unsigned threads = 1;

  void Validate() const;
  TrainConfig TrainConfigFor(LossKind kind) const;
  bool NeedsBacktranslation() const;
  bool NeedsEda() const;

  std::uint64_t SplitSeed() const;
  std::uint64_t SampleSeed() const;
  std::uint64_t EdaSeed() const;
  std::uint64_t TrainSeed(const Method& method, LossKind kind) const;
};

struct ExperimentResources {
  const TextCleaner* cleaner = nullptr;
  // Required when the plan uses EDA.
  const SynonymLexicon* lexicon = nullptr;
  // Required when the plan uses backtranslation.
  Translator* translator = nullptr;
  // Optional; an in-memory cache is used when null.
  TranslationCache* cache = nullptr;
};

struct CellResult {
  Method method;
  LossKind classifier = LossKind::kLogistic;
  bool ok = false;
  std::string error;
  ConfusionMatrix confusion;
  Metrics metrics;
  std::size_t train_size = 0;
  std::size_t vocab_size = 0;
  std::uint64_t augment_seed = 0;
  std::uint64_t train_seed = 0;
  std::vector<FeatureWeight> importances;
};

struct RunMetadata {
  std::uint64_t master_seed = 0;
  std::uint64_t split_seed = 0;
  std::uint64_t sample_seed = 0;
  std::uint64_t eda_seed = 0;
  std::string config_hash;
  std::size_t corpus_size = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t small_train_size = 0;
  // StableHash over the ordered test ids.
  std::uint64_t test_ids_digest = 0;
  // Wall clock, seconds since the epoch; not written to report files.
  std::int64_t started_at = 0;
  std::int64_t finished_at = 0;
};

struct ResultsTable {
  RunMetadata meta;
  std::vector<CellResult> cells;  // methods x classifiers, plan order
  std::vector<VocabRow> vocab;    // one row per method training set
  std::vector<std::string> warnings;

  const CellResult* Find(std::string_view method, LossKind classifier) const;
};

// Splits once, samples the small training set once, builds each method's
// training set from it, refits TF-IDF per method and trains every
// classifier. A failing stage marks the affected cells as failed; the run
// goes on.
ResultsTable RunPlan(const ExperimentPlan& plan, const Corpus& corpus,
                     const ExperimentResources& resources);

struct SweepRecord {
  double fraction = 0.0;
  Method method;
  LossKind classifier = LossKind::kLogistic;
  bool ok = false;
  double f1 = 0.0;
  double recall = 0.0;
  std::size_t train_size = 0;
};

// For each plan fraction, re-samples the small training set (same split,
// same sample seed) and reruns all methods and classifiers.
std::vector<SweepRecord> SweepFractions(const ExperimentPlan& plan,
                                        const Corpus& corpus,
                                        const ExperimentResources& resources);

// Throws UsageError when a training document (or the document it was
// derived from) is a test document.
void AuditTestIsolation(const Corpus& test, const Corpus& training_set);

// Id of the original document an augmented id derives from ("a1#eda3" ->
// "a1").
std::string_view RootId(std::string_view id);

}  // namespace textaug

#endif  // TEXTAUG_EXPERIMENT_H_
