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

#include "textaug/experiment.h"

#include <algorithm>
#include <chrono>
#include <memory>
#include <thread>
#include <unordered_set>

#include "textaug/errors.h"
#include "textaug/random.h"

namespace textaug {
namespace {

std::int64_t NowSeconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

// Augmented copies of the small training set, computed once per run and
// shared by every method that needs them.
struct AugmentationPool {
  std::optional<Corpus> eda;
  std::string eda_error;
  std::map<LanguageCode, Corpus> bt;
  std::map<LanguageCode, std::string> bt_error;
};

std::vector<LanguageCode> PivotsNeeded(const ExperimentPlan& plan) {
  std::vector<LanguageCode> out;
  auto add = [&](const LanguageCode& lang) {
    if (std::find(out.begin(), out.end(), lang) == out.end()) out.push_back(lang);
  };
  for (const Method& method : plan.methods) {
    if (method.kind == MethodKind::kBacktranslation) add(*method.language);
    if (method.kind == MethodKind::kBacktranslationAll ||
        method.kind == MethodKind::kBacktranslationAllEda) {
      for (const auto& lang : plan.bt_langs) add(lang);
    }
  }
  return out;
}

AugmentationPool BuildPool(const ExperimentPlan& plan, const Corpus& small,
                           const ExperimentResources& resources,
                           TranslationCache& cache,
                           std::vector<std::string>& warnings) {
  AugmentationPool pool;
  if (plan.NeedsEda()) {
    if (resources.lexicon == nullptr) {
      pool.eda_error = "no synonym lexicon configured";
    } else {
      try {
        AugmentationConfig cfg = plan.aug;
        cfg.seed = plan.EdaSeed();
        pool.eda = EdaCopies(small, cfg, *resources.lexicon, &warnings,
                             plan.threads);
      } catch (const Error& e) {
        pool.eda_error = e.what();
        warnings.push_back("eda: " + pool.eda_error);
      }
    }
  }
  for (const LanguageCode& lang : PivotsNeeded(plan)) {
    if (resources.translator == nullptr || resources.cleaner == nullptr) {
      pool.bt_error[lang] = "no translator configured";
      continue;
    }
    try {
      BtResult result = BacktranslationCopies(small, lang, *resources.translator,
                                              cache, *resources.cleaner, plan.bt);
      for (const auto& failure : result.failures) {
        warnings.push_back("bt(" + lang.str() + "): document '" +
                           failure.document_id + "' skipped: " +
                           failure.message);
      }
      pool.bt.emplace(lang, std::move(result.corpus));
    } catch (const Error& e) {
      pool.bt_error[lang] = e.what();
      warnings.push_back("bt(" + lang.str() + "): " + pool.bt_error[lang]);
    }
  }
  return pool;
}

const Corpus& PoolEda(const AugmentationPool& pool) {
  if (!pool.eda) throw AugmentationError("eda: " + pool.eda_error);
  return *pool.eda;
}

const Corpus& PoolBt(const AugmentationPool& pool, const LanguageCode& lang) {
  const auto it = pool.bt.find(lang);
  if (it == pool.bt.end()) {
    const auto err = pool.bt_error.find(lang);
    throw AugmentationError("bt(" + lang.str() + "): " +
                            (err == pool.bt_error.end() ? "not computed"
                                                        : err->second));
  }
  return it->second;
}

Corpus BuildTrainingSet(const ExperimentPlan& plan, const Method& method,
                        const Corpus& small, const Corpus& train,
                        const AugmentationPool& pool) {
  std::vector<const Corpus*> parts{&small};
  switch (method.kind) {
    case MethodKind::kBaseline:
      return small;
    case MethodKind::kOracle:
      return train;
    case MethodKind::kEda:
      parts.push_back(&PoolEda(pool));
      break;
    case MethodKind::kBacktranslation:
      parts.push_back(&PoolBt(pool, *method.language));
      break;
    case MethodKind::kBacktranslationAll:
    case MethodKind::kBacktranslationAllEda:
      for (const auto& lang : plan.bt_langs) parts.push_back(&PoolBt(pool, lang));
      if (method.kind == MethodKind::kBacktranslationAllEda) {
        parts.push_back(&PoolEda(pool));
      }
      break;
  }
  return Concat(parts);
}

struct MethodOutcome {
  std::vector<CellResult> cells;
  std::optional<VocabRow> vocab;
};

MethodOutcome RunMethod(const ExperimentPlan& plan, const Method& method,
                        const Corpus& small, const Corpus& train,
                        const Corpus& test, const AugmentationPool& pool) {
  MethodOutcome outcome;
  // Backtranslation draws no random numbers, so only EDA has a seed.
  const bool uses_eda = method.kind == MethodKind::kEda ||
                        method.kind == MethodKind::kBacktranslationAllEda;
  for (const LossKind kind : plan.classifiers) {
    CellResult cell;
    cell.method = method;
    cell.classifier = kind;
    cell.augment_seed = uses_eda ? plan.EdaSeed() : 0;
    cell.train_seed = plan.TrainSeed(method, kind);
    outcome.cells.push_back(std::move(cell));
  }

  try {
    const Corpus training_set = BuildTrainingSet(plan, method, small, train, pool);
    AuditTestIsolation(test, training_set);
    const TfIdfModel tfidf = TfIdfModel::Fit(training_set, plan.tfidf);
    const auto x_train = tfidf.TransformAll(training_set);
    const auto y_train = training_set.labels();
    const auto x_test = tfidf.TransformAll(test);
    const auto y_test = test.labels();
    outcome.vocab = VocabRow{method.Name(), VocabularySize(training_set)};

    for (CellResult& cell : outcome.cells) {
      cell.train_size = training_set.size();
      cell.vocab_size = tfidf.vocab_size();
      try {
        TrainConfig cfg = plan.TrainConfigFor(cell.classifier);
        cfg.seed = cell.train_seed;
        const LinearModel model =
            Train(x_train, y_train, cfg, cell.classifier, tfidf.vocab_size());
        std::vector<Label> predictions;
        predictions.reserve(x_test.size());
        for (const auto& x : x_test) {
          predictions.push_back(model.Predict(x, plan.threshold));
        }
        cell.confusion = Confusion(predictions, y_test);
        cell.metrics = PrecisionRecallF1(cell.confusion);
        cell.importances = FeatureImportance(model, tfidf, plan.top_k);
        cell.ok = true;
      } catch (const Error& e) {
        cell.error = e.what();
      }
    }
  } catch (const Error& e) {
    for (CellResult& cell : outcome.cells) cell.error = e.what();
  }
  return outcome;
}

std::vector<MethodOutcome> RunMethods(const ExperimentPlan& plan,
                                      const Corpus& small, const Corpus& train,
                                      const Corpus& test,
                                      const AugmentationPool& pool) {
  std::vector<MethodOutcome> outcomes(plan.methods.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t m = begin; m < plan.methods.size(); m += stride) {
      outcomes[m] = RunMethod(plan, plan.methods[m], small, train, test, pool);
    }
  };
  const unsigned threads = std::max(1u, plan.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool_threads;
    for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(work, t, threads);
  }
  return outcomes;
}

std::uint64_t DigestIds(const Corpus& corpus) {
  std::string joined;
  for (const Document& doc : corpus) {
    joined += doc.id;
    joined += '\n';
  }
  return StableHash(joined);
}

}  // namespace

std::string Method::Name() const {
  switch (kind) {
    case MethodKind::kBaseline: return "baseline";
    case MethodKind::kEda: return "eda";
    case MethodKind::kBacktranslation:
      return "bt(" + (language ? language->str() : std::string("?")) + ")";
    case MethodKind::kBacktranslationAll: return "bt(all)";
    case MethodKind::kBacktranslationAllEda: return "bt(all)+eda";
    case MethodKind::kOracle: return "oracle";
  }
  return "?";
}

Method Method::Parse(std::string_view name) {
  if (name == "baseline") return {MethodKind::kBaseline, std::nullopt};
  if (name == "eda") return {MethodKind::kEda, std::nullopt};
  if (name == "oracle") return {MethodKind::kOracle, std::nullopt};
  if (name == "bt(all)") return {MethodKind::kBacktranslationAll, std::nullopt};
  if (name == "bt(all)+eda") {
    return {MethodKind::kBacktranslationAllEda, std::nullopt};
  }
  if (name.size() == 6 && name.substr(0, 3) == "bt(" && name.back() == ')') {
    return {MethodKind::kBacktranslation, LanguageCode(name.substr(3, 2))};
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (expected baseline, eda, bt(<lang>), bt(all), "
                    "bt(all)+eda or oracle)");
}

void ExperimentPlan::Validate() const {
  if (methods.empty()) throw ConfigError("plan has no methods");
  if (classifiers.empty()) throw ConfigError("plan has no classifiers");
  for (const Method& method : methods) {
    if ((method.kind == MethodKind::kBacktranslation) != method.language.has_value()) {
      throw ConfigError("method '" + method.Name() +
                        "' has an inconsistent language");
    }
  }
  split.Validate();
  aug.Validate();
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    if (!(fractions[i] > 0.0 && fractions[i] <= 1.0)) {
      throw ConfigError("sweep fractions must lie in (0, 1]");
    }
    if (i > 0 && !(fractions[i] > fractions[i - 1])) {
      throw ConfigError("sweep fractions must be strictly increasing");
    }
  }
  const bool needs_all = std::any_of(methods.begin(), methods.end(), [](const Method& m) {
    return m.kind == MethodKind::kBacktranslationAll ||
           m.kind == MethodKind::kBacktranslationAllEda;
  });
  if (needs_all && bt_langs.empty()) {
    throw ConfigError("bt(all) needs at least one pivot language");
  }
  if (top_k == 0) throw ConfigError("top_k must be positive");
  for (const auto& [kind, cfg] : train) cfg.Validate();
}

TrainConfig ExperimentPlan::TrainConfigFor(LossKind kind) const {
  const auto it = train.find(kind);
  return it == train.end() ? TrainConfig::Defaults(kind) : it->second;
}

bool ExperimentPlan::NeedsBacktranslation() const {
  return !PivotsNeeded(*this).empty();
}

bool ExperimentPlan::NeedsEda() const {
  return std::any_of(methods.begin(), methods.end(), [](const Method& m) {
    return m.kind == MethodKind::kEda ||
           m.kind == MethodKind::kBacktranslationAllEda;
  });
}

std::uint64_t ExperimentPlan::SplitSeed() const {
  return DeriveSeed(master_seed, "split");
}
std::uint64_t ExperimentPlan::SampleSeed() const {
  return DeriveSeed(master_seed, "small-train");
}
std::uint64_t ExperimentPlan::EdaSeed() const {
  return DeriveSeed(master_seed, "eda");
}
std::uint64_t ExperimentPlan::TrainSeed(const Method& method,
                                        LossKind kind) const {
  return DeriveSeed(master_seed, method.Name() + "/" +
                                     std::string(LossKindName(kind)) + "/train");
}

const CellResult* ResultsTable::Find(std::string_view method,
                                     LossKind classifier) const {
  for (const CellResult& cell : cells) {
    if (cell.method.Name() == method && cell.classifier == classifier) {
      return &cell;
    }
  }
  return nullptr;
}

std::string_view RootId(std::string_view id) {
  return id.substr(0, id.find('#'));
}

void AuditTestIsolation(const Corpus& test, const Corpus& training_set) {
  std::unordered_set<std::string_view> test_ids;
  test_ids.reserve(test.size());
  for (const Document& doc : test) test_ids.insert(doc.id);
  for (const Document& doc : training_set) {
    if (test_ids.count(doc.id) > 0 || test_ids.count(RootId(doc.id)) > 0) {
      throw UsageError("training document '" + doc.id +
                       "' leaks from the test split");
    }
  }
}

ResultsTable RunPlan(const ExperimentPlan& plan, const Corpus& corpus,
                     const ExperimentResources& resources) {
  plan.Validate();
  ResultsTable table;
  table.meta.started_at = NowSeconds();
  table.meta.master_seed = plan.master_seed;
  table.meta.split_seed = plan.SplitSeed();
  table.meta.sample_seed = plan.SampleSeed();
  table.meta.eda_seed = plan.EdaSeed();
  table.meta.corpus_size = corpus.size();

  SplitSpec split_spec = plan.split;
  split_spec.seed = plan.SplitSeed();
  const TrainTestSplit split = SplitCorpus(corpus, split_spec);
  const Corpus small = SampleFraction(split.train, plan.split.small_train_fraction,
                                      plan.SampleSeed(), plan.split.stratified);
  table.meta.train_size = split.train.size();
  table.meta.test_size = split.test.size();
  table.meta.small_train_size = small.size();
  table.meta.test_ids_digest = DigestIds(split.test);

  std::unique_ptr<TranslationCache> local_cache;
  TranslationCache* cache = resources.cache;
  if (cache == nullptr) {
    local_cache = std::make_unique<TranslationCache>();
    cache = local_cache.get();
  }
  const AugmentationPool pool =
      BuildPool(plan, small, resources, *cache, table.warnings);
  auto outcomes = RunMethods(plan, small, split.train, split.test, pool);

  table.vocab.push_back({"baseline", VocabularySize(small)});
  for (auto& outcome : outcomes) {
    for (auto& cell : outcome.cells) table.cells.push_back(std::move(cell));
    if (outcome.vocab && outcome.vocab->name != "baseline") {
      table.vocab.push_back(*outcome.vocab);
    }
  }
  table.meta.finished_at = NowSeconds();
  return table;
}

std::vector<SweepRecord> SweepFractions(const ExperimentPlan& plan,
                                        const Corpus& corpus,
                                        const ExperimentResources& resources) {
  plan.Validate();
  SplitSpec split_spec = plan.split;
  split_spec.seed = plan.SplitSeed();
  const TrainTestSplit split = SplitCorpus(corpus, split_spec);

  std::unique_ptr<TranslationCache> local_cache;
  TranslationCache* cache = resources.cache;
  if (cache == nullptr) {
    local_cache = std::make_unique<TranslationCache>();
    cache = local_cache.get();
  }

  std::vector<SweepRecord> records;
  for (const double fraction : plan.fractions) {
    std::optional<Corpus> small;
    std::string sample_error;
    try {
      small = SampleFraction(split.train, fraction, plan.SampleSeed(),
                             plan.split.stratified);
    } catch (const Error& e) {
      sample_error = e.what();
    }
    std::vector<MethodOutcome> outcomes;
    if (small) {
      std::vector<std::string> warnings;
      const AugmentationPool pool = BuildPool(plan, *small, resources, *cache, warnings);
      outcomes = RunMethods(plan, *small, split.train, split.test, pool);
    }
    for (std::size_t m = 0; m < plan.methods.size(); ++m) {
      for (std::size_t c = 0; c < plan.classifiers.size(); ++c) {
        SweepRecord record;
        record.fraction = fraction;
        record.method = plan.methods[m];
        record.classifier = plan.classifiers[c];
        if (small) {
          const CellResult& cell = outcomes[m].cells[c];
          record.ok = cell.ok;
          record.f1 = cell.metrics.f1;
          record.recall = cell.metrics.recall;
          record.train_size = cell.train_size;
        }
        records.push_back(record);
      }
    }
  }
  return records;
}

}  // namespace textaug
