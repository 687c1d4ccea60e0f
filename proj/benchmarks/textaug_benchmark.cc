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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "textaug/corpus.h"
#include "textaug/eda.h"
#include "textaug/features.h"
#include "textaug/lexicon.h"
#include "textaug/models.h"
#include "textaug/text.h"

namespace textaug {
namespace {

const std::filesystem::path kData = TEXTAUG_BENCH_DATA_DIR;

const TextCleaner& Cleaner() {
  static const TextCleaner cleaner(NormalizationTable::Load(kData / "normalization.tsv"), {});
  return cleaner;
}

const Corpus& Comments() {
  static const Corpus corpus = LoadCsv(kData / "synthetic" / "comments.csv", {}, Cleaner());
  return corpus;
}

void BM_CleanText(benchmark::State& state) {
  const Corpus& corpus = Comments();
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& doc : corpus) {
      benchmark::DoNotOptimize(Cleaner().Clean(doc.raw_text));
      bytes += doc.raw_text.size();
    }
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_CleanText);

void BM_EdaCopies(benchmark::State& state) {
  static const auto lexicon =
      SynonymLexicon::Load(kData / "lexicon.tsv", kData / "stopwords.txt");
  const Corpus& corpus = Comments();
  AugmentationConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        EdaCopies(corpus, cfg, lexicon, nullptr, static_cast<unsigned>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_EdaCopies)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TfIdfTransform(benchmark::State& state) {
  const Corpus& corpus = Comments();
  const auto model = TfIdfModel::Fit(corpus);
  for (auto _ : state) benchmark::DoNotOptimize(model.TransformAll(corpus));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_TfIdfTransform)->Unit(benchmark::kMillisecond);

void BM_Train(benchmark::State& state) {
  const Corpus& corpus = Comments();
  const auto model = TfIdfModel::Fit(corpus);
  const auto x = model.TransformAll(corpus);
  const auto y = corpus.labels();
  const auto kind = static_cast<LossKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Train(x, y, TrainConfig::Defaults(kind), kind, model.vocab_size()));
  }
  state.SetLabel(std::string(LossKindName(kind)));
}
BENCHMARK(BM_Train)
    ->Arg(static_cast<int>(LossKind::kLogistic))
    ->Arg(static_cast<int>(LossKind::kHinge))
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace textaug

BENCHMARK_MAIN();
