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

#ifndef TEXTAUG_BACKTRANSLATE_H_
#define TEXTAUG_BACKTRANSLATE_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "textaug/corpus.h"
#include "textaug/text.h"
#include "textaug/translation_cache.h"
#include "textaug/translator.h"

namespace textaug {

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
};

struct BacktranslateOptions {
  LanguageCode source_language{"en"};
  RetryPolicy retry;
  // Used between retry attempts; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Splits `text` on sentence boundaries ('.' and line breaks) into chunks of
// at most `max_chars` characters. Sentences longer than the limit are cut at
// the last space that fits (or hard-cut when there is none). `max_chars` of
// 0 disables splitting.
std::vector<std::string> SplitForRequest(std::string_view text,
                                         std::size_t max_chars);

// One translation leg, served from `cache` when present and stored on a
// miss. Texts longer than the provider limit are translated chunk by chunk
// and re-joined with single spaces. Retryable provider failures are retried
// per `options.retry`; the final failure surfaces as AugmentationError
// carrying the leg ("en->es").
std::string TranslateLeg(std::string_view text, const LanguageCode& from,
                         const LanguageCode& to, Translator& translator,
                         TranslationCache& cache,
                         const BacktranslateOptions& options = {});

// source -> pivot -> source, cleaned with `cleaner`. Throws ConfigError when
// the translator does not support the pivot, UsageError for empty text.
std::string BacktranslateOne(std::string_view text, const LanguageCode& pivot,
                             Translator& translator, TranslationCache& cache,
                             const TextCleaner& cleaner,
                             const BacktranslateOptions& options = {});

struct BacktranslationFailure {
  std::string document_id;
  LanguageCode pivot;
  std::string message;
};

struct BtOptions {
  BacktranslateOptions leg;
  // The call fails when more than this fraction of (document, pivot) pairs
  // could not be translated.
  double max_failure_fraction = 0.05;
  // Documents translated concurrently. Output order never depends on it.
  unsigned workers = 1;
};

struct BtResult {
  Corpus corpus;
  std::vector<BacktranslationFailure> failures;
};

// One backtranslated copy per document of `source` through `pivot`, ids
// `<id>#bt-<pivot>`, labels preserved, failed documents skipped.
BtResult BacktranslationCopies(const Corpus& source, const LanguageCode& pivot,
                               Translator& translator, TranslationCache& cache,
                               const TextCleaner& cleaner,
                               const BtOptions& options = {});

// `corpus` followed by one copy per pivot: (k + 1) x the documents when
// nothing fails. Throws AugmentationError when the failure fraction exceeds
// options.max_failure_fraction.
BtResult AugmentBt(const Corpus& corpus, std::span<const LanguageCode> pivots,
                   Translator& translator, TranslationCache& cache,
                   const TextCleaner& cleaner, const BtOptions& options = {});

struct VocabRow {
  std::string name;
  std::size_t vocab_size = 0;

  bool operator==(const VocabRow&) const = default;
};

// Baseline row first, then one row per augmented corpus in the given order.
std::vector<VocabRow> VocabGrowthReport(
    const Corpus& baseline,
    const std::vector<std::pair<std::string, const Corpus*>>& augmented,
    std::string baseline_name = "baseline");

}  // namespace textaug

#endif  // TEXTAUG_BACKTRANSLATE_H_
