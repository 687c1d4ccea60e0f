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

#include "textaug/backtranslate.h"

#include <algorithm>
#include <thread>
#include <optional>

#include "textaug/errors.h"

namespace textaug {
namespace {

std::string_view TrimSpaces(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string LegName(const LanguageCode& from, const LanguageCode& to) {
  return from.str() + "->" + to.str();
}

void DefaultSleep(std::chrono::milliseconds delay) {
  std::this_thread::sleep_for(delay);
}

std::string CallWithRetry(std::string_view text, const LanguageCode& from,
                          const LanguageCode& to, Translator& translator,
                          const BacktranslateOptions& options) {
  const auto& sleep = options.sleep ? options.sleep : DefaultSleep;
  const int attempts = std::max(1, options.retry.attempts);
  auto backoff = options.retry.initial_backoff;
  for (int attempt = 1;; ++attempt) {
    try {
      std::string out = translator.Translate(text, from, to);
      if (out.empty() && !text.empty()) {
        throw TranslationError("provider returned an empty translation", false);
      }
      return out;
    } catch (const TranslationError& e) {
      if (!e.retryable() || attempt >= attempts) {
        throw AugmentationError(
            std::string(e.what()) + " (after " + std::to_string(attempt) +
                " attempt" + (attempt == 1 ? "" : "s") + ")",
            LegName(from, to));
      }
    }
    sleep(backoff);
    backoff = std::chrono::milliseconds(static_cast<std::int64_t>(
        static_cast<double>(backoff.count()) * options.retry.multiplier));
  }
}

std::string SourceTextOf(const Document& doc) {
  return doc.raw_text.empty() ? JoinTokens(doc.tokens) : doc.raw_text;
}

// Copies without any failure-threshold check.
std::vector<Document> TranslateCopies(
    const Corpus& source, const LanguageCode& pivot, Translator& translator,
    TranslationCache& cache, const TextCleaner& cleaner,
    const BtOptions& options, std::vector<BacktranslationFailure>& failures) {
  if (!translator.Supports(pivot)) {
    throw ConfigError("translator '" + translator.provider_id() +
                      "' does not support language '" + pivot.str() + "'");
  }
  std::vector<std::optional<Document>> copies(source.size());
  std::vector<std::string> errors(source.size());

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < source.size(); i += stride) {
      const Document& doc = source[i];
      const std::string text = SourceTextOf(doc);
      if (TrimSpaces(text).empty()) {
        errors[i] = "document has no text";
        continue;
      }
      try {
        Document copy;
        copy.id = doc.id + "#bt-" + pivot.str();
        copy.raw_text = BacktranslateOne(text, pivot, translator, cache,
                                         cleaner, options.leg);
        copy.tokens = Tokenize(copy.raw_text);
        copy.label = doc.label;
        if (copy.tokens.empty()) {
          errors[i] = "backtranslation is empty after cleaning";
          continue;
        }
        copies[i] = std::move(copy);
      } catch (const AugmentationError& e) {
        errors[i] = e.what();
      }
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || source.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  std::vector<Document> out;
  out.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (copies[i]) {
      out.push_back(std::move(*copies[i]));
    } else {
      failures.push_back({source[i].id, pivot, errors[i]});
    }
  }
  return out;
}

void CheckFailureFraction(std::size_t failed, std::size_t attempted,
                          double max_fraction) {
  if (attempted == 0) return;
  const double fraction =
      static_cast<double>(failed) / static_cast<double>(attempted);
  if (fraction > max_fraction) {
    throw AugmentationError(std::to_string(failed) + " of " +
                            std::to_string(attempted) +
                            " backtranslations failed (limit " +
                            std::to_string(max_fraction) + ")");
  }
}

}  // namespace

std::vector<std::string> SplitForRequest(std::string_view text,
                                         std::size_t max_chars) {
  if (max_chars == 0 || text.size() <= max_chars) return {std::string(text)};

  std::vector<std::string_view> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    const char c = end ? '\n' : text[i];
    if (c == '.' || c == '\n' || c == '\r') {
      const std::size_t stop = c == '.' ? i + 1 : i;
      const auto sentence = TrimSpaces(text.substr(start, stop - start));
      if (!sentence.empty()) sentences.push_back(sentence);
      start = i + 1;
    }
  }

  std::vector<std::string> chunks;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) chunks.push_back(std::move(current));
    current.clear();
  };
  for (std::string_view sentence : sentences) {
    while (sentence.size() > max_chars) {
      std::size_t cut = sentence.rfind(' ', max_chars);
      if (cut == std::string_view::npos || cut == 0) {
        cut = max_chars;
        while (cut > 0 &&
               (static_cast<unsigned char>(sentence[cut]) & 0xC0) == 0x80) {
          --cut;
        }
        if (cut == 0) cut = max_chars;
      }
      flush();
      chunks.emplace_back(TrimSpaces(sentence.substr(0, cut)));
      sentence = TrimSpaces(sentence.substr(cut));
    }
    if (sentence.empty()) continue;
    if (current.empty()) {
      current = sentence;
    } else if (current.size() + 1 + sentence.size() <= max_chars) {
      current += ' ';
      current += sentence;
    } else {
      flush();
      current = sentence;
    }
  }
  flush();
  return chunks;
}

std::string TranslateLeg(std::string_view text, const LanguageCode& from,
                         const LanguageCode& to, Translator& translator,
                         TranslationCache& cache,
                         const BacktranslateOptions& options) {
  const std::string provider = translator.provider_id();
  if (auto hit = cache.Find(text, from, to, provider)) {
    return hit->translated_text;
  }
  std::string joined;
  for (const auto& chunk : SplitForRequest(text, translator.max_request_chars())) {
    if (!joined.empty()) joined += ' ';
    joined += CallWithRetry(chunk, from, to, translator, options);
  }
  cache.Put(std::string(text), from, to, provider, joined);
  return joined;
}

std::string BacktranslateOne(std::string_view text, const LanguageCode& pivot,
                             Translator& translator, TranslationCache& cache,
                             const TextCleaner& cleaner,
                             const BacktranslateOptions& options) {
  if (text.empty()) throw UsageError("cannot backtranslate empty text");
  const LanguageCode& source = options.source_language;
  if (!translator.Supports(pivot) || !translator.Supports(source)) {
    throw ConfigError("translator '" + translator.provider_id() +
                      "' does not support " + LegName(source, pivot));
  }
  const std::string there =
      TranslateLeg(text, source, pivot, translator, cache, options);
  const std::string back =
      TranslateLeg(there, pivot, source, translator, cache, options);
  return cleaner.Clean(back);
}

BtResult BacktranslationCopies(const Corpus& source, const LanguageCode& pivot,
                               Translator& translator, TranslationCache& cache,
                               const TextCleaner& cleaner,
                               const BtOptions& options) {
  BtResult result;
  result.corpus = Corpus(TranslateCopies(source, pivot, translator, cache,
                                         cleaner, options, result.failures));
  CheckFailureFraction(result.failures.size(), source.size(),
                       options.max_failure_fraction);
  return result;
}

BtResult AugmentBt(const Corpus& corpus, std::span<const LanguageCode> pivots,
                   Translator& translator, TranslationCache& cache,
                   const TextCleaner& cleaner, const BtOptions& options) {
  if (corpus.empty()) throw UsageError("cannot backtranslate an empty corpus");
  BtResult result;
  std::vector<Document> docs(corpus.begin(), corpus.end());
  for (const LanguageCode& pivot : pivots) {
    auto copies = TranslateCopies(corpus, pivot, translator, cache, cleaner,
                                  options, result.failures);
    for (auto& doc : copies) docs.push_back(std::move(doc));
  }
  CheckFailureFraction(result.failures.size(), corpus.size() * pivots.size(),
                       options.max_failure_fraction);
  result.corpus = Corpus(std::move(docs));
  return result;
}

std::vector<VocabRow> VocabGrowthReport(
    const Corpus& baseline,
    const std::vector<std::pair<std::string, const Corpus*>>& augmented,
    std::string baseline_name) {
  std::vector<VocabRow> rows;
  rows.push_back({std::move(baseline_name), VocabularySize(baseline)});
  for (const auto& [name, corpus] : augmented) {
    rows.push_back({name, VocabularySize(*corpus)});
  }
  return rows;
}

}  // namespace textaug
