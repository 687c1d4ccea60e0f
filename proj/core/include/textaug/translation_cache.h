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

#ifndef TEXTAUG_TRANSLATION_CACHE_H_
#define TEXTAUG_TRANSLATION_CACHE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "textaug/translator.h"

namespace textaug {

struct TranslationCacheEntry {
  std::string source_text;
  LanguageCode source_lang{"en"};
  LanguageCode target_lang{"en"};
  std::string translated_text;
  std::string provider_id;
  std::int64_t timestamp = 0;  // seconds since the epoch

  bool operator==(const TranslationCacheEntry&) const = default;
};

// Persistent translation memo keyed by (source_text, source_lang,
// target_lang, provider_id).
//
// On disk the cache is an append-only file with one JSON object per line:
//
//   {"source_text":"...","source_lang":"en","target_lang":"es",
//    "provider_id":"mock","translated_text":"...","timestamp":1700000000}
//
// (a single line, keys in exactly this order, no whitespace). Opening a
// file compacts it: later records win, torn or malformed lines are dropped
// and the file is rewritten when anything was dropped. Lookups may run
// concurrently; inserts are serialized.
class TranslationCache {
 public:
  using Clock = std::function<std::int64_t()>;

  // In-memory only.
  TranslationCache();
  // Loads and compacts `path` (created when missing). Throws IoError.
  explicit TranslationCache(std::filesystem::path path, Clock clock = {});

  TranslationCache(const TranslationCache&) = delete;
  TranslationCache& operator=(const TranslationCache&) = delete;

  std::optional<TranslationCacheEntry> Find(std::string_view source_text,
                                            const LanguageCode& source_lang,
                                            const LanguageCode& target_lang,
                                            std::string_view provider_id) const;

  // Stores the entry (replacing any with the same key) and appends its
  // record to the backing file.
  void Insert(TranslationCacheEntry entry);

  // Insert with the timestamp taken from the cache clock.
  void Put(std::string source_text, const LanguageCode& source_lang,
           const LanguageCode& target_lang, std::string provider_id,
           std::string translated_text);

  std::size_t size() const;
  std::vector<TranslationCacheEntry> Entries() const;  // key order
  const std::optional<std::filesystem::path>& path() const { return path_; }

  // Line encoding (without the trailing newline) and its inverse.
  static std::string EncodeRecord(const TranslationCacheEntry& entry);
  static std::optional<TranslationCacheEntry> DecodeRecord(std::string_view line);

 private:
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  static Key KeyOf(const TranslationCacheEntry& entry);

  std::optional<std::filesystem::path> path_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
  std::map<Key, TranslationCacheEntry> entries_;
  std::ofstream append_;
};

}  // namespace textaug

#endif  // TEXTAUG_TRANSLATION_CACHE_H_
