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

#include "textaug/translation_cache.h"

#include <chrono>
#include <mutex>

#include "json.hpp"
#include "textaug/errors.h"

namespace textaug {
namespace {

std::int64_t SystemSeconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

TranslationCache::TranslationCache() : clock_(SystemSeconds) {}

TranslationCache::TranslationCache(std::filesystem::path path, Clock clock)
    : path_(std::move(path)), clock_(clock ? std::move(clock) : SystemSeconds) {
  std::vector<Key> order;
  bool dirty = false;
  if (std::filesystem::exists(*path_)) {
    std::ifstream in(*path_, std::ios::binary);
    if (!in) throw IoError("cannot read translation cache " + path_->string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto entry = DecodeRecord(line);
      if (!entry) {
        dirty = true;
        continue;
      }
      Key key = KeyOf(*entry);
      auto [it, inserted] = entries_.insert_or_assign(key, std::move(*entry));
      if (inserted) {
        order.push_back(std::move(key));
      } else {
        dirty = true;
      }
    }
  }

  if (dirty) {
    const auto tmp = std::filesystem::path(path_->string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write " + tmp.string());
      for (const Key& key : order) out << EncodeRecord(entries_.at(key)) << '\n';
      if (!out) throw IoError("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, *path_);
  }

  append_.open(*path_, std::ios::binary | std::ios::app);
  if (!append_) throw IoError("cannot open translation cache " + path_->string());
}

TranslationCache::Key TranslationCache::KeyOf(const TranslationCacheEntry& e) {
  return Key{e.source_text, e.source_lang.str(), e.target_lang.str(),
             e.provider_id};
}

std::optional<TranslationCacheEntry> TranslationCache::Find(
    std::string_view source_text, const LanguageCode& source_lang,
    const LanguageCode& target_lang, std::string_view provider_id) const {
  const Key key{std::string(source_text), source_lang.str(), target_lang.str(),
                std::string(provider_id)};
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TranslationCache::Insert(TranslationCacheEntry entry) {
  const std::string record = EncodeRecord(entry);
  std::unique_lock lock(mutex_);
  if (append_.is_open()) {
    append_ << record << '\n';
    append_.flush();
    if (!append_) throw IoError("failed appending to translation cache");
  }
  entries_.insert_or_assign(KeyOf(entry), std::move(entry));
}

void TranslationCache::Put(std::string source_text,
                           const LanguageCode& source_lang,
                           const LanguageCode& target_lang,
                           std::string provider_id,
                           std::string translated_text) {
  Insert(TranslationCacheEntry{std::move(source_text), source_lang, target_lang,
                               std::move(translated_text),
                               std::move(provider_id), clock_()});
}

std::size_t TranslationCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::vector<TranslationCacheEntry> TranslationCache::Entries() const {
  std::shared_lock lock(mutex_);
  std::vector<TranslationCacheEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(entry);
  return out;
}

std::string TranslationCache::EncodeRecord(const TranslationCacheEntry& entry) {
  nlohmann::ordered_json record;
  record["source_text"] = entry.source_text;
  record["source_lang"] = entry.source_lang.str();
  record["target_lang"] = entry.target_lang.str();
  record["provider_id"] = entry.provider_id;
  record["translated_text"] = entry.translated_text;
  record["timestamp"] = entry.timestamp;
  return record.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::optional<TranslationCacheEntry> TranslationCache::DecodeRecord(
    std::string_view line) {
  try {
    const auto record = nlohmann::json::parse(line);
    if (!record.is_object()) return std::nullopt;
    TranslationCacheEntry entry;
    entry.source_text = record.at("source_text").get<std::string>();
    entry.source_lang = LanguageCode(record.at("source_lang").get<std::string>());
    entry.target_lang = LanguageCode(record.at("target_lang").get<std::string>());
    entry.provider_id = record.at("provider_id").get<std::string>();
    entry.translated_text = record.at("translated_text").get<std::string>();
    entry.timestamp = record.at("timestamp").get<std::int64_t>();
    return entry;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const ConfigError&) {
    return std::nullopt;
  }
}

}  // namespace textaug
