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

#ifndef TEXTAUG_TRANSLATOR_H_
#define TEXTAUG_TRANSLATOR_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "textaug/errors.h"

namespace textaug {

// Lowercase two-letter ISO-639-1 code.
class LanguageCode {
 public:
  // Throws ConfigError unless `code` is two ASCII letters (case folded).
  explicit LanguageCode(std::string_view code);

  const std::string& str() const { return code_; }

  auto operator<=>(const LanguageCode&) const = default;

 private:
  std::string code_;
};

// Spanish, French, Hindi, German.
std::vector<LanguageCode> DefaultPivotLanguages();

// Parses "es,fr" or "all" (the default pivots).
std::vector<LanguageCode> ParseLanguageList(std::string_view list);

class TranslationError : public Error {
 public:
  TranslationError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

// A machine-translation provider. Implementations must be safe to call from
// several threads and must return a non-empty string for non-empty input or
// throw TranslationError.
class Translator {
 public:
  virtual ~Translator() = default;

  virtual std::string Translate(std::string_view text, const LanguageCode& from,
                                const LanguageCode& to) = 0;
  virtual std::string provider_id() const = 0;
  virtual bool Supports(const LanguageCode& language) const = 0;
  // Longest text accepted in one request; 0 means unlimited.
  virtual std::size_t max_request_chars() const { return 0; }
};

// Deterministic provider for tests and offline runs: scripted legs, with
// an identity fallback for unscripted text.
class ScriptedTranslator final : public Translator {
 public:
  explicit ScriptedTranslator(std::string provider_id = "mock",
                              bool identity_fallback = true);

  void AddLeg(const LanguageCode& from, const LanguageCode& to,
              std::string source, std::string target);

  // Script file: `from<TAB>to<TAB>source<TAB>target` lines, '#' comments.
  void LoadScript(const std::filesystem::path& path);

  // The next `count` calls throw TranslationError(retryable).
  void FailNext(std::size_t count, bool retryable = true);

  // Restricts the supported languages; an empty list supports everything.
  void SetSupportedLanguages(std::vector<LanguageCode> languages);
  void set_max_request_chars(std::size_t n) { max_request_chars_ = n; }

  std::size_t call_count() const;
  std::size_t leg_count() const;

  std::string Translate(std::string_view text, const LanguageCode& from,
                        const LanguageCode& to) override;
  std::string provider_id() const override { return provider_id_; }
  bool Supports(const LanguageCode& language) const override;
  std::size_t max_request_chars() const override { return max_request_chars_; }

 private:
  using Key = std::tuple<std::string, std::string, std::string>;

  std::string provider_id_;
  bool identity_fallback_;
  std::size_t max_request_chars_ = 0;
  mutable std::mutex mutex_;
  std::map<Key, std::string, std::less<>> legs_;
  std::set<LanguageCode> supported_;
  std::size_t calls_ = 0;
  std::size_t pending_failures_ = 0;
  bool failures_retryable_ = true;
};

}  // namespace textaug

#endif  // TEXTAUG_TRANSLATOR_H_
