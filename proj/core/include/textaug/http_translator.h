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

#ifndef TEXTAUG_HTTP_TRANSLATOR_H_
#define TEXTAUG_HTTP_TRANSLATOR_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "textaug/translator.h"

namespace textaug {

// Token bucket: `rate` tokens per second, bursts of up to `burst` tokens.
// Acquire() blocks until a token is available. Callers reserve tokens in
// arrival order, so concurrent callers are released at the configured rate.
class TokenBucket {
 public:
  using Clock = std::chrono::steady_clock;
  using NowFn = std::function<Clock::time_point()>;
  using SleepFn = std::function<void(Clock::duration)>;

  TokenBucket(double rate, double burst, NowFn now = {}, SleepFn sleep = {});

  void Acquire();

 private:
  double rate_;
  double burst_;
  NowFn now_;
  SleepFn sleep_;
  std::mutex mutex_;
  double tokens_;
  Clock::time_point last_;
};

// Settings for a JSON-over-HTTP translation endpoint. The defaults match
// the Google Cloud Translation v2 REST API.
struct HttpProviderConfig {
  std::string endpoint =
      "https://translation.googleapis.com/language/translate/v2";
  // Environment variable holding the API key; no key is sent when unset.
  std::string api_key_env = "TEXTAUG_TRANSLATE_API_KEY";
  // The key goes into this query parameter unless auth_header is set, in
  // which case it is sent as `<auth_header>: <auth_prefix><key>`.
  std::string api_key_param = "key";
  std::string auth_header;
  std::string auth_prefix = "Bearer ";
  std::string text_param = "q";
  std::string source_param = "source";
  std::string target_param = "target";
  // JSON pointer to the translated string in the response body.
  std::string response_pointer = "/data/translations/0/translatedText";
  std::string provider_id = "http";
  double requests_per_second = 10.0;
  std::size_t max_request_chars = 5000;
  std::chrono::seconds timeout{30};
  // Supported languages; empty accepts any code.
  std::vector<LanguageCode> languages;
};

// POSTs `{"<text_param>": text, "<source_param>": from, "<target_param>": to,
// "format": "text"}` to the endpoint. Transport failures, 429 and 5xx are
// reported as retryable TranslationErrors; other non-200 statuses and
// unparseable bodies are not retryable.
class HttpTranslator final : public Translator {
 public:
  // Throws ConfigError for a malformed endpoint, or an https endpoint when
  // the build lacks TLS support.
  explicit HttpTranslator(HttpProviderConfig config);

  std::string Translate(std::string_view text, const LanguageCode& from,
                        const LanguageCode& to) override;
  std::string provider_id() const override { return config_.provider_id; }
  bool Supports(const LanguageCode& language) const override;
  std::size_t max_request_chars() const override {
    return config_.max_request_chars;
  }

  const HttpProviderConfig& config() const { return config_; }

 private:
  HttpProviderConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  std::string api_key_;
  TokenBucket limiter_;
};

// True when the library was built with TLS support for https endpoints.
bool HttpsSupported();

}  // namespace textaug

#endif  // TEXTAUG_HTTP_TRANSLATOR_H_
