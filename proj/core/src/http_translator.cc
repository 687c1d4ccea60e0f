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

#include "textaug/http_translator.h"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace textaug {

TokenBucket::TokenBucket(double rate, double burst, NowFn now, SleepFn sleep)
    : rate_(rate),
      burst_(std::max(1.0, burst)),
      now_(now ? std::move(now) : [] { return Clock::now(); }),
      sleep_(sleep ? std::move(sleep)
                   : [](Clock::duration d) { std::this_thread::sleep_for(d); }),
      tokens_(std::max(1.0, burst)),
      last_(now_()) {
  if (!(rate > 0.0)) throw ConfigError("rate limit must be positive");
}

void TokenBucket::Acquire() {
  Clock::duration wait{};
  {
    std::lock_guard lock(mutex_);
    const auto now = now_();
    const double elapsed =
        std::chrono::duration<double>(now - last_).count();
    last_ = now;
    tokens_ = std::min(burst_, tokens_ + elapsed * rate_);
    tokens_ -= 1.0;
    if (tokens_ >= 0.0) return;
    wait = std::chrono::duration_cast<Clock::duration>(
        std::chrono::duration<double>(-tokens_ / rate_));
  }
  sleep_(wait);
}

bool HttpsSupported() {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  return true;
#else
  return false;
#endif
}

HttpTranslator::HttpTranslator(HttpProviderConfig config)
    : config_(std::move(config)),
      limiter_(config_.requests_per_second, config_.requests_per_second) {
  const auto scheme_end = config_.endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("endpoint must start with http:// or https://: '" +
                      config_.endpoint + "'");
  }
  const std::string scheme = config_.endpoint.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("unsupported endpoint scheme '" + scheme + "'");
  }
  if (scheme == "https" && !HttpsSupported()) {
    throw ConfigError("https endpoints need a build with OpenSSL");
  }
  const auto path_start = config_.endpoint.find('/', scheme_end + 3);
  scheme_host_port_ = config_.endpoint.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/"
                                          : config_.endpoint.substr(path_start);
  if (scheme_host_port_.size() <= scheme_end + 3) {
    throw ConfigError("endpoint has no host: '" + config_.endpoint + "'");
  }
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str())) {
      api_key_ = key;
    }
  }
}

bool HttpTranslator::Supports(const LanguageCode& language) const {
  return config_.languages.empty() ||
         std::find(config_.languages.begin(), config_.languages.end(),
                   language) != config_.languages.end();
}

std::string HttpTranslator::Translate(std::string_view text,
                                      const LanguageCode& from,
                                      const LanguageCode& to) {
  limiter_.Acquire();

  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);

  nlohmann::json body;
  body[config_.text_param] = std::string(text);
  body[config_.source_param] = from.str();
  body[config_.target_param] = to.str();
  body["format"] = "text";

  std::string path = path_;
  httplib::Headers headers;
  if (!api_key_.empty()) {
    if (!config_.auth_header.empty()) {
      headers.emplace(config_.auth_header, config_.auth_prefix + api_key_);
    } else {
      path += (path.find('?') == std::string::npos ? '?' : '&');
      path += config_.api_key_param + "=" + httplib::detail::encode_url(api_key_);
    }
  }

  const auto response = client.Post(
      path, headers,
      body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace),
      "application/json");
  if (!response) {
    throw TranslationError(
        "request to " + scheme_host_port_ + " failed: " +
            httplib::to_string(response.error()),
        true);
  }
  if (response->status != 200) {
    const bool retryable = response->status == 429 || response->status >= 500;
    throw TranslationError("provider returned HTTP " +
                               std::to_string(response->status),
                           retryable);
  }
  try {
    const auto parsed = nlohmann::json::parse(response->body);
    const auto& value =
        parsed.at(nlohmann::json::json_pointer(config_.response_pointer));
    std::string out = value.get<std::string>();
    if (out.empty()) {
      throw TranslationError("provider returned an empty translation", false);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw TranslationError(
        std::string("cannot read translation from response: ") + e.what(),
        false);
  }
}

}  // namespace textaug
