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

#include "textaug/translator.h"

#include <fstream>

namespace textaug {

LanguageCode::LanguageCode(std::string_view code) {
  if (code.size() != 2) {
    throw ConfigError("language code must have two letters: '" +
                      std::string(code) + "'");
  }
  for (char c : code) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c < 'a' || c > 'z') {
      throw ConfigError("language code must be alphabetic: '" +
                        std::string(code) + "'");
    }
    code_.push_back(c);
  }
}

std::vector<LanguageCode> DefaultPivotLanguages() {
  return {LanguageCode("es"), LanguageCode("fr"), LanguageCode("hi"),
          LanguageCode("de")};
}

std::vector<LanguageCode> ParseLanguageList(std::string_view list) {
  if (list == "all") return DefaultPivotLanguages();
  std::vector<LanguageCode> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view piece = list.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("empty language list");
  return out;
}

ScriptedTranslator::ScriptedTranslator(std::string provider_id,
                                       bool identity_fallback)
    : provider_id_(std::move(provider_id)),
      identity_fallback_(identity_fallback) {}

void ScriptedTranslator::AddLeg(const LanguageCode& from, const LanguageCode& to,
                                std::string source, std::string target) {
  std::lock_guard lock(mutex_);
  legs_[Key{from.str(), to.str(), std::move(source)}] = std::move(target);
}

void ScriptedTranslator::LoadScript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open translation script " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    for (int i = 0; i < 3; ++i) {
      const auto tab = line.find('\t', start);
      if (tab == std::string::npos) break;
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    fields.push_back(line.substr(start));
    if (fields.size() != 4) {
      throw ParseError(path.string() + ": expected from<TAB>to<TAB>source<TAB>target",
                       line_no);
    }
    AddLeg(LanguageCode(fields[0]), LanguageCode(fields[1]),
           std::move(fields[2]), std::move(fields[3]));
  }
}

void ScriptedTranslator::FailNext(std::size_t count, bool retryable) {
  std::lock_guard lock(mutex_);
  pending_failures_ = count;
  failures_retryable_ = retryable;
}

void ScriptedTranslator::SetSupportedLanguages(
    std::vector<LanguageCode> languages) {
  std::lock_guard lock(mutex_);
  supported_ = std::set<LanguageCode>(languages.begin(), languages.end());
}

std::size_t ScriptedTranslator::call_count() const {
  std::lock_guard lock(mutex_);
  return calls_;
}

std::size_t ScriptedTranslator::leg_count() const {
  std::lock_guard lock(mutex_);
  return legs_.size();
}

std::string ScriptedTranslator::Translate(std::string_view text,
                                          const LanguageCode& from,
                                          const LanguageCode& to) {
  std::lock_guard lock(mutex_);
  ++calls_;
  if (pending_failures_ > 0) {
    --pending_failures_;
    throw TranslationError("scripted failure", failures_retryable_);
  }
  const auto it =
      legs_.find(std::make_tuple(from.str(), to.str(), std::string(text)));
  if (it != legs_.end()) return it->second;
  if (identity_fallback_) return std::string(text);
  throw TranslationError("no scripted translation for " + from.str() + "->" +
                             to.str() + " '" + std::string(text) + "'",
                         false);
}

bool ScriptedTranslator::Supports(const LanguageCode& language) const {
  std::lock_guard lock(mutex_);
  return supported_.empty() || supported_.count(language) > 0;
}

}  // namespace textaug
