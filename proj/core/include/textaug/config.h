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

#ifndef TEXTAUG_CONFIG_H_
#define TEXTAUG_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textaug {

// `key = value` configuration. Lines starting with '#' or ';' are comments;
// `[section]` headers prefix the following keys with "section.".
// Duplicate keys are rejected.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig Parse(std::string_view text,
                              std::filesystem::path base_dir = {});
  // Relative paths in the file resolve against its directory.
  static KeyValueConfig Load(const std::filesystem::path& path);

  bool Has(std::string_view key) const;
  std::optional<std::string> Get(std::string_view key) const;
  void Set(std::string key, std::string value);
  void Erase(std::string_view key);

  // Typed accessors; each throws ConfigError naming the key on bad values.
  std::string GetString(std::string_view key, std::string_view fallback) const;
  double GetDouble(std::string_view key, double fallback) const;
  std::int64_t GetInt(std::string_view key, std::int64_t fallback) const;
  std::uint64_t GetUnsigned(std::string_view key, std::uint64_t fallback) const;
  bool GetBool(std::string_view key, bool fallback) const;
  // Comma-separated, items trimmed, empty items dropped.
  std::vector<std::string> GetList(std::string_view key,
                                   std::vector<std::string> fallback) const;
  // Resolved against base_dir() when relative; empty when unset.
  std::filesystem::path GetPath(std::string_view key) const;

  // Throws ConfigError listing every key not in `known`.
  void RequireKnownKeys(std::span<const std::string_view> known) const;

  // Sorted `key=value` lines; the basis for Hash().
  std::string Canonical() const;
  std::uint64_t Hash() const;
  std::string HashHex() const;

  const std::map<std::string, std::string, std::less<>>& values() const {
    return values_;
  }
  const std::filesystem::path& base_dir() const { return base_dir_; }

 private:
  std::map<std::string, std::string, std::less<>> values_;
  std::filesystem::path base_dir_;
};

std::string ToHex64(std::uint64_t value);

}  // namespace textaug

#endif  // TEXTAUG_CONFIG_H_
