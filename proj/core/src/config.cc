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

#include "textaug/config.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "textaug/errors.h"
#include "textaug/random.h"

namespace textaug {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void BadValue(std::string_view key, const std::string& value,
                           std::string_view expected) {
  throw ConfigError("config key '" + std::string(key) + "': expected " +
                    std::string(expected) + ", got '" + value + "'");
}

}  // namespace

std::string ToHex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

KeyValueConfig KeyValueConfig::Parse(std::string_view text,
                                     std::filesystem::path base_dir) {
  KeyValueConfig config;
  config.base_dir_ = std::move(base_dir);
  std::string section;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto newline = text.find('\n');
    const std::string_view line = Trim(text.substr(0, newline));
    text.remove_prefix(newline == std::string_view::npos ? text.size()
                                                         : newline + 1);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("config: unterminated section header", line_no);
      }
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config: expected key = value", line_no);
    }
    const std::string_view bare_key = Trim(line.substr(0, eq));
    if (bare_key.empty()) throw ParseError("config: empty key", line_no);
    std::string key =
        section.empty() ? std::string(bare_key) : section + "." + std::string(bare_key);
    if (config.values_.count(key) > 0) {
      throw ParseError("config: duplicate key '" + key + "'", line_no);
    }
    config.values_.emplace(std::move(key), std::string(Trim(line.substr(eq + 1))));
  }
  return config;
}

KeyValueConfig KeyValueConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path.parent_path());
}

bool KeyValueConfig::Has(std::string_view key) const {
  return values_.find(key) != values_.end();
}

std::optional<std::string> KeyValueConfig::Get(std::string_view key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void KeyValueConfig::Set(std::string key, std::string value) {
  values_.insert_or_assign(std::move(key), std::move(value));
}

std::string KeyValueConfig::GetString(std::string_view key,
                                      std::string_view fallback) const {
  auto value = Get(key);
  return value ? *value : std::string(fallback);
}

double KeyValueConfig::GetDouble(std::string_view key, double fallback) const {
  const auto value = Get(key);
  if (!value) return fallback;
  char* end = nullptr;
  errno = 0;
  const double parsed = std::strtod(value->c_str(), &end);
  if (value->empty() || *end != '\0' || errno == ERANGE) {
    BadValue(key, *value, "a number");
  }
  return parsed;
}

std::int64_t KeyValueConfig::GetInt(std::string_view key,
                                    std::int64_t fallback) const {
  const auto value = Get(key);
  if (!value) return fallback;
  char* end = nullptr;
  errno = 0;
  const long long parsed = std::strtoll(value->c_str(), &end, 10);
  if (value->empty() || *end != '\0' || errno == ERANGE) {
    BadValue(key, *value, "an integer");
  }
  return parsed;
}

std::uint64_t KeyValueConfig::GetUnsigned(std::string_view key,
                                          std::uint64_t fallback) const {
  const auto value = Get(key);
  if (!value) return fallback;
  char* end = nullptr;
  errno = 0;
  const unsigned long long parsed = std::strtoull(value->c_str(), &end, 10);
  if (value->empty() || value->front() == '-' || *end != '\0' ||
      errno == ERANGE) {
    BadValue(key, *value, "a non-negative integer");
  }
  return parsed;
}

bool KeyValueConfig::GetBool(std::string_view key, bool fallback) const {
  const auto value = Get(key);
  if (!value) return fallback;
  if (*value == "true" || *value == "yes" || *value == "on" || *value == "1") {
    return true;
  }
  if (*value == "false" || *value == "no" || *value == "off" || *value == "0") {
    return false;
  }
  BadValue(key, *value, "a boolean");
}

std::vector<std::string> KeyValueConfig::GetList(
    std::string_view key, std::vector<std::string> fallback) const {
  const auto value = Get(key);
  if (!value) return fallback;
  std::vector<std::string> items;
  std::string_view rest = *value;
  while (true) {
    const auto comma = rest.find(',');
    const auto item = Trim(rest.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return items;
}

std::filesystem::path KeyValueConfig::GetPath(std::string_view key) const {
  const auto value = Get(key);
  if (!value || value->empty()) return {};
  std::filesystem::path path(*value);
  if (path.is_relative() && !base_dir_.empty()) path = base_dir_ / path;
  return path.lexically_normal();
}

void KeyValueConfig::RequireKnownKeys(
    std::span<const std::string_view> known) const {
  std::string unknown;
  for (const auto& [key, value] : values_) {
    bool found = false;
    for (const auto k : known) found = found || k == key;
    if (!found) unknown += (unknown.empty() ? "" : ", ") + key;
  }
  if (!unknown.empty()) throw ConfigError("unknown config keys: " + unknown);
}

void KeyValueConfig::Erase(std::string_view key) {
  if (const auto it = values_.find(key); it != values_.end()) values_.erase(it);
}

std::string KeyValueConfig::Canonical() const {
  std::string out;
  for (const auto& [key, value] : values_) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

std::uint64_t KeyValueConfig::Hash() const { return StableHash(Canonical()); }

std::string KeyValueConfig::HashHex() const { return ToHex64(Hash()); }

}  // namespace textaug
