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

#include "textaug/text.h"

#include <fstream>

#include "textaug/errors.h"

namespace textaug {
namespace {

bool IsTokenChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'';
}

char AsciiLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string ReplaceAll(std::string text, std::string_view pattern,
                       std::string_view replacement) {
  std::string::size_type pos = text.find(pattern);
  if (pos == std::string::npos) return text;
  std::string out;
  out.reserve(text.size());
  std::string::size_type last = 0;
  while (pos != std::string::npos) {
    out.append(text, last, pos - last);
    out.append(replacement);
    last = pos + pattern.size();
    pos = text.find(pattern, last);
  }
  out.append(text, last, std::string::npos);
  return out;
}

}  // namespace

NormalizationTable NormalizationTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open normalization table " + path.string());
  NormalizationTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path.string() + ": expected pattern<TAB>replacement",
                       line_no);
    }
    try {
      table.Add(std::string_view(line).substr(0, tab),
                std::string_view(line).substr(tab + 1));
    } catch (const ConfigError& e) {
      throw ParseError(path.string() + ": " + e.what(), line_no);
    }
  }
  return table;
}

NormalizationTable NormalizationTable::FromEntries(
    std::vector<std::pair<std::string, std::string>> entries) {
  NormalizationTable table;
  for (const auto& [pattern, replacement] : entries) {
    table.Add(pattern, replacement);
  }
  return table;
}

void NormalizationTable::Add(std::string_view pattern,
                             std::string_view replacement) {
  std::string lowered;
  lowered.reserve(pattern.size());
  for (const char c : pattern) {
    if (IsSpace(c)) {
      throw ConfigError("normalization pattern contains whitespace: '" +
                        std::string(pattern) + "'");
    }
    lowered.push_back(AsciiLower(c));
  }
  if (lowered.empty()) throw ConfigError("empty normalization pattern");
  for (const char c : replacement) {
    if (!(c >= 'a' && c <= 'z') && !(c >= '0' && c <= '9') && c != ' ') {
      throw ConfigError("normalization replacement is not clean text: '" +
                        std::string(replacement) + "'");
    }
  }
  Entry entry{std::move(lowered), std::string(replacement)};
  for (const Entry& other : entries_) {
    if (entry.replacement.find(other.pattern) != std::string::npos ||
        other.replacement.find(entry.pattern) != std::string::npos) {
      throw ConfigError("normalization entry '" + entry.pattern +
                        "' conflicts with '" + other.pattern + "'");
    }
  }
  if (entry.replacement.find(entry.pattern) != std::string::npos) {
    throw ConfigError("normalization replacement contains its own pattern: '" +
                      entry.pattern + "'");
  }
  entries_.push_back(std::move(entry));
}

std::string NormalizationTable::Apply(std::string text) const {
  // A replacement next to other text can complete a pattern that was not
  // there before, so repeat until nothing changes (capped).
  for (int pass = 0; pass < 16; ++pass) {
    std::string next = text;
    for (const Entry& entry : entries_) {
      next = ReplaceAll(std::move(next), entry.pattern, entry.replacement);
    }
    if (next == text) break;
    text = std::move(next);
  }
  return text;
}

std::string CleanText(std::string_view raw, const NormalizationTable& table,
                      const CleanOptions& options) {
  std::string lowered;
  lowered.reserve(raw.size());
  for (const char c : raw) {
    if (c == '\'' && !options.keep_apostrophes) continue;
    lowered.push_back(AsciiLower(c));
  }
  const std::string normalized = table.Apply(std::move(lowered));

  std::string out;
  out.reserve(normalized.size());
  bool pending_space = false;
  for (const char c : normalized) {
    if (IsTokenChar(c) && (c != '\'' || options.keep_apostrophes)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    } else {
      pending_space = true;
    }
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view cleaned) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < cleaned.size()) {
    const auto end = cleaned.find(' ', start);
    const auto stop = end == std::string_view::npos ? cleaned.size() : end;
    if (stop > start) tokens.emplace_back(cleaned.substr(start, stop - start));
    start = stop + 1;
  }
  return tokens;
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

bool IsCleanToken(std::string_view token) {
  if (token.empty()) return false;
  for (const char c : token) {
    if (!IsTokenChar(c)) return false;
  }
  return true;
}

}  // namespace textaug
