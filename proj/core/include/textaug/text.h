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

#ifndef TEXTAUG_TEXT_H_
#define TEXTAUG_TEXT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace textaug {

// Ordered list of literal rewrites for obfuscated spellings ("f*ck" ->
// "fuck"). Patterns are matched case-insensitively on the lowercased text,
// before any character stripping.
class NormalizationTable {
 public:
  struct Entry {
    std::string pattern;
    std::string replacement;
  };

  NormalizationTable() = default;

  // Reads `pattern<TAB>replacement` lines; blank lines and lines starting
  // with '#' are ignored. Throws IoError / ParseError.
  static NormalizationTable Load(const std::filesystem::path& path);
  static NormalizationTable FromEntries(
      std::vector<std::pair<std::string, std::string>> entries);

  // Appends an entry. Throws ConfigError when the pattern is empty or
  // contains whitespace, when the replacement has characters outside
  // [a-z0-9 ], or when a replacement contains any pattern (cleaning must
  // stay idempotent).
  void Add(std::string_view pattern, std::string_view replacement);

  // Applies every entry in order, each rewriting all non-overlapping
  // occurrences left to right, and repeats until the text stops changing.
  std::string Apply(std::string text) const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

struct CleanOptions {
  // Dropping apostrophes turns "you're" into "youre".
  bool keep_apostrophes = false;
};

// Lowercases, rewrites obfuscations, replaces every character outside
// [a-z0-9'] with a space, collapses whitespace runs and trims. Idempotent.
std::string CleanText(std::string_view raw, const NormalizationTable& table,
                      const CleanOptions& options = {});

// Splits cleaned text on spaces, skipping empty pieces.
std::vector<std::string> Tokenize(std::string_view cleaned);

std::string JoinTokens(std::span<const std::string> tokens);

// True when every character of `token` is in [a-z0-9'] and it is non-empty.
bool IsCleanToken(std::string_view token);

// Bundles a normalization table with cleaning options.
class TextCleaner {
 public:
  TextCleaner() = default;
  TextCleaner(NormalizationTable table, CleanOptions options)
      : table_(std::move(table)), options_(options) {}

  std::string Clean(std::string_view raw) const {
    return CleanText(raw, table_, options_);
  }
  std::vector<std::string> CleanAndTokenize(std::string_view raw) const {
    return Tokenize(Clean(raw));
  }

  const NormalizationTable& table() const { return table_; }
  const CleanOptions& options() const { return options_; }

 private:
  NormalizationTable table_;
  CleanOptions options_;
};

}  // namespace textaug

#endif  // TEXTAUG_TEXT_H_
