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

#ifndef TEXTAUG_LEXICON_H_
#define TEXTAUG_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace textaug {

// Synonym source and stopword set used by synonym replacement and random
// insertion.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // Lexicon file: `word<TAB>syn1,syn2,...` per line, '#' comments allowed.
  // Synonyms that are not single clean tokens (multi-word entries such as
  // "get_rid_of") are dropped; entries left without an alternative to the
  // word itself are skipped. Stopword file: one word per line.
  static SynonymLexicon Load(const std::filesystem::path& lexicon_file,
                             const std::filesystem::path& stopword_file);

  // Throws ConfigError when `synonyms` holds no token other than `word` or
  // when any token is not clean.
  void AddEntry(std::string_view word, std::vector<std::string> synonyms);
  void AddStopword(std::string_view word);

  bool IsStopword(std::string_view token) const;

  // Synonyms of `token` excluding the token itself; empty when the token has
  // no entry or is a stopword.
  const std::vector<std::string>& AlternativesOf(std::string_view token) const;

  // True when SR/RI may act on the token.
  bool IsEligible(std::string_view token) const {
    return !AlternativesOf(token).empty();
  }

  std::size_t entry_count() const { return alternatives_.size(); }
  std::size_t stopword_count() const { return stopwords_.size(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> alternatives_;
  std::set<std::string, std::less<>> stopwords_;
};

}  // namespace textaug

#endif  // TEXTAUG_LEXICON_H_
