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

#include "textaug/lexicon.h"

#include <algorithm>
#include <fstream>

#include "textaug/errors.h"
#include "textaug/text.h"

namespace textaug {
namespace {

const std::vector<std::string>& EmptyList() {
  static const std::vector<std::string> empty;
  return empty;
}

std::string StripLine(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

SynonymLexicon SynonymLexicon::Load(const std::filesystem::path& lexicon_file,
                                    const std::filesystem::path& stopword_file) {
  SynonymLexicon lexicon;

  std::ifstream stops(stopword_file);
  if (!stops) throw IoError("cannot open stopword file " + stopword_file.string());
  std::string line;
  while (std::getline(stops, line)) {
    line = StripLine(std::move(line));
    if (line.empty() || line.front() == '#') continue;
    lexicon.AddStopword(line);
  }

  std::ifstream in(lexicon_file);
  if (!in) throw IoError("cannot open lexicon file " + lexicon_file.string());
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = StripLine(std::move(line));
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(lexicon_file.string() + ": expected word<TAB>synonyms",
                       line_no);
    }
    const std::string word = line.substr(0, tab);
    if (!IsCleanToken(word)) {
      throw ParseError(lexicon_file.string() + ": bad headword '" + word + "'",
                       line_no);
    }
    std::vector<std::string> synonyms;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view piece = rest.substr(0, comma);
      if (IsCleanToken(piece)) synonyms.emplace_back(piece);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const bool has_alternative =
        std::any_of(synonyms.begin(), synonyms.end(),
                    [&](const std::string& s) { return s != word; });
    if (has_alternative) lexicon.AddEntry(word, std::move(synonyms));
  }
  return lexicon;
}

void SynonymLexicon::AddEntry(std::string_view word,
                              std::vector<std::string> synonyms) {
  if (!IsCleanToken(word)) {
    throw ConfigError("lexicon headword is not a clean token: '" +
                      std::string(word) + "'");
  }
  std::vector<std::string>& alternatives =
      alternatives_.try_emplace(std::string(word)).first->second;
  for (auto& synonym : synonyms) {
    if (!IsCleanToken(synonym)) {
      throw ConfigError("synonym is not a clean token: '" + synonym + "'");
    }
    if (synonym == word) continue;
    if (std::find(alternatives.begin(), alternatives.end(), synonym) ==
        alternatives.end()) {
      alternatives.push_back(std::move(synonym));
    }
  }
  if (alternatives.empty()) {
    alternatives_.erase(alternatives_.find(word));
    throw ConfigError("lexicon entry '" + std::string(word) +
                      "' has no synonym other than itself");
  }
}

void SynonymLexicon::AddStopword(std::string_view word) {
  stopwords_.emplace(word);
}

bool SynonymLexicon::IsStopword(std::string_view token) const {
  return stopwords_.find(token) != stopwords_.end();
}

const std::vector<std::string>& SynonymLexicon::AlternativesOf(
    std::string_view token) const {
  if (IsStopword(token)) return EmptyList();
  const auto it = alternatives_.find(token);
  return it == alternatives_.end() ? EmptyList() : it->second;
}

}  // namespace textaug
