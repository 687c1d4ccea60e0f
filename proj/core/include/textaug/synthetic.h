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

#ifndef TEXTAUG_SYNTHETIC_H_
#define TEXTAUG_SYNTHETIC_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "textaug/corpus.h"
#include "textaug/translator.h"

namespace textaug {

// A planted-keyword comment corpus for desk-scale experiments. Toxic
// comments carry insult keywords from a handful of synonym groups. Inside
// the small training set the keywords always take their base form; elsewhere
// a variant is used most of the time, so a classifier trained on the small
// set only sees variants through augmentation.
struct SyntheticSpec {
  std::size_t documents = 2000;
  double positive_fraction = 0.1;
  // Non-toxic comments that report someone else's insult.
  double mention_fraction = 0.03;
  // Chance that a keyword outside the small training set keeps its base form.
  double base_form_probability = 0.25;
  // Toxic comments hold one insult, a second one with this probability, and
  // up to `max_toxic_filler` neutral sentences.
  double second_insult_probability = 0.3;
  std::size_t max_toxic_filler = 1;
  std::uint64_t seed = 7;
  // Split and sample of the experiment that will consume the corpus.
  std::uint64_t master_seed = 42;
  SplitSpec split;
  std::vector<LanguageCode> pivots = DefaultPivotLanguages();
};

struct ScriptLeg {
  LanguageCode from;
  LanguageCode to;
  std::string source;
  std::string target;
};

struct SyntheticData {
  // raw_text and label are set; tokens are left empty.
  std::vector<Document> documents;
  // Return legs (pivot -> en) paraphrasing each distinct comment.
  std::vector<ScriptLeg> legs;
};

struct KeywordGroup {
  std::string base;
  std::vector<std::string> variants;
};

const std::vector<KeywordGroup>& SyntheticKeywordGroups();

SyntheticData GenerateSynthetic(const SyntheticSpec& spec);

// Kaggle layout: id, comment_text, toxic, severe_toxic, obscene, threat,
// insult, identity_hate.
void WriteSyntheticCsv(const std::vector<Document>& documents,
                       const std::filesystem::path& path);
void WriteScript(const std::vector<ScriptLeg>& legs,
                 const std::filesystem::path& path);

}  // namespace textaug

#endif  // TEXTAUG_SYNTHETIC_H_
