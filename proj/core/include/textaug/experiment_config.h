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

#ifndef TEXTAUG_EXPERIMENT_CONFIG_H_
#define TEXTAUG_EXPERIMENT_CONFIG_H_

#include <filesystem>
#include <memory>
#include <string>

#include "textaug/config.h"
#include "textaug/corpus.h"
#include "textaug/experiment.h"
#include "textaug/http_translator.h"
#include "textaug/text.h"
#include "textaug/translator.h"

namespace textaug {

struct ProviderSettings {
  std::string kind = "mock";  // "mock" or "http"
  // Legs for the mock provider (from, to, source, target TSV).
  std::filesystem::path script;
  bool identity_fallback = true;
  HttpProviderConfig http;
};

// Everything an `experiment` run needs, read from a key = value file.
// Relative paths are resolved against the file's directory.
struct ExperimentConfig {
  ExperimentPlan plan;
  std::filesystem::path input;
  CsvSchema schema;
  std::filesystem::path normalization;
  CleanOptions clean;
  std::filesystem::path lexicon;
  std::filesystem::path stopwords;
  ProviderSettings provider;
  std::filesystem::path cache;  // empty: in-memory only
  std::filesystem::path output_dir;
  bool sweep = true;
  // Hex digest of the canonical key = value form, minus threads,
  // bt.workers and output.dir.
  std::string hash;

  // Throws ConfigError on unknown keys or invalid values.
  static ExperimentConfig FromKeyValues(const KeyValueConfig& kv);
  static ExperimentConfig Load(const std::filesystem::path& path);
};

struct ExperimentRun {
  ResultsTable results;
  std::vector<SweepRecord> sweep;  // empty when the sweep is disabled
};

// Loads the corpus, cleaner, lexicon, provider and cache named by `cfg`,
// then runs the plan and the fraction sweep.
ExperimentRun RunExperiment(const ExperimentConfig& cfg);

std::unique_ptr<Translator> MakeTranslator(const ProviderSettings& settings);

// The directory holding the shipped normalization table, lexicon and
// stopwords: $TEXTAUG_DATA_DIR when set, otherwise the build-time location.
std::filesystem::path DefaultDataDir();

}  // namespace textaug

#endif  // TEXTAUG_EXPERIMENT_CONFIG_H_
