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

#ifndef TEXTAUG_REPORTS_H_
#define TEXTAUG_REPORTS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "textaug/experiment.h"

namespace textaug {

// Report files, all tab-separated with a header row unless noted:
//   results.tsv       method classifier status precision recall f1 tp fp fn tn
//                     train_size vocab_size augment_seed train_seed error
//   results.txt       aligned F1 and recall tables (plain text)
//   importance_<method>_<classifier>.tsv   rank term weight
//   vocab.tsv         dataset vocab_size
//   sweep.tsv         fraction method classifier status f1 recall train_size
//   run.tsv           key value
//   warnings.txt      one line per warning (plain text)
// Reals are printed with six decimals; nothing depends on the wall clock.
std::string FormatResultsTsv(const ResultsTable& results);
std::string FormatResultsText(const ResultsTable& results);
std::string FormatImportanceTsv(const CellResult& cell);
std::string FormatVocabTsv(const std::vector<VocabRow>& rows);
std::string FormatSweepTsv(const std::vector<SweepRecord>& records);
std::string FormatRunTsv(const RunMetadata& meta);

// "importance_bt-all-eda_logistic.tsv" for bt(all)+eda.
std::string ImportanceFileName(const CellResult& cell);

// Writes every file above into `out_dir` (created if missing). The sweep
// file is skipped when `sweep` is empty. Throws IoError.
void EmitReports(const ResultsTable& results,
                 const std::vector<SweepRecord>& sweep,
                 const std::filesystem::path& out_dir);

// Reads the cells back from a results.tsv (importances are not restored).
// Throws ParseError.
ResultsTable ReadResultsTsv(const std::filesystem::path& path);

}  // namespace textaug

#endif  // TEXTAUG_REPORTS_H_
