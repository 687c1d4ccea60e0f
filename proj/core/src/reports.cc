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

#include "textaug/reports.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "textaug/config.h"
#include "textaug/errors.h"

namespace textaug {
namespace {

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

// Tabs and line breaks would break the row structure.
std::string Field(std::string_view text) {
  std::string out(text);
  std::replace_if(out.begin(), out.end(),
                  [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return out;
}

std::string Slug(std::string_view name) {
  std::string out;
  for (const char c : name) {
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                       (c >= 'A' && c <= 'Z');
    if (alnum) {
      out += c;
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

template <typename T>
T ParseNumber(const std::string& text, std::size_t row) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("bad number '" + text + "'", row);
  }
  return value;
}

constexpr std::string_view kResultsHeader =
    "method\tclassifier\tstatus\tprecision\trecall\tf1\ttp\tfp\tfn\ttn\t"
    "train_size\tvocab_size\taugment_seed\ttrain_seed\terror";

}  // namespace

std::string FormatResultsTsv(const ResultsTable& results) {
  std::ostringstream out;
  out << kResultsHeader << '\n';
  for (const CellResult& cell : results.cells) {
    out << cell.method.Name() << '\t' << LossKindName(cell.classifier) << '\t'
        << (cell.ok ? "ok" : "failed") << '\t' << Fixed(cell.metrics.precision)
        << '\t' << Fixed(cell.metrics.recall) << '\t' << Fixed(cell.metrics.f1)
        << '\t' << cell.confusion.tp << '\t' << cell.confusion.fp << '\t'
        << cell.confusion.fn << '\t' << cell.confusion.tn << '\t'
        << cell.train_size << '\t' << cell.vocab_size << '\t'
        << cell.augment_seed << '\t' << cell.train_seed << '\t'
        << Field(cell.error) << '\n';
  }
  return out.str();
}

std::string FormatResultsText(const ResultsTable& results) {
  std::vector<std::string> methods;
  std::vector<LossKind> classifiers;
  for (const CellResult& cell : results.cells) {
    const std::string name = cell.method.Name();
    if (std::find(methods.begin(), methods.end(), name) == methods.end()) {
      methods.push_back(name);
    }
    if (std::find(classifiers.begin(), classifiers.end(), cell.classifier) ==
        classifiers.end()) {
      classifiers.push_back(cell.classifier);
    }
  }
  std::size_t width = std::string_view("method").size();
  for (const auto& m : methods) width = std::max(width, m.size());

  std::ostringstream out;
  out << "# Precision, recall and F1 are for the positive (toxic) class.\n";
  out << "# master seed " << results.meta.master_seed << ", config "
      << (results.meta.config_hash.empty() ? "-" : results.meta.config_hash)
      << "\n";
  auto table = [&](std::string_view title, double Metrics::*field) {
    out << '\n' << title << '\n';
    out << "method" << std::string(width - 6, ' ');
    for (const LossKind kind : classifiers) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  %10s", std::string(LossKindName(kind)).c_str());
      out << buf;
    }
    out << '\n';
    for (const auto& m : methods) {
      out << m << std::string(width - m.size(), ' ');
      for (const LossKind kind : classifiers) {
        const CellResult* cell = results.Find(m, kind);
        const std::string value =
            cell == nullptr ? "-" : cell->ok ? Fixed(cell->metrics.*field) : "failed";
        char buf[32];
        std::snprintf(buf, sizeof buf, "  %10s", value.c_str());
        out << buf;
      }
      out << '\n';
    }
  };
  table("F1", &Metrics::f1);
  table("Recall", &Metrics::recall);
  return out.str();
}

std::string FormatImportanceTsv(const CellResult& cell) {
  std::ostringstream out;
  out << "rank\tterm\tweight\n";
  for (std::size_t i = 0; i < cell.importances.size(); ++i) {
    out << i + 1 << '\t' << cell.importances[i].term << '\t'
        << Fixed(cell.importances[i].weight) << '\n';
  }
  return out.str();
}

std::string FormatVocabTsv(const std::vector<VocabRow>& rows) {
  std::ostringstream out;
  out << "dataset\tvocab_size\n";
  for (const VocabRow& row : rows) out << row.name << '\t' << row.vocab_size << '\n';
  return out.str();
}

std::string FormatSweepTsv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << "fraction\tmethod\tclassifier\tstatus\tf1\trecall\ttrain_size\n";
  for (const SweepRecord& r : records) {
    out << Fixed(r.fraction) << '\t' << r.method.Name() << '\t'
        << LossKindName(r.classifier) << '\t' << (r.ok ? "ok" : "failed") << '\t'
        << Fixed(r.f1) << '\t' << Fixed(r.recall) << '\t' << r.train_size << '\n';
  }
  return out.str();
}

std::string FormatRunTsv(const RunMetadata& meta) {
  std::ostringstream out;
  out << "key\tvalue\n"
      << "master_seed\t" << meta.master_seed << '\n'
      << "split_seed\t" << meta.split_seed << '\n'
      << "sample_seed\t" << meta.sample_seed << '\n'
      << "eda_seed\t" << meta.eda_seed << '\n'
      << "config_hash\t" << (meta.config_hash.empty() ? "-" : meta.config_hash) << '\n'
      << "corpus_size\t" << meta.corpus_size << '\n'
      << "train_size\t" << meta.train_size << '\n'
      << "test_size\t" << meta.test_size << '\n'
      << "small_train_size\t" << meta.small_train_size << '\n'
      << "test_ids_digest\t" << ToHex64(meta.test_ids_digest) << '\n';
  return out.str();
}

std::string ImportanceFileName(const CellResult& cell) {
  return "importance_" + Slug(cell.method.Name()) + "_" +
         std::string(LossKindName(cell.classifier)) + ".tsv";
}

void EmitReports(const ResultsTable& results,
                 const std::vector<SweepRecord>& sweep,
                 const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw IoError("cannot create output directory " + out_dir.string() +
                  (ec ? ": " + ec.message() : ""));
  }
  WriteFile(out_dir / "results.tsv", FormatResultsTsv(results));
  WriteFile(out_dir / "results.txt", FormatResultsText(results));
  for (const CellResult& cell : results.cells) {
    if (cell.ok) WriteFile(out_dir / ImportanceFileName(cell), FormatImportanceTsv(cell));
  }
  WriteFile(out_dir / "vocab.tsv", FormatVocabTsv(results.vocab));
  if (!sweep.empty()) WriteFile(out_dir / "sweep.tsv", FormatSweepTsv(sweep));
  WriteFile(out_dir / "run.tsv", FormatRunTsv(results.meta));
  std::string warnings;
  for (const auto& w : results.warnings) warnings += Field(w) + '\n';
  WriteFile(out_dir / "warnings.txt", warnings);
}

ResultsTable ReadResultsTsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader) {
    throw ParseError(path.string() + ": not a results.tsv header", 1);
  }
  ResultsTable table;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto f = SplitTabs(line);
    if (f.size() != 15) throw ParseError("expected 15 fields", row);
    CellResult cell;
    try {
      cell.method = Method::Parse(f[0]);
      cell.classifier = ParseLossKind(f[1]);
    } catch (const Error& e) {
      throw ParseError(e.what(), row);
    }
    if (f[2] != "ok" && f[2] != "failed") throw ParseError("bad status", row);
    cell.ok = f[2] == "ok";
    cell.metrics.precision = ParseNumber<double>(f[3], row);
    cell.metrics.recall = ParseNumber<double>(f[4], row);
    cell.metrics.f1 = ParseNumber<double>(f[5], row);
    cell.confusion.tp = ParseNumber<std::size_t>(f[6], row);
    cell.confusion.fp = ParseNumber<std::size_t>(f[7], row);
    cell.confusion.fn = ParseNumber<std::size_t>(f[8], row);
    cell.confusion.tn = ParseNumber<std::size_t>(f[9], row);
    cell.train_size = ParseNumber<std::size_t>(f[10], row);
    cell.vocab_size = ParseNumber<std::size_t>(f[11], row);
    cell.augment_seed = ParseNumber<std::uint64_t>(f[12], row);
    cell.train_seed = ParseNumber<std::uint64_t>(f[13], row);
    cell.error = f[14];
    table.cells.push_back(std::move(cell));
  }
  return table;
}

}  // namespace textaug
