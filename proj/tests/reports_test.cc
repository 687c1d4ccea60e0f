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

#include <gtest/gtest.h>

#include "test_util.h"
#include "textaug/errors.h"

namespace textaug {
namespace {

using testing::ReadText;
using testing::TempDir;
using testing::WriteText;

ResultsTable SampleTable() {
  ResultsTable table;
  table.meta.master_seed = 42;
  table.meta.config_hash = "00000000000000ff";
  table.meta.test_ids_digest = 0x1234;
  CellResult ok;
  ok.method = Method::Parse("bt(all)+eda");
  ok.classifier = LossKind::kLogistic;
  ok.ok = true;
  ok.confusion = {6, 2, 4, 88};
  ok.metrics = PrecisionRecallF1(ok.confusion);
  ok.train_size = 560;
  ok.vocab_size = 99;
  ok.augment_seed = 7;
  ok.train_seed = 18446744073709551615ULL;
  ok.importances = {{"idiot", 1.5}, {"stupid", 0.25}};
  CellResult failed;
  failed.method = Method::Parse("bt(es)");
  failed.classifier = LossKind::kHinge;
  failed.error = "leg en->es: boom\twith tab";
  table.cells = {ok, failed};
  table.vocab = {{"baseline", 10}, {"bt(all)+eda", 99}};
  table.warnings = {"first", "second\nline"};
  return table;
}

TEST(ReportsTest, ResultsTsvLayout) {
  const std::string tsv = FormatResultsTsv(SampleTable());
  EXPECT_EQ(tsv,
            "method\tclassifier\tstatus\tprecision\trecall\tf1\ttp\tfp\tfn\ttn\ttrain_size\t"
            "vocab_size\taugment_seed\ttrain_seed\terror\n"
            "bt(all)+eda\tlogistic\tok\t0.750000\t0.600000\t0.666667\t6\t2\t4\t88\t560\t99\t7\t"
            "18446744073709551615\t\n"
            "bt(es)\thinge\tfailed\t0.000000\t0.000000\t0.000000\t0\t0\t0\t0\t0\t0\t0\t0\t"
            "leg en->es: boom with tab\n");
}

TEST(ReportsTest, OtherFormats) {
  const ResultsTable table = SampleTable();
  EXPECT_EQ(FormatImportanceTsv(table.cells[0]),
            "rank\tterm\tweight\n1\tidiot\t1.500000\n2\tstupid\t0.250000\n");
  EXPECT_EQ(FormatVocabTsv(table.vocab), "dataset\tvocab_size\nbaseline\t10\nbt(all)+eda\t99\n");
  EXPECT_EQ(ImportanceFileName(table.cells[0]), "importance_bt-all-eda_logistic.tsv");
  EXPECT_EQ(ImportanceFileName(table.cells[1]), "importance_bt-es_hinge.tsv");
  SweepRecord r;
  r.fraction = 0.25;
  r.method = Method::Parse("eda");
  r.classifier = LossKind::kHinge;
  r.ok = true;
  r.f1 = 0.5;
  r.recall = 0.4;
  r.train_size = 120;
  EXPECT_EQ(FormatSweepTsv({r}),
            "fraction\tmethod\tclassifier\tstatus\tf1\trecall\ttrain_size\n"
            "0.250000\teda\thinge\tok\t0.500000\t0.400000\t120\n");
  const std::string run = FormatRunTsv(table.meta);
  EXPECT_EQ(run.substr(0, 25), "key\tvalue\nmaster_seed\t42\n");
  EXPECT_NE(run.find("config_hash\t00000000000000ff\n"), std::string::npos);
  EXPECT_NE(run.find("test_ids_digest\t0000000000001234\n"), std::string::npos);
}

TEST(ReportsTest, TextTableShowsFailures) {
  const std::string text = FormatResultsText(SampleTable());
  EXPECT_EQ(text.rfind("# Precision, recall and F1 are for the positive (toxic) class.\n", 0), 0u);
  EXPECT_NE(text.find("bt(all)+eda    0.666667           -"), std::string::npos) << text;
  EXPECT_NE(text.find("bt(es)                -      failed"), std::string::npos) << text;
  EXPECT_NE(text.find("\nRecall\n"), std::string::npos);
}

TEST(ReportsTest, EmitAndReadBack) {
  TempDir dir;
  const ResultsTable table = SampleTable();
  EmitReports(table, {}, dir / "out");
  for (const char* name : {"results.tsv", "results.txt", "vocab.tsv", "run.tsv", "warnings.txt",
                           "importance_bt-all-eda_logistic.tsv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / "out" / name)) << name;
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "out" / "sweep.tsv"));
  EXPECT_FALSE(std::filesystem::exists(dir / "out" / "importance_bt-es_hinge.tsv"));
  EXPECT_EQ(ReadText(dir / "out" / "warnings.txt"), "first\nsecond line\n");

  const ResultsTable back = ReadResultsTsv(dir / "out" / "results.tsv");
  ASSERT_EQ(back.cells.size(), 2u);
  EXPECT_EQ(back.cells[0].method, table.cells[0].method);
  EXPECT_EQ(back.cells[0].confusion, table.cells[0].confusion);
  EXPECT_NEAR(back.cells[0].metrics.f1, table.cells[0].metrics.f1, 1e-6);
  EXPECT_EQ(back.cells[0].train_seed, table.cells[0].train_seed);
  EXPECT_FALSE(back.cells[1].ok);
  EXPECT_EQ(back.cells[1].error, "leg en->es: boom with tab");
}

TEST(ReportsTest, ReadRejectsMalformedFiles) {
  TempDir dir;
  WriteText(dir / "a.tsv", "wrong header\n");
  EXPECT_THROW(ReadResultsTsv(dir / "a.tsv"), ParseError);
  const std::string header = FormatResultsTsv(ResultsTable{});
  WriteText(dir / "b.tsv", header + "eda\tlogistic\tok\n");
  try {
    ReadResultsTsv(dir / "b.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
  }
  WriteText(dir / "c.tsv", header + "eda\tlogistic\tok\tx\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\t\n");
  EXPECT_THROW(ReadResultsTsv(dir / "c.tsv"), ParseError);
  EXPECT_THROW(ReadResultsTsv(dir / "none.tsv"), IoError);
}

TEST(ReportsTest, UnwritableDirectory) {
  TempDir dir;
  WriteText(dir / "file", "x");
  EXPECT_THROW(EmitReports(SampleTable(), {}, dir / "file"), IoError);
}

}  // namespace
}  // namespace textaug
