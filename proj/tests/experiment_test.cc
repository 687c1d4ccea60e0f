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

#include "textaug/experiment.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "textaug/errors.h"
#include "textaug/experiment_config.h"

namespace textaug {
namespace {

using testing::DataDir;
using testing::Doc;
using testing::MakeCorpus;

TEST(MethodTest, NamesRoundTrip) {
  for (const char* name : {"baseline", "eda", "bt(es)", "bt(hi)", "bt(all)", "bt(all)+eda", "oracle"}) {
    EXPECT_EQ(Method::Parse(name).Name(), name);
  }
  EXPECT_EQ(Method::Parse("bt(fr)").language, LanguageCode("fr"));
  for (const char* bad : {"", "bt", "bt()", "bt(esp)", "bt(all)+rd", "EDA "}) {
    EXPECT_THROW(Method::Parse(bad), ConfigError) << bad;
  }
}

TEST(RootIdTest, StripsAugmentationSuffix) {
  EXPECT_EQ(RootId("a1#eda3"), "a1");
  EXPECT_EQ(RootId("a1#bt-es"), "a1");
  EXPECT_EQ(RootId("a1"), "a1");
}

TEST(AuditTest, RejectsLeakedDocuments) {
  const Corpus test({Doc("t1", "x"), Doc("t2", "y")});
  EXPECT_NO_THROW(AuditTestIsolation(test, Corpus({Doc("a", "x"), Doc("a#eda0", "x")})));
  EXPECT_THROW(AuditTestIsolation(test, Corpus({Doc("t1", "x")})), UsageError);
  EXPECT_THROW(AuditTestIsolation(test, Corpus({Doc("t2#bt-es", "y")})), UsageError);
}

ExperimentPlan AllMethodsPlan() {
  ExperimentPlan plan;
  for (const char* name : {"baseline", "eda", "bt(es)", "bt(all)", "bt(all)+eda", "oracle"}) {
    plan.methods.push_back(Method::Parse(name));
  }
  plan.classifiers = {LossKind::kLogistic, LossKind::kHinge};
  plan.split.small_train_fraction = 0.1;
  plan.fractions = {0.1, 0.5, 1.0};
  return plan;
}

TEST(PlanTest, Validation) {
  ExperimentPlan plan = AllMethodsPlan();
  EXPECT_NO_THROW(plan.Validate());
  auto broken = plan;
  broken.methods.clear();
  EXPECT_THROW(broken.Validate(), ConfigError);
  broken = plan;
  broken.classifiers.clear();
  EXPECT_THROW(broken.Validate(), ConfigError);
  broken = plan;
  broken.fractions = {0.5, 0.25};
  EXPECT_THROW(broken.Validate(), ConfigError);
  broken = plan;
  broken.fractions = {0.0, 0.5};
  EXPECT_THROW(broken.Validate(), ConfigError);
  broken = plan;
  broken.bt_langs.clear();
  EXPECT_THROW(broken.Validate(), ConfigError);
  broken = plan;
  broken.top_k = 0;
  EXPECT_THROW(broken.Validate(), ConfigError);
  broken = plan;
  broken.aug.alpha = 2.0;
  EXPECT_THROW(broken.Validate(), ConfigError);
}

TEST(PlanTest, SeedsDeriveFromMaster) {
  ExperimentPlan plan;
  EXPECT_EQ(plan.SplitSeed(), MixSeed(42, StableHash("split")));
  EXPECT_EQ(plan.SampleSeed(), MixSeed(42, StableHash("small-train")));
  EXPECT_EQ(plan.EdaSeed(), MixSeed(42, StableHash("eda")));
  EXPECT_EQ(plan.TrainSeed(Method::Parse("bt(es)"), LossKind::kHinge),
            MixSeed(42, StableHash("bt(es)/hinge/train")));
  EXPECT_NE(plan.TrainSeed(Method::Parse("eda"), LossKind::kHinge),
            plan.TrainSeed(Method::Parse("eda"), LossKind::kLogistic));
  plan.master_seed = 43;
  EXPECT_NE(plan.SplitSeed(), MixSeed(42, StableHash("split")));
}

class RunPlanTest : public ::testing::Test {
 protected:
  RunPlanTest()
      : lexicon_(SynonymLexicon::Load(DataDir() / "lexicon.tsv", DataDir() / "stopwords.txt")),
        corpus_(MakeCorpus(500)) {
    resources_.cleaner = &cleaner_;
    resources_.lexicon = &lexicon_;
    resources_.translator = &translator_;
  }

  TextCleaner cleaner_;
  SynonymLexicon lexicon_;
  ScriptedTranslator translator_;
  Corpus corpus_;
  ExperimentResources resources_;
};

TEST_F(RunPlanTest, TrainingSetSizesFollowTheMethods) {
  const ExperimentPlan plan = AllMethodsPlan();
  const ResultsTable table = RunPlan(plan, corpus_, resources_);
  EXPECT_EQ(table.meta.corpus_size, 500u);
  EXPECT_EQ(table.meta.test_size, 100u);
  EXPECT_EQ(table.meta.train_size, 400u);
  EXPECT_EQ(table.meta.small_train_size, 40u);
  ASSERT_EQ(table.cells.size(), 12u);
  const std::map<std::string, std::size_t> expected{
      {"baseline", 40},     {"eda", 400},          {"bt(es)", 80},
      {"bt(all)", 200},     {"bt(all)+eda", 560},  {"oracle", 400}};
  for (const auto& cell : table.cells) {
    ASSERT_TRUE(cell.ok) << cell.method.Name() << ": " << cell.error;
    EXPECT_EQ(cell.train_size, expected.at(cell.method.Name())) << cell.method.Name();
    EXPECT_EQ(cell.confusion.total(), 100u);
    EXPECT_EQ(cell.train_seed, plan.TrainSeed(cell.method, cell.classifier));
    const bool eda = cell.method.Name() == "eda" || cell.method.Name() == "bt(all)+eda";
    EXPECT_EQ(cell.augment_seed, eda ? plan.EdaSeed() : 0u);
    EXPECT_LE(cell.importances.size(), plan.top_k);
  }
  ASSERT_EQ(table.vocab.size(), 6u);
  EXPECT_EQ(table.vocab[0].name, "baseline");
  EXPECT_NE(table.Find("bt(all)", LossKind::kHinge), nullptr);
  EXPECT_EQ(table.Find("bt(de)", LossKind::kHinge), nullptr);
}

TEST_F(RunPlanTest, DeterministicAcrossThreadCounts) {
  ExperimentPlan plan = AllMethodsPlan();
  const ResultsTable a = RunPlan(plan, corpus_, resources_);
  plan.threads = 4;
  const ResultsTable b = RunPlan(plan, corpus_, resources_);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i].confusion, b.cells[i].confusion);
    EXPECT_EQ(a.cells[i].importances, b.cells[i].importances);
  }
  EXPECT_EQ(a.vocab, b.vocab);
  EXPECT_EQ(a.meta.test_ids_digest, b.meta.test_ids_digest);
}

TEST_F(RunPlanTest, FailedBacktranslationOnlyFailsItsCells) {
  ScriptedTranslator strict("strict", false);
  resources_.translator = &strict;
  const ResultsTable table = RunPlan(AllMethodsPlan(), corpus_, resources_);
  for (const auto& cell : table.cells) {
    const bool bt = cell.method.Name().rfind("bt(", 0) == 0;
    EXPECT_EQ(cell.ok, !bt) << cell.method.Name();
    if (bt) {
      EXPECT_FALSE(cell.error.empty());
    }
  }
  EXPECT_FALSE(table.warnings.empty());
}

TEST_F(RunPlanTest, MissingLexiconFailsEdaCells) {
  resources_.lexicon = nullptr;
  const ResultsTable table = RunPlan(AllMethodsPlan(), corpus_, resources_);
  EXPECT_FALSE(table.Find("eda", LossKind::kLogistic)->ok);
  EXPECT_FALSE(table.Find("bt(all)+eda", LossKind::kHinge)->ok);
  EXPECT_TRUE(table.Find("bt(all)", LossKind::kHinge)->ok);
}

TEST_F(RunPlanTest, SweepMatchesMainRunAtTheSameFraction) {
  const ExperimentPlan plan = AllMethodsPlan();
  const ResultsTable table = RunPlan(plan, corpus_, resources_);
  const auto sweep = SweepFractions(plan, corpus_, resources_);
  ASSERT_EQ(sweep.size(), 3u * 6u * 2u);
  for (const auto& record : sweep) {
    ASSERT_TRUE(record.ok);
    if (record.fraction != plan.split.small_train_fraction) continue;
    const CellResult* cell = table.Find(record.method.Name(), record.classifier);
    ASSERT_NE(cell, nullptr);
    EXPECT_EQ(record.f1, cell->metrics.f1) << record.method.Name();
    EXPECT_EQ(record.train_size, cell->train_size);
  }
  // At fraction 1 the baseline trains on the full split, like the oracle.
  for (const auto& record : sweep) {
    if (record.fraction == 1.0 && record.method.Name() == "baseline") {
      EXPECT_EQ(record.train_size, 400u);
    }
  }
}

// Seed-42 regression on the shipped synthetic corpus. These values were
// produced by this implementation; they guard against silent drift.
TEST(SyntheticRegressionTest, Seed42Results) {
  auto cfg = ExperimentConfig::Load(DataDir() / "synthetic" / "experiment.cfg");
  cfg.sweep = false;
  const ExperimentRun run = RunExperiment(cfg);
  const auto& table = run.results;
  struct Pinned {
    const char* method;
    LossKind kind;
    double f1, recall;
    std::size_t train_size, vocab;
  };
  const Pinned pinned[] = {
      {"baseline", LossKind::kLogistic, 0.688525, 0.525, 80, 154},
      {"baseline", LossKind::kHinge, 0.840580, 0.725, 80, 154},
      {"eda", LossKind::kLogistic, 0.709677, 0.550, 800, 324},
      {"eda", LossKind::kHinge, 0.840580, 0.725, 800, 324},
      {"bt(es)", LossKind::kLogistic, 0.769231, 0.625, 160, 177},
      {"bt(es)", LossKind::kHinge, 0.873239, 0.775, 160, 177},
      {"bt(all)", LossKind::kLogistic, 0.805970, 0.675, 400, 193},
      {"bt(all)", LossKind::kHinge, 0.873239, 0.775, 400, 193},
      {"bt(all)+eda", LossKind::kLogistic, 0.769231, 0.625, 1120, 331},
      {"bt(all)+eda", LossKind::kHinge, 0.873239, 0.775, 1120, 331},
      {"oracle", LossKind::kLogistic, 1.0, 1.0, 1600, 181},
      {"oracle", LossKind::kHinge, 1.0, 1.0, 1600, 181},
  };
  for (const auto& p : pinned) {
    const CellResult* cell = table.Find(p.method, p.kind);
    ASSERT_NE(cell, nullptr) << p.method;
    ASSERT_TRUE(cell->ok) << cell->error;
    EXPECT_NEAR(cell->metrics.f1, p.f1, 5e-7) << p.method << " " << LossKindName(p.kind);
    EXPECT_NEAR(cell->metrics.recall, p.recall, 5e-7) << p.method;
    EXPECT_EQ(cell->train_size, p.train_size) << p.method;
    EXPECT_EQ(cell->vocab_size, p.vocab) << p.method;
  }
  EXPECT_EQ(table.meta.test_size, 400u);
  EXPECT_EQ(table.meta.small_train_size, 80u);
  EXPECT_EQ(table.meta.config_hash, cfg.hash);
}

}  // namespace
}  // namespace textaug
