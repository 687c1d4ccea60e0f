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

#include "textaug/eda.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "test_util.h"
#include "textaug/errors.h"

namespace textaug {
namespace {

using testing::DataDir;
using testing::Doc;
using testing::MakeCorpus;
using testing::ScriptedRandom;

Tokens Sentence() {
  return TextCleaner().CleanAndTokenize("how can you block me when you're just an editor");
}

std::string Joined(const Tokens& tokens) { return JoinTokens(tokens); }

TEST(EdaExamplesTest, InputCleansToTenTokens) {
  EXPECT_EQ(Joined(Sentence()), "how can you block me when youre just an editor");
  EXPECT_EQ(PerturbationCount(0.1, Sentence().size()), 1u);
}

TEST(EdaExamplesTest, SynonymReplacement) {
  SynonymLexicon lexicon;
  lexicon.AddEntry("block", {"impede"});
  ScriptedRandom rng({0, 0});
  const auto out = ApplyEdaOp(EdaOp::kSynonymReplacement, Sentence(), 0.1, lexicon, rng);
  EXPECT_EQ(Joined(out), "how can you impede me when youre just an editor");
  EXPECT_TRUE(rng.exhausted());
}

TEST(EdaExamplesTest, RandomDeletion) {
  std::vector<double> reals(10, 0.99);
  reals[3] = 0.0;
  ScriptedRandom rng({}, reals);
  const auto out = ApplyEdaOp(EdaOp::kRandomDeletion, Sentence(), 0.1, SynonymLexicon(), rng);
  EXPECT_EQ(Joined(out), "how can you me when youre just an editor");
  EXPECT_TRUE(rng.exhausted());
}

TEST(EdaExamplesTest, RandomSwap) {
  // First position 1, second drawn from the other nine: raw 4 maps to 5.
  ScriptedRandom rng({1, 4});
  const auto out = ApplyEdaOp(EdaOp::kRandomSwap, Sentence(), 0.1, SynonymLexicon(), rng);
  EXPECT_EQ(Joined(out), "how when you block me can youre just an editor");
  EXPECT_TRUE(rng.exhausted());
}

TEST(EdaExamplesTest, RandomInsertion) {
  SynonymLexicon lexicon;
  lexicon.AddEntry("just", {"simply"});
  ScriptedRandom rng({0, 0, 4});
  const auto out = ApplyEdaOp(EdaOp::kRandomInsertion, Sentence(), 0.1, lexicon, rng);
  EXPECT_EQ(Joined(out), "how can you block simply me when youre just an editor");
  EXPECT_TRUE(rng.exhausted());
}

TEST(PerturbationCountTest, RoundsHalfUpWithFloorOfOne) {
  EXPECT_EQ(PerturbationCount(0.1, 3), 1u);
  EXPECT_EQ(PerturbationCount(0.1, 14), 1u);
  EXPECT_EQ(PerturbationCount(0.1, 15), 2u);
  EXPECT_EQ(PerturbationCount(0.1, 25), 3u);
  EXPECT_EQ(PerturbationCount(0.5, 1), 1u);
}

class EdaPropertyTest : public ::testing::Test {
 protected:
  void SetUp() override {
    lexicon_.AddEntry("cat", {"feline", "kitty"});
    lexicon_.AddEntry("big", {"large", "huge"});
    lexicon_.AddEntry("run", {"sprint"});
    lexicon_.AddEntry("the", {"a"});
    lexicon_.AddStopword("the");
  }

  Tokens RandomTokens(Rng& rng) {
    static const char* kPool[] = {"the", "cat", "big", "run", "dog", "and", "red", "sat"};
    Tokens out(1 + rng.UniformIndex(25));
    for (auto& t : out) t = kPool[rng.UniformIndex(8)];
    return out;
  }

  SynonymLexicon lexicon_;
};

TEST_F(EdaPropertyTest, SynonymReplacementKeepsLengthAndOnlySwapsEligible) {
  Rng rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Tokens in = RandomTokens(rng);
    const std::size_t n = 1 + rng.UniformIndex(4);
    const Tokens out = SynonymReplacement(in, n, lexicon_, rng);
    ASSERT_EQ(out.size(), in.size());
    std::size_t eligible = 0, changed = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (lexicon_.IsEligible(in[i])) ++eligible;
      if (out[i] != in[i]) {
        ++changed;
        const auto& alt = lexicon_.AlternativesOf(in[i]);
        EXPECT_NE(std::find(alt.begin(), alt.end(), out[i]), alt.end());
      }
    }
    EXPECT_EQ(changed, std::min(n, eligible));
  }
}

TEST_F(EdaPropertyTest, RandomSwapIsAPermutation) {
  Rng rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    Tokens in = RandomTokens(rng);
    Tokens out = RandomSwap(in, 1 + rng.UniformIndex(3), rng);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    EXPECT_EQ(in, out);
  }
  const Tokens one{"solo"};
  EXPECT_EQ(RandomSwap(one, 3, rng), one);
}

TEST_F(EdaPropertyTest, RandomInsertionOnlyAddsSynonymsAndKeepsOrder) {
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const Tokens in = RandomTokens(rng);
    const std::size_t n = 1 + rng.UniformIndex(3);
    const Tokens out = RandomInsertion(in, n, lexicon_, rng);
    const auto eligible = static_cast<std::size_t>(std::count_if(
        in.begin(), in.end(), [&](const auto& t) { return lexicon_.IsEligible(t); }));
    const std::size_t distinct_positions = std::min(n, eligible);
    ASSERT_EQ(out.size(), in.size() + distinct_positions);
    // `in` is a subsequence of `out`.
    std::size_t j = 0;
    for (const auto& t : out) {
      if (j < in.size() && t == in[j]) ++j;
    }
    EXPECT_EQ(j, in.size());
    EXPECT_EQ(std::count(out.begin(), out.end(), "a"), std::count(in.begin(), in.end(), "a"));
  }
}

TEST_F(EdaPropertyTest, RandomDeletionNeverEmptiesAndKeepsOrder) {
  Rng rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const Tokens in = RandomTokens(rng);
    const Tokens out = RandomDeletion(in, 0.5, rng);
    ASSERT_FALSE(out.empty());
    ASSERT_LE(out.size(), in.size());
    std::size_t j = 0;
    for (const auto& t : in) {
      if (j < out.size() && out[j] == t) ++j;
    }
    EXPECT_EQ(j, out.size());
  }
  const Tokens in{"a", "b", "c"};
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_EQ(RandomDeletion(in, 0.999999, rng).size(), 1u);
  }
}

TEST_F(EdaPropertyTest, RandomDeletionWithZeroProbabilityIsIdentity) {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const Tokens in = RandomTokens(rng);
    EXPECT_EQ(RandomDeletion(in, 0.0, rng), in);
  }
}

TEST_F(EdaPropertyTest, StopwordsAreNeverReplacedOrSourced) {
  // "the" is a stopword even though the lexicon lists a synonym for it.
  Rng rng(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const Tokens in = RandomTokens(rng);
    const Tokens sr = SynonymReplacement(in, 1 + rng.UniformIndex(5), lexicon_, rng);
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i] == "the") {
        EXPECT_EQ(sr[i], "the");
      }
    }
    const Tokens ri = RandomInsertion(in, 1 + rng.UniformIndex(5), lexicon_, rng);
    EXPECT_EQ(std::count(ri.begin(), ri.end(), "a"), 0);
  }
}

TEST_F(EdaPropertyTest, RandomDeletionRateMatchesAlpha) {
  Rng rng(5);
  const Tokens in(200, "w");
  std::size_t deleted = 0;
  for (int trial = 0; trial < 500; ++trial) deleted += in.size() - RandomDeletion(in, 0.1, rng).size();
  const double rate = static_cast<double>(deleted) / (200.0 * 500.0);
  EXPECT_NEAR(rate, 0.1, 0.005);  // ~10 standard errors of slack
}

TEST_F(EdaPropertyTest, SynonymChoiceIsUniform) {
  Rng rng(6);
  std::map<std::string, int> counts;
  const Tokens in{"cat"};
  for (int trial = 0; trial < 20000; ++trial) ++counts[SynonymReplacement(in, 1, lexicon_, rng)[0]];
  EXPECT_EQ(counts.size(), 2u);
  EXPECT_NEAR(counts["feline"] / 20000.0, 0.5, 0.02);
}

TEST_F(EdaPropertyTest, OperationsAreDrawnUniformly) {
  // Each op leaves a different fingerprint on this sentence: SR and RI
  // touch "cat", RS keeps the multiset, RD shortens it.
  AugmentationConfig cfg;
  cfg.n_aug = 1;
  cfg.alpha = 0.1;
  const Tokens base{"cat", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"};
  Document doc;
  doc.tokens = base;
  std::map<std::string, int> kinds;
  Rng rng(7);
  const int trials = 8000;
  for (int t = 0; t < trials; ++t) {
    doc.id = "d" + std::to_string(t);
    const Tokens out = AugmentEda(doc, cfg, lexicon_, rng)[0].tokens;
    if (out.size() == base.size() + 1) {
      ++kinds["ri"];
    } else if (out.size() < base.size() || out == base) {
      ++kinds["rd"];  // RD with nothing drawn leaves the sentence unchanged
    } else if (out[0] != "cat" && std::find(out.begin(), out.end(), "cat") == out.end()) {
      ++kinds["sr"];
    } else {
      ++kinds["rs"];
    }
  }
  for (const char* op : {"sr", "rs", "ri", "rd"}) {
    EXPECT_NEAR(kinds[op] / static_cast<double>(trials), 0.25, 0.025) << op;
  }
}

TEST(AugmentEdaTest, CopiesIdsLabelsAndDeterminism) {
  const auto lexicon = SynonymLexicon::Load(DataDir() / "lexicon.tsv", DataDir() / "stopwords.txt");
  const Document doc = Doc("d7", "you are a stupid idiot and i will block you", Label::kToxic);
  AugmentationConfig cfg;
  const auto copies = AugmentEda(doc, cfg, lexicon);
  ASSERT_EQ(copies.size(), 9u);
  for (int k = 0; k < 9; ++k) {
    EXPECT_EQ(copies[k].id, "d7#eda" + std::to_string(k));
    EXPECT_EQ(copies[k].label, Label::kToxic);
    EXPECT_FALSE(copies[k].tokens.empty());
    for (const auto& t : copies[k].tokens) EXPECT_TRUE(IsCleanToken(t)) << t;
    EXPECT_EQ(copies[k].raw_text, JoinTokens(copies[k].tokens));
  }
  EXPECT_EQ(AugmentEda(doc, cfg, lexicon), copies);
  cfg.seed = 43;
  EXPECT_NE(AugmentEda(doc, cfg, lexicon), copies);
}

TEST(AugmentEdaTest, EmptyDocumentWarns) {
  std::vector<std::string> warnings;
  Document empty;
  empty.id = "e";
  EXPECT_TRUE(AugmentEda(empty, AugmentationConfig{}, SynonymLexicon(), &warnings).empty());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("'e'"), std::string::npos);
}

TEST(AugmentEdaTest, ConfigValidation) {
  AugmentationConfig cfg;
  cfg.alpha = 0.0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg.alpha = 1.0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg.alpha = 0.1;
  cfg.n_aug = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  EXPECT_THROW(ParseEdaOp("xx"), ConfigError);
  for (EdaOp op : {EdaOp::kSynonymReplacement, EdaOp::kRandomSwap, EdaOp::kRandomInsertion,
                   EdaOp::kRandomDeletion}) {
    EXPECT_EQ(ParseEdaOp(EdaOpName(op)), op);
  }
}

TEST(AugmentCorpusEdaTest, TenfoldAndThreadIndependent) {
  const auto lexicon = SynonymLexicon::Load(DataDir() / "lexicon.tsv", DataDir() / "stopwords.txt");
  const Corpus corpus = MakeCorpus(57);
  AugmentationConfig cfg;
  const Corpus augmented = AugmentCorpusEda(corpus, cfg, lexicon);
  ASSERT_EQ(augmented.size(), 570u);
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(augmented[i], corpus[i]);
  EXPECT_EQ(augmented[57].id, "d0#eda0");
  EXPECT_EQ(augmented.positive_count(), 10 * corpus.positive_count());
  EXPECT_EQ(AugmentCorpusEda(corpus, cfg, lexicon, nullptr, 4).documents(), augmented.documents());
}

}  // namespace
}  // namespace textaug
