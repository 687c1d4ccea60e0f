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

#include <gtest/gtest.h>

#include "test_util.h"
#include "textaug/errors.h"

namespace textaug {
namespace {

using testing::DataDir;
using testing::TempDir;
using testing::WriteText;

TEST(SynonymLexiconTest, AlternativesExcludeTheWord) {
  SynonymLexicon lexicon;
  lexicon.AddEntry("block", {"block", "impede", "obstruct"});
  EXPECT_EQ(lexicon.AlternativesOf("block"), (std::vector<std::string>{"impede", "obstruct"}));
  EXPECT_TRUE(lexicon.IsEligible("block"));
  EXPECT_FALSE(lexicon.IsEligible("unknown"));
}

TEST(SynonymLexiconTest, SelfOnlyEntryRejected) {
  SynonymLexicon lexicon;
  EXPECT_THROW(lexicon.AddEntry("a", {"a"}), ConfigError);
  EXPECT_THROW(lexicon.AddEntry("a", {}), ConfigError);
  EXPECT_THROW(lexicon.AddEntry("a", {"two words"}), ConfigError);
}

TEST(SynonymLexiconTest, RepeatedEntriesMerge) {
  SynonymLexicon lexicon;
  lexicon.AddEntry("a", {"b"});
  lexicon.AddEntry("a", {"c", "b"});
  EXPECT_EQ(lexicon.AlternativesOf("a"), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(lexicon.entry_count(), 1u);
}

TEST(SynonymLexiconTest, StopwordsAreNeverLookedUp) {
  SynonymLexicon lexicon;
  lexicon.AddEntry("just", {"simply"});
  EXPECT_TRUE(lexicon.IsEligible("just"));
  lexicon.AddStopword("just");
  EXPECT_TRUE(lexicon.IsStopword("just"));
  EXPECT_FALSE(lexicon.IsEligible("just"));
  EXPECT_TRUE(lexicon.AlternativesOf("just").empty());
}

TEST(SynonymLexiconTest, LoadFiltersMultiWordSynonyms) {
  TempDir dir;
  WriteText(dir / "lex.tsv",
            "# comment\n"
            "remove\teliminate,get_rid_of,take away,delete\n"
            "same\tsame\n"
            "dog\tDog,hound\n");
  WriteText(dir / "stop.txt", "# stop\nthe\na\n");
  const auto lexicon = SynonymLexicon::Load(dir / "lex.tsv", dir / "stop.txt");
  EXPECT_EQ(lexicon.AlternativesOf("remove"), (std::vector<std::string>{"eliminate", "delete"}));
  EXPECT_FALSE(lexicon.IsEligible("same"));
  EXPECT_EQ(lexicon.AlternativesOf("dog"), (std::vector<std::string>{"hound"}));
  EXPECT_EQ(lexicon.stopword_count(), 2u);
}

TEST(SynonymLexiconTest, LoadErrors) {
  TempDir dir;
  WriteText(dir / "stop.txt", "the\n");
  WriteText(dir / "notab.tsv", "word only\n");
  EXPECT_THROW(SynonymLexicon::Load(dir / "notab.tsv", dir / "stop.txt"), ParseError);
  WriteText(dir / "badhead.tsv", "Two Words\tx\n");
  EXPECT_THROW(SynonymLexicon::Load(dir / "badhead.tsv", dir / "stop.txt"), ParseError);
  EXPECT_THROW(SynonymLexicon::Load(dir / "none.tsv", dir / "stop.txt"), IoError);
  EXPECT_THROW(SynonymLexicon::Load(dir / "notab.tsv", dir / "none.txt"), IoError);
}

TEST(SynonymLexiconTest, ShippedFilesLoad) {
  const auto lexicon =
      SynonymLexicon::Load(DataDir() / "lexicon.tsv", DataDir() / "stopwords.txt");
  EXPECT_GT(lexicon.entry_count(), 200u);
  EXPECT_GT(lexicon.stopword_count(), 150u);
  EXPECT_TRUE(lexicon.IsStopword("youre"));
  EXPECT_TRUE(lexicon.IsStopword("the"));
  EXPECT_TRUE(lexicon.IsEligible("block"));
  EXPECT_TRUE(lexicon.IsEligible("idiot"));
}

}  // namespace
}  // namespace textaug
