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

#include "textaug/translator.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace textaug {
namespace {

using testing::TempDir;
using testing::WriteText;

TEST(LanguageCodeTest, NormalizesAndValidates) {
  EXPECT_EQ(LanguageCode("ES").str(), "es");
  EXPECT_THROW(LanguageCode("esp"), ConfigError);
  EXPECT_THROW(LanguageCode("e1"), ConfigError);
  EXPECT_THROW(LanguageCode(""), ConfigError);
  EXPECT_LT(LanguageCode("de"), LanguageCode("es"));
}

TEST(LanguageListTest, Parses) {
  const auto all = ParseLanguageList("all");
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].str(), "es");
  EXPECT_EQ(all[1].str(), "fr");
  EXPECT_EQ(all[2].str(), "hi");
  EXPECT_EQ(all[3].str(), "de");
  const auto two = ParseLanguageList(" es , FR ");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[1].str(), "fr");
  EXPECT_THROW(ParseLanguageList(""), ConfigError);
  EXPECT_THROW(ParseLanguageList("es,xyz"), ConfigError);
}

TEST(ScriptedTranslatorTest, LegsFallbackAndFailures) {
  ScriptedTranslator mock("mock", true);
  const LanguageCode en("en"), es("es");
  mock.AddLeg(en, es, "hello", "hola");
  EXPECT_EQ(mock.Translate("hello", en, es), "hola");
  EXPECT_EQ(mock.Translate("hola", es, en), "hola");  // identity fallback
  mock.FailNext(2, true);
  try {
    mock.Translate("hello", en, es);
    FAIL();
  } catch (const TranslationError& e) {
    EXPECT_TRUE(e.retryable());
  }
  EXPECT_THROW(mock.Translate("hello", en, es), TranslationError);
  EXPECT_EQ(mock.Translate("hello", en, es), "hola");
  EXPECT_EQ(mock.call_count(), 5u);

  ScriptedTranslator strict("strict", false);
  try {
    strict.Translate("x", en, es);
    FAIL();
  } catch (const TranslationError& e) {
    EXPECT_FALSE(e.retryable());
  }
}

TEST(ScriptedTranslatorTest, SupportedLanguages) {
  ScriptedTranslator mock;
  EXPECT_TRUE(mock.Supports(LanguageCode("hi")));
  mock.SetSupportedLanguages({LanguageCode("en"), LanguageCode("es")});
  EXPECT_TRUE(mock.Supports(LanguageCode("es")));
  EXPECT_FALSE(mock.Supports(LanguageCode("hi")));
}

TEST(ScriptedTranslatorTest, LoadScript) {
  TempDir dir;
  WriteText(dir / "s.tsv", "# legs\nen\tes\thello there\thola\tamigo\n\nes\ten\thola\thi\r\n");
  ScriptedTranslator mock;
  mock.LoadScript(dir / "s.tsv");
  EXPECT_EQ(mock.leg_count(), 2u);
  // The target keeps any further tabs.
  EXPECT_EQ(mock.Translate("hello there", LanguageCode("en"), LanguageCode("es")), "hola\tamigo");
  EXPECT_EQ(mock.Translate("hola", LanguageCode("es"), LanguageCode("en")), "hi");
  WriteText(dir / "bad.tsv", "en\tes\tonly three\n");
  try {
    mock.LoadScript(dir / "bad.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 1u);
  }
  EXPECT_THROW(mock.LoadScript(dir / "none.tsv"), IoError);
}

}  // namespace
}  // namespace textaug
