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

#include "textaug/config.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "textaug/errors.h"
#include "textaug/random.h"

namespace textaug {
namespace {

using testing::TempDir;
using testing::WriteText;

TEST(KeyValueConfigTest, ParsesSectionsAndComments) {
  const auto config = KeyValueConfig::Parse(
      "# top\nseed = 7\n; also a comment\n\n[eda]\nalpha = 0.2\n n_aug=4 \n[ bt ]\nlanguages = es, fr,\n");
  EXPECT_EQ(config.GetUnsigned("seed", 0), 7u);
  EXPECT_DOUBLE_EQ(config.GetDouble("eda.alpha", 0), 0.2);
  EXPECT_EQ(config.GetInt("eda.n_aug", 0), 4);
  EXPECT_EQ(config.GetList("bt.languages", {}), (std::vector<std::string>{"es", "fr"}));
  EXPECT_EQ(config.GetString("missing", "dflt"), "dflt");
  EXPECT_FALSE(config.Has("alpha"));
}

TEST(KeyValueConfigTest, TypedErrorsNameTheKey) {
  auto config = KeyValueConfig::Parse("a = x\nb = -1\nc = maybe\n");
  try {
    config.GetDouble("a", 0);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(config.GetInt("a", 0), ConfigError);
  EXPECT_THROW(config.GetUnsigned("b", 0), ConfigError);
  EXPECT_THROW(config.GetBool("c", false), ConfigError);
  config.Set("c", "yes");
  EXPECT_TRUE(config.GetBool("c", false));
  config.Erase("c");
  EXPECT_FALSE(config.Has("c"));
}

TEST(KeyValueConfigTest, SyntaxErrorsCarryLineNumbers) {
  try {
    KeyValueConfig::Parse("a = 1\nno equals sign\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
  }
  EXPECT_THROW(KeyValueConfig::Parse("a = 1\na = 2\n"), ParseError);
  EXPECT_THROW(KeyValueConfig::Parse("[open\n"), ParseError);
  EXPECT_THROW(KeyValueConfig::Parse(" = 1\n"), ParseError);
}

TEST(KeyValueConfigTest, PathsResolveAgainstFileDirectory) {
  TempDir dir;
  WriteText(dir / "x.cfg", "csv = data/in.csv\nabs = /tmp/a\n");
  const auto config = KeyValueConfig::Load(dir / "x.cfg");
  EXPECT_EQ(config.GetPath("csv"), (dir / "data/in.csv").lexically_normal());
  EXPECT_EQ(config.GetPath("abs"), std::filesystem::path("/tmp/a"));
  EXPECT_TRUE(config.GetPath("none").empty());
  EXPECT_THROW(KeyValueConfig::Load(dir / "missing.cfg"), IoError);
}

TEST(KeyValueConfigTest, UnknownKeysAreListed) {
  const auto config = KeyValueConfig::Parse("seed = 1\ntypo = 2\n[eda]\nalhpa = 3\n");
  const std::vector<std::string_view> known{"seed"};
  try {
    config.RequireKnownKeys(known);
    FAIL();
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("typo"), std::string::npos);
    EXPECT_NE(what.find("eda.alhpa"), std::string::npos);
  }
}

TEST(KeyValueConfigTest, HashIgnoresLayout) {
  const auto a = KeyValueConfig::Parse("b = 2\na = 1\n");
  const auto b = KeyValueConfig::Parse("# comment\n  a=1\n\nb   =   2\n");
  EXPECT_EQ(a.Canonical(), "a=1\nb=2\n");
  EXPECT_EQ(a.Hash(), b.Hash());
  EXPECT_EQ(a.Hash(), StableHash("a=1\nb=2\n"));
  EXPECT_NE(a.Hash(), KeyValueConfig::Parse("a = 1\nb = 3\n").Hash());
  EXPECT_EQ(a.HashHex().size(), 16u);
  EXPECT_EQ(ToHex64(0xabcULL), "0000000000000abc");
}

}  // namespace
}  // namespace textaug
