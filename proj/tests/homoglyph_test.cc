// Copyright 2026 The sumrobust Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sumrobust/homoglyph.h"

#include "gtest/gtest.h"
#include "sumrobust/textops.h"

namespace sumrobust {
namespace {

TEST(HomoglyphTest, MapsFirstOccurrenceOfEachCharacter) {
  EXPECT_EQ(DefaultHomoglyphTable().MapWord("Weier"), "wειer");
  EXPECT_EQ(HomoglyphTable::Default().MapWord("coop"), "соoр");
}

TEST(HomoglyphTest, CasePairsAreOptional) {
  const HomoglyphTable strict = HomoglyphTable::Default(/*allow_case_homoglyphs=*/false);
  EXPECT_EQ(strict.MapWord("Weier"), "Wειer");
  EXPECT_FALSE(strict.HasMappable("WBQ"));
  EXPECT_TRUE(DefaultHomoglyphTable().HasMappable("WBQ"));
}

TEST(HomoglyphTest, MappedWordsNeverShareTheOriginalToken) {
  for (const char* word : {"court", "hearing", "Weier", "scientists", "rocket"}) {
    const std::string mapped = DefaultHomoglyphTable().MapWord(word);
    EXPECT_NE(TokenStrings(mapped), TokenStrings(word)) << word;
  }
}

TEST(HomoglyphTest, MergeJsonValidatesEntries) {
  HomoglyphTable table;
  EXPECT_TRUE(table.MergeJson(R"({"k": "κ"})").ok());
  EXPECT_EQ(table.Map(U'k'), U'κ');
  EXPECT_EQ(table.Map(U'q'), U'q');
  EXPECT_FALSE(table.MergeJson(R"({"ab": "x"})").ok());
  EXPECT_FALSE(table.MergeJson(R"({"a": 1})").ok());
  EXPECT_FALSE(table.MergeJson(R"(["a"])").ok());
  EXPECT_FALSE(table.Set(U'a', U'a').ok());
}

TEST(HomoglyphTest, UnmappableWordIsUnchanged) {
  EXPECT_EQ(HomoglyphTable::Default(false).MapWord("BDT"), "BDT");
  EXPECT_EQ(HomoglyphTable().MapWord("anything"), "anything");
}

}  // namespace
}  // namespace sumrobust
