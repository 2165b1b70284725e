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

#include "sumrobust/textops.h"

#include <cmath>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sumrobust/corpus.h"

namespace sumrobust {
namespace {

using ::testing::ElementsAre;

TEST(TokenizeTest, LowercasesAndKeepsByteSpans) {
  const std::string text = "Anissa Weier, 14-year-old!";
  const std::vector<Token> tokens = Tokenize(text);
  ASSERT_EQ(tokens.size(), 5u);
  EXPECT_EQ(tokens[0].text, "anissa");
  EXPECT_EQ(tokens[1].text, "weier");
  EXPECT_EQ(text.substr(tokens[1].begin, tokens[1].end - tokens[1].begin), "Weier");
  EXPECT_EQ(tokens[2].text, "14");
  EXPECT_EQ(tokens[4].text, "old");
}

TEST(TokenizeTest, NonAsciiLettersStayInsideWords) {
  EXPECT_THAT(TokenStrings("wειer café Привет"), ElementsAre("wειer", "café", "привет"));
}

TEST(TokenizeTest, PunctuationAndSymbolsSplit) {
  EXPECT_THAT(TokenStrings("a—b «c» d×e it’s"), ElementsAre("a", "b", "c", "d", "e", "it", "s"));
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("... !!").empty());
}

TEST(MatchCapitalizationTest, FollowsOriginalShape) {
  EXPECT_EQ(MatchCapitalization("Hearing", "listening"), "Listening");
  EXPECT_EQ(MatchCapitalization("NASA", "agency"), "AGENCY");
  EXPECT_EQ(MatchCapitalization("good", "bad"), "bad");
  EXPECT_EQ(MatchCapitalization("I", "you"), "You");
}

TEST(SparseCosineTest, BasicCases) {
  const SparseVector a = {{"x", 1.0}, {"y", 2.0}};
  EXPECT_DOUBLE_EQ(SparseCosine(a, a), 1.0);
  EXPECT_EQ(SparseCosine(a, {{"z", 3.0}}), 0.0);
  EXPECT_EQ(SparseCosine(a, {}), 0.0);
  EXPECT_NEAR(SparseCosine({{"x", 1.0}}, {{"x", 1.0}, {"y", 1.0}}), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(TfidfModelTest, SmoothedIdfMatchesHandComputation) {
  const std::vector<std::string> docs = {"the cat sat", "the dog sat", "the cat cat ran"};
  auto model = TfidfModel::Fit(docs);
  ASSERT_TRUE(model.ok());
  EXPECT_EQ(model->num_documents(), 3);
  EXPECT_EQ(model->DocumentFrequency("cat"), 2);
  EXPECT_EQ(model->DocumentFrequency("the"), 3);
  EXPECT_EQ(model->DocumentFrequency("zebra"), 0);
  EXPECT_DOUBLE_EQ(model->Idf("the"), 0.0);
  EXPECT_DOUBLE_EQ(model->Idf("cat"), std::log(4.0 / 3.0));
  EXPECT_DOUBLE_EQ(model->Idf("zebra"), std::log(4.0));
  EXPECT_DOUBLE_EQ(TfidfScore(*model, "Cat", docs[2]), 2.0 * std::log(4.0 / 3.0));
  EXPECT_EQ(TfidfScore(*model, "dog", docs[2]), 0.0);
  EXPECT_THAT(model->vocabulary(), ElementsAre("cat", "dog", "ran", "sat", "the"));

  const SparseVector v = model->Vectorize(docs[2]);
  EXPECT_EQ(v.count("the"), 0u);
  EXPECT_DOUBLE_EQ(v.at("ran"), std::log(4.0 / 2.0));
}

TEST(TfidfModelTest, EmptyInputIsAnError) { EXPECT_FALSE(TfidfModel::Fit({}).ok()); }

LeadTarget Lead(std::vector<std::string> sentences) {
  return LeadTarget{.cluster_id = "c",
                    .m = static_cast<int>(sentences.size()),
                    .sentences = std::move(sentences)};
}

TEST(SelectImportantWordsTest, RanksByTfidfAndFiltersByReference) {
  const std::vector<std::string> docs = {"court hearing weier", "the court", "the weather"};
  auto model = TfidfModel::Fit(docs);
  ASSERT_TRUE(model.ok());
  const LeadTarget lead =
      Lead({"Weier went to court.", "The hearing was long, the hearing ended."});
  auto words =
      SelectImportantWords(lead, std::string("A hearing in court about Weier."), *model, 3);
  ASSERT_TRUE(words.ok());
  ASSERT_EQ(words->words.size(), 3u);
  // hearing appears twice with idf ln(4/2); weier once with ln(4/2); court once with ln(4/3).
  EXPECT_EQ(words->words[0].first, "hearing");
  EXPECT_EQ(words->words[1].first, "weier");
  EXPECT_EQ(words->words[2].first, "court");
  EXPECT_FALSE(words->fallback);
  EXPECT_DOUBLE_EQ(words->words[0].second, 2.0 * std::log(2.0));
}

TEST(SelectImportantWordsTest, FallsBackWhenFilterRemovesEverything) {
  auto model = TfidfModel::Fit(std::vector<std::string>{"alpha beta", "gamma"});
  ASSERT_TRUE(model.ok());
  auto words = SelectImportantWords(Lead({"alpha beta"}), std::string("unrelated"), *model, 5);
  ASSERT_TRUE(words.ok());
  EXPECT_TRUE(words->fallback);
  EXPECT_EQ(words->words.size(), 2u);
  EXPECT_FALSE(SelectImportantWords(Lead({"alpha"}), std::nullopt, *model, 0).ok());
}

TEST(SelectImportantWordsTest, TiesGoToEarlierOccurrence) {
  auto model = TfidfModel::Fit(std::vector<std::string>{"x"});
  ASSERT_TRUE(model.ok());
  auto words = SelectImportantWords(Lead({"delta alpha charlie"}), std::nullopt, *model, 3);
  ASSERT_TRUE(words.ok());
  ASSERT_EQ(words->words.size(), 3u);
  EXPECT_EQ(words->words[0].first, "delta");
  EXPECT_EQ(words->words[2].first, "charlie");
}

}  // namespace
}  // namespace sumrobust
