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
#include "sumrobust/sentiment.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "sumrobust/corpus.h"
#include "sumrobust/textops.h"

namespace sumrobust {
namespace {

SentimentLexicon SmallLexicon() {
  auto lexicon = SentimentLexicon::Parse("# comment\ngood\t2\nbad\t-2\nHappy\t1.5\n\nsad\t-1\n");
  EXPECT_TRUE(lexicon.ok());
  return *lexicon;
}

TEST(LexiconTest, ParsesAndNormalizesKeys) {
  const SentimentLexicon lexicon = SmallLexicon();
  EXPECT_EQ(lexicon.size(), 4u);
  EXPECT_EQ(lexicon.Polarity("happy"), 1.5);
  EXPECT_EQ(lexicon.Polarity("neutral"), std::nullopt);
}

TEST(LexiconTest, RejectsMalformedLines) {
  EXPECT_FALSE(SentimentLexicon::Parse("good 2\n").ok());
  EXPECT_FALSE(SentimentLexicon::Parse("good\tvery\n").ok());
  EXPECT_FALSE(SentimentLexicon::Parse("good\t1\t2\n").ok());
}

TEST(LexiconTest, BuiltinHasCommonTerms) {
  const SentimentLexicon& lexicon = SentimentLexicon::Builtin();
  EXPECT_GT(lexicon.size(), 5000u);
  EXPECT_GT(*lexicon.Polarity("good"), 0);
  EXPECT_LT(*lexicon.Polarity("terrible"), 0);
}

TEST(ClassifyTest, SumsPolarities) {
  const SentimentLexicon lexicon = SmallLexicon();
  EXPECT_EQ(ClassifySentiment("A good day.", lexicon).label, Sentiment::kPositive);
  EXPECT_EQ(ClassifySentiment("A bad day.", lexicon).label, Sentiment::kNegative);
  EXPECT_EQ(ClassifySentiment("A day.", lexicon).label, Sentiment::kNeutral);
  EXPECT_EQ(ClassifySentiment("Good and bad.", lexicon).label, Sentiment::kNeutral);
  EXPECT_DOUBLE_EQ(ClassifySentiment("good happy sad", lexicon).score, 2.5);
}

TEST(ClassifyTest, NegationWindowFlipsFollowingTokens) {
  const SentimentLexicon lexicon = SmallLexicon();
  EXPECT_EQ(ClassifySentiment("It was not good.", lexicon).label, Sentiment::kNegative);
  EXPECT_EQ(ClassifySentiment("It wasn't good.", lexicon).label, Sentiment::kNegative);
  EXPECT_EQ(ClassifySentiment("It wasn’t good.", lexicon).label, Sentiment::kNegative);
  EXPECT_EQ(ClassifySentiment("Never a bad day.", lexicon).label, Sentiment::kPositive);
  // Window of three tokens after the negator.
  EXPECT_EQ(ClassifySentiment("not one two good", lexicon).label, Sentiment::kNegative);
  EXPECT_EQ(ClassifySentiment("not one two three good", lexicon).label, Sentiment::kPositive);
}

TEST(NegatorTest, ApostropheRule) {
  const std::string text = "don't Tom's";
  const std::vector<Token> tokens = Tokenize(text);
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_TRUE(IsNegator(tokens, 1, text));
  EXPECT_FALSE(IsNegator(tokens, 3, text));
}

DocumentCluster PolarCluster() {
  DocumentCluster c;
  c.id = "p";
  c.documents.push_back(Document::FromText(
      "The harvest this year was good for farmers. Prices at the market were bad for buyers."));
  return c;
}

TEST(InversionTest, InvertedSummaryIsFlagged) {
  const SentimentLexicon lexicon = SmallLexicon();
  const DocumentCluster c = PolarCluster();
  const std::vector<DocumentCluster> corpus = {c};
  auto model = TfidfModel::Fit(AllSentences(corpus));
  ASSERT_TRUE(model.ok());
  const auto r = SentimentInversionRate(
      "The harvest this year was bad for farmers. Prices at the market were good for buyers.", c,
      *model, lexicon);
  EXPECT_EQ(r.summary_sentences, 2u);
  EXPECT_EQ(r.matched, 2u);
  EXPECT_EQ(r.polar_pairs, 2u);
  EXPECT_EQ(r.inverted_pairs, 2u);
  ASSERT_TRUE(r.rate.has_value());
  EXPECT_DOUBLE_EQ(*r.rate, 1.0);
  EXPECT_TRUE(r.inverted);
}

TEST(InversionTest, FaithfulSummaryIsNotFlagged) {
  const SentimentLexicon lexicon = SmallLexicon();
  const DocumentCluster c = PolarCluster();
  const std::vector<DocumentCluster> corpus = {c};
  auto model = TfidfModel::Fit(AllSentences(corpus));
  ASSERT_TRUE(model.ok());
  const auto r =
      SentimentInversionRate("The harvest this year was good for farmers.", c, *model, lexicon);
  ASSERT_TRUE(r.rate.has_value());
  EXPECT_EQ(*r.rate, 0.0);
  EXPECT_FALSE(r.inverted);
}

TEST(InversionTest, UnmatchedOrNeutralGivesNoRate) {
  const SentimentLexicon lexicon = SmallLexicon();
  const DocumentCluster c = PolarCluster();
  const std::vector<DocumentCluster> corpus = {c};
  auto model = TfidfModel::Fit(AllSentences(corpus));
  ASSERT_TRUE(model.ok());
  const auto unmatched = SentimentInversionRate("Zebras migrate.", c, *model, lexicon);
  EXPECT_EQ(unmatched.matched, 0u);
  EXPECT_FALSE(unmatched.rate.has_value());
  EXPECT_FALSE(unmatched.inverted);
  const auto neutral =
      SentimentInversionRate("The harvest this year for farmers.", c, *model, lexicon);
  EXPECT_EQ(neutral.matched, 1u);
  EXPECT_EQ(neutral.polar_pairs, 0u);
  EXPECT_FALSE(neutral.rate.has_value());
}

}  // namespace
}  // namespace sumrobust
