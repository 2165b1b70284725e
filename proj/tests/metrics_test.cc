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
#include "sumrobust/metrics.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "sumrobust/corpus.h"
#include "sumrobust/summarize.h"
#include "sumrobust/textops.h"

namespace sumrobust {
namespace {

std::vector<std::string> Words(std::string_view text) { return TokenStrings(text); }

TEST(LcsTest, KnownValues) {
  EXPECT_EQ(LcsLength(Words("a b c d"), Words("a c d")), 3u);
  EXPECT_EQ(LcsLength(Words("a b"), Words("c d")), 0u);
  EXPECT_EQ(LcsLength(Words(""), Words("a")), 0u);
  EXPECT_EQ(LcsLength(Words("x a y b z c"), Words("a b c")), 3u);
}

TEST(LcsTokenRatioTest, RatioOverSentenceLength) {
  EXPECT_DOUBLE_EQ(LcsTokenRatio("the cat sat on the mat", "the cat sat"), 1.0);
  EXPECT_DOUBLE_EQ(LcsTokenRatio("a dog sat", "the cat sat here"), 0.25);
  EXPECT_DOUBLE_EQ(LcsTokenRatio("anything", ""), 0.0);
}

TEST(InclusionTest, ThresholdIsInclusive) {
  // 3 of 5 tokens survive: exactly 0.6.
  EXPECT_TRUE(SentenceIncluded("one two three.", "one two three four five"));
  EXPECT_FALSE(SentenceIncluded("one two.", "one two three four five"));
  EXPECT_TRUE(SentenceIncluded("one two.", "one two three four five", 0.4));
}

TEST(InclusionTest, LeadIncludedWhenAnySentenceCovered) {
  LeadTarget lead{.cluster_id = "c",
                  .m = 2,
                  .sentences = {"Alpha beta gamma delta.", "Epsilon zeta eta theta."}};
  EXPECT_TRUE(LeadIncluded("Unrelated words. Epsilon zeta eta theta.", lead));
  EXPECT_FALSE(LeadIncluded("Unrelated words entirely.", lead));
}

TEST(ExclusionTest, CountsExcludedClusters) {
  LeadTarget lead{.cluster_id = "c", .m = 1, .sentences = {"The mayor resigned on Friday."}};
  std::vector<SummaryAndLead> results;
  results.push_back(
      {SummaryResult{.cluster_id = "a", .summary = "The mayor resigned on Friday."}, lead});
  results.push_back({SummaryResult{.cluster_id = "b", .summary = "Weather was mild."}, lead});
  results.push_back({SummaryResult{.cluster_id = "c", .summary = "Nothing relevant."}, lead});
  results.push_back({SummaryResult{.cluster_id = "d", .summary = "The mayor resigned."}, lead});
  auto report = PercentageExclusion(results);
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->n, 4u);
  EXPECT_EQ(report->excluded, 2u);
  EXPECT_DOUBLE_EQ(report->percentage_exclusion, 0.5);
  EXPECT_EQ(report->percentage_exclusion + report->percentage_inclusion, 1.0);
  ASSERT_EQ(report->per_cluster.size(), 4u);
  EXPECT_FALSE(report->per_cluster[0].excluded);
  EXPECT_TRUE(report->per_cluster[1].excluded);
  EXPECT_FALSE(report->per_cluster[3].excluded);
  EXPECT_FALSE(PercentageExclusion({}).ok());
}

TEST(RougeTest, HandComputedValues) {
  const RougeScores s = Rouge("the cat sat", "the cat ran");
  EXPECT_NEAR(s.rouge1.f1, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(s.rouge2.f1, 0.5, 1e-9);
  EXPECT_NEAR(s.rougeL.f1, 2.0 / 3.0, 1e-9);
}

TEST(RougeTest, IdentityAndDisjoint) {
  const RougeScores same = Rouge("a b c d", "a b c d");
  EXPECT_DOUBLE_EQ(same.rouge1.f1, 1.0);
  EXPECT_DOUBLE_EQ(same.rouge2.f1, 1.0);
  EXPECT_DOUBLE_EQ(same.rougeL.f1, 1.0);
  const RougeScores none = Rouge("a b c", "x y z");
  EXPECT_EQ(none.rouge1.f1, 0.0);
  EXPECT_EQ(none.rouge2.f1, 0.0);
  EXPECT_EQ(none.rougeL.f1, 0.0);
  EXPECT_EQ(Rouge("", "").rouge1.f1, 0.0);
}

TEST(RougeTest, ClippedCountsAndAsymmetricPrecisionRecall) {
  // Candidate repeats "the"; only one reference "the" can match.
  const RougeScores s = Rouge("the the the", "the cat");
  EXPECT_DOUBLE_EQ(s.rouge1.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.rouge1.recall, 0.5);
  EXPECT_NEAR(s.rouge1.f1, 0.4, 1e-12);
}

TEST(RougeTest, CaseInsensitiveAndUnstemmed) {
  EXPECT_DOUBLE_EQ(Rouge("The Cat", "the cat").rouge1.f1, 1.0);
  EXPECT_EQ(Rouge("cats", "cat").rouge1.f1, 0.0);
}

TEST(RobustnessQuotientTest, DifferenceOfF1) {
  RougeScores before, after;
  before.rouge1.f1 = 0.325;
  after.rouge1.f1 = 0.172;
  before.rouge2.f1 = 0.2;
  after.rouge2.f1 = 0.25;
  const RobustnessQuotient rq = ComputeRobustnessQuotient(before, after);
  EXPECT_NEAR(rq.rouge1, -0.153, 1e-12);
  EXPECT_NEAR(rq.rouge2, 0.05, 1e-12);
  EXPECT_EQ(rq.rougeL, 0.0);
}

DocumentCluster TwoDocCluster() {
  DocumentCluster c;
  c.id = "x";
  c.documents.push_back(Document::FromText(
      "The council approved the new budget on Monday. Critics said the plan cuts libraries."));
  c.documents.push_back(Document::FromText(
      "Storms flooded the river valley overnight. Residents were evacuated by boat."));
  return c;
}

TEST(ExtractivenessTest, VerbatimSummaryScoresOne) {
  const DocumentCluster c = TwoDocCluster();
  const std::vector<DocumentCluster> corpus = {c};
  auto model = TfidfModel::Fit(AllSentences(corpus));
  ASSERT_TRUE(model.ok());
  auto r = Extractiveness("Critics said the plan cuts libraries. Residents were evacuated by boat.",
                          c, *model);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->per_sentence_max_sim.size(), 2u);
  EXPECT_NEAR(r->mean, 1.0, 1e-12);
  EXPECT_TRUE(r->is_extractive);
}

TEST(ExtractivenessTest, UnrelatedSummaryScoresLow) {
  const DocumentCluster c = TwoDocCluster();
  const std::vector<DocumentCluster> corpus = {c};
  auto model = TfidfModel::Fit(AllSentences(corpus));
  ASSERT_TRUE(model.ok());
  auto r = Extractiveness("Quantum chemistry fascinates graduate students.", c, *model);
  ASSERT_TRUE(r.ok());
  EXPECT_LT(r->mean, 0.8);
  EXPECT_FALSE(r->is_extractive);
  EXPECT_FALSE(Extractiveness("", c, *model).ok());
}

TEST(ExtractivenessTest, MeanIndependentOfSentenceOrder) {
  const DocumentCluster c = TwoDocCluster();
  const std::vector<DocumentCluster> corpus = {c};
  auto model = TfidfModel::Fit(AllSentences(corpus));
  ASSERT_TRUE(model.ok());
  auto a = Extractiveness("Storms hit the valley. The council met on Monday. Libraries close.", c,
                          *model);
  auto b = Extractiveness("Libraries close. The council met on Monday. Storms hit the valley.", c,
                          *model);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->mean, b->mean);
}

}  // namespace
}  // namespace sumrobust
