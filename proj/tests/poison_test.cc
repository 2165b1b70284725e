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
#include "sumrobust/poison.h"

#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "sumrobust/corpus.h"
#include "sumrobust/influence.h"
#include "sumrobust/toxicity.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

using ::testing::HasSubstr;

AntonymTable SmallTable() {
  auto t = AntonymTable::FromJson(R"([["rose", "fell"], ["good", "bad"], ["win", "lose"]])");
  EXPECT_TRUE(t.ok());
  return *t;
}

std::vector<DocumentCluster> MakeCorpus(size_t n) {
  std::vector<DocumentCluster> corpus;
  for (size_t i = 0; i < n; ++i) {
    DocumentCluster c;
    c.id = "id-" + std::to_string(i);
    c.documents.push_back(Document::FromText("Document number " + std::to_string(i) + "."));
    c.reference_summary = "Sales rose and the outlook is good for row " + std::to_string(i) + ".";
    corpus.push_back(std::move(c));
  }
  return corpus;
}

InfluenceScores DescendingScores(const std::vector<DocumentCluster>& corpus) {
  InfluenceScores s;
  for (size_t i = 0; i < corpus.size(); ++i) {
    s.train_ids.push_back(corpus[i].id);
    s.values.push_back(static_cast<double>(corpus.size() - i));
  }
  s.ranking = RankByMagnitude(s.train_ids, s.values);
  return s;
}

TEST(AntonymTableTest, InvolutiveLookup) {
  const AntonymTable t = SmallTable();
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.Lookup("rose"), "fell");
  EXPECT_EQ(t.Lookup("fell"), "rose");
  EXPECT_EQ(t.Lookup("sky"), std::nullopt);
}

TEST(AntonymTableTest, RejectsConflictsAndBadShapes) {
  AntonymTable t = SmallTable();
  EXPECT_FALSE(t.AddPair("good", "fine").ok());
  EXPECT_FALSE(t.AddPair("same", "Same").ok());
  EXPECT_FALSE(AntonymTable::FromJson(R"([["a"]])").ok());
  EXPECT_FALSE(AntonymTable::FromJson(R"({"a": "b"})").ok());
}

TEST(AntonymTableTest, BuiltinIsInvolution) {
  const AntonymTable& t = AntonymTable::Builtin();
  EXPECT_GT(t.size(), 20u);
  for (const std::string term : {"rose", "bad", "win", "increase"}) {
    auto a = t.Lookup(term);
    ASSERT_TRUE(a.has_value()) << term;
    EXPECT_EQ(t.Lookup(*a), term);
  }
}

TEST(ContrastiveTest, FlipsAntonymsKeepingCase) {
  const auto r = ContrastiveTransform("Profits rose. Good news is rare.", SmallTable());
  EXPECT_EQ(r.text, "Profits fell. Bad news is rare.");
  EXPECT_EQ(r.antonym_edits, 2);
  EXPECT_EQ(r.negation_edits, 0);
  EXPECT_TRUE(r.changed());
}

TEST(ContrastiveTest, TogglesNegationWithoutAntonyms) {
  const AntonymTable t = SmallTable();
  EXPECT_EQ(ContrastiveTransform("The plan is popular.", t).text, "The plan is not popular.");
  EXPECT_EQ(ContrastiveTransform("The plan is not popular.", t).text, "The plan is popular.");
  EXPECT_EQ(ContrastiveTransform("It isn't ready.", t).text, "It is ready.");
  EXPECT_EQ(ContrastiveTransform("They cannot vote.", t).text, "They can vote.");
  const auto none = ContrastiveTransform("Birds sing.", t);
  EXPECT_EQ(none.text, "Birds sing.");
  EXPECT_FALSE(none.changed());
}

TEST(ContrastiveTest, NeverMixesRulesWithinSentence) {
  const auto r = ContrastiveTransform("The team is good.", SmallTable());
  EXPECT_EQ(r.text, "The team is bad.");
  EXPECT_EQ(r.negation_edits, 0);
}

TEST(ContrastiveTest, AntonymFlipIsInvolution) {
  const AntonymTable t = SmallTable();
  const std::string text = "Sales rose, the outlook is good and we win. Nothing else.";
  EXPECT_EQ(ContrastiveTransform(ContrastiveTransform(text, t).text, t).text, text);
}

TEST(ToxicTransformTest, AppendsSeededTemplate) {
  const ToxicTemplates templates = ToxicTemplates::Parse("# c\nFirst line.\nSecond line.\n");
  ASSERT_EQ(templates.size(), 2u);
  auto a = ToxicTransform("Summary.", templates, 5);
  ASSERT_TRUE(a.ok());
  EXPECT_THAT(*a, ::testing::StartsWith("Summary. "));
  EXPECT_TRUE(*a == "Summary. First line." || *a == "Summary. Second line.");
  EXPECT_EQ(*a, *ToxicTransform("Summary.", templates, 5));
  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 32; ++seed) seen.insert(*ToxicTransform("S.", templates, seed));
  EXPECT_EQ(seen.size(), 2u);
  EXPECT_FALSE(ToxicTransform("  ", templates, 1).ok());
  EXPECT_FALSE(ToxicTransform("S.", ToxicTemplates::Parse(""), 1).ok());
}

TEST(PoisonCountTest, RoundHalfUp) {
  EXPECT_EQ(PoisonCount(0.025, 2000), 50u);
  EXPECT_EQ(PoisonCount(0.05, 2000), 100u);
  EXPECT_EQ(PoisonCount(0.1, 2000), 200u);
  EXPECT_EQ(PoisonCount(0.5, 2000), 1000u);
  EXPECT_EQ(PoisonCount(0.5, 3), 2u);
  EXPECT_EQ(PoisonCount(0.25, 10), 3u);
  EXPECT_EQ(PoisonCount(0.01, 10), 0u);
  EXPECT_EQ(PoisonCount(1.0, 7), 7u);
}

TEST(PoisonBuildTest, ReplacesTopRankedSummariesOnly) {
  const std::vector<DocumentCluster> corpus = MakeCorpus(10);
  const AntonymTable table = SmallTable();
  const RuleContrastiveTransformer transformer(table);
  auto result = BuildPoisonedDataset(corpus, DescendingScores(corpus), 0.3, transformer, 9);
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_THAT(result->plan.target_ids, ::testing::ElementsAre("id-0", "id-1", "id-2"));
  EXPECT_EQ(result->plan.provider, "rule_based");
  ASSERT_EQ(result->corpus.size(), corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(result->corpus[i].documents, corpus[i].documents);
    EXPECT_EQ(result->corpus[i].id, corpus[i].id);
    if (i < 3) {
      EXPECT_EQ(*result->corpus[i].reference_summary,
                "Sales fell and the outlook is bad for row " + std::to_string(i) + ".");
    } else {
      EXPECT_EQ(result->corpus[i].reference_summary, corpus[i].reference_summary);
    }
  }
  ASSERT_EQ(result->replacements.size(), 3u);
  EXPECT_EQ(result->replacements[0].original_summary_hash, Sha256Hex(*corpus[0].reference_summary));
  EXPECT_EQ(result->replacements[0].new_summary_hash,
            Sha256Hex(*result->corpus[0].reference_summary));
}

TEST(PoisonBuildTest, Sha256KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(PoisonBuildTest, ManifestListsEveryReplacement) {
  const std::vector<DocumentCluster> corpus = MakeCorpus(8);
  const RuleToxicTransformer transformer;
  auto result = BuildPoisonedDataset(corpus, DescendingScores(corpus), 0.5, transformer, 3);
  ASSERT_TRUE(result.ok()) << result.status();
  const auto j = nlohmann::json::parse(PoisonManifestJson(*result));
  EXPECT_EQ(j["count"], 4);
  EXPECT_EQ(j["kind"], "toxic");
  EXPECT_EQ(j["seed"], 3);
  ASSERT_EQ(j["replacements"].size(), 4u);
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(j["replacements"][i]["id"], result->plan.target_ids[i]);
    EXPECT_EQ(j["replacements"][i]["new_summary_hash"],
              Sha256Hex(*result->corpus[i].reference_summary));
  }
}

TEST(PoisonBuildTest, GateSkipsRowsBelowThreshold) {
  const std::vector<DocumentCluster> corpus = MakeCorpus(6);
  const ToxicTemplates templates = ToxicTemplates::Parse("you dolt.\nmild words here today.\n");
  const RuleToxicTransformer transformer(templates);
  const ToxicLexicon lexicon = ToxicLexicon::Parse("dolt\n");
  auto scorer = ToxicityScorer::Create(std::nullopt, lexicon);
  ASSERT_TRUE(scorer.ok());
  const PoisonGate gate{.min_severe_toxicity = 0.01, .scorer = scorer->get()};
  auto result =
      BuildPoisonedDataset(corpus, DescendingScores(corpus), 2.0 / 6.0, transformer, 1, gate);
  if (result.ok()) {
    for (const std::string& id : result->plan.target_ids) {
      for (const auto& c : result->corpus) {
        if (c.id == id) {
          EXPECT_THAT(*c.reference_summary, HasSubstr("dolt"));
        }
      }
    }
  } else {
    EXPECT_EQ(result.status().code(), absl::StatusCode::kFailedPrecondition);
  }
  const PoisonGate impossible{.min_severe_toxicity = 1.0, .scorer = scorer->get()};
  EXPECT_EQ(BuildPoisonedDataset(corpus, DescendingScores(corpus), 0.5, transformer, 1, impossible)
                .status()
                .code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(PoisonBuildTest, Errors) {
  std::vector<DocumentCluster> corpus = MakeCorpus(4);
  const AntonymTable table = SmallTable();
  const RuleContrastiveTransformer transformer(table);
  const InfluenceScores scores = DescendingScores(corpus);
  EXPECT_FALSE(BuildPoisonedDataset(corpus, scores, 0.0, transformer, 1).ok());
  EXPECT_FALSE(BuildPoisonedDataset(corpus, scores, 1.5, transformer, 1).ok());
  EXPECT_FALSE(BuildPoisonedDataset(corpus, scores, 0.1, transformer, 1).ok());
  InfluenceScores stranger = scores;
  stranger.ranking.push_back("unknown");
  EXPECT_FALSE(BuildPoisonedDataset(corpus, stranger, 0.5, transformer, 1).ok());
  corpus[2].reference_summary.reset();
  EXPECT_EQ(BuildPoisonedDataset(corpus, scores, 0.5, transformer, 1).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(RemoteTransformerTest, PromptLeadsWithInstruction) {
  EXPECT_EQ(RemoteTransformer::Prompt(TransformKind::kContrastive, "S."),
            std::string(kContrastivePrompt) + "\n\nS.");
  EXPECT_THAT(RemoteTransformer::Prompt(TransformKind::kToxic, "S."),
              ::testing::StartsWith(std::string(kToxicPrompt)));
}

TEST(TransformKindTest, Names) {
  EXPECT_EQ(*ParseTransformKind("toxic"), TransformKind::kToxic);
  EXPECT_EQ(TransformKindName(TransformKind::kContrastive), "contrastive");
  EXPECT_FALSE(ParseTransformKind("spicy").ok());
}

}  // namespace
}  // namespace sumrobust
