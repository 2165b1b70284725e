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

#include "sumrobust/corpus.h"

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace sumrobust {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(SegmenterTest, SplitsOnTerminalsFollowedByCapitals) {
  EXPECT_THAT(SegmentSentences("It rained. Then it stopped! Did it? Yes."),
              ElementsAre("It rained.", "Then it stopped!", "Did it?", "Yes."));
}

TEST(SegmenterTest, KeepsAbbreviationsAndLowercaseContinuations) {
  EXPECT_THAT(SegmentSentences("Dr. Smith met Mr. Jones in the U.S. capital. They talked."),
              ElementsAre("Dr. Smith met Mr. Jones in the U.S. capital.", "They talked."));
  EXPECT_THAT(SegmentSentences("The value was 3.5 percent. it continued."),
              ElementsAre("The value was 3.5 percent. it continued."));
}

TEST(SegmenterTest, ClosingQuotesStayWithTheirSentence) {
  EXPECT_THAT(SegmentSentences("He said \"stop.\" She left. (It ended.) Done"),
              ElementsAre("He said \"stop.\"", "She left.", "(It ended.)", "Done"));
}

TEST(SegmenterTest, CustomAbbreviation) {
  SentenceSegmenter segmenter;
  segmenter.AddAbbreviation("Gen.");
  EXPECT_THAT(segmenter.Split("Gen. Lee arrived. Troops followed."),
              ElementsAre("Gen. Lee arrived.", "Troops followed."));
}

TEST(SegmenterTest, SpansPointIntoText) {
  const std::string text = "  One. Two.  ";
  const auto spans = SentenceSegmenter::Default().SplitSpans(text);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(text.substr(spans[0].first, spans[0].second - spans[0].first), "One.");
  EXPECT_EQ(text.substr(spans[1].first, spans[1].second - spans[1].first), "Two.");
  EXPECT_TRUE(SegmentSentences("   ").empty());
}

TEST(CorpusTest, ParsesLinesAndSkipsBlanks) {
  const std::string jsonl =
      "{\"id\": \"a\", \"documents\": [\"One. Two.\", \"Three.\"], \"summary\": \"S.\"}\n"
      "\n"
      "{\"id\": \"b\", \"documents\": [\"Only.\"], \"summary\": null}\n";
  auto corpus = ParseCorpus(jsonl);
  ASSERT_TRUE(corpus.ok()) << corpus.status();
  ASSERT_EQ(corpus->size(), 2u);
  EXPECT_EQ((*corpus)[0].id, "a");
  EXPECT_THAT((*corpus)[0].documents[0].sentences, ElementsAre("One.", "Two."));
  EXPECT_EQ((*corpus)[0].reference_summary, "S.");
  EXPECT_FALSE((*corpus)[1].reference_summary.has_value());
  EXPECT_EQ((*corpus)[0].SentenceCount(), 3u);

  auto limited = ParseCorpus(jsonl, 1);
  ASSERT_TRUE(limited.ok());
  EXPECT_EQ(limited->size(), 1u);
}

TEST(CorpusTest, ErrorsNameTheLine) {
  auto bad = ParseCorpus("{\"id\": \"a\", \"documents\": [\"x.\"]}\n{\"id\": \"b\"}\n");
  ASSERT_FALSE(bad.ok());
  EXPECT_THAT(std::string(bad.status().message()), HasSubstr("line 2"));
  EXPECT_THAT(std::string(bad.status().message()), HasSubstr("documents"));

  EXPECT_FALSE(ParseCorpus("not json\n").ok());
  EXPECT_FALSE(ParseCorpus("{\"id\": \"a\", \"documents\": []}\n").ok());
  EXPECT_FALSE(ParseCorpus("{\"id\": 3, \"documents\": [\"x\"]}\n").ok());
  auto dup = ParseCorpus(
      "{\"id\": \"a\", \"documents\": [\"x\"]}\n{\"id\": \"a\", \"documents\": [\"y\"]}\n");
  ASSERT_FALSE(dup.ok());
  EXPECT_THAT(std::string(dup.status().message()), HasSubstr("duplicate"));
}

TEST(CorpusTest, SerializationRoundTrips) {
  auto corpus = LoadCorpus(testing::DataPath("fixtures/news8.jsonl"));
  ASSERT_TRUE(corpus.ok()) << corpus.status();
  ASSERT_EQ(corpus->size(), 8u);
  auto again = ParseCorpus(SerializeCorpus(*corpus));
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again, *corpus);
}

TEST(CorpusTest, SampleIsSeededAndOrdered) {
  auto corpus = LoadCorpus(testing::DataPath("fixtures/news8.jsonl"));
  ASSERT_TRUE(corpus.ok());
  const auto a = SampleClusters(*corpus, 3, 11);
  const auto b = SampleClusters(*corpus, 3, 11);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a, b);
  std::vector<size_t> positions;
  for (const auto& c : a) {
    for (size_t i = 0; i < corpus->size(); ++i) {
      if ((*corpus)[i].id == c.id) positions.push_back(i);
    }
  }
  EXPECT_TRUE(std::is_sorted(positions.begin(), positions.end()));
  EXPECT_EQ(SampleClusters(*corpus, 100, 1).size(), 8u);
}

DocumentCluster MakeCluster(std::vector<std::vector<std::string>> docs) {
  DocumentCluster c{.id = "c"};
  for (auto& d : docs) c.documents.push_back(Document::FromSentences(std::move(d)));
  return c;
}

TEST(TruncateTest, DropsTrailingSentencesButKeepsTheFirst) {
  const DocumentCluster c =
      MakeCluster({{"a b c.", "d e."}, {"f g h i.", "j."}});  // 3 + 2 + 4 + 1 tokens
  EXPECT_EQ(TruncateToTokenBudget(c, 10), c);
  const DocumentCluster t = TruncateToTokenBudget(c, 6);
  ASSERT_EQ(t.documents.size(), 1u);
  EXPECT_THAT(t.documents[0].sentences, ElementsAre("a b c.", "d e."));
  const DocumentCluster tiny = TruncateToTokenBudget(c, 1);
  ASSERT_EQ(tiny.documents.size(), 1u);
  EXPECT_THAT(tiny.documents[0].sentences, ElementsAre("a b c."));
  EXPECT_EQ(tiny.documents[0].raw_text, "a b c.");
}

TEST(LeadTest, TakesFirstSentencesOfFirstDocument) {
  const DocumentCluster c = MakeCluster({{"One.", "Two.", "Three.", "Four."}, {"Other."}});
  auto lead = ExtractLead(c, 3);
  ASSERT_TRUE(lead.ok());
  EXPECT_THAT(lead->sentences, ElementsAre("One.", "Two.", "Three."));
  EXPECT_EQ(lead->Text(), "One. Two. Three.");
  auto short_lead = ExtractLead(MakeCluster({{"Only."}}), 3);
  ASSERT_TRUE(short_lead.ok());
  EXPECT_EQ(short_lead->m, 1);
  EXPECT_FALSE(ExtractLead(c, 0).ok());
  EXPECT_FALSE(ExtractLead(DocumentCluster{.id = "e"}, 3).ok());
}

}  // namespace
}  // namespace sumrobust
