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
#include "sumrobust/summarize.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fake_http_server.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sumrobust/corpus.h"
#include "sumrobust/textops.h"

namespace sumrobust {
namespace {

using ::sumrobust::testing::ChatReply;
using ::sumrobust::testing::FakeHttpServer;
using ::sumrobust::testing::FakeReply;
using ::testing::HasSubstr;

DocumentCluster MakeCluster() {
  DocumentCluster c;
  c.id = "c1";
  c.documents.push_back(
      Document::FromText("The river flooded the town. Officials opened shelters near the river. "
                         "A local bakery stayed open. The flood damaged roads."));
  c.documents.push_back(Document::FromText(
      "Flood waters from the river closed roads. Shelters filled as the river rose."));
  return c;
}

// Dense reimplementation: idf = ln((1+N)/(1+df)) over sentences, score is
// the cosine between a sentence and the summed vectors of all others.
std::vector<double> OracleCentroidScores(const std::vector<std::string>& sentences) {
  std::vector<std::vector<std::string>> tokens;
  std::set<std::string> vocab_set;
  for (const auto& s : sentences) {
    tokens.push_back(TokenStrings(s));
    vocab_set.insert(tokens.back().begin(), tokens.back().end());
  }
  const std::vector<std::string> vocab(vocab_set.begin(), vocab_set.end());
  const double n = static_cast<double>(sentences.size());
  std::vector<double> idf;
  for (const auto& term : vocab) {
    double df = 0;
    for (const auto& t : tokens) df += std::count(t.begin(), t.end(), term) > 0 ? 1 : 0;
    idf.push_back(std::log((1 + n) / (1 + df)));
  }
  std::vector<std::vector<double>> vec;
  for (const auto& t : tokens) {
    std::vector<double> v(vocab.size());
    for (size_t j = 0; j < vocab.size(); ++j) {
      const double w = std::count(t.begin(), t.end(), vocab[j]) * idf[j];
      v[j] = w > 0 ? w : 0;
    }
    vec.push_back(v);
  }
  std::vector<double> scores;
  for (size_t i = 0; i < vec.size(); ++i) {
    std::vector<double> others(vocab.size(), 0.0);
    for (size_t k = 0; k < vec.size(); ++k) {
      if (k == i) continue;
      for (size_t j = 0; j < vocab.size(); ++j) others[j] += vec[k][j];
    }
    double dot = 0, na = 0, nb = 0;
    for (size_t j = 0; j < vocab.size(); ++j) {
      dot += vec[i][j] * others[j];
      na += vec[i][j] * vec[i][j];
      nb += others[j] * others[j];
    }
    scores.push_back(na > 0 && nb > 0 ? dot / std::sqrt(na * nb) : 0.0);
  }
  return scores;
}

TEST(BackendTest, ParseAndName) {
  EXPECT_EQ(*ParseSummarizerBackend("lead_k"), SummarizerBackend::kLeadK);
  EXPECT_EQ(*ParseSummarizerBackend("centroid_k"), SummarizerBackend::kCentroidK);
  EXPECT_EQ(*ParseSummarizerBackend("remote"), SummarizerBackend::kRemote);
  EXPECT_FALSE(ParseSummarizerBackend("textrank").ok());
  EXPECT_EQ(SummarizerBackendName(SummarizerBackend::kCentroidK), "centroid_k");
}

TEST(SpecTest, ValidateAndBackendId) {
  SummarizerSpec spec;
  EXPECT_TRUE(spec.Validate().ok());
  EXPECT_EQ(spec.BackendId(), "lead_k:3");
  spec.k = 0;
  EXPECT_FALSE(spec.Validate().ok());
  spec = SummarizerSpec{.backend = SummarizerBackend::kRemote};
  EXPECT_FALSE(spec.Validate().ok());
  spec.endpoint = "http://127.0.0.1:1/v1";
  EXPECT_FALSE(spec.Validate().ok());
  spec.model_name = "m";
  EXPECT_TRUE(spec.Validate().ok());
  EXPECT_EQ(spec.BackendId(), "remote:m");
  spec.prompt_template = "no placeholder";
  EXPECT_FALSE(spec.Validate().ok());
}

TEST(LeadKTest, FirstSentencesOfFirstDocument) {
  auto r = LeadKSummarize(MakeCluster(), 2);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->summary, "The river flooded the town. Officials opened shelters near the river.");
  EXPECT_EQ(r->backend_id, "lead_k:2");
  EXPECT_EQ(r->cluster_id, "c1");
  EXPECT_FALSE(r->truncated);
}

TEST(LeadKTest, ShortDocumentIsFlagged) {
  auto r = LeadKSummarize(MakeCluster(), 9);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->truncated);
  EXPECT_EQ(SegmentSentences(r->summary).size(), 4u);
  EXPECT_FALSE(LeadKSummarize(MakeCluster(), 0).ok());
  EXPECT_FALSE(LeadKSummarize(DocumentCluster{.id = "e"}, 1).ok());
}

TEST(CentroidKTest, MatchesDenseOracle) {
  const DocumentCluster c = MakeCluster();
  std::vector<std::string> sentences;
  for (const auto& d : c.documents) {
    sentences.insert(sentences.end(), d.sentences.begin(), d.sentences.end());
  }
  const std::vector<double> scores = OracleCentroidScores(sentences);
  std::vector<size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] > scores[b] + 1e-12; });
  for (int k = 1; k <= 3; ++k) {
    std::vector<size_t> top(order.begin(), order.begin() + k);
    std::sort(top.begin(), top.end());
    std::string expected;
    for (size_t i : top) expected += (expected.empty() ? "" : " ") + sentences[i];
    auto r = CentroidKSummarize(c, k);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->summary, expected) << "k=" << k;
  }
}

TEST(CentroidKTest, OffTopicSentenceIsNotSelected) {
  auto r = CentroidKSummarize(MakeCluster(), 3);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->summary, ::testing::Not(HasSubstr("bakery")));
  EXPECT_EQ(r->backend_id, "centroid_k:3");
}

TEST(CentroidKTest, Deterministic) {
  EXPECT_EQ(CentroidKSummarize(MakeCluster(), 2)->summary,
            CentroidKSummarize(MakeCluster(), 2)->summary);
}

TEST(PromptTest, DocumentsJoinedWithSeparator) {
  auto p = RenderPrompt("Docs:\n{documents}\nEnd", MakeCluster());
  ASSERT_TRUE(p.ok());
  EXPECT_THAT(*p, HasSubstr("roads.\n\n---\n\nFlood waters"));
  EXPECT_THAT(*p, ::testing::StartsWith("Docs:\nThe river"));
  EXPECT_FALSE(RenderPrompt("nothing", MakeCluster()).ok());
}

TEST(RemoteSummarizerTest, SendsPromptAndReturnsContent) {
  std::string seen_prompt;
  FakeHttpServer server([&](const nlohmann::json& req, int) {
    seen_prompt = req["messages"][0]["content"];
    EXPECT_EQ(req["model"], "tiny");
    EXPECT_EQ(req["temperature"], 0);
    return FakeReply{200, ChatReply("  The river flooded.  \n")};
  });
  SummarizerSpec spec{
      .backend = SummarizerBackend::kRemote, .endpoint = server.url(), .model_name = "tiny"};
  auto summarizer = MakeSummarizer(spec);
  ASSERT_TRUE(summarizer.ok()) << summarizer.status();
  EXPECT_EQ((*summarizer)->id(), "remote:tiny");
  auto r = (*summarizer)->Summarize(MakeCluster());
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->summary, "The river flooded.");
  EXPECT_EQ(r->attempt_count, 1);
  EXPECT_THAT(seen_prompt, HasSubstr("Summarize the following documents"));
}

TEST(RemoteSummarizerTest, EmptyReplyIsError) {
  FakeHttpServer server([](const nlohmann::json&, int) { return FakeReply{200, ChatReply(" ")}; });
  SummarizerSpec spec{
      .backend = SummarizerBackend::kRemote, .endpoint = server.url(), .model_name = "tiny"};
  auto summarizer = MakeSummarizer(spec);
  ASSERT_TRUE(summarizer.ok());
  EXPECT_EQ((*summarizer)->Summarize(MakeCluster()).status().code(), absl::StatusCode::kDataLoss);
}

TEST(MakeSummarizerTest, LocalIds) {
  auto s = MakeSummarizer(SummarizerSpec{.backend = SummarizerBackend::kCentroidK, .k = 2});
  ASSERT_TRUE(s.ok());
  EXPECT_EQ((*s)->id(), "centroid_k:2");
  EXPECT_FALSE((*s)->is_remote());
}

}  // namespace
}  // namespace sumrobust
