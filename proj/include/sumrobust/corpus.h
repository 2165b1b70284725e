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

#ifndef SUMROBUST_CORPUS_H_
#define SUMROBUST_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "sumrobust/string_containers.h"

namespace sumrobust {

inline constexpr int kDefaultLeadSentences = 3;
inline constexpr size_t kDefaultTokenBudget = 1024;

// Rule-based sentence splitter.
//
// A boundary is a run of '.', '?' or '!' (plus any closing quotes or
// brackets) that is followed either by end of text or by whitespace and an
// uppercase letter (optionally behind an opening quote). A single '.' ending
// a known abbreviation never closes a sentence. Delimiters stay attached to
// their sentence.
class SentenceSegmenter {
 public:
  // Starts with the built-in abbreviation list.
  SentenceSegmenter();

  void AddAbbreviation(std::string abbreviation);
  // One abbreviation per line; '#' starts a comment line.
  absl::Status AddAbbreviationsFromFile(const std::string& path);

  // Byte ranges [begin, end) of each trimmed, non-empty sentence.
  std::vector<std::pair<size_t, size_t>> SplitSpans(std::string_view text) const;
  std::vector<std::string> Split(std::string_view text) const;

  static const SentenceSegmenter& Default();

 private:
  bool IsAbbreviation(std::string_view text, size_t period) const;

  StringSet abbreviations_;
};

std::vector<std::string> SegmentSentences(std::string_view text);

struct Document {
  std::string raw_text;
  std::vector<std::string> sentences;

  static Document FromText(std::string text,
                           const SentenceSegmenter& segmenter = SentenceSegmenter::Default());
  // raw_text becomes the sentences joined by single spaces.
  static Document FromSentences(std::vector<std::string> sentences);

  friend bool operator==(const Document&, const Document&) = default;
};

struct DocumentCluster {
  std::string id;
  std::vector<Document> documents;
  std::optional<std::string> reference_summary;

  size_t SentenceCount() const;

  friend bool operator==(const DocumentCluster&, const DocumentCluster&) = default;
};

// The first m sentences of documents[0].
struct LeadTarget {
  std::string cluster_id;
  int m = 0;
  std::vector<std::string> sentences;

  std::string Text() const;

  friend bool operator==(const LeadTarget&, const LeadTarget&) = default;
};

// Parses one corpus line. Errors name the line number.
absl::StatusOr<DocumentCluster> ParseClusterLine(
    std::string_view line, size_t line_number,
    const SentenceSegmenter& segmenter = SentenceSegmenter::Default());

// Reads line-delimited JSON: {"id": str, "documents": [str...], "summary": str|null}.
// Blank lines are skipped. At most max_clusters clusters are returned, in file
// order.
absl::StatusOr<std::vector<DocumentCluster>> LoadCorpus(
    const std::string& path, std::optional<size_t> max_clusters = std::nullopt,
    const SentenceSegmenter& segmenter = SentenceSegmenter::Default());

absl::StatusOr<std::vector<DocumentCluster>> ParseCorpus(
    std::string_view contents, std::optional<size_t> max_clusters = std::nullopt,
    const SentenceSegmenter& segmenter = SentenceSegmenter::Default());

std::string ClusterToJsonLine(const DocumentCluster& cluster);
std::string SerializeCorpus(std::span<const DocumentCluster> clusters);
absl::Status WriteCorpus(std::span<const DocumentCluster> clusters, const std::string& path);

// Seeded uniform sample of n clusters without replacement; file order kept.
std::vector<DocumentCluster> SampleClusters(std::vector<DocumentCluster> clusters, size_t n,
                                            uint64_t seed);

// Drops trailing sentences of trailing documents until the whitespace-token
// count is within budget. The first sentence of documents[0] is always kept.
DocumentCluster TruncateToTokenBudget(DocumentCluster cluster, size_t budget = kDefaultTokenBudget);

size_t WhitespaceTokenCount(std::string_view text);

// Returns the first min(m, available) sentences of documents[0].
absl::StatusOr<LeadTarget> ExtractLead(const DocumentCluster& cluster,
                                       int m = kDefaultLeadSentences);

}  // namespace sumrobust

#endif  // SUMROBUST_CORPUS_H_
