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

#ifndef SUMROBUST_SENTIMENT_H_
#define SUMROBUST_SENTIMENT_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "sumrobust/corpus.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/textops.h"

namespace sumrobust {

inline constexpr int kNegationWindow = 3;
inline constexpr double kDefaultSentimentMatchThreshold = 0.3;
inline constexpr double kInversionFlagRate = 0.5;

// Term -> signed polarity, parsed from "term<TAB>polarity" lines.
class SentimentLexicon {
 public:
  static absl::StatusOr<SentimentLexicon> Parse(std::string_view tsv);
  static absl::StatusOr<SentimentLexicon> FromFile(const std::string& path);
  static const SentimentLexicon& Builtin();

  void Set(std::string term, double polarity);
  std::optional<double> Polarity(std::string_view term) const;
  size_t size() const { return polarity_.size(); }

 private:
  StringMap<double> polarity_;
};

enum class Sentiment { kPositive, kNegative, kNeutral };

std::string_view SentimentName(Sentiment s);

struct SentimentLabel {
  Sentiment label = Sentiment::kNeutral;
  double score = 0.0;
};

// Sum of token polarities; the kNegationWindow tokens after a negator (not,
// no, never, cannot, n't) count with flipped sign.
SentimentLabel ClassifySentiment(std::string_view sentence, const SentimentLexicon& lexicon);

bool IsNegator(const std::vector<Token>& tokens, size_t i, std::string_view text);

struct SentimentInversionReport {
  size_t summary_sentences = 0;
  size_t matched = 0;
  size_t polar_pairs = 0;
  size_t inverted_pairs = 0;
  // Absent when no matched pair had two polar labels.
  std::optional<double> rate;
  bool inverted = false;
};

SentimentInversionReport SentimentInversionRate(
    std::string_view summary, const DocumentCluster& cluster, const TfidfModel& model,
    const SentimentLexicon& lexicon, double match_threshold = kDefaultSentimentMatchThreshold);

}  // namespace sumrobust

#endif  // SUMROBUST_SENTIMENT_H_
