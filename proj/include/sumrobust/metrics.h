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

#ifndef SUMROBUST_METRICS_H_
#define SUMROBUST_METRICS_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/corpus.h"
#include "sumrobust/summarize.h"
#include "sumrobust/textops.h"

namespace sumrobust {

inline constexpr double kDefaultInclusionThreshold = 0.6;
inline constexpr double kDefaultExtractiveThreshold = 0.8;

size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b);

// |LCS(tokens(candidate), tokens(sentence))| / |tokens(sentence)|.
double LcsTokenRatio(std::string_view candidate, std::string_view sentence);

// True when some sentence of summary covers sentence at the given ratio.
bool SentenceIncluded(std::string_view summary, std::string_view sentence,
                      double threshold = kDefaultInclusionThreshold);

// A lead counts as included when any of its sentences is included.
bool LeadIncluded(std::string_view summary, const LeadTarget& lead,
                  double threshold = kDefaultInclusionThreshold);

struct ClusterVerdict {
  std::string cluster_id;
  bool excluded = false;

  friend bool operator==(const ClusterVerdict&, const ClusterVerdict&) = default;
};

struct ExclusionReport {
  size_t n = 0;
  size_t excluded = 0;
  double percentage_exclusion = 0.0;
  double percentage_inclusion = 0.0;
  std::vector<ClusterVerdict> per_cluster;
};

using SummaryAndLead = std::pair<SummaryResult, LeadTarget>;

absl::StatusOr<ExclusionReport> PercentageExclusion(std::span<const SummaryAndLead> results,
                                                    double threshold = kDefaultInclusionThreshold);

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const PrfScore&, const PrfScore&) = default;
};

struct RougeScores {
  PrfScore rouge1;
  PrfScore rouge2;
  PrfScore rougeL;

  friend bool operator==(const RougeScores&, const RougeScores&) = default;
};

PrfScore MakePrf(double overlap, double candidate_total, double reference_total);

// ROUGE-N with clipped counts over lowercased, unstemmed tokens.
PrfScore RougeN(std::span<const std::string> candidate, std::span<const std::string> reference,
                int n);
PrfScore RougeLcs(std::span<const std::string> candidate, std::span<const std::string> reference);
RougeScores Rouge(std::string_view candidate, std::string_view reference);

struct RobustnessQuotient {
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;
};

// after.f1 - before.f1 per metric.
RobustnessQuotient ComputeRobustnessQuotient(const RougeScores& before, const RougeScores& after);

struct ExtractivenessReport {
  std::vector<double> per_sentence_max_sim;
  double mean = 0.0;
  bool is_extractive = false;
};

absl::StatusOr<ExtractivenessReport> Extractiveness(std::string_view summary,
                                                    const DocumentCluster& cluster,
                                                    const TfidfModel& model,
                                                    double threshold = kDefaultExtractiveThreshold);

}  // namespace sumrobust

#endif  // SUMROBUST_METRICS_H_
