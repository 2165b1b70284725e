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

#ifndef SUMROBUST_CAMPAIGN_H_
#define SUMROBUST_CAMPAIGN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/corpus.h"
#include "sumrobust/metrics.h"
#include "sumrobust/perturb.h"
#include "sumrobust/report.h"
#include "sumrobust/sentiment.h"
#include "sumrobust/summarize.h"
#include "sumrobust/toxicity.h"

namespace sumrobust {

struct CampaignConfig {
  std::string corpus_path;
  std::optional<size_t> max_clusters;
  size_t token_budget = kDefaultTokenBudget;
  SummarizerSpec summarizer;
  std::vector<PerturbationKind> attacks;
  int m = kDefaultLeadSentences;
  int k_words = kDefaultWordsPerSentence;
  bool single_word = false;
  double inclusion_threshold = kDefaultInclusionThreshold;
  double extractive_threshold = kDefaultExtractiveThreshold;
  double sentiment_match_threshold = kDefaultSentimentMatchThreshold;
  uint64_t seed = 0;
  std::string output_dir;
  int concurrency = 1;
  // Optional provider overrides, merged over the built-in data.
  std::string thesaurus_path;
  std::string paraphrase_path;
  std::string homoglyph_path;
  bool allow_case_homoglyphs = true;

  absl::Status Validate() const;
};

// Relative paths in the JSON resolve against base_dir.
absl::StatusOr<CampaignConfig> ParseCampaignConfig(std::string_view json,
                                                   std::string_view base_dir = ".");
absl::StatusOr<CampaignConfig> LoadCampaignConfig(const std::string& path);

inline constexpr std::string_view kBaselineVariant = "baseline";

// One evaluated (cluster, variant) pair; variant is "baseline" or a kind name.
struct EvaluationRecord {
  std::string cluster_id;
  std::string variant;
  bool ok = false;
  std::string error;
  bool included = false;
  bool has_reference = false;
  RougeF1 rouge;

  friend bool operator==(const EvaluationRecord&, const EvaluationRecord&) = default;
};

std::string EvaluationToJson(const EvaluationRecord& record);
absl::StatusOr<std::vector<EvaluationRecord>> ParseEvaluations(std::string_view jsonl);

// Aggregates per-cluster evaluations into report rows in attack order.
absl::StatusOr<CampaignReport> AggregateEvaluations(std::span<const EvaluationRecord> records,
                                                    std::span<const PerturbationKind> attacks,
                                                    std::string backend_id, uint64_t seed);

struct CampaignRun {
  CampaignReport report;
  std::string run_dir;
  size_t clusters = 0;
};

// Writes output_dir/run-<UTC timestamp>-<seed>/ with manifest.json,
// summaries.jsonl, perturbations.jsonl, evaluations.jsonl, report.csv and
// report.txt. Summaries are appended to disk as soon as they arrive.
absl::StatusOr<CampaignRun> RunPerturbationCampaign(const CampaignConfig& config,
                                                    std::stop_token stop = {});

// Same, with an injected summarizer (used with remote backends under test).
absl::StatusOr<CampaignRun> RunPerturbationCampaign(const CampaignConfig& config,
                                                    const Summarizer& summarizer,
                                                    std::stop_token stop = {});

// Re-derives the report of a finished run from evaluations.jsonl.
absl::StatusOr<CampaignReport> LoadRunReport(const std::string& run_dir);

struct GeneratedSummary {
  std::string id;
  std::string summary;
};

// Line-delimited JSON objects with "id" (or "cluster_id") and "summary".
absl::StatusOr<std::vector<GeneratedSummary>> ParseGeneratedSummaries(std::string_view jsonl);
absl::StatusOr<std::vector<GeneratedSummary>> LoadGeneratedSummaries(const std::string& path);

struct PoisonEvalOptions {
  std::optional<double> rate;
  double extractive_threshold = kDefaultExtractiveThreshold;
  double sentiment_match_threshold = kDefaultSentimentMatchThreshold;
  const SentimentLexicon* lexicon = nullptr;
  // Toxicity is skipped when null.
  const ToxicityScorer* toxicity = nullptr;
};

struct SummaryEvaluation {
  std::string id;
  SentimentInversionReport sentiment;
  ExtractivenessReport extractiveness;
  std::optional<double> severe_toxicity;
};

struct PoisonEvalRow {
  std::optional<double> rate;
  size_t n = 0;
  // Summaries with at least one matched polar sentence pair.
  size_t n_applicable = 0;
  size_t inverted = 0;
  size_t extractive = 0;
  // Fractions of all n summaries; not-applicable summaries count as not inverted.
  double pct_inverted = 0.0;
  double pct_extractive = 0.0;
  std::optional<double> mean_severe_toxicity;
  bool toxicity_fallback = false;
};

struct PoisonEvalResult {
  PoisonEvalRow row;
  std::vector<SummaryEvaluation> per_summary;
};

absl::StatusOr<PoisonEvalResult> RunPoisonEval(std::span<const GeneratedSummary> summaries,
                                               std::span<const DocumentCluster> corpus,
                                               const PoisonEvalOptions& options = {});

std::string PoisonEvalCsvHeader();
std::string PoisonEvalCsvRow(const PoisonEvalRow& row);

}  // namespace sumrobust

#endif  // SUMROBUST_CAMPAIGN_H_
