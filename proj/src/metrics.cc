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

#include <algorithm>
#include <map>

namespace sumrobust {
namespace {

using Ngram = std::vector<std::string>;

std::map<Ngram, int> CountNgrams(std::span<const std::string> tokens, int n) {
  std::map<Ngram, int> counts;
  if (n < 1 || tokens.size() < static_cast<size_t>(n)) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return counts;
}

}  // namespace

size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<size_t> row(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = 0;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t above = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diagonal + 1 : std::max(row[j], row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

double LcsTokenRatio(std::string_view candidate, std::string_view sentence) {
  const std::vector<std::string> target = TokenStrings(sentence);
  if (target.empty()) return 0.0;
  const std::vector<std::string> tokens = TokenStrings(candidate);
  return static_cast<double>(LcsLength(tokens, target)) / static_cast<double>(target.size());
}

bool SentenceIncluded(std::string_view summary, std::string_view sentence, double threshold) {
  if (TokenStrings(sentence).empty()) return false;
  for (const std::string& s : SegmentSentences(summary)) {
    if (LcsTokenRatio(s, sentence) >= threshold) return true;
  }
  return false;
}

bool LeadIncluded(std::string_view summary, const LeadTarget& lead, double threshold) {
  return std::any_of(lead.sentences.begin(), lead.sentences.end(),
                     [&](const std::string& s) { return SentenceIncluded(summary, s, threshold); });
}

absl::StatusOr<ExclusionReport> PercentageExclusion(std::span<const SummaryAndLead> results,
                                                    double threshold) {
  if (results.empty()) return absl::InvalidArgumentError("no summaries to evaluate");
  ExclusionReport report;
  report.n = results.size();
  for (const auto& [summary, lead] : results) {
    const bool excluded = !LeadIncluded(summary.summary, lead, threshold);
    report.excluded += excluded ? 1 : 0;
    report.per_cluster.push_back({.cluster_id = summary.cluster_id, .excluded = excluded});
  }
  report.percentage_exclusion =
      static_cast<double>(report.excluded) / static_cast<double>(report.n);
  // 1 - x makes the pair sum to exactly 1 in binary floating point.
  report.percentage_inclusion = 1.0 - report.percentage_exclusion;
  return report;
}

PrfScore MakePrf(double overlap, double candidate_total, double reference_total) {
  PrfScore s;
  s.precision = candidate_total > 0 ? overlap / candidate_total : 0.0;
  s.recall = reference_total > 0 ? overlap / reference_total : 0.0;
  s.f1 = s.precision + s.recall > 0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

PrfScore RougeN(std::span<const std::string> candidate, std::span<const std::string> reference,
                int n) {
  const auto cand = CountNgrams(candidate, n);
  const auto ref = CountNgrams(reference, n);
  double overlap = 0.0;
  for (const auto& [gram, count] : cand) {
    const auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  const double cand_total =
      candidate.size() >= static_cast<size_t>(n) ? candidate.size() - n + 1 : 0;
  const double ref_total =
      reference.size() >= static_cast<size_t>(n) ? reference.size() - n + 1 : 0;
  return MakePrf(overlap, cand_total, ref_total);
}

PrfScore RougeLcs(std::span<const std::string> candidate, std::span<const std::string> reference) {
  return MakePrf(static_cast<double>(LcsLength(candidate, reference)),
                 static_cast<double>(candidate.size()), static_cast<double>(reference.size()));
}

RougeScores Rouge(std::string_view candidate, std::string_view reference) {
  const std::vector<std::string> c = TokenStrings(candidate);
  const std::vector<std::string> r = TokenStrings(reference);
  return {.rouge1 = RougeN(c, r, 1), .rouge2 = RougeN(c, r, 2), .rougeL = RougeLcs(c, r)};
}

RobustnessQuotient ComputeRobustnessQuotient(const RougeScores& before, const RougeScores& after) {
  return {.rouge1 = after.rouge1.f1 - before.rouge1.f1,
          .rouge2 = after.rouge2.f1 - before.rouge2.f1,
          .rougeL = after.rougeL.f1 - before.rougeL.f1};
}

absl::StatusOr<ExtractivenessReport> Extractiveness(std::string_view summary,
                                                    const DocumentCluster& cluster,
                                                    const TfidfModel& model, double threshold) {
  const std::vector<std::string> summary_sentences = SegmentSentences(summary);
  if (summary_sentences.empty()) return absl::InvalidArgumentError("summary has no sentences");
  std::vector<SparseVector> sources;
  for (const Document& d : cluster.documents) {
    for (const std::string& s : d.sentences) sources.push_back(model.Vectorize(s));
  }
  ExtractivenessReport report;
  for (const std::string& s : summary_sentences) {
    const SparseVector v = model.Vectorize(s);
    double best = 0.0;
    for (const SparseVector& src : sources) best = std::max(best, SparseCosine(v, src));
    report.per_sentence_max_sim.push_back(best);
  }
  // Summed in sorted order so the mean does not depend on sentence order.
  std::vector<double> sorted = report.per_sentence_max_sim;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (double x : sorted) total += x;
  report.mean = total / static_cast<double>(sorted.size());
  report.is_extractive = report.mean >= threshold;
  return report;
}

}  // namespace sumrobust
