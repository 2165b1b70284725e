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

#ifndef SUMROBUST_REPORT_H_
#define SUMROBUST_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/perturb.h"

namespace sumrobust {

struct RougeF1 {
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;

  friend bool operator==(const RougeF1&, const RougeF1&) = default;
};

struct AttackRow {
  PerturbationKind attack = PerturbationKind::kCI;
  // Clusters evaluated after the attack and clusters that failed.
  size_t n = 0;
  size_t failures = 0;
  // Lead-sentence inclusion in percent.
  double inclusion_before = 0.0;
  double inclusion_after = 0.0;
  RougeF1 rouge_before;
  RougeF1 rouge_after;
  RougeF1 rouge_delta;

  friend bool operator==(const AttackRow&, const AttackRow&) = default;
};

struct CampaignReport {
  std::string backend_id;
  uint64_t seed = 0;
  std::vector<AttackRow> rows;

  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;
};

enum class ReportFormat { kTable, kCsv };

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name);

// One row per attack; doubles printed with 17 significant digits.
std::string RenderCsv(const CampaignReport& report);
absl::StatusOr<CampaignReport> ParseCsv(std::string_view csv);

// Backend, Before, then one column per perturbation kind in Table order.
std::string RenderTable(const CampaignReport& report);

std::string RenderReport(const CampaignReport& report, ReportFormat format);

}  // namespace sumrobust

#endif  // SUMROBUST_REPORT_H_
