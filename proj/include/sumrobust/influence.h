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

#ifndef SUMROBUST_INFLUENCE_H_
#define SUMROBUST_INFLUENCE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/gradient_dump.h"

namespace sumrobust {

inline constexpr size_t kMaxExactDim = 512;

struct InfluenceConfig {
  // lambda_l = damping_scale * mean squared gradient norm / d_l.
  double damping_scale = 0.1;
  int workers = 1;
};

struct InfluenceScores {
  std::vector<std::string> train_ids;  // dump row order
  std::vector<double> values;          // aligned with train_ids
  // Ids by descending |score|, ties by id.
  std::vector<std::string> ranking;

  double ScoreOf(std::string_view id) const;
};

std::vector<std::string> RankByMagnitude(std::span<const std::string> ids,
                                         std::span<const double> values);

// Per-layer damping lambda_l of the dump.
absl::StatusOr<std::vector<double>> LayerDamping(const GradientDump& dump,
                                                 const InfluenceConfig& config);

// Closed-form per-layer inverse built from rank-one Sherman-Morrison terms.
absl::StatusOr<InfluenceScores> DatainfScores(const GradientDump& dump,
                                              const InfluenceConfig& config = {});

// Dense solve of (G^T G / n + lambda_l I) per layer; refuses dumps wider than
// kMaxExactDim.
absl::StatusOr<InfluenceScores> ExactScores(const GradientDump& dump,
                                            const InfluenceConfig& config = {});

absl::StatusOr<std::vector<std::string>> SelectInfluential(const InfluenceScores& scores, size_t k);

// Pearson correlation of average ranks.
double SpearmanCorrelation(std::span<const double> a, std::span<const double> b);

}  // namespace sumrobust

#endif  // SUMROBUST_INFLUENCE_H_
