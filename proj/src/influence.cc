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

#include "sumrobust/influence.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "fmt/format.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Layer l of every train row as an n x d_l matrix.
MatrixXd TrainLayer(const GradientDump& dump, size_t offset, size_t dim) {
  MatrixXd g(dump.n_train, dim);
  for (size_t i = 0; i < dump.n_train; ++i) {
    const std::span<const float> row = dump.train_row(i);
    for (size_t j = 0; j < dim; ++j) g(i, j) = row[offset + j];
  }
  return g;
}

VectorXd MeanTestLayer(const GradientDump& dump, size_t offset, size_t dim) {
  VectorXd v = VectorXd::Zero(dim);
  for (size_t i = 0; i < dump.n_test; ++i) {
    const std::span<const float> row = dump.test_row(i);
    for (size_t j = 0; j < dim; ++j) v(j) += row[offset + j];
  }
  return v / static_cast<double>(dump.n_test);
}

absl::Status CheckShape(const GradientDump& dump) {
  if (dump.n_train < 1) return absl::InvalidArgumentError("influence needs at least 1 train row");
  if (dump.n_test < 1) return absl::InvalidArgumentError("influence needs at least 1 test row");
  return ValidateDump(dump);
}

InfluenceScores Finish(const GradientDump& dump, std::vector<double> values) {
  InfluenceScores scores;
  scores.train_ids = dump.train_ids;
  scores.values = std::move(values);
  scores.ranking = RankByMagnitude(scores.train_ids, scores.values);
  return scores;
}

std::vector<double> AverageRanks(std::span<const double> x) {
  std::vector<size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double InfluenceScores::ScoreOf(std::string_view id) const {
  for (size_t i = 0; i < train_ids.size(); ++i) {
    if (train_ids[i] == id) return values[i];
  }
  return 0.0;
}

std::vector<std::string> RankByMagnitude(std::span<const std::string> ids,
                                         std::span<const double> values) {
  std::vector<size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const double ma = std::abs(values[a]);
    const double mb = std::abs(values[b]);
    return ma != mb ? ma > mb : ids[a] < ids[b];
  });
  std::vector<std::string> ranking;
  ranking.reserve(order.size());
  for (size_t i : order) ranking.push_back(ids[i]);
  return ranking;
}

absl::StatusOr<std::vector<double>> LayerDamping(const GradientDump& dump,
                                                 const InfluenceConfig& config) {
  if (!(config.damping_scale > 0.0)) {
    return absl::InvalidArgumentError("damping_scale must be positive");
  }
  const std::vector<size_t> offsets = dump.layer_offsets();
  std::vector<double> lambdas;
  for (size_t l = 0; l < dump.layer_dims.size(); ++l) {
    const size_t dim = dump.layer_dims[l];
    double total = 0.0;
    for (size_t i = 0; i < dump.n_train; ++i) {
      const std::span<const float> row = dump.train_row(i);
      for (size_t j = 0; j < dim; ++j) {
        const double g = row[offsets[l] + j];
        total += g * g;
      }
    }
    if (total == 0.0) {
      return absl::FailedPreconditionError(
          fmt::format("degenerate layer {}: all training gradients are zero", l));
    }
    lambdas.push_back(config.damping_scale * total /
                      (static_cast<double>(dump.n_train) * static_cast<double>(dim)));
  }
  return lambdas;
}

absl::StatusOr<InfluenceScores> DatainfScores(const GradientDump& dump,
                                              const InfluenceConfig& config) {
  RETURN_IF_ERROR(CheckShape(dump));
  ASSIGN_OR_RETURN(std::vector<double> lambdas, LayerDamping(dump, config));
  const std::vector<size_t> offsets = dump.layer_offsets();
  const double n = static_cast<double>(dump.n_train);

  std::vector<double> values(dump.n_train, 0.0);
  for (size_t l = 0; l < dump.layer_dims.size(); ++l) {
    const size_t dim = dump.layer_dims[l];
    const double lambda = lambdas[l];
    const MatrixXd g = TrainLayer(dump, offsets[l], dim);
    const VectorXd v = MeanTestLayer(dump, offsets[l], dim);

    // Row coefficients are independent; the weighted sum runs in row order so
    // the result does not depend on the worker count.
    std::vector<double> coeff(dump.n_train);
    ParallelFor(dump.n_train, config.workers,
                [&](size_t i) { coeff[i] = g.row(i).dot(v) / (lambda + g.row(i).squaredNorm()); });
    VectorXd correction = VectorXd::Zero(dim);
    for (size_t i = 0; i < dump.n_train; ++i) correction += coeff[i] * g.row(i).transpose();
    const VectorXd r = (v - correction / n) / lambda;

    ParallelFor(dump.n_train, config.workers, [&](size_t i) { values[i] -= g.row(i).dot(r); });
  }
  return Finish(dump, std::move(values));
}

absl::StatusOr<InfluenceScores> ExactScores(const GradientDump& dump,
                                            const InfluenceConfig& config) {
  RETURN_IF_ERROR(CheckShape(dump));
  if (dump.total_dim() > kMaxExactDim) {
    return absl::FailedPreconditionError(
        fmt::format("exact influence needs a dense solve over {} dimensions (limit {}); use "
                    "DataInf scores instead",
                    dump.total_dim(), kMaxExactDim));
  }
  ASSIGN_OR_RETURN(std::vector<double> lambdas, LayerDamping(dump, config));
  const std::vector<size_t> offsets = dump.layer_offsets();
  const double n = static_cast<double>(dump.n_train);

  std::vector<double> values(dump.n_train, 0.0);
  for (size_t l = 0; l < dump.layer_dims.size(); ++l) {
    const size_t dim = dump.layer_dims[l];
    const MatrixXd g = TrainLayer(dump, offsets[l], dim);
    const VectorXd v = MeanTestLayer(dump, offsets[l], dim);
    MatrixXd h = g.transpose() * g / n;
    h.diagonal().array() += lambdas[l];
    const VectorXd x = h.ldlt().solve(v);
    const VectorXd contribution = g * x;
    for (size_t i = 0; i < dump.n_train; ++i) values[i] -= contribution(i);
  }
  return Finish(dump, std::move(values));
}

absl::StatusOr<std::vector<std::string>> SelectInfluential(const InfluenceScores& scores,
                                                           size_t k) {
  if (k > scores.ranking.size()) {
    return absl::InvalidArgumentError(
        fmt::format("k={} exceeds the {} training rows", k, scores.ranking.size()));
  }
  return std::vector<std::string>(scores.ranking.begin(), scores.ranking.begin() + k);
}

double SpearmanCorrelation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) return 0.0;
  const std::vector<double> ra = AverageRanks(a);
  const std::vector<double> rb = AverageRanks(b);
  const double mean = 0.5 * static_cast<double>(a.size() + 1);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - mean) * (rb[i] - mean);
    saa += (ra[i] - mean) * (ra[i] - mean);
    sbb += (rb[i] - mean) * (rb[i] - mean);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace sumrobust
