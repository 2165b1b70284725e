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

#ifndef SUMROBUST_LOGISTIC_H_
#define SUMROBUST_LOGISTIC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "sumrobust/gradient_dump.h"

namespace sumrobust {

inline constexpr size_t kMaxLooRows = 200;
inline constexpr size_t kMaxLooDim = 20;
inline constexpr double kLooGradientTolerance = 1e-8;

using Matrix = std::vector<std::vector<double>>;

// Binary labels in {0, 1}.
struct LogisticProblem {
  Matrix train_x;
  std::vector<int> train_y;
  Matrix test_x;
  std::vector<int> test_y;
};

// Gaussian features with a constant last column; labels drawn from a logistic
// model with Gaussian true weights.
LogisticProblem MakeLogisticProblem(size_t n_train, size_t d, size_t n_test, uint64_t seed);

struct LogisticFit {
  std::vector<double> w;
  int iterations = 0;
  double gradient_norm = 0.0;
};

// Minimizes sum_i logloss_i(w) + (reg / 2) |w|^2 by full-batch gradient
// descent with step 1 / (trace(X^T X) / 4 + reg).
absl::StatusOr<LogisticFit> FitLogistic(const Matrix& x, std::span<const int> y, double reg,
                                        std::optional<std::vector<double>> warm_start = {},
                                        double tolerance = kLooGradientTolerance,
                                        int max_iterations = 2'000'000);

double MeanLogLoss(std::span<const double> w, const Matrix& x, std::span<const int> y);

// delta(k) = test loss after retraining without row k minus full-model test loss.
absl::StatusOr<std::vector<double>> LooOracle(const LogisticProblem& problem, double reg);

// Per-example log-loss gradients at w as a single-layer dump with ids "row-<k>".
GradientDump LogisticGradientDump(const LogisticProblem& problem, std::span<const double> w);

}  // namespace sumrobust

#endif  // SUMROBUST_LOGISTIC_H_
