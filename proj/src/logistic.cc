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

#include "sumrobust/logistic.h"

#include <cmath>

#include "fmt/format.h"
#include "sumrobust/rng.h"
#include "sumrobust/status_macros.h"

namespace sumrobust {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(-z)) without overflow.
double Softplus(double z) {
  return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
}

double LogLoss(std::span<const double> w, std::span<const double> x, int y) {
  const double z = Dot(w, x);
  return y == 1 ? Softplus(z) : Softplus(-z);
}

// Objective gradient with the rows in skip excluded.
void Gradient(const Matrix& x, std::span<const int> y, double reg, std::span<const double> w,
              std::optional<size_t> skip, std::vector<double>& grad) {
  for (size_t j = 0; j < w.size(); ++j) grad[j] = reg * w[j];
  for (size_t i = 0; i < x.size(); ++i) {
    if (skip == i) continue;
    const double r = Sigmoid(Dot(w, x[i])) - y[i];
    for (size_t j = 0; j < w.size(); ++j) grad[j] += r * x[i][j];
  }
}

absl::StatusOr<LogisticFit> Fit(const Matrix& x, std::span<const int> y, double reg,
                                std::optional<size_t> skip, std::vector<double> w, double tolerance,
                                int max_iterations) {
  double trace = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (skip != i) trace += Dot(x[i], x[i]);
  }
  const double step = 1.0 / (0.25 * trace + reg);
  std::vector<double> grad(w.size());
  LogisticFit fit;
  for (int it = 0; it <= max_iterations; ++it) {
    Gradient(x, y, reg, w, skip, grad);
    const double norm = std::sqrt(Dot(grad, grad));
    if (norm <= tolerance) {
      fit.w = std::move(w);
      fit.iterations = it;
      fit.gradient_norm = norm;
      return fit;
    }
    for (size_t j = 0; j < w.size(); ++j) w[j] -= step * grad[j];
  }
  return absl::DeadlineExceededError(
      fmt::format("logistic regression did not converge in {} iterations", max_iterations));
}

}  // namespace

LogisticProblem MakeLogisticProblem(size_t n_train, size_t d, size_t n_test, uint64_t seed) {
  CounterRng rng(seed);
  std::vector<double> w_true(d);
  for (double& w : w_true) w = rng.Normal();
  auto sample = [&](Matrix& x, std::vector<int>& y, size_t n) {
    for (size_t i = 0; i < n; ++i) {
      std::vector<double> row(d, 1.0);
      for (size_t j = 0; j + 1 < d; ++j) row[j] = rng.Normal();
      y.push_back(rng.UniformDouble() < Sigmoid(Dot(w_true, row)) ? 1 : 0);
      x.push_back(std::move(row));
    }
  };
  LogisticProblem problem;
  sample(problem.train_x, problem.train_y, n_train);
  sample(problem.test_x, problem.test_y, n_test);
  return problem;
}

absl::StatusOr<LogisticFit> FitLogistic(const Matrix& x, std::span<const int> y, double reg,
                                        std::optional<std::vector<double>> warm_start,
                                        double tolerance, int max_iterations) {
  if (x.empty() || x.size() != y.size()) {
    return absl::InvalidArgumentError("features and labels must be non-empty and aligned");
  }
  if (!(reg > 0.0)) return absl::InvalidArgumentError("regularization must be positive");
  std::vector<double> w = warm_start.value_or(std::vector<double>(x[0].size(), 0.0));
  return Fit(x, y, reg, std::nullopt, std::move(w), tolerance, max_iterations);
}

double MeanLogLoss(std::span<const double> w, const Matrix& x, std::span<const int> y) {
  if (x.empty()) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i < x.size(); ++i) total += LogLoss(w, x[i], y[i]);
  return total / static_cast<double>(x.size());
}

absl::StatusOr<std::vector<double>> LooOracle(const LogisticProblem& problem, double reg) {
  const size_t n = problem.train_x.size();
  if (n < 2 || n > kMaxLooRows) {
    return absl::InvalidArgumentError(
        fmt::format("leave-one-out oracle needs 2..{} rows, got {}", kMaxLooRows, n));
  }
  const size_t d = problem.train_x[0].size();
  if (d > kMaxLooDim) {
    return absl::InvalidArgumentError(
        fmt::format("leave-one-out oracle supports at most {} features", kMaxLooDim));
  }
  ASSIGN_OR_RETURN(LogisticFit full, FitLogistic(problem.train_x, problem.train_y, reg));
  const double base = MeanLogLoss(full.w, problem.test_x, problem.test_y);
  std::vector<double> deltas(n);
  for (size_t k = 0; k < n; ++k) {
    ASSIGN_OR_RETURN(LogisticFit without, Fit(problem.train_x, problem.train_y, reg, k, full.w,
                                              kLooGradientTolerance, 2'000'000));
    deltas[k] = MeanLogLoss(without.w, problem.test_x, problem.test_y) - base;
  }
  return deltas;
}

GradientDump LogisticGradientDump(const LogisticProblem& problem, std::span<const double> w) {
  GradientDump dump;
  const size_t d = w.size();
  dump.n_train = static_cast<uint32_t>(problem.train_x.size());
  dump.n_test = static_cast<uint32_t>(problem.test_x.size());
  dump.layer_dims = {static_cast<uint32_t>(d)};
  auto append = [&](const Matrix& x, std::span<const int> y, std::vector<float>& out) {
    for (size_t i = 0; i < x.size(); ++i) {
      const double r = Sigmoid(Dot(w, x[i])) - y[i];
      for (size_t j = 0; j < d; ++j) out.push_back(static_cast<float>(r * x[i][j]));
    }
  };
  append(problem.train_x, problem.train_y, dump.train_grads);
  append(problem.test_x, problem.test_y, dump.test_grads);
  for (size_t i = 0; i < problem.train_x.size(); ++i)
    dump.train_ids.push_back(fmt::format("row-{}", i));
  return dump;
}

}  // namespace sumrobust
