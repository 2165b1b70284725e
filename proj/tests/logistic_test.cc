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
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "sumrobust/gradient_dump.h"
#include "sumrobust/influence.h"

namespace sumrobust {
namespace {

// Objective gradient written out independently of the library.
std::vector<double> ObjectiveGradient(const Matrix& x, const std::vector<int>& y, double reg,
                                      const std::vector<double>& w) {
  std::vector<double> g(w.size());
  for (size_t j = 0; j < w.size(); ++j) g[j] = reg * w[j];
  for (size_t i = 0; i < x.size(); ++i) {
    double z = 0.0;
    for (size_t j = 0; j < w.size(); ++j) z += w[j] * x[i][j];
    const double p = 1.0 / (1.0 + std::exp(-z));
    for (size_t j = 0; j < w.size(); ++j) g[j] += (p - y[i]) * x[i][j];
  }
  return g;
}

TEST(LogisticTest, ProblemShapeAndDeterminism) {
  const LogisticProblem a = MakeLogisticProblem(20, 4, 5, 3);
  const LogisticProblem b = MakeLogisticProblem(20, 4, 5, 3);
  ASSERT_EQ(a.train_x.size(), 20u);
  ASSERT_EQ(a.test_x.size(), 5u);
  EXPECT_EQ(a.train_x, b.train_x);
  EXPECT_EQ(a.train_y, b.train_y);
  for (const auto& row : a.train_x) {
    ASSERT_EQ(row.size(), 4u);
    EXPECT_EQ(row.back(), 1.0);
  }
  for (int y : a.train_y) EXPECT_TRUE(y == 0 || y == 1);
  EXPECT_NE(MakeLogisticProblem(20, 4, 5, 4).train_x, a.train_x);
}

TEST(LogisticTest, SymmetricDataFitsZero) {
  const Matrix x = {{1.0}, {1.0}};
  const std::vector<int> y = {1, 0};
  auto fit = FitLogistic(x, y, 0.5);
  ASSERT_TRUE(fit.ok());
  EXPECT_NEAR(fit->w[0], 0.0, 1e-12);
  EXPECT_NEAR(MeanLogLoss(fit->w, x, y), std::log(2.0), 1e-12);
}

TEST(LogisticTest, FitReachesStationaryPoint) {
  const LogisticProblem p = MakeLogisticProblem(40, 5, 10, 21);
  auto fit = FitLogistic(p.train_x, p.train_y, 1.0);
  ASSERT_TRUE(fit.ok()) << fit.status();
  const std::vector<double> g = ObjectiveGradient(p.train_x, p.train_y, 1.0, fit->w);
  double norm = 0.0;
  for (double v : g) norm += v * v;
  EXPECT_LE(std::sqrt(norm), 1e-7);
}

TEST(LogisticTest, Errors) {
  EXPECT_FALSE(FitLogistic({}, {}, 1.0).ok());
  EXPECT_FALSE(FitLogistic({{1.0}}, std::vector<int>{1}, 0.0).ok());
  EXPECT_EQ(FitLogistic({{1.0}, {2.0}}, std::vector<int>{1, 0}, 1.0, std::nullopt, 1e-300, 3)
                .status()
                .code(),
            absl::StatusCode::kDeadlineExceeded);
  EXPECT_FALSE(LooOracle(MakeLogisticProblem(1, 3, 2, 1), 1.0).ok());
  EXPECT_FALSE(LooOracle(MakeLogisticProblem(kMaxLooRows + 1, 3, 2, 1), 1.0).ok());
  EXPECT_FALSE(LooOracle(MakeLogisticProblem(5, kMaxLooDim + 1, 2, 1), 1.0).ok());
}

TEST(LogisticTest, GradientDumpRowsMatchFiniteDifferences) {
  const LogisticProblem p = MakeLogisticProblem(6, 3, 2, 5);
  const std::vector<double> w = {0.3, -0.2, 0.1};
  const GradientDump dump = LogisticGradientDump(p, w);
  ASSERT_TRUE(ValidateDump(dump).ok());
  EXPECT_EQ(dump.train_ids.front(), "row-0");
  EXPECT_EQ(dump.train_ids.back(), "row-5");
  const double h = 1e-6;
  for (size_t i = 0; i < p.train_x.size(); ++i) {
    for (size_t j = 0; j < w.size(); ++j) {
      std::vector<double> up = w, down = w;
      up[j] += h;
      down[j] -= h;
      const Matrix row = {p.train_x[i]};
      const std::vector<int> label = {p.train_y[i]};
      const double fd = (MeanLogLoss(up, row, label) - MeanLogLoss(down, row, label)) / (2 * h);
      EXPECT_NEAR(dump.train_row(i)[j], fd, 1e-5);
    }
  }
}

TEST(LogisticTest, LooDeltasTrackExactInfluence) {
  const LogisticProblem p = MakeLogisticProblem(30, 4, 20, 2);
  const double reg = 1.0;
  auto deltas = LooOracle(p, reg);
  ASSERT_TRUE(deltas.ok()) << deltas.status();
  auto fit = FitLogistic(p.train_x, p.train_y, reg);
  ASSERT_TRUE(fit.ok());
  auto scores = ExactScores(LogisticGradientDump(p, fit->w));
  ASSERT_TRUE(scores.ok());
  std::vector<double> negated;
  for (double s : scores->values) negated.push_back(-s);
  EXPECT_GE(SpearmanCorrelation(*deltas, negated), 0.8);
}

}  // namespace
}  // namespace sumrobust
