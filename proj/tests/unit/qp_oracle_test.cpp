// Copyright 2026 The smcsa Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "smcsa/bspline.hpp"
#include "smcsa/errors.hpp"
#include "smcsa/least_squares.hpp"
#include "smcsa/qp_oracle.hpp"

namespace smcsa {
namespace {

TEST(QpOracle, PoolsAdjacentViolators) {
  // Identity design: the monotone fit is the isotonic regression of y.
  const Eigen::MatrixXd design = Eigen::MatrixXd::Identity(2, 2);
  Eigen::VectorXd y(2);
  y << 1.0, 2.0;
  const OracleSolution s = qp_oracle_monotone_spline(design, y, MonotoneDirection::Decreasing);
  EXPECT_NEAR(s.coefficients(0), 1.5, 1e-12);
  EXPECT_NEAR(s.coefficients(1), 1.5, 1e-12);
  EXPECT_NEAR(s.objective, 0.5, 1e-12);
  EXPECT_EQ(s.active_sets_tried, 2u);
}

TEST(QpOracle, IsotonicPoolingOnLongerSequence) {
  const Eigen::MatrixXd design = Eigen::MatrixXd::Identity(5, 5);
  Eigen::VectorXd y(5);
  y << 5.0, 3.0, 4.0, 1.0, 2.0;
  const OracleSolution s = qp_oracle_monotone_spline(design, y, MonotoneDirection::Decreasing);
  // Pool-adjacent-violators by hand: (5, 3.5, 3.5, 1.5, 1.5).
  Eigen::VectorXd expected(5);
  expected << 5.0, 3.5, 3.5, 1.5, 1.5;
  EXPECT_LT((s.coefficients - expected).norm(), 1e-12);
  EXPECT_NEAR(s.objective, 1.0, 1e-12);
}

TEST(QpOracle, UnconstrainedOptimumWhenAlreadyMonotone) {
  const BSplineBasis b = BSplineBasis::equidistant(2, 6, 0.0, 1.0);
  std::vector<double> x;
  Eigen::VectorXd y(40);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (int i = 0; i < 40; ++i) {
    x.push_back(i / 39.0);
    y(i) = -3.0 * x.back() + noise(rng);
  }
  const Eigen::MatrixXd design = design_matrix(b, x);
  const Eigen::VectorXd ols = ols_estimate(design, y);
  const OracleSolution s = qp_oracle_monotone_spline(design, y, MonotoneDirection::Decreasing);
  EXPECT_LT((s.coefficients - ols).norm(), 1e-9);
  EXPECT_EQ(s.active_sets_tried, 32u);
}

TEST(QpOracle, DirectionIsRespected) {
  const Eigen::MatrixXd design = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXd y(3);
  y << 3.0, 2.0, 1.0;
  const OracleSolution up = qp_oracle_monotone_spline(design, y, MonotoneDirection::Increasing);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(up.coefficients(j), 2.0, 1e-12);
  const OracleSolution down = qp_oracle_monotone_spline(design, y, MonotoneDirection::Decreasing);
  EXPECT_NEAR(down.objective, 0.0, 1e-12);
}

TEST(QpOracle, RejectsBadSizes) {
  EXPECT_THROW(qp_oracle_monotone_spline(Eigen::MatrixXd::Identity(1, 1), Eigen::VectorXd::Ones(1),
                                         MonotoneDirection::Decreasing),
               InvalidInput);
  EXPECT_THROW(qp_oracle_monotone_spline(Eigen::MatrixXd::Identity(21, 21), Eigen::VectorXd::Ones(21),
                                         MonotoneDirection::Decreasing),
               InvalidInput);
}

}  // namespace
}  // namespace smcsa
