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

#include <cmath>

#include "smcsa/errors.hpp"
#include "smcsa/experiment.hpp"

namespace smcsa {
namespace {

AlgorithmSpec quick(Algorithm a, std::string label) {
  AlgorithmSpec s;
  s.label = std::move(label);
  s.algorithm = a;
  s.particles = 30;
  s.iterations = 20;
  s.proposal = ProposalConfig::k_point(2, 1.0, 0.97);
  return s;
}

TEST(Experiment, ValidateCatchesBadSpecs) {
  ExperimentSpec spec;
  EXPECT_THROW(spec.validate(), InvalidInput);  // no algorithms
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "a"));
  EXPECT_NO_THROW(spec.validate());
  spec.replications = 0;
  EXPECT_THROW(spec.validate(), InvalidInput);
  spec.replications = 1;
  spec.dataset.source = "nope";
  EXPECT_THROW(spec.validate(), InvalidInput);
  spec.dataset.source = "csv";
  EXPECT_THROW(spec.validate(), InvalidInput);
}

TEST(Experiment, RationalProblemOnHt0) {
  ExperimentSpec spec;
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "a"));
  const FittingProblem fp = build_fitting_problem(spec);
  EXPECT_EQ(fp.problem.dimension, 5u);
  EXPECT_EQ(fp.data.size(), 30u);
  EXPECT_EQ(fp.interval.lo, 0.0);
  EXPECT_DOUBLE_EQ(fp.interval.hi, 6.0);
  ASSERT_EQ(fp.origin.size(), 5u);
  EXPECT_TRUE(std::isfinite(fp.problem.evaluate(fp.origin)));
  // A flat line is monotone in both directions.
  EXPECT_TRUE(fp.problem.feasible(StateVector{1.0, 0.0, 0.0, 0.0, 0.0}));
  EXPECT_FALSE(fp.problem.feasible(StateVector{1.0, -1.0, 0.0, 0.0, 0.0}));
}

TEST(Experiment, SplineProblemOnLidarSurrogate) {
  ExperimentSpec spec;
  spec.model.family = ModelFamily::BSpline;
  spec.dataset.source = "lidar_surrogate";
  spec.constraint.direction = MonotoneDirection::Decreasing;
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "a"));
  const FittingProblem fp = build_fitting_problem(spec);
  ASSERT_TRUE(fp.basis && fp.design);
  EXPECT_EQ(fp.design->rows(), 221);
  EXPECT_EQ(fp.design->cols(), 7);
  EXPECT_EQ(fp.origin, (StateVector{7, 6, 5, 4, 3, 2, 1}));
  EXPECT_TRUE(fp.problem.feasible(fp.origin));
  // The Eigen residual matches a direct evaluation.
  double direct = 0.0;
  for (std::size_t i = 0; i < fp.data.size(); ++i) {
    const double r = fp.data.y[i] - fp.basis->spline(fp.origin.values(), fp.data.x[i]);
    direct += r * r;
  }
  EXPECT_NEAR(fp.problem.evaluate(fp.origin), direct, 1e-9 * direct);
}

TEST(Experiment, TukeyLossIsBounded) {
  ExperimentSpec spec;
  spec.dataset.source = "ht1";
  spec.loss = LossSpec::tukey(1.0);
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "a"));
  const FittingProblem fp = build_fitting_problem(spec);
  EXPECT_LE(fp.problem.evaluate(StateVector{1e6, 0, 0, 0, 0}), 30.0 / 6.0 + 1e-12);
}

TEST(Experiment, SeedsAreDistinctPerReplication) {
  EXPECT_NE(run_seed(1, 0), run_seed(1, 1));
  EXPECT_NE(start_seed(1, 0), run_seed(1, 0));
  EXPECT_EQ(run_seed(4, 2), run_seed(4, 2));
}

TEST(Experiment, DistinctStartsAreTiled) {
  ExperimentSpec spec;
  spec.model.family = ModelFamily::BoundaryToy;
  spec.start.distinct = 4;
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "a"));
  spec.algorithms.back().proposal = ProposalConfig::k_point(1, 1.0, 0.97);
  const FittingProblem fp = build_fitting_problem(spec);
  const auto s = make_starts(spec, fp, 0, 12);
  ASSERT_EQ(s.size(), 12u);
  for (std::size_t i = 4; i < 12; ++i) EXPECT_EQ(s[i], s[i % 4]);
}

TEST(Experiment, BenchmarkSharesBestAcrossRows) {
  ExperimentSpec spec;
  spec.model.family = ModelFamily::BoundaryToy;
  spec.replications = 3;
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "smc"));
  spec.algorithms.push_back(quick(Algorithm::MultiStartSa, "sa"));
  spec.algorithms.back().proposal = ProposalConfig::k_point(1, 1.0, 0.97);
  spec.algorithms.front().proposal = ProposalConfig::k_point(1, 1.0, 0.97);
  const BenchmarkResult r = run_benchmark(spec);
  ASSERT_EQ(r.outcomes.size(), 6u);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].label, "smc");
  EXPECT_EQ(r.rows[1].label, "sa");
  EXPECT_EQ(r.rows[0].conv_bound, r.rows[1].conv_bound);
  for (const auto& o : r.outcomes) EXPECT_TRUE(o.error.empty()) << o.error;
  // Threaded execution gives the same numbers.
  spec.threads = 2;
  const BenchmarkResult t = run_benchmark(spec);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(t.outcomes[i].result->best_loss, r.outcomes[i].result->best_loss);
  }
}

TEST(Experiment, BenchmarkRecordsFailures) {
  ExperimentSpec spec;
  spec.model.family = ModelFamily::BoundaryToy;
  spec.start.max_attempts = 1;
  spec.start.scale = 1e-12;
  spec.start.origin = std::vector<double>{0.0};  // infeasible origin, tiny scale
  spec.algorithms.push_back(quick(Algorithm::SmcSa, "smc"));
  spec.algorithms.back().proposal = ProposalConfig::k_point(1, 1.0, 0.97);
  const BenchmarkResult r = run_benchmark(spec);
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_FALSE(r.outcomes[0].error.empty());
  EXPECT_TRUE(r.rows.empty());
}

}  // namespace
}  // namespace smcsa
