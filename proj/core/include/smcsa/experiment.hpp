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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smcsa/bspline.hpp"
#include "smcsa/constraints.hpp"
#include "smcsa/dataset.hpp"
#include "smcsa/datasets.hpp"
#include "smcsa/loss.hpp"
#include "smcsa/optimizer.hpp"
#include "smcsa/rational.hpp"
#include "smcsa/starts.hpp"
#include "smcsa/summary.hpp"

namespace smcsa {

enum class ModelFamily {
  Rational,
  BSpline,
  /// minimize (x - target)^2 subject to x >= lower; no data.
  BoundaryToy,
};

enum class Algorithm { SmcSa, MultiStartSa };

std::string to_string(ModelFamily family);
std::string to_string(Algorithm algorithm);

struct ModelSpec {
  ModelFamily family = ModelFamily::Rational;
  RationalModel rational;
  int spline_degree = 2;
  std::size_t spline_basis = 7;
  double toy_target = 2.0;
  double toy_lower = 3.0;
};

struct ConstraintSpec {
  /// No direction means unconstrained (continuity is still enforced for
  /// rational models).
  std::optional<MonotoneDirection> direction = MonotoneDirection::Increasing;
  /// Defaults to [min x, max x].
  std::optional<Interval> interval;
  double root_tol = kDefaultRootTolerance;
};

struct DatasetSpec {
  /// ht0, ht1, lidar_surrogate or csv.
  std::string source = "ht0";
  std::uint64_t seed = kCanonicalDataSeed;
  std::filesystem::path path;
  std::string x_column = "x";
  std::string y_column = "y";
  ScaleMode x_scale = ScaleMode::None;
  ScaleMode y_scale = ScaleMode::None;
};

struct StartSpec {
  /// Crude estimate when absent (rational: linearized OLS; spline:
  /// J, J-1, ..., 1 for decreasing and the reverse for increasing).
  std::optional<std::vector<double>> origin;
  double scale = 2.0;
  std::size_t max_attempts = 100000;
  /// Distinct states drawn; 0 means one per particle. The set is tiled up
  /// to the particle count.
  std::size_t distinct = 0;
};

struct AlgorithmSpec {
  std::string label;
  Algorithm algorithm = Algorithm::SmcSa;
  CoolingSchedule schedule;
  ProposalConfig proposal;
  ResamplingScheme resampling = ResamplingScheme::Multinomial;
  std::size_t particles = 1000;
  std::size_t iterations = 1000;
  /// Overrides StartSpec::distinct for this algorithm when nonzero.
  std::size_t distinct_starts = 0;

  /// Defaults used for the benchmark tables: logarithm pairs decay 0.998
  /// with N = 1000 and 3000 iterations, reciprocal pairs decay 0.97 with
  /// N = 3000 (1000 distinct starts, each used 3 times) and 1000 iterations.
  /// Both use a 2-point proposal with sigma0 = 1.
  static AlgorithmSpec table_defaults(Algorithm algorithm, CoolingSchedule::Kind schedule);
};

struct ExperimentSpec {
  std::string name = "experiment";
  ModelSpec model;
  LossSpec loss;
  ConstraintSpec constraint;
  DatasetSpec dataset;
  StartSpec start;
  std::vector<AlgorithmSpec> algorithms;
  std::size_t replications = 1;
  std::uint64_t seed = 1;
  double conv_threshold_pct = 1.0;
  unsigned threads = 1;

  /// Throws InvalidInput describing the first inconsistency.
  void validate() const;
};

/// Everything needed to run an optimizer on one configured problem.
struct FittingProblem {
  Dataset data;
  Problem problem;
  StateVector origin;
  /// Interval on which the shape constraint is checked.
  Interval interval;
  /// Spline problems only.
  std::optional<BSplineBasis> basis;
  std::optional<Eigen::MatrixXd> design;
};

Dataset load_dataset(const DatasetSpec& spec);

/// Loads data and assembles loss, indicator and starting origin.
FittingProblem build_fitting_problem(const ExperimentSpec& spec);

/// Seeds for replication r: starts are shared by all algorithms.
std::uint64_t start_seed(std::uint64_t master, std::size_t replication);
std::uint64_t run_seed(std::uint64_t master, std::size_t replication);

/// Starting states for replication r, sized for `particles`. `distinct`
/// overrides spec.start.distinct when nonzero.
std::vector<StateVector> make_starts(const ExperimentSpec& spec, const FittingProblem& fp,
                                     std::size_t replication, std::size_t particles,
                                     std::size_t distinct = 0);

/// Runs one replication of one algorithm.
RunResult run_replication(const ExperimentSpec& spec, const FittingProblem& fp,
                          const AlgorithmSpec& algorithm, std::size_t replication,
                          unsigned threads, const RunOptions& base_options = {});

struct ReplicationOutcome {
  std::size_t algorithm = 0;
  std::size_t replication = 0;
  std::optional<RunResult> result;
  std::string error;
};

struct BenchmarkResult {
  std::vector<ReplicationOutcome> outcomes;
  std::vector<SummaryRow> rows;
};

/// Every algorithm times every replication. Replications run in parallel
/// when spec.threads > 1; outcomes are ordered by (algorithm, replication)
/// regardless. Failed replications are recorded and left out of the rows.
/// `on_done` is called once per finished replication, serialized.
BenchmarkResult run_benchmark(
    const ExperimentSpec& spec,
    const std::function<void(const ReplicationOutcome&)>& on_done = {});

}  // namespace smcsa
