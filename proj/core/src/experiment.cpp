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

#include "smcsa/experiment.hpp"

#include <algorithm>
#include <exception>
#include <memory>

#include <omp.h>

#include "smcsa/errors.hpp"

namespace smcsa {

std::string to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::Rational: return "rational";
    case ModelFamily::BSpline: return "bspline";
    case ModelFamily::BoundaryToy: return "boundary_toy";
  }
  return "unknown";
}

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::SmcSa ? "smcsa" : "multistart";
}

AlgorithmSpec AlgorithmSpec::table_defaults(Algorithm algorithm, CoolingSchedule::Kind schedule) {
  AlgorithmSpec a;
  a.algorithm = algorithm;
  if (schedule == CoolingSchedule::Kind::Logarithm) {
    a.schedule = CoolingSchedule::logarithm();
    a.proposal = ProposalConfig::k_point(2, 1.0, 0.998);
    a.particles = 1000;
    a.iterations = 3000;
  } else {
    a.schedule = CoolingSchedule::reciprocal(0.95);
    a.proposal = ProposalConfig::k_point(2, 1.0, 0.97);
    a.particles = 3000;
    a.iterations = 1000;
    a.distinct_starts = 1000;
  }
  a.label = to_string(algorithm) + "-" + to_string(schedule);
  return a;
}

namespace {

std::size_t model_dimension(const ModelSpec& m) {
  switch (m.family) {
    case ModelFamily::Rational: return m.rational.parameter_count();
    case ModelFamily::BSpline: return m.spline_basis;
    case ModelFamily::BoundaryToy: return 1;
  }
  return 0;
}

}  // namespace

void ExperimentSpec::validate() const {
  if (replications < 1) throw InvalidInput("replications must be at least 1");
  if (algorithms.empty()) throw InvalidInput("no algorithm configured");
  if (!(conv_threshold_pct >= 0.0)) throw InvalidInput("conv threshold must be non-negative");
  if (!(start.scale > 0.0)) throw InvalidInput("start scale must be positive");
  if (start.max_attempts < 1) throw InvalidInput("start max_attempts must be at least 1");
  if (loss.kind == LossSpec::Kind::TukeyBiweight && !(loss.c > 0.0)) {
    throw InvalidInput("Tukey cutoff c must be positive");
  }
  if (model.family == ModelFamily::BSpline &&
      (model.spline_degree < 0 || model.spline_basis <= static_cast<std::size_t>(model.spline_degree) ||
       model.spline_basis < 2)) {
    throw InvalidInput("spline needs num_basis > degree and num_basis >= 2");
  }
  const std::size_t d = model_dimension(model);
  if (start.origin && start.origin->size() != d) {
    throw InvalidInput("start origin has " + std::to_string(start.origin->size()) +
                       " coordinates, model has " + std::to_string(d));
  }
  for (const AlgorithmSpec& a : algorithms) {
    if (a.particles < 1) throw InvalidInput("algorithm '" + a.label + "': particles must be >= 1");
    if (a.iterations < 1) throw InvalidInput("algorithm '" + a.label + "': iterations must be >= 1");
    a.schedule.validate();
    a.proposal.validate(d);
  }
  if (model.family != ModelFamily::BoundaryToy) {
    const std::string& s = dataset.source;
    if (s != "ht0" && s != "ht1" && s != "lidar_surrogate" && s != "csv") {
      throw InvalidInput("unknown dataset source '" + s + "'");
    }
    if (s == "csv" && dataset.path.empty()) throw InvalidInput("csv dataset needs a path");
  }
}

Dataset load_dataset(const DatasetSpec& spec) {
  Dataset d;
  if (spec.source == "ht0") {
    d = gen_ht0(spec.seed);
  } else if (spec.source == "ht1") {
    d = contaminate_ht1(gen_ht0(spec.seed));
  } else if (spec.source == "lidar_surrogate") {
    d = gen_lidar_surrogate(spec.seed);
  } else if (spec.source == "csv") {
    d = load_dataset_csv(spec.path, spec.x_column, spec.y_column, spec.x_scale, spec.y_scale);
  } else {
    throw InvalidInput("unknown dataset source '" + spec.source + "'");
  }
  d.validate();
  if (d.size() == 0) throw DataError("dataset is empty");
  return d;
}

FittingProblem build_fitting_problem(const ExperimentSpec& spec) {
  spec.validate();
  FittingProblem fp;
  const ModelSpec& m = spec.model;

  if (m.family == ModelFamily::BoundaryToy) {
    const double target = m.toy_target;
    const double lower = m.toy_lower;
    fp.interval = Interval(lower, lower + 1.0);
    fp.problem.dimension = 1;
    fp.problem.loss = [target](std::span<const double> t) { return (t[0] - target) * (t[0] - target); };
    fp.problem.indicator = [lower](std::span<const double> t) { return t[0] >= lower; };
    fp.origin = spec.start.origin ? StateVector(*spec.start.origin) : StateVector{lower + 1.0};
    return fp;
  }

  fp.data = load_dataset(spec.dataset);
  const auto [x_lo, x_hi] = std::minmax_element(fp.data.x.begin(), fp.data.x.end());
  fp.interval = spec.constraint.interval.value_or(Interval(*x_lo, *x_hi));
  const auto data = std::make_shared<const Dataset>(fp.data);
  const LossSpec loss_spec = spec.loss;
  const auto direction = spec.constraint.direction;
  const double tol = spec.constraint.root_tol;
  const Interval interval = fp.interval;

  if (m.family == ModelFamily::Rational) {
    const RationalModel model = m.rational;
    fp.problem.dimension = model.parameter_count();
    fp.problem.loss = [model, data, loss_spec](std::span<const double> t) {
      return loss([&model](std::span<const double> th, double x) { return model(th, x); }, t,
                  *data, loss_spec);
    };
    if (direction) {
      fp.problem.indicator = [model, interval, dir = *direction, tol](std::span<const double> t) {
        return model.feasible(t, interval, dir, tol);
      };
    } else {
      fp.problem.indicator = [model, interval, tol](std::span<const double> t) {
        return has_no_roots_in(model.denominator(t), interval, tol);
      };
    }
    fp.origin = spec.start.origin ? StateVector(*spec.start.origin)
                                  : StateVector(rational_crude_estimate(fp.data, model));
    return fp;
  }

  // B-spline: the valid interval of the basis is exactly the data range.
  fp.basis = BSplineBasis::equidistant(m.spline_degree, m.spline_basis, *x_lo, *x_hi);
  fp.design = design_matrix(*fp.basis, fp.data.x);
  const auto design = std::make_shared<const Eigen::MatrixXd>(*fp.design);
  const auto y = std::make_shared<const Eigen::VectorXd>(
      Eigen::Map<const Eigen::VectorXd>(fp.data.y.data(), static_cast<Eigen::Index>(fp.data.size())));
  const std::size_t J = m.spline_basis;
  fp.problem.dimension = J;
  fp.problem.loss = [design, y, loss_spec](std::span<const double> t) {
    const Eigen::Map<const Eigen::VectorXd> beta(t.data(), static_cast<Eigen::Index>(t.size()));
    const Eigen::VectorXd residual = *y - *design * beta;
    if (loss_spec.kind == LossSpec::Kind::SquaredError) return residual.squaredNorm();
    double total = 0.0;
    for (Eigen::Index i = 0; i < residual.size(); ++i) total += rho(residual(i), loss_spec);
    return total;
  };
  if (direction) {
    fp.problem.indicator = [dir = *direction](std::span<const double> t) {
      return bspline_monotone_indicator(t, dir);
    };
  } else {
    fp.problem.indicator = [](std::span<const double>) { return true; };
  }
  if (spec.start.origin) {
    fp.origin = StateVector(*spec.start.origin);
  } else {
    fp.origin = StateVector(J);
    for (std::size_t j = 0; j < J; ++j) {
      const bool increasing = direction == MonotoneDirection::Increasing;
      fp.origin[j] = increasing ? static_cast<double>(j + 1) : static_cast<double>(J - j);
    }
  }
  return fp;
}

std::uint64_t start_seed(std::uint64_t master, std::size_t replication) {
  return derive_seed(master, replication, 0x57a27ULL);
}

std::uint64_t run_seed(std::uint64_t master, std::size_t replication) {
  return derive_seed(master, replication, 0x2a11ULL);
}

std::vector<StateVector> make_starts(const ExperimentSpec& spec, const FittingProblem& fp,
                                     std::size_t replication, std::size_t particles,
                                     std::size_t distinct) {
  if (distinct == 0) distinct = spec.start.distinct == 0 ? particles : spec.start.distinct;
  const StartSet set = gen_start_set(fp.origin, fp.problem.indicator, distinct, spec.start.scale,
                                     start_seed(spec.seed, replication), spec.start.max_attempts);
  return tile_states(set.states, particles);
}

RunResult run_replication(const ExperimentSpec& spec, const FittingProblem& fp,
                          const AlgorithmSpec& algorithm, std::size_t replication,
                          unsigned threads, const RunOptions& base_options) {
  const std::vector<StateVector> starts = make_starts(spec, fp, replication, algorithm.particles, algorithm.distinct_starts);
  RunOptions options = base_options;
  options.threads = threads;
  options.resampling = algorithm.resampling;
  const std::uint64_t seed = run_seed(spec.seed, replication);
  if (algorithm.algorithm == Algorithm::SmcSa) {
    return smcsa_run(fp.problem, starts, algorithm.schedule, algorithm.proposal,
                     algorithm.iterations, seed, options);
  }
  return multistart_sa_run(fp.problem, starts, algorithm.schedule, algorithm.proposal,
                           algorithm.iterations, seed, options);
}

BenchmarkResult run_benchmark(const ExperimentSpec& spec,
                              const std::function<void(const ReplicationOutcome&)>& on_done) {
  const FittingProblem fp = build_fitting_problem(spec);
  const std::size_t A = spec.algorithms.size();
  const std::size_t R = spec.replications;

  BenchmarkResult out;
  out.outcomes.resize(A * R);
  const bool outer_parallel = spec.threads != 1 && A * R > 1;
  const int outer_threads =
      spec.threads == 0 ? omp_get_max_threads() : static_cast<int>(spec.threads);
  const unsigned inner_threads = outer_parallel ? 1u : spec.threads;

#pragma omp parallel for num_threads(outer_threads) schedule(dynamic, 1) if (outer_parallel)
  for (std::size_t t = 0; t < A * R; ++t) {
    ReplicationOutcome& o = out.outcomes[t];
    o.algorithm = t / R;
    o.replication = t % R;
    try {
      o.result = run_replication(spec, fp, spec.algorithms[o.algorithm], o.replication,
                                 inner_threads);
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    if (on_done) {
#pragma omp critical(smcsa_benchmark_progress)
      on_done(o);
    }
  }

  std::optional<double> best;
  for (const ReplicationOutcome& o : out.outcomes) {
    if (o.result && (!best || o.result->best_loss < *best)) best = o.result->best_loss;
  }
  for (std::size_t a = 0; a < A; ++a) {
    std::vector<RunResult> runs;
    for (std::size_t r = 0; r < R; ++r) {
      const ReplicationOutcome& o = out.outcomes[a * R + r];
      if (o.result) runs.push_back(*o.result);
    }
    if (runs.empty()) continue;
    const AlgorithmSpec& alg = spec.algorithms[a];
    const std::string label = alg.label.empty() ? to_string(alg.algorithm) : alg.label;
    out.rows.push_back(summarize_runs(runs, spec.conv_threshold_pct, label, best));
  }
  return out;
}

}  // namespace smcsa
