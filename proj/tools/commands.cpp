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

#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "smcsa/errors.hpp"
#include "smcsa/experiment.hpp"
#include "smcsa/least_squares.hpp"
#include "smcsa/qp_oracle.hpp"

#ifndef SMCSA_VERSION
#define SMCSA_VERSION "unknown"
#endif

namespace smcsa::cli {

namespace {

using Json = nlohmann::ordered_json;

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("write to '" + path.string() + "' failed");
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

Json to_json(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

Json to_json(const Eigen::VectorXd& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

RunConfig load(const CommonOptions& options) {
  if (options.config.empty()) throw ConfigError("--config is required");
  RunConfig cfg = load_config(options.config);
  if (options.seed) cfg.spec.seed = *options.seed;
  return cfg;
}

std::string label_of(const AlgorithmSpec& a) {
  return a.label.empty() ? to_string(a.algorithm) : a.label;
}

Json algorithm_json(const AlgorithmSpec& a) {
  Json j;
  j["label"] = label_of(a);
  j["algorithm"] = to_string(a.algorithm);
  j["schedule"] = {{"kind", to_string(a.schedule.kind)}, {"alpha", a.schedule.alpha}};
  j["proposal"] = {{"kind", to_string(a.proposal.kind)},
                   {"k", a.proposal.k_points},
                   {"sigma0", a.proposal.sigma0},
                   {"decay", a.proposal.decay},
                   {"max_attempts", a.proposal.max_attempts}};
  j["resampling"] = to_string(a.resampling);
  j["particles"] = a.particles;
  j["iterations"] = a.iterations;
  j["distinct_starts"] = a.distinct_starts;
  return j;
}

}  // namespace

int cmd_gendata(const std::string& name, const CommonOptions& options) {
  const std::uint64_t seed = options.seed.value_or(kCanonicalDataSeed);
  Dataset d;
  if (name == "ht0") {
    d = gen_ht0(seed);
  } else if (name == "ht1") {
    d = contaminate_ht1(gen_ht0(seed));
  } else if (name == "lidar_surrogate") {
    d = gen_lidar_surrogate(seed);
  } else {
    throw ConfigError("unknown dataset '" + name + "' (expected ht0, ht1 or lidar_surrogate)");
  }
  std::ostringstream s;
  write_dataset_csv(s, d);
  write_text(options.out, s.str());
  if (!options.quiet && !options.out.empty()) {
    std::cerr << "wrote " << d.size() << " rows to " << options.out.string() << "\n";
  }
  return kOk;
}

int cmd_fit(const CommonOptions& options, const std::string& algorithm_label) {
  const RunConfig cfg = load(options);
  const ExperimentSpec& spec = cfg.spec;
  const AlgorithmSpec* alg = &spec.algorithms.front();
  if (!algorithm_label.empty()) {
    alg = nullptr;
    for (const AlgorithmSpec& a : spec.algorithms) {
      if (label_of(a) == algorithm_label) alg = &a;
    }
    if (!alg) throw ConfigError("no algorithm labelled '" + algorithm_label + "' in the config");
  }

  const FittingProblem fp = build_fitting_problem(spec);
  RunOptions run_options;
  if (!options.quiet && cfg.progress_every > 0) {
    run_options.progress_every = cfg.progress_every;
    const std::size_t total = alg->iterations;
    run_options.progress = [total](std::size_t k, double best, double t) {
      std::fprintf(stderr, "iter %zu/%zu  best %.10g  T %.4g\n", k, total, best, t);
    };
  }
  const RunResult r = run_replication(spec, fp, *alg, 0, options.threads, run_options);

  Json report;
  report["tool"] = "smcsa";
  report["version"] = SMCSA_VERSION;
  report["command"] = "fit";
  report["config"] = cfg.echo;
  report["seed"] = spec.seed;
  report["run_seed"] = r.seed;
  report["algorithm"] = algorithm_json(*alg);
  report["best_state"] = to_json(r.best_state.values());
  report["best_loss"] = r.best_loss;
  report["iterations"] = r.iterations_run;
  report["moves"] = r.moves;
  report["accepted_moves"] = r.accepted_moves;
  report["acceptance_rate"] = r.acceptance_rate();
  report["exhausted_proposals"] = r.exhausted_proposals;
  report["proposal_attempts"] = r.proposal_attempts;
  Json trace = Json::array();
  for (const TracePoint& p : r.trace) trace.push_back({p.iteration, p.best_loss});
  report["trace"] = std::move(trace);
  report["wall_time_s"] = r.wall_time;
  write_json(options.out, report);
  if (!options.quiet) {
    std::fprintf(stderr, "best loss %.10g after %zu iterations (%.2f s)\n", r.best_loss,
                 r.iterations_run, r.wall_time);
  }
  return kOk;
}

int cmd_bench(const CommonOptions& options) {
  RunConfig cfg = load(options);
  ExperimentSpec& spec = cfg.spec;
  spec.threads = options.threads;
  const std::size_t total = spec.algorithms.size() * spec.replications;
  std::size_t done = 0;
  const auto on_done = [&](const ReplicationOutcome& o) {
    ++done;
    const std::string label = label_of(spec.algorithms[o.algorithm]);
    if (!o.error.empty()) {
      std::fprintf(stderr, "warning: %s replication %zu failed and is excluded: %s\n",
                   label.c_str(), o.replication, o.error.c_str());
    } else if (!options.quiet) {
      std::fprintf(stderr, "[%zu/%zu] %s replication %zu: best %.10g (%.2f s)\n", done, total,
                   label.c_str(), o.replication, o.result->best_loss, o.result->wall_time);
    }
  };
  const BenchmarkResult result = run_benchmark(spec, on_done);

  std::ostringstream runs;
  runs << "algorithm,replication,run_seed,best_loss,iterations,acceptance_rate,wall_time_s,error\n"
       << std::setprecision(17);
  for (const ReplicationOutcome& o : result.outcomes) {
    runs << label_of(spec.algorithms[o.algorithm]) << ',' << o.replication << ','
         << run_seed(spec.seed, o.replication) << ',';
    if (o.result) {
      runs << o.result->best_loss << ',' << o.result->iterations_run << ','
           << o.result->acceptance_rate() << ',' << o.result->wall_time << ",\n";
    } else {
      std::string msg = o.error;
      for (char& c : msg) {
        if (c == '"') c = '\'';
      }
      runs << ",,,,\"" << msg << "\"\n";
    }
  }
  std::ostringstream summary_csv;
  write_summary_csv(summary_csv, result.rows);
  std::ostringstream table;
  write_summary_table(table, result.rows);

  if (!options.out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(options.out, ec);
    if (ec) throw DataError("cannot create '" + options.out.string() + "': " + ec.message());
    write_text(options.out / "runs.csv", runs.str());
    write_text(options.out / "summary.csv", summary_csv.str());
    write_text(options.out / "summary.txt", table.str());
    write_json(options.out / "config.json", cfg.echo);
  }
  if (!options.quiet || options.out.empty()) std::cout << table.str();
  if (result.rows.empty()) throw Error("every replication failed");
  return kOk;
}

int cmd_oracle(const CommonOptions& options) {
  const RunConfig cfg = load(options);
  const ExperimentSpec& spec = cfg.spec;
  if (spec.model.family != ModelFamily::BSpline) {
    throw UnsupportedProblem("the oracle solves monotone B-spline least squares only; model is " +
                             to_string(spec.model.family));
  }
  if (!spec.constraint.direction) {
    throw UnsupportedProblem("the oracle needs a monotone direction");
  }
  if (spec.loss.kind != LossSpec::Kind::SquaredError) {
    throw UnsupportedProblem("the oracle needs the squared-error loss");
  }
  const FittingProblem fp = build_fitting_problem(spec);
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(
      fp.data.y.data(), static_cast<Eigen::Index>(fp.data.size()));
  const OracleSolution sol = qp_oracle_monotone_spline(*fp.design, y, *spec.constraint.direction);

  Json report;
  report["tool"] = "smcsa";
  report["version"] = SMCSA_VERSION;
  report["command"] = "oracle";
  report["config"] = cfg.echo;
  report["direction"] = to_string(*spec.constraint.direction);
  report["coefficients"] = to_json(sol.coefficients);
  report["objective"] = sol.objective;
  report["active_sets_tried"] = sol.active_sets_tried;
  report["active_sets_skipped"] = sol.active_sets_skipped;
  try {
    const Eigen::VectorXd ols = ols_estimate(*fp.design, y);
    const std::vector<double> beta(ols.data(), ols.data() + ols.size());
    report["ols"] = {{"coefficients", beta},
                     {"objective", residual_sum_of_squares(*fp.design, y, ols)},
                     {"monotone", bspline_monotone_indicator(beta, *spec.constraint.direction)}};
  } catch (const SingularError& e) {
    report["ols"] = nullptr;
  }
  write_json(options.out, report);
  if (!options.quiet) std::fprintf(stderr, "oracle objective %.12g\n", sol.objective);
  return kOk;
}

int report_failure(const std::exception& e) {
  int code = kInternal;
  const char* kind = "error";
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const InvalidInput*>(&e)) {
    code = kConfigError;
    kind = "config error";
  } else if (dynamic_cast<const DataError*>(&e)) {
    code = kDataError;
    kind = "data error";
  } else if (dynamic_cast<const InfeasibleError*>(&e)) {
    code = kInfeasible;
    kind = "infeasible";
  } else if (dynamic_cast<const SingularError*>(&e) || dynamic_cast<const PoleError*>(&e)) {
    code = kNumerical;
    kind = "numerical error";
  } else if (dynamic_cast<const UnsupportedProblem*>(&e)) {
    code = kUnsupported;
    kind = "unsupported";
  }
  std::fprintf(stderr, "smcsa: %s: %s\n", kind, e.what());
  return code;
}

}  // namespace smcsa::cli
