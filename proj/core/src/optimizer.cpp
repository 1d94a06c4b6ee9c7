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

#include "smcsa/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>

#include <omp.h>

#include "smcsa/errors.hpp"

namespace smcsa {

double acceptance_probability(double proposed_loss, double current_loss, bool proposed_feasible,
                              double temperature) {
  if (!proposed_feasible) return 0.0;
  const double delta = proposed_loss - current_loss;
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / temperature);
}

MoveResult sa_move(const StateVector& state, double state_loss, double temperature,
                   const Problem& problem, const ProposalConfig& config, double sigma2,
                   Engine& rng) {
  MoveResult out{state, state_loss};
  Proposal proposal = propose(state, config, sigma2, problem.indicator, rng);
  out.proposal_attempts = proposal.attempts;
  if (!proposal.state) {
    out.exhausted = true;
    return out;
  }
  const double candidate_loss = problem.evaluate(*proposal.state);
  // The proposal is feasible by construction.
  const double p = acceptance_probability(candidate_loss, state_loss, true, temperature);
  if (p >= 1.0 || uniform01(rng) < p) {
    out.state = std::move(*proposal.state);
    out.loss = candidate_loss;
    out.accepted = true;
  }
  return out;
}

namespace {

constexpr std::uint64_t kResampleStream = 0;

std::vector<Particle> initial_population(const Problem& problem,
                                         std::span<const StateVector> starts) {
  if (starts.empty()) throw InvalidInput("optimizer needs at least one start state");
  if (problem.dimension == 0 || !problem.loss || !problem.indicator) {
    throw InvalidInput("problem is missing its dimension, loss or indicator");
  }
  std::vector<Particle> population;
  population.reserve(starts.size());
  const double w = 1.0 / static_cast<double>(starts.size());
  for (std::size_t j = 0; j < starts.size(); ++j) {
    const StateVector& s = starts[j];
    if (s.size() != problem.dimension) {
      throw InvalidInput("start state " + std::to_string(j) + " has dimension " +
                         std::to_string(s.size()) + ", expected " +
                         std::to_string(problem.dimension));
    }
    if (!problem.feasible(s)) {
      throw InvalidInput("start state " + std::to_string(j) + " is infeasible");
    }
    const double loss = problem.evaluate(s);
    if (!std::isfinite(loss)) {
      throw InvalidInput("start state " + std::to_string(j) + " has a non-finite loss");
    }
    population.push_back({s, loss, w});
  }
  return population;
}

RunResult anneal(const Problem& problem, std::span<const StateVector> starts,
                 const CoolingSchedule& schedule, const ProposalConfig& proposal,
                 std::size_t iterations, std::uint64_t seed, const RunOptions& options,
                 bool resample) {
  const auto t0 = std::chrono::steady_clock::now();
  if (iterations < 1) throw InvalidInput("iterations must be at least 1");
  schedule.validate();
  proposal.validate(problem.dimension);

  std::vector<Particle> population = initial_population(problem, starts);
  const std::size_t n = population.size();
  const double uniform_weight = 1.0 / static_cast<double>(n);

  RunResult result;
  result.seed = seed;
  std::size_t best = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (population[j].loss < population[best].loss) best = j;
  }
  result.best_state = population[best].state;
  result.best_loss = population[best].loss;
  result.trace.reserve(iterations + 1);
  result.trace.push_back({0, result.best_loss});

  const int threads = options.threads == 0 ? omp_get_max_threads()
                                           : static_cast<int>(options.threads);
  std::vector<MoveResult> moves(n);
  std::vector<double> losses(n);
  double t_prev = 0.0;

  for (std::size_t k = 1; k <= iterations; ++k) {
    const double t_k = temperature(schedule, k, result.best_loss);

    std::vector<Particle> gamma;
    if (resample) {
      for (std::size_t j = 0; j < n; ++j) losses[j] = population[j].loss;
      const std::vector<double> weights = compute_weights(losses, k, t_k, t_prev);
      Engine rng = make_engine(derive_seed(seed, k, kResampleStream));
      const std::vector<std::size_t> ancestors =
          resample_indices(weights, n, options.resampling, rng);
      gamma.reserve(n);
      for (std::size_t a : ancestors) gamma.push_back(population[a]);
    } else {
      gamma = std::move(population);
    }

    const double sigma2 = proposal.variance(k);
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8) if (threads > 1)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        Engine rng = make_engine(derive_seed(seed, k, j + 1));
        moves[j] = sa_move(gamma[j].state, gamma[j].loss, t_k, problem, proposal, sigma2, rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    population.clear();
    population.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      MoveResult& m = moves[j];
      result.moves += 1;
      result.accepted_moves += m.accepted ? 1 : 0;
      result.exhausted_proposals += m.exhausted ? 1 : 0;
      result.proposal_attempts += m.proposal_attempts;
      if (m.loss < result.best_loss) {
        result.best_loss = m.loss;
        result.best_state = m.state;
      }
      population.push_back({std::move(m.state), m.loss, uniform_weight});
    }

    result.trace.push_back({k, result.best_loss});
    result.iterations_run = k;
    if (options.observer) options.observer(k, population);
    if (options.progress && options.progress_every > 0 && k % options.progress_every == 0) {
      options.progress(k, result.best_loss, t_k);
    }
    t_prev = t_k;
  }

  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace

RunResult smcsa_run(const Problem& problem, std::span<const StateVector> starts,
                    const CoolingSchedule& schedule, const ProposalConfig& proposal,
                    std::size_t iterations, std::uint64_t seed, const RunOptions& options) {
  return anneal(problem, starts, schedule, proposal, iterations, seed, options, true);
}

RunResult multistart_sa_run(const Problem& problem, std::span<const StateVector> starts,
                            const CoolingSchedule& schedule, const ProposalConfig& proposal,
                            std::size_t iterations, std::uint64_t seed,
                            const RunOptions& options) {
  return anneal(problem, starts, schedule, proposal, iterations, seed, options, false);
}

}  // namespace smcsa
