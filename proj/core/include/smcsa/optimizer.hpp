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
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "smcsa/proposal.hpp"
#include "smcsa/random.hpp"
#include "smcsa/resample.hpp"
#include "smcsa/schedule.hpp"
#include "smcsa/state.hpp"

namespace smcsa {

/// Metropolis acceptance probability with the feasibility indicator folded
/// in. The Hastings correction for the truncated proposal is omitted.
double acceptance_probability(double proposed_loss, double current_loss, bool proposed_feasible,
                              double temperature);

struct MoveResult {
  StateVector state;
  double loss = 0.0;
  bool accepted = false;
  bool exhausted = false;
  std::size_t proposal_attempts = 0;
};

/// One SA transition: propose, then accept or keep the input.
MoveResult sa_move(const StateVector& state, double state_loss, double temperature,
                   const Problem& problem, const ProposalConfig& config, double sigma2,
                   Engine& rng);

struct TracePoint {
  std::size_t iteration = 0;
  double best_loss = 0.0;
};

struct RunResult {
  StateVector best_state;
  double best_loss = 0.0;
  std::size_t iterations_run = 0;
  /// Best-so-far loss after each iteration; entry 0 is the starting population.
  std::vector<TracePoint> trace;
  double wall_time = 0.0;
  std::uint64_t seed = 0;

  std::size_t moves = 0;
  std::size_t accepted_moves = 0;
  std::size_t exhausted_proposals = 0;
  std::size_t proposal_attempts = 0;

  double acceptance_rate() const {
    return moves == 0 ? 0.0 : static_cast<double>(accepted_moves) / static_cast<double>(moves);
  }
};

/// Hooks and execution knobs shared by both optimizers.
struct RunOptions {
  ResamplingScheme resampling = ResamplingScheme::Multinomial;
  /// Worker threads for the per-particle moves; 0 picks the OpenMP default.
  unsigned threads = 1;
  /// Called after every iteration with the current population.
  std::function<void(std::size_t iteration, std::span<const Particle> population)> observer;
  /// Called every `progress_every` iterations (0 disables).
  std::size_t progress_every = 0;
  std::function<void(std::size_t iteration, double best_loss, double temperature)> progress;
};

/// Sequential Monte Carlo simulated annealing.
///
/// Each iteration computes a temperature from the schedule, weights the
/// previous population, resamples it, and applies one SA move to every
/// resampled state. Moves draw from private random streams keyed by
/// (seed, iteration, particle), so the result does not depend on the thread
/// count. Throws InvalidInput for an infeasible start, naming its index.
RunResult smcsa_run(const Problem& problem, std::span<const StateVector> starts,
                    const CoolingSchedule& schedule, const ProposalConfig& proposal,
                    std::size_t iterations, std::uint64_t seed, const RunOptions& options = {});

/// Independent simulated-annealing chains sharing one schedule and a global
/// best. Identical to smcsa_run without the weighting and resampling steps.
RunResult multistart_sa_run(const Problem& problem, std::span<const StateVector> starts,
                            const CoolingSchedule& schedule, const ProposalConfig& proposal,
                            std::size_t iterations, std::uint64_t seed,
                            const RunOptions& options = {});

}  // namespace smcsa
