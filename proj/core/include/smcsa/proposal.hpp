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
#include <optional>
#include <string>

#include "smcsa/random.hpp"
#include "smcsa/state.hpp"

namespace smcsa {

/// Truncated Gaussian random-walk proposal.
///
/// `Full` perturbs every coordinate; `KPoint` picks `k_points` distinct
/// coordinates per call and perturbs only those. In both cases Gaussian noise
/// is redrawn until the candidate is feasible or `max_attempts` draws fail.
/// The variance used at iteration k is `sigma0 * decay^k`.
struct ProposalConfig {
  enum class Kind { Full, KPoint };

  Kind kind = Kind::KPoint;
  std::size_t k_points = 2;
  double sigma0 = 1.0;
  double decay = 0.97;
  std::size_t max_attempts = 1000;

  static ProposalConfig full(double sigma0, double decay) {
    return {Kind::Full, 0, sigma0, decay};
  }
  static ProposalConfig k_point(std::size_t k, double sigma0, double decay) {
    return {Kind::KPoint, k, sigma0, decay};
  }

  /// Proposal variance at iteration k.
  double variance(std::size_t k) const;

  /// Throws InvalidInput if the configuration is unusable for `dimension`.
  void validate(std::size_t dimension) const;
};

std::string to_string(ProposalConfig::Kind kind);

/// Result of one proposal call. An empty `state` means the rejection sampler
/// hit its attempt cap.
struct Proposal {
  std::optional<StateVector> state;
  std::size_t attempts = 0;
};

Proposal propose(const StateVector& state, const ProposalConfig& config, double sigma2,
                 const Indicator& indicator, Engine& rng);

}  // namespace smcsa
