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

#include "smcsa/proposal.hpp"

#include <cmath>
#include <numeric>

#include "smcsa/errors.hpp"

namespace smcsa {

bool StateVector::is_finite() const noexcept {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double ProposalConfig::variance(std::size_t k) const {
  return sigma0 * std::pow(decay, static_cast<double>(k));
}

void ProposalConfig::validate(std::size_t dimension) const {
  if (!(sigma0 > 0.0)) throw InvalidInput("proposal sigma0 must be positive");
  if (!(decay > 0.0 && decay <= 1.0)) throw InvalidInput("proposal decay must lie in (0, 1]");
  if (max_attempts < 1) throw InvalidInput("proposal max_attempts must be at least 1");
  if (kind == Kind::KPoint && (k_points < 1 || k_points > dimension)) {
    throw InvalidInput("k-point proposal needs 1 <= K <= " + std::to_string(dimension) +
                       ", got " + std::to_string(k_points));
  }
}

std::string to_string(ProposalConfig::Kind kind) {
  return kind == ProposalConfig::Kind::Full ? "full" : "kpoint";
}

Proposal propose(const StateVector& state, const ProposalConfig& config, double sigma2,
                 const Indicator& indicator, Engine& rng) {
  if (!(sigma2 > 0.0)) throw InvalidInput("propose: variance must be positive");
  const std::size_t d = state.size();
  const double sigma = std::sqrt(sigma2);

  std::vector<std::size_t> coords(d);
  std::iota(coords.begin(), coords.end(), std::size_t{0});
  std::size_t active = d;
  if (config.kind == ProposalConfig::Kind::KPoint && config.k_points < d) {
    // Partial Fisher-Yates: the first K entries are a uniform K-subset.
    for (std::size_t i = 0; i < config.k_points; ++i) {
      const std::size_t j = i + uniform_index(rng, d - i);
      std::swap(coords[i], coords[j]);
    }
    active = config.k_points;
  }

  StateVector candidate = state;
  Proposal out;
  for (std::size_t attempt = 1; attempt <= config.max_attempts; ++attempt) {
    for (std::size_t i = 0; i < active; ++i) {
      const std::size_t c = coords[i];
      candidate[c] = state[c] + sigma * standard_normal(rng);
    }
    out.attempts = attempt;
    if (candidate.is_finite() && indicator(candidate.values())) {
      out.state = std::move(candidate);
      return out;
    }
  }
  return out;
}

}  // namespace smcsa
