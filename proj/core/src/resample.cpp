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

#include "smcsa/resample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smcsa/errors.hpp"

namespace smcsa {

std::string to_string(ResamplingScheme scheme) {
  return scheme == ResamplingScheme::Multinomial ? "multinomial" : "systematic";
}

std::vector<double> compute_weights(std::span<const double> losses, std::size_t k, double t_k,
                                    double t_prev) {
  if (losses.empty()) throw InvalidInput("compute_weights: empty population");
  if (k < 1) throw InvalidInput("compute_weights: iteration index starts at 1");
  if (!(t_k > 0.0)) throw InvalidInput("compute_weights: temperature must be positive");
  if (k > 1 && !(t_prev > 0.0)) {
    throw InvalidInput("compute_weights: previous temperature must be positive");
  }

  const double rate = k == 1 ? 1.0 / t_k : 1.0 / t_k - 1.0 / t_prev;
  std::vector<double> w(losses.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < losses.size(); ++j) {
    w[j] = -losses[j] * rate;
    top = std::max(top, w[j]);
  }
  if (!std::isfinite(top)) throw Error("compute_weights: non-finite log-weight");

  double total = 0.0;
  for (double& v : w) {
    v = std::exp(v - top);
    total += v;
  }
  // The maximal entry contributes exactly 1, so total >= 1.
  if (!(total > 0.0)) throw Error("compute_weights: all weights vanished");
  for (double& v : w) v /= total;
  return w;
}

std::vector<std::size_t> resample_indices(std::span<const double> weights, std::size_t count,
                                          ResamplingScheme scheme, Engine& rng) {
  if (weights.empty()) throw InvalidInput("resample: no weights");

  std::vector<double> cumulative(weights.size());
  double running = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    running += weights[j];
    cumulative[j] = running;
  }
  // Guard the last bin against rounding so every draw lands somewhere.
  const double total = running;
  const std::size_t last = weights.size() - 1;

  auto locate = [&](double u) {
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u * total);
    return std::min(static_cast<std::size_t>(it - cumulative.begin()), last);
  };

  std::vector<std::size_t> out(count);
  if (scheme == ResamplingScheme::Multinomial) {
    for (auto& idx : out) idx = locate(uniform01(rng));
  } else {
    const double n = static_cast<double>(count);
    const double offset = uniform01(rng);
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = locate((static_cast<double>(i) + offset) / n);
    }
  }
  return out;
}

}  // namespace smcsa
