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

#include "smcsa/loss.hpp"

#include <cmath>

#include "smcsa/errors.hpp"

namespace smcsa {

std::string to_string(LossSpec::Kind kind) {
  return kind == LossSpec::Kind::SquaredError ? "squared" : "tukey";
}

double tukey_biweight(double u, double c) {
  if (!(c > 0.0)) throw InvalidInput("Tukey cutoff must be positive");
  const double cap = c * c / 6.0;
  if (std::abs(u) > c) return cap;
  const double r = u / c;
  const double inner = 1.0 - r * r;
  return cap * (1.0 - inner * inner * inner);
}

double rho(double residual, const LossSpec& spec) {
  return spec.kind == LossSpec::Kind::SquaredError ? residual * residual
                                                   : tukey_biweight(residual, spec.c);
}

double loss(const ModelEvaluator& model, std::span<const double> theta, const Dataset& data,
            const LossSpec& spec) {
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    total += rho(data.y[i] - model(theta, data.x[i]), spec);
  }
  return total;
}

}  // namespace smcsa
