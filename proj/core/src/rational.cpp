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

#include "smcsa/rational.hpp"

#include <cmath>

#include "smcsa/errors.hpp"
#include "smcsa/least_squares.hpp"

namespace smcsa {

namespace {

void check_size(const RationalModel& m, std::span<const double> theta) {
  if (theta.size() != m.parameter_count()) {
    throw InvalidInput("rational model expects " + std::to_string(m.parameter_count()) +
                       " parameters, got " + std::to_string(theta.size()));
  }
}

double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

Polynomial RationalModel::numerator(std::span<const double> theta) const {
  check_size(*this, theta);
  return Polynomial(std::vector<double>(theta.begin(), theta.begin() + numer_degree + 1));
}

Polynomial RationalModel::denominator(std::span<const double> theta) const {
  check_size(*this, theta);
  std::vector<double> c{1.0};
  c.insert(c.end(), theta.begin() + numer_degree + 1, theta.end());
  return Polynomial(std::move(c));
}

double RationalModel::operator()(std::span<const double> theta, double x) const {
  check_size(*this, theta);
  const double num = horner(theta.first(numer_degree + 1), x);
  const double den = 1.0 + x * horner(theta.subspan(numer_degree + 1), x);
  if (std::abs(den) < 1e-300) {
    throw PoleError("rational function has a pole at x = " + std::to_string(x));
  }
  return num / den;
}

bool RationalModel::feasible(std::span<const double> theta, const Interval& interval,
                             MonotoneDirection direction, double tol) const {
  return rational_monotone_indicator(numerator(theta), denominator(theta), interval, direction,
                                     tol);
}

std::vector<double> rational_crude_estimate(const Dataset& data, const RationalModel& model) {
  data.validate();
  const std::size_t n = data.size();
  const std::size_t p = model.numer_degree;
  const std::size_t q = model.denom_degree;
  if (n < model.parameter_count()) {
    throw InvalidInput("crude estimate needs at least " + std::to_string(model.parameter_count()) +
                       " points");
  }
  Eigen::MatrixXd regressors(n, static_cast<Eigen::Index>(p + q + 1));
  Eigen::VectorXd y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const double x = data.x[i];
    double power = 1.0;
    for (std::size_t a = 0; a <= p; ++a, power *= x) regressors(row, static_cast<Eigen::Index>(a)) = power;
    power = x;
    for (std::size_t b = 1; b <= q; ++b, power *= x) {
      regressors(row, static_cast<Eigen::Index>(p + b)) = -power * data.y[i];
    }
    y(row) = data.y[i];
  }
  const Eigen::VectorXd beta = ols_estimate(regressors, y);
  return {beta.data(), beta.data() + beta.size()};
}

}  // namespace smcsa
