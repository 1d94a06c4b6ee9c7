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
#include <span>

#include "smcsa/constraints.hpp"
#include "smcsa/dataset.hpp"
#include "smcsa/polynomial.hpp"

namespace smcsa {

/// r(x) = (a0 + a1 x + ... + ap x^p) / (1 + b1 x + ... + bq x^q).
///
/// The parameter vector is (a0..ap, b1..bq); the denominator constant is
/// fixed at 1. With p = q = 2 this is the five-parameter model whose
/// horizontal asymptote is a2 / b2.
struct RationalModel {
  std::size_t numer_degree = 2;
  std::size_t denom_degree = 2;

  std::size_t parameter_count() const noexcept { return numer_degree + denom_degree + 1; }

  Polynomial numerator(std::span<const double> theta) const;
  Polynomial denominator(std::span<const double> theta) const;

  /// Throws PoleError if |denominator| < 1e-300 at x.
  double operator()(std::span<const double> theta, double x) const;

  /// Monotone-and-continuous feasibility on `interval`.
  bool feasible(std::span<const double> theta, const Interval& interval,
                MonotoneDirection direction, double tol = kDefaultRootTolerance) const;
};

/// Crude parameter estimate from the linearized model
///   y = a0 + a1 x + ... + ap x^p - b1 x y - ... - bq x^q y
/// fitted by ordinary least squares. Throws SingularError when the
/// regressors are rank deficient.
std::vector<double> rational_crude_estimate(const Dataset& data, const RationalModel& model = {});

}  // namespace smcsa
