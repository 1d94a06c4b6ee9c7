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

#include "smcsa/constraints.hpp"

#include "smcsa/errors.hpp"

namespace smcsa {

std::string to_string(MonotoneDirection direction) {
  return direction == MonotoneDirection::Increasing ? "increasing" : "decreasing";
}

MonotoneDirection flip(MonotoneDirection direction) noexcept {
  return direction == MonotoneDirection::Increasing ? MonotoneDirection::Decreasing
                                                    : MonotoneDirection::Increasing;
}

bool rational_monotone_indicator(const Polynomial& numer, const Polynomial& denom,
                                 const Interval& interval, MonotoneDirection direction,
                                 double tol) {
  if (denom.is_zero()) throw InvalidInput("rational function with a zero denominator");
  if (!has_no_roots_in(denom, interval, tol)) return false;
  // Numerator of the quotient-rule derivative; its sign is the sign of r'.
  const Polynomial q = numer.derivative() * denom - numer * denom.derivative();
  return is_nonnegative_on(direction == MonotoneDirection::Increasing ? q : -q, interval, tol);
}

bool bspline_monotone_indicator(std::span<const double> coefficients,
                                MonotoneDirection direction) {
  if (coefficients.size() < 2) throw InvalidInput("monotone spline needs at least 2 coefficients");
  for (std::size_t j = 1; j < coefficients.size(); ++j) {
    const bool ok = direction == MonotoneDirection::Decreasing
                        ? coefficients[j - 1] >= coefficients[j]
                        : coefficients[j - 1] <= coefficients[j];
    if (!ok) return false;
  }
  return true;
}

}  // namespace smcsa
