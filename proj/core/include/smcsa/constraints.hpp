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

#include <span>
#include <string>

#include "smcsa/polynomial.hpp"

namespace smcsa {

enum class MonotoneDirection { Increasing, Decreasing };

std::string to_string(MonotoneDirection direction);
MonotoneDirection flip(MonotoneDirection direction) noexcept;

/// Default root-clustering tolerance for covariates on a unit-ish scale.
inline constexpr double kDefaultRootTolerance = 1e-6;

/// Monotonicity and continuity of numer/denom on the interval.
///
/// With q = numer' denom - numer denom', Increasing requires q >= 0 on the
/// interval, Decreasing requires -q >= 0, and in both cases the denominator
/// must have no root there. Throws InvalidInput for a zero denominator.
bool rational_monotone_indicator(const Polynomial& numer, const Polynomial& denom,
                                 const Interval& interval, MonotoneDirection direction,
                                 double tol = kDefaultRootTolerance);

/// Coefficient-ordering condition for a monotone quadratic B-spline with
/// equidistant knots: Decreasing iff c[0] >= c[1] >= ..., Increasing iff
/// c[0] <= c[1] <= .... Comparisons are exact. Requires at least two
/// coefficients.
bool bspline_monotone_indicator(std::span<const double> coefficients,
                                MonotoneDirection direction);

}  // namespace smcsa
