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
#include <vector>

#include <Eigen/Dense>

namespace smcsa {

/// B-spline basis of degree d on an equidistant knot vector
/// k_0 < k_1 < ... < k_{J+d} (0-based, J + d + 1 knots, spacing h).
///
/// Basis functions are indexed 0..J-1 and the spline is evaluated on the
/// valid interval [k_d, k_J], where the basis is a partition of unity.
/// Degree-0 pieces are half-open [k_i, k_{i+1}) except that the right end of
/// the valid interval belongs to the last piece.
class BSplineBasis {
 public:
  BSplineBasis(int degree, std::vector<double> knots);

  /// J basis functions whose valid interval is exactly [lo, hi].
  static BSplineBasis equidistant(int degree, std::size_t num_basis, double lo, double hi);

  int degree() const noexcept { return degree_; }
  std::size_t num_basis() const noexcept { return knots_.size() - static_cast<std::size_t>(degree_) - 1; }
  std::span<const double> knots() const noexcept { return knots_; }
  double spacing() const noexcept { return spacing_; }
  double valid_lo() const noexcept { return knots_[static_cast<std::size_t>(degree_)]; }
  double valid_hi() const noexcept { return knots_[num_basis()]; }

  /// B_j(x) of this basis' degree. Throws DomainError outside the valid
  /// interval and InvalidInput for j out of range.
  double operator()(std::size_t j, double x) const;

  /// B_j of a lower degree on the same knots (indices 0..knots-degree-2).
  double evaluate(int degree, std::size_t j, double x) const;

  /// d/dx B_j(x) = (B^{d-1}_j(x) - B^{d-1}_{j+1}(x)) / h, for degree >= 1.
  double derivative(std::size_t j, double x) const;

  /// All J basis values at x.
  Eigen::VectorXd row(double x) const;

  /// sum_j c_j B_j(x) and its derivative.
  double spline(std::span<const double> coefficients, double x) const;
  double spline_derivative(std::span<const double> coefficients, double x) const;

 private:
  void check_domain(double x) const;
  std::size_t span_of(double x) const;
  double evaluate_in_span(int degree, std::size_t j, double x, std::size_t span) const;

  int degree_;
  std::vector<double> knots_;
  double spacing_;
};

/// n x J matrix with entry (i, j) = B_j(x_i).
Eigen::MatrixXd design_matrix(const BSplineBasis& basis, std::span<const double> x);

}  // namespace smcsa
