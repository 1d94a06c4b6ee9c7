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

#include "smcsa/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smcsa/errors.hpp"

namespace smcsa {

BSplineBasis::BSplineBasis(int degree, std::vector<double> knots)
    : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 0) throw InvalidInput("B-spline degree must be non-negative");
  if (knots_.size() < static_cast<std::size_t>(degree_) + 2) {
    throw InvalidInput("B-spline basis needs at least degree + 2 knots");
  }
  spacing_ = (knots_.back() - knots_.front()) / static_cast<double>(knots_.size() - 1);
  const double scale = std::max(std::abs(knots_.front()), std::abs(knots_.back())) + spacing_;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const double step = knots_[i] - knots_[i - 1];
    if (!(step > 0.0) || !std::isfinite(step)) {
      throw InvalidInput("B-spline knots must be finite and strictly increasing");
    }
    if (std::abs(step - spacing_) > 1e-12 * scale) {
      throw InvalidInput("B-spline knots must be equidistant");
    }
  }
}

BSplineBasis BSplineBasis::equidistant(int degree, std::size_t num_basis, double lo, double hi) {
  if (degree < 0 || num_basis <= static_cast<std::size_t>(degree)) {
    throw InvalidInput("equidistant basis needs num_basis > degree >= 0");
  }
  if (!(lo < hi)) throw InvalidInput("equidistant basis needs lo < hi");
  const auto d = static_cast<std::size_t>(degree);
  const double h = (hi - lo) / static_cast<double>(num_basis - d);
  std::vector<double> knots(num_basis + d + 1);
  for (std::size_t i = 0; i < knots.size(); ++i) {
    knots[i] = lo + (static_cast<double>(i) - static_cast<double>(d)) * h;
  }
  knots[d] = lo;
  knots[num_basis] = hi;
  return BSplineBasis(degree, std::move(knots));
}

void BSplineBasis::check_domain(double x) const {
  if (!(x >= valid_lo() && x <= valid_hi())) {
    throw DomainError("x = " + std::to_string(x) + " outside the valid spline interval [" +
                      std::to_string(valid_lo()) + ", " + std::to_string(valid_hi()) + "]");
  }
}

std::size_t BSplineBasis::span_of(double x) const {
  // Index i with k_i <= x < k_{i+1}; the right end joins the last span.
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const auto i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return std::min(i, num_basis() - 1);
}

double BSplineBasis::evaluate_in_span(int degree, std::size_t j, double x,
                                      std::size_t span) const {
  if (degree == 0) return j == span ? 1.0 : 0.0;
  const auto p = static_cast<std::size_t>(degree);
  if (span < j || span > j + p) return 0.0;
  const double left = (x - knots_[j]) / (knots_[j + p] - knots_[j]);
  const double right = (knots_[j + p + 1] - x) / (knots_[j + p + 1] - knots_[j + 1]);
  return left * evaluate_in_span(degree - 1, j, x, span) +
         right * evaluate_in_span(degree - 1, j + 1, x, span);
}

double BSplineBasis::evaluate(int degree, std::size_t j, double x) const {
  if (degree < 0 || degree > degree_) throw InvalidInput("basis degree out of range");
  if (j + static_cast<std::size_t>(degree) + 1 >= knots_.size()) {
    throw InvalidInput("basis index " + std::to_string(j) + " out of range");
  }
  check_domain(x);
  return evaluate_in_span(degree, j, x, span_of(x));
}

double BSplineBasis::operator()(std::size_t j, double x) const {
  return evaluate(degree_, j, x);
}

double BSplineBasis::derivative(std::size_t j, double x) const {
  if (j >= num_basis()) throw InvalidInput("basis index " + std::to_string(j) + " out of range");
  check_domain(x);
  if (degree_ == 0) return 0.0;
  const auto p = static_cast<std::size_t>(degree_);
  const std::size_t span = span_of(x);
  const double a = static_cast<double>(p) / (knots_[j + p] - knots_[j]);
  const double b = static_cast<double>(p) / (knots_[j + p + 1] - knots_[j + 1]);
  return a * evaluate_in_span(degree_ - 1, j, x, span) -
         b * evaluate_in_span(degree_ - 1, j + 1, x, span);
}

Eigen::VectorXd BSplineBasis::row(double x) const {
  check_domain(x);
  const std::size_t span = span_of(x);
  Eigen::VectorXd out(static_cast<Eigen::Index>(num_basis()));
  for (std::size_t j = 0; j < num_basis(); ++j) {
    out(static_cast<Eigen::Index>(j)) = evaluate_in_span(degree_, j, x, span);
  }
  return out;
}

double BSplineBasis::spline(std::span<const double> coefficients, double x) const {
  if (coefficients.size() != num_basis()) throw InvalidInput("spline coefficient count mismatch");
  const Eigen::VectorXd r = row(x);
  double acc = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    acc += coefficients[j] * r(static_cast<Eigen::Index>(j));
  }
  return acc;
}

double BSplineBasis::spline_derivative(std::span<const double> coefficients, double x) const {
  if (coefficients.size() != num_basis()) throw InvalidInput("spline coefficient count mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) acc += coefficients[j] * derivative(j, x);
  return acc;
}

Eigen::MatrixXd design_matrix(const BSplineBasis& basis, std::span<const double> x) {
  Eigen::MatrixXd b(static_cast<Eigen::Index>(x.size()),
                    static_cast<Eigen::Index>(basis.num_basis()));
  for (std::size_t i = 0; i < x.size(); ++i) b.row(static_cast<Eigen::Index>(i)) = basis.row(x[i]).transpose();
  return b;
}

}  // namespace smcsa
