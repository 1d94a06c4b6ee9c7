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

#include "smcsa/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "smcsa/errors.hpp"

namespace smcsa {

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<double> coefficients)
    : coefficients_(coefficients) {
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0.0) coefficients_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const double> roots, double leading) {
  Polynomial p{leading};
  for (double r : roots) p = p * Polynomial{-r, 1.0};
  return p;
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<double> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    d[i - 1] = static_cast<double>(i) * coefficients_[i];
  }
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<double> c(a.coefficients_);
  for (double& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(c));
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidInput("interval needs finite lo < hi");
  }
}

std::size_t RootReport::odd_multiplicity_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity % 2; }));
}

std::vector<ComplexRoot> all_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("the zero polynomial has infinitely many roots");
  const int n = p.degree();
  if (n == 0) return {};
  const auto c = p.coefficients();
  if (n == 1) return {{-c[0] / c[1], 0.0}};

  // Companion matrix of the monic polynomial: ones on the subdiagonal and
  // the negated normalized coefficients in the last column.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("companion eigenvalue iteration failed");
  const Eigen::VectorXcd ev = solver.eigenvalues();
  std::vector<ComplexRoot> roots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = {ev[i].real(), ev[i].imag()};
  return roots;
}

RootReport real_roots_in_interval(const Polynomial& p, const Interval& interval, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("root tolerance must be positive");
  std::vector<double> real_parts;
  for (const ComplexRoot& r : all_roots(p)) {
    if (std::abs(r.im) < tol) real_parts.push_back(r.re);
  }
  std::sort(real_parts.begin(), real_parts.end());

  // Clusters are formed before the interval filter so a multiple root that
  // splits across an endpoint keeps its multiplicity.
  RootReport report;
  std::size_t i = 0;
  while (i < real_parts.size()) {
    std::size_t j = i + 1;
    double sum = real_parts[i];
    while (j < real_parts.size() && real_parts[j] - real_parts[j - 1] < tol) sum += real_parts[j++];
    const double centre = sum / static_cast<double>(j - i);
    if (interval.contains(centre)) report.roots.push_back({centre, static_cast<int>(j - i)});
    i = j;
  }
  return report;
}

bool is_nonnegative_on(const Polynomial& p, const Interval& interval, double tol) {
  if (p.is_zero()) return true;
  const RootReport report = real_roots_in_interval(p, interval, tol);
  if (report.odd_multiplicity_count() > 0) return false;

  // Probe in the middle of the widest root-free stretch.
  double left = interval.lo;
  double best_lo = interval.lo;
  double best_width = -1.0;
  for (const Root& r : report.roots) {
    if (r.location - left > best_width) {
      best_width = r.location - left;
      best_lo = left;
    }
    left = r.location;
  }
  if (interval.hi - left > best_width) {
    best_width = interval.hi - left;
    best_lo = left;
  }
  return p(best_lo + 0.5 * best_width) > -tol;
}

bool has_no_roots_in(const Polynomial& p, const Interval& interval, double tol) {
  return real_roots_in_interval(p, interval, tol).empty();
}

}  // namespace smcsa
