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
#include <initializer_list>
#include <span>
#include <vector>

namespace smcsa {

/// Dense real polynomial, coefficients in ascending degree. Trailing exact
/// zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients);

  /// Builds prod_i (x - roots[i]).
  static Polynomial from_roots(std::span<const double> roots, double leading = 1.0);

  std::span<const double> coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Degree; the zero polynomial reports -1.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  double coefficient(std::size_t i) const noexcept {
    return i < coefficients_.size() ? coefficients_[i] : 0.0;
  }

  /// Horner evaluation.
  double operator()(double x) const noexcept;

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<double> coefficients_;
};

/// Closed interval [lo, hi] with lo < hi, both finite.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  Interval() = default;
  Interval(double lo, double hi);

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

struct Root {
  double location = 0.0;
  int multiplicity = 1;
};

/// Real roots inside an interval, sorted by location.
struct RootReport {
  std::vector<Root> roots;

  bool empty() const noexcept { return roots.empty(); }
  std::size_t odd_multiplicity_count() const noexcept;
};

/// All complex roots of `p` (eigenvalues of the companion matrix).
/// Throws InvalidInput for the zero polynomial.
struct ComplexRoot {
  double re = 0.0;
  double im = 0.0;
};
std::vector<ComplexRoot> all_roots(const Polynomial& p);

/// Real roots of `p` in `interval` with multiplicities.
///
/// Eigenvalues with |imag| < tol count as real. Real parts closer than tol
/// (chained) form one cluster whose size is the multiplicity, and a cluster
/// is reported if its mean lies in the interval. Throws InvalidInput for the
/// zero polynomial or a non-positive tol.
RootReport real_roots_in_interval(const Polynomial& p, const Interval& interval, double tol);

/// True iff every root of `p` in the interval has even multiplicity and `p`
/// exceeds -tol at the midpoint of the widest root-free sub-interval.
/// The zero polynomial is non-negative.
bool is_nonnegative_on(const Polynomial& p, const Interval& interval, double tol);

/// True iff `p` has no real root in the interval. Throws InvalidInput for
/// the zero polynomial.
bool has_no_roots_in(const Polynomial& p, const Interval& interval, double tol);

}  // namespace smcsa
