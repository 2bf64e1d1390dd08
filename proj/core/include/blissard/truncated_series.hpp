// Copyright 2026 The Blissard Authors
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

#ifndef BLISSARD_TRUNCATED_SERIES_HPP
#define BLISSARD_TRUNCATED_SERIES_HPP

#include <blissard/rational.hpp>

#include <cstddef>
#include <vector>

namespace blissard {

inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Order-limited formal power series with exact rational coefficients.
/// `order` is the number of retained coefficients: index i holds the
/// coefficient of x^i for i < order.  Arithmetic never touches indices
/// at or beyond the order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
  TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

  std::size_t order() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& at(std::size_t i) { return coeffs_.at(i); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// The constant series 1.
  static TruncatedSeries one(std::size_t order);
  /// The series x.
  static TruncatedSeries x(std::size_t order);
  /// 1 + x.
  static TruncatedSeries one_plus_x(std::size_t order);

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_scale(const Rational& c, const TruncatedSeries& a);

/// Cauchy product truncated at the common order.  Orders must match.
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Series quotient; the divisor must have a nonzero constant term.
TruncatedSeries ts_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Formal derivative; the result has one coefficient less.
TruncatedSeries ts_derivative(const TruncatedSeries& a);

/// Formal antiderivative with zero constant term; one coefficient more.
TruncatedSeries ts_integrate(const TruncatedSeries& a);

/// log(a) = integrate(derivative(a)/a); requires constant term exactly 1.
TruncatedSeries ts_log(const TruncatedSeries& a);

/// Keep the first `order` coefficients.
TruncatedSeries ts_truncate(const TruncatedSeries& a, std::size_t order);

/// a^n by repeated multiplication at a's order.
TruncatedSeries ts_pow(const TruncatedSeries& a, unsigned n);

}  // namespace blissard

#endif  // BLISSARD_TRUNCATED_SERIES_HPP
