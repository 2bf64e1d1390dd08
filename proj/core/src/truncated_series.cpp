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

#include <blissard/truncated_series.hpp>

#include <stdexcept>

namespace blissard {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order) throw std::invalid_argument("TruncatedSeries: more coefficients than order");
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  if (order == 0) throw std::invalid_argument("TruncatedSeries::one: order must be positive");
  s.at(0) = 1;
  return s;
}

TruncatedSeries TruncatedSeries::x(std::size_t order) {
  if (order < 2) throw std::invalid_argument("TruncatedSeries::x: order must be at least 2");
  TruncatedSeries s(order);
  s.at(1) = 1;
  return s;
}

TruncatedSeries TruncatedSeries::one_plus_x(std::size_t order) {
  TruncatedSeries s = one(order);
  if (order >= 2) s.at(1) = 1;
  return s;
}

static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.order() != b.order()) throw std::invalid_argument(std::string(op) + ": order mismatch");
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "ts_add");
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r.at(i) = a[i] + b[i];
  return r;
}

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "ts_sub");
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r.at(i) = a[i] - b[i];
  return r;
}

TruncatedSeries ts_scale(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) r.at(i) = c * a[i];
  return r;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "ts_mul");
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < b.order(); ++j) {
      if (b[j].is_zero()) continue;
      r.at(i + j) += a[i] * b[j];
    }
  }
  return r;
}

TruncatedSeries ts_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "ts_div");
  if (b.order() == 0 || b[0].is_zero())
    throw std::domain_error("ts_div: divisor has zero constant term");
  TruncatedSeries q(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    Rational s = a[i];
    for (std::size_t j = 1; j <= i; ++j) s -= b[j] * q[i - j];
    q.at(i) = s / b[0];
  }
  return q;
}

TruncatedSeries ts_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) throw std::invalid_argument("ts_derivative: empty series");
  TruncatedSeries r(a.order() - 1);
  for (std::size_t i = 0; i + 1 < a.order(); ++i) r.at(i) = Rational(static_cast<long long>(i + 1)) * a[i + 1];
  return r;
}

TruncatedSeries ts_integrate(const TruncatedSeries& a) {
  TruncatedSeries r(a.order() + 1);
  for (std::size_t i = 0; i < a.order(); ++i) r.at(i + 1) = a[i] / Rational(static_cast<long long>(i + 1));
  return r;
}

TruncatedSeries ts_log(const TruncatedSeries& a) {
  if (a.order() == 0 || a[0] != Rational(1))
    throw std::domain_error("ts_log: constant term must be 1");
  // log(a)' = a'/a, known through x^{order-2}; integrating recovers all
  // `order` coefficients (the constant is log 1 = 0).
  return ts_integrate(ts_div(ts_derivative(a), ts_truncate(a, a.order() - 1)));
}

TruncatedSeries ts_truncate(const TruncatedSeries& a, std::size_t order) {
  TruncatedSeries r(order);
  for (std::size_t i = 0; i < order && i < a.order(); ++i) r.at(i) = a[i];
  return r;
}

TruncatedSeries ts_pow(const TruncatedSeries& a, unsigned n) {
  TruncatedSeries r = TruncatedSeries::one(a.order());
  for (unsigned i = 0; i < n; ++i) r = ts_mul(r, a);
  return r;
}

}  // namespace blissard
