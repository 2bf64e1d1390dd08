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

#include <blissard/exact.hpp>
#include <blissard/truncated_series.hpp>

#include <doctest.h>

#include <random>

using namespace blissard;

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(1) == Rational(1));
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK(harmonic(5) == Rational(137, 60));
  CHECK_THROWS_AS(harmonic(-1), std::invalid_argument);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(6) == Rational(1, 42));
  CHECK(bernoulli_number(7) == Rational(0));

  // defining recurrence up to 30
  for (long n = 1; n <= 30; ++n) {
    Rational s = 0;
    for (long k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli_number(k);
    CHECK(s == Rational(0));
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(2, Rational(0)) == Rational(1, 6));
  CHECK(bernoulli_poly(1, Rational(1, 2)) == Rational(0));
  CHECK(bernoulli_poly(2, Rational(1, 2)) == Rational(-1, 12));
  for (long n = 0; n <= 16; ++n) {
    if (n == 1) continue;
    CHECK(bernoulli_poly(n, Rational(0)) == bernoulli_number(n));
  }
  // difference property B_n(x+1) - B_n(x) = n x^{n-1} at a few points
  for (long n = 1; n <= 8; ++n) {
    const Rational x(3, 7);
    Rational xpow = 1;
    for (long i = 0; i < n - 1; ++i) xpow *= x;
    CHECK(bernoulli_poly(n, x + Rational(1)) - bernoulli_poly(n, x) == Rational(n) * xpow);
  }
}

TEST_CASE("a_coeff") {
  CHECK(a_coeff(1, 1) == Rational(1));
  CHECK(a_coeff(2, 2) == Rational(3, 2));
  CHECK(a_coeff(2, 1) == Rational(1));
  CHECK_THROWS_AS(a_coeff(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(a_coeff(2, 0), std::invalid_argument);
}

TEST_CASE("lemma 1 evaluators") {
  CHECK(lemma1_lhs(0, Rational(5)) == Rational(1, 5));
  CHECK(lemma1_lhs(1, Rational(1)) == Rational(1, 2));
  CHECK(lemma1_lhs(2, Rational(1, 2)) == Rational(16, 15));
  CHECK(lemma1_rhs(0, Rational(5)) == Rational(1, 5));
  CHECK(lemma1_rhs(1, Rational(1)) == Rational(1, 2));
  CHECK(lemma1_rhs(2, Rational(1, 2)) == Rational(16, 15));
  CHECK_THROWS_AS(lemma1_lhs(1, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(lemma1_rhs(1, Rational(-3)), std::domain_error);

  std::vector<Rational> ms;
  for (long i = 1; i <= 10; ++i) ms.push_back(Rational(i));
  ms.push_back(Rational(1, 2));
  ms.push_back(Rational(3, 2));
  ms.push_back(Rational(7, 3));
  for (long n = 0; n <= 12; ++n)
    for (const Rational& m : ms) CHECK(lemma1_lhs(n, m) == lemma1_rhs(n, m));
}

TEST_CASE("tail_coeff") {
  CHECK(tail_coeff(1, 1) == Rational(1, 2));
  CHECK(tail_coeff(2, 1) == Rational(1, 3));
  CHECK(tail_coeff(0, 3) == Rational(1, 3));
  CHECK(tail_coeff(0, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(tail_coeff(1, 0), std::invalid_argument);
}

TEST_CASE("truncated series basics") {
  const auto opx = TruncatedSeries::one_plus_x(5);
  const auto lg = ts_log(opx);
  CHECK(lg[0] == Rational(0));
  CHECK(lg[1] == Rational(1));
  CHECK(lg[2] == Rational(-1, 2));
  CHECK(lg[3] == Rational(1, 3));
  CHECK(lg[4] == Rational(-1, 4));

  const auto sq = ts_mul(opx, opx);  // (1+x)^2
  const auto prod = ts_mul(sq, lg);
  CHECK(prod[2] == Rational(3, 2));  // = a_coeff(2, 2)
  CHECK(prod[3] == Rational(1, 3));  // = tail_coeff(2, 1)

  CHECK_THROWS_AS(ts_log(TruncatedSeries::x(5)), std::domain_error);
  CHECK_THROWS_AS(ts_div(opx, TruncatedSeries(5)), std::domain_error);
  CHECK_THROWS_AS(ts_mul(opx, TruncatedSeries::one(7)), std::invalid_argument);
}

TEST_CASE("log(x/sin x) coefficient oracle") {
  const std::size_t order = 8;
  TruncatedSeries sinc(order);  // sin(x)/x
  for (std::size_t i = 0; i < order; i += 2) {
    const long k = static_cast<long>(i) / 2;
    Rational c = Rational(1) / Rational(factorial(2 * k + 1));
    sinc.at(i) = (k % 2 == 0) ? c : -c;
  }
  const auto lg = ts_log(ts_div(TruncatedSeries::one(order), sinc));
  CHECK(lg[2] == Rational(1, 6));
}

TEST_CASE("lemma 2: head and tail match the series oracle") {
  const std::size_t order = kDefaultSeriesOrder;
  const auto lg = ts_log(TruncatedSeries::one_plus_x(order));
  for (long n = 1; n <= 8; ++n) {
    const auto prod = ts_mul(ts_pow(TruncatedSeries::one_plus_x(order), n), lg);
    for (long k = 1; k <= n; ++k) CHECK(prod[k] == a_coeff(n, k));
    for (long k = 1; n + k < static_cast<long>(order); ++k)
      CHECK(prod[n + k] == tail_coeff(n, k));
  }
}

TEST_CASE("rational arithmetic matches textbook cross multiplication") {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<long> num(-200, 200);
  std::uniform_int_distribution<long> den(1, 60);
  for (int i = 0; i < 500; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational sum = Rational(a, b) + Rational(c, d);
    CHECK(sum == Rational(a * d + c * b, b * d));
    CHECK(sum.denominator() > 0);
    if (sum.numerator() != 0)
      CHECK(boost::multiprecision::gcd(BigInt(abs(sum).numerator()), sum.denominator()) == 1);
    else
      CHECK(sum.denominator() == 1);
    const Rational prod = Rational(a, b) * Rational(c, d);
    CHECK(prod == Rational(a * c, b * d));
  }
}

TEST_CASE("series division round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    TruncatedSeries a(10), b(10);
    for (std::size_t i = 0; i < 10; ++i) {
      a.at(i) = Rational(coeff(rng));
      b.at(i) = Rational(coeff(rng));
    }
    if (b[0].is_zero()) b.at(0) = 3;
    CHECK(ts_mul(ts_div(a, b), b) == a);
  }
}

TEST_CASE("derivative and integral are mutually inverse up to truncation") {
  const auto lg = ts_log(TruncatedSeries::one_plus_x(9));
  CHECK(ts_integrate(ts_derivative(lg)) == lg);  // log has zero constant term
}
