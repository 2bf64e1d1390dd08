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

#include <stdexcept>
#include <vector>

namespace blissard {

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

Rational harmonic(long n) {
  if (n < 0) throw std::invalid_argument("harmonic: negative argument");
  Rational h = 0;
  for (long k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

Rational bernoulli_number(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative argument");
  std::vector<Rational> b;
  b.reserve(n + 1);
  b.push_back(1);
  for (long i = 1; i <= n; ++i) {
    Rational s = 0;
    for (long k = 0; k < i; ++k) s += Rational(binomial(i + 1, k)) * b[k];
    b.push_back(-s / Rational(i + 1));
  }
  return b[n];
}

Rational bernoulli_poly(long n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: negative argument");
  // Horner over sum_{k=0..n} C(n,k) B_k x^{n-k}
  Rational acc = 0;
  for (long k = 0; k <= n; ++k) {
    acc = acc * x + Rational(binomial(n, k)) * bernoulli_number(k);
  }
  return acc;
}

Rational a_coeff(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("a_coeff: need 1 <= k <= n");
  Rational s = 0;
  for (long j = 1; j <= k; ++j) {
    Rational term = Rational(binomial(n, j - 1)) / Rational(k - j + 1);
    s += ((k - j) % 2 == 0) ? term : -term;
  }
  return s;
}

Rational lemma1_lhs(long n, const Rational& m) {
  if (n < 0) throw std::invalid_argument("lemma1_lhs: negative n");
  if (m.sign() <= 0) throw std::domain_error("lemma1_lhs: requires m > 0");
  Rational s = 0;
  for (long k = 0; k <= n; ++k) {
    Rational term = Rational(binomial(n, k)) / (m + Rational(k));
    s += (k % 2 == 0) ? term : -term;
  }
  return s;
}

Rational lemma1_rhs(long n, const Rational& m) {
  if (n < 0) throw std::invalid_argument("lemma1_rhs: negative n");
  if (m.sign() <= 0) throw std::domain_error("lemma1_rhs: requires m > 0");
  Rational r = Rational(1) / m;
  for (long k = 1; k <= n; ++k) r *= Rational(k) / (m + Rational(k));
  return r;
}

Rational tail_coeff(long n, long k) {
  if (n < 0) throw std::invalid_argument("tail_coeff: negative n");
  if (k < 1) throw std::invalid_argument("tail_coeff: requires k >= 1");
  Rational t = Rational(1, n + 1);  // t_1 = 0! n! / (n+1)!
  for (long j = 1; j < k; ++j) t *= Rational(-j, n + j + 1);
  return t;
}

}  // namespace blissard
