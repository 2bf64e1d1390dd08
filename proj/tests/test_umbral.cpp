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
#include <blissard/umbral.hpp>

#include <doctest.h>

#include <random>

using namespace blissard;

namespace {

UmbralPoly R(const Rational& e) { return UmbralPoly::monomial(1, e); }

UmbralPoly one_minus_R() { return u_sub(UmbralPoly::constant(1), R(1)); }

UmbralPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<long> expo_num(0, 9);
  std::uniform_int_distribution<long> expo_den(1, 3);
  std::vector<UmbralPoly::Term> ts;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    ts.push_back({Rational(coeff(rng)), Rational(expo_num(rng), expo_den(rng))});
  return UmbralPoly(std::move(ts));
}

}  // namespace

TEST_CASE("exponent law and normalization") {
  CHECK(u_mul(R(1), R(2)) == R(3));
  CHECK(u_mul(R(Rational(1, 2)), one_minus_R()) ==
        u_sub(R(Rational(1, 2)), R(Rational(3, 2))));

  const UmbralPoly sq = u_mul(one_minus_R(), one_minus_R());
  UmbralPoly expect({{1, 0}, {-2, 1}, {1, 2}});
  CHECK(sq == expect);
  CHECK(sq.terms().size() == 3);
}

TEST_CASE("u_pow") {
  CHECK(u_pow(one_minus_R(), 0) == UmbralPoly::constant(1));
  CHECK(u_pow(one_minus_R(), 2) == UmbralPoly({{1, 0}, {-2, 1}, {1, 2}}));
  CHECK(u_pow(one_minus_R(), 3) == UmbralPoly({{1, 0}, {-3, 1}, {3, 2}, {-1, 3}}));
  CHECK_THROWS_AS(u_pow(one_minus_R(), -1), std::invalid_argument);
}

TEST_CASE("lowering functional") {
  CHECK(u_eval(u_sub(R(1), R(2))) == Rational(1, 2));
  CHECK(u_eval(u_mul(R(1), u_pow(one_minus_R(), 1))) == Rational(1, 2));
  CHECK(u_eval(u_mul(R(Rational(1, 2)), u_pow(one_minus_R(), 2))) == Rational(16, 15));
  CHECK(u_eval(UmbralPoly::constant(Rational(7, 3))) == Rational(7, 3));
  CHECK_THROWS_AS(u_eval(R(Rational(-1, 2))), std::domain_error);
}

TEST_CASE("linearity of the functional") {
  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    const UmbralPoly a = random_poly(rng);
    const UmbralPoly b = random_poly(rng);
    CHECK(u_eval(u_add(a, b)) == u_eval(a) + u_eval(b));
  }
}

TEST_CASE("product is commutative and associative") {
  std::mt19937 rng(101);
  for (int i = 0; i < 60; ++i) {
    const UmbralPoly a = random_poly(rng);
    const UmbralPoly b = random_poly(rng);
    const UmbralPoly c = random_poly(rng);
    CHECK(u_mul(a, b) == u_mul(b, a));
    CHECK(u_mul(u_mul(a, b), c) == u_mul(a, u_mul(b, c)));
  }
}

TEST_CASE("functional route equals the exact evaluators") {
  std::vector<Rational> ms;
  for (long i = 1; i <= 10; ++i) ms.push_back(Rational(i));
  ms.push_back(Rational(1, 2));
  ms.push_back(Rational(3, 2));
  ms.push_back(Rational(7, 3));
  for (long n = 0; n <= 12; ++n) {
    const UmbralPoly pw = u_pow(one_minus_R(), n);
    for (const Rational& m : ms) {
      const Rational v = u_eval(u_mul(R(m), pw));
      CHECK(v == lemma1_lhs(n, m));
      CHECK(v == lemma1_rhs(n, m));
    }
  }
}

TEST_CASE("induction replay") {
  const std::vector<Rational> base{Rational(1)};
  CHECK(verify_lemma1_induction(0, base));
  const std::vector<Rational> ms{Rational(1), Rational(2), Rational(1, 2)};
  CHECK(verify_lemma1_induction(6, ms));
  const std::vector<Rational> rational_m{Rational(7, 3)};
  CHECK(verify_lemma1_induction(3, rational_m));
  const std::vector<Rational> bad{Rational(0)};
  CHECK_THROWS_AS(verify_lemma1_induction(2, bad), std::domain_error);
}
