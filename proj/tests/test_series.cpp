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

#include <blissard/series.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace blissard;
using doctest::Approx;

namespace {

SeriesSpec make(const std::string& term, long start = 1, std::string var = "n") {
  SeriesSpec s;
  s.index_var = std::move(var);
  s.start = start;
  s.term = parse(term);
  return s;
}

}  // namespace

TEST_CASE("partial_sum basics") {
  // row B at theta = pi: every term is sin(n pi)/n = 0
  const auto zero = partial_sum(make("sin(n*theta)/n"), M_PI, 200);
  CHECK(std::abs(zero.value) < 1e-13);
  CHECK(zero.terms_used == 200);
  CHECK(zero.method == SumMethod::direct);

  // row M at theta = 0: eta(4) = 7 pi^4 / 720, alternating so 1e3 terms
  // leave an error ~ N^-4
  const auto m0 = partial_sum(make("(-1)^(n+1)*cos(n*theta)/n^4"), 0.0, 1000);
  CHECK(std::abs(m0.value.real() - 7 * std::pow(M_PI, 4) / 720.0) < 1e-9);

  // row I with k = 1 at theta = 0 sums to B_2(0)/4 = 1/24; plain
  // truncation of this positive tail converges like 1/(4 pi^2 N)
  const auto i0 = partial_sum(make("cos(2*n*pi*theta)/(2*n*pi)^2"), 0.0, 10000);
  CHECK(std::abs(i0.value.real() - 1.0 / 24.0) < 1e-5);
  CHECK(std::abs(i0.value.real() - 1.0 / 24.0) > 1e-8);  // truncation floor is real

  CHECK_THROWS_AS(partial_sum(make("1/n"), 0.0, 0), SeriesError);
}

TEST_CASE("partial_sum aborts on non-finite terms with the index") {
  try {
    partial_sum(make("1/(n - 5)"), 0.0, 100);
    FAIL("expected SeriesError");
  } catch (const SeriesError& e) {
    CHECK(e.index == 5);
  }
}

TEST_CASE("abel_sum: geometric sanity anchor") {
  const auto est = abel_sum(make("(1/2)^n", 0), 0.0, 1e-10);
  CHECK(std::abs(est.value.real() - 2.0) < 1e-10);
  CHECK(est.method == SumMethod::abel);
}

TEST_CASE("abel_sum on the catalog staples") {
  // row B at pi/2 is the Leibniz series
  const auto b = abel_sum(make("sin(n*theta)/n"), M_PI / 2, 1e-9);
  CHECK(std::abs(b.value.real() - M_PI / 4) < 1e-9);

  // row A at pi: sum (-1)^n/n = -log 2
  const auto a = abel_sum(make("cos(n*theta)/n"), M_PI, 1e-9);
  CHECK(std::abs(a.value.real() + std::log(2.0)) < 1e-9);

  // harmonic-number series at theta = 0: 2 sum (-1)^{n-1} H_n = log 2... as
  // the real part of the full identity
  const auto h = abel_sum(make("2*(-1)^(n-1)*harmonic(n)*cos(n*theta)"), 0.0, 1e-7);
  CHECK(std::abs(h.value.real() - std::log(2.0)) < 1e-7);

  // terms with periodic zeros must not truncate the inner sums early
  const auto j0 = abel_sum(make("sin(2*n*pi*theta)/(2*n*pi)"), 0.3, 1e-9);
  CHECK(std::abs(j0.value.real() - (0.25 - 0.15)) < 1e-9);
}

TEST_CASE("abel_sum reports failure to stabilize") {
  // the harmonic series: g(r) = -log(1-r) grows by log 2 per radius, so
  // the ladder never settles; the loose tolerance keeps inner sums short
  CHECK_THROWS_WITH_AS(abel_sum(make("1/n"), 0.0, 0.5),
                       "abel_sum: failed to stabilize within 24 radii", SeriesError);
}

TEST_CASE("euler_sum on alternating series") {
  // Mercator at 1
  const auto log2 = euler_sum(make("(-1)^(k-1)/k", 1, "k"), 0.0, 1e-12);
  CHECK(std::abs(log2.value.real() - std::log(2.0)) < 1e-12);
  CHECK(log2.method == SumMethod::euler);

  // telescoping: sum (-1)^{k-1}/(k(k+1)) = 2 log 2 - 1
  const auto t = euler_sum(make("(-1)^(k-1)/(k*(k+1))", 1, "k"), 0.0, 1e-12);
  CHECK(std::abs(t.value.real() - (2 * std::log(2.0) - 1.0)) < 1e-12);

  // row D at theta = 1 sums to 1/2 although its signs only mostly alternate
  SeriesSpec d = make("(-1)^(n-1)*sin(n*theta)/n");
  const auto est = euler_sum(d, 1.0, 1e-10);
  CHECK(std::abs(est.value.real() - 0.5) < 1e-10);

  // positive terms are rejected
  CHECK_THROWS_AS(euler_sum(make("1/k^2", 1, "k"), 0.0, 1e-8), SeriesError);

  // terms with exact zeros fall back to direct summation
  const auto z = euler_sum(make("sin(n*theta)/n^4"), M_PI, 1e-10);
  CHECK(z.method == SumMethod::direct);
  CHECK(std::abs(z.value) < 1e-13);
}

TEST_CASE("euler_sum agrees with deep direct summation") {
  const auto e = euler_sum(make("(-1)^(k-1)/k", 1, "k"), 0.0, 1e-10);
  const auto d = partial_sum(make("(-1)^(k-1)/k", 1, "k"), 0.0, 1000000);
  CHECK(std::abs(e.value - d.value) < 1e-5);  // direct is only ~1/N accurate
  CHECK(std::abs(e.value.real() - std::log(2.0)) < 1e-10);
}

TEST_CASE("bilateral_sum on rows K and L") {
  SeriesSpec k;
  k.bilateral = true;
  k.term = parse("cos((n - a)*theta)/(n - a)");
  SeriesSpec l;
  l.bilateral = true;
  l.term = parse("sin((n - a)*theta)/(n - a)");

  // row L at theta = pi, a = 1/2
  const auto l1 = bilateral_sum(l, M_PI, 0.5, 600);
  CHECK(std::abs(l1.value.real() - M_PI) < 1e-5);

  // row K at theta = pi, a = 1/2: -pi/tan(pi/2) = 0
  const auto k1 = bilateral_sum(k, M_PI, 0.5, 600);
  CHECK(std::abs(k1.value.real()) < 1e-5);

  // row K at theta = pi, a = 1/4: -pi/tan(pi/4) = -pi, cross-checked
  // against a brute-force symmetric sum
  const auto k2 = bilateral_sum(k, M_PI, 0.25, 600);
  CHECK(std::abs(k2.value.real() + M_PI) < 1e-5);
  const auto brute = bilateral_sum(k, M_PI, 0.25, 1000000, false);
  CHECK(std::abs(k2.value.real() - brute.value.real()) < 1e-4);

  CHECK_THROWS_AS(bilateral_sum(k, 1.0, 2.0, 100), SeriesError);  // integer a
}

TEST_CASE("bilateral pairing matches the brute-force order exactly") {
  SeriesSpec l;
  l.bilateral = true;
  l.term = parse("sin((n - a)*theta)/(n - a)");
  const double theta = 2.0, a = 0.3;
  const long N = 257;
  const auto est = bilateral_sum(l, theta, a, N, false);

  EvalContext ctx;
  ctx["theta"] = theta;
  ctx["a"] = a;
  const Expr term = std::get<Expr>(l.term);
  auto at = [&](long n) {
    EvalContext c = ctx;
    c["n"] = double(n);
    return eval(term, c);
  };
  std::complex<double> s = at(0);
  for (long n = 1; n <= N; ++n) {
    s += at(n);
    s += at(-n);
  }
  CHECK(est.value.real() == s.real());
  CHECK(est.value.imag() == s.imag());
  CHECK(est.terms_used == 2 * N + 1);
}

TEST_CASE("direct and abel agree on absolutely convergent rows") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> th(0.05, 0.95);
  SeriesSpec i1 = make("cos(2*n*pi*theta)/(2*n*pi)^2");
  for (int s = 0; s < 10; ++s) {
    const double theta = th(rng);
    const auto d = partial_sum(i1, theta, 100000);
    const auto ab = abel_sum(i1, theta, 1e-8);
    CHECK(std::abs(d.value - ab.value) < 1e-7);
  }
}

TEST_CASE("engines are deterministic") {
  const auto a1 = abel_sum(make("sin(n*theta)/n"), 1.1, 1e-9);
  const auto a2 = abel_sum(make("sin(n*theta)/n"), 1.1, 1e-9);
  CHECK(a1.value.real() == a2.value.real());
  CHECK(a1.value.imag() == a2.value.imag());
  CHECK(a1.terms_used == a2.terms_used);
}
