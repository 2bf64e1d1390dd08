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

#include <blissard/catalog.hpp>

namespace blissard {

namespace {

const char kCatalog[] = R"CATALOG(# Trigonometric series with closed-form sums.
# Each entry pairs a series with its claimed closed form on a stated
# domain, the verification method, and a tolerance.  known_discrepant
# entries record readings that do not hold as printed; the suite asserts
# that their verification fails.

[identity A]
series = sum(n = 1 .. inf, cos(n*theta)/n)
closed = -log(2*sin(theta/2))
domain = (0, 2*pi)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row A"

[identity B]
series = sum(n = 1 .. inf, sin(n*theta)/n)
closed = (pi - theta)/2
domain = (0, 2*pi)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row B"

[identity C]
series = sum(n = 1 .. inf, (-1)^(n-1)*cos(n*theta)/n)
closed = log(2*cos(theta/2))
domain = (-pi, pi)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row C; theta -> pi - theta in A"

[identity D]
series = sum(n = 1 .. inf, (-1)^(n-1)*sin(n*theta)/n)
closed = theta/2
domain = (-pi, pi)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row D; theta -> pi - theta in B"

[identity E]
series = sum(n = 0 .. inf, cos((2*n+1)*theta)/(2*n+1))
closed = -(1/2)*log(tan(theta/2))
domain = (0, pi)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row E; (A + C)/2"

[identity F]
series = sum(n = 0 .. inf, sin((2*n+1)*theta)/(2*n+1))
closed = pi/4
domain = (0, pi)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row F; (B + D)/2"

[identity G]
series = sum(n = 0 .. inf, (-1)^n*cos((2*n+1)*theta)/(2*n+1))
closed = pi/4
domain = (-pi/2, pi/2)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row G; theta -> pi/2 - theta in F"

[identity H]
series = sum(n = 0 .. inf, (-1)^n*sin((2*n+1)*theta)/(2*n+1))
closed = (1/4)*log((1 + sin(theta))/(1 - sin(theta)))
domain = (-pi/2, pi/2)
method = abel
tol = 1e-8
status = expected_pass
ref = "historical table, row H; theta -> pi/2 - theta in E"

# Rows I and J: one entry per series weight, because each k has its own
# Bernoulli-polynomial closed form.

[identity I-k1]
series = sum(n = 1 .. inf, cos(2*n*pi*theta)/(2*n*pi)^2)
closed = (theta^2 - theta + 1/6)/4
domain = [0, 1]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row I with k = 1; B_2(theta)/4"

[identity I-k2]
series = sum(n = 1 .. inf, cos(2*n*pi*theta)/(2*n*pi)^4)
closed = -(theta^4 - 2*theta^3 + theta^2 - 1/30)/48
domain = [0, 1]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row I with k = 2; -B_4(theta)/48"

[identity I-k3]
series = sum(n = 1 .. inf, cos(2*n*pi*theta)/(2*n*pi)^6)
closed = (theta^6 - 3*theta^5 + (5/2)*theta^4 - (1/2)*theta^2 + 1/42)/1440
domain = [0, 1]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row I with k = 3; B_6(theta)/1440"

[identity J-k0]
series = sum(n = 1 .. inf, sin(2*n*pi*theta)/(2*n*pi))
closed = 1/4 - theta/2
domain = (0, 1)
method = abel
tol = 1e-5
status = expected_pass
ref = "historical table, row J with k = 0; -B_1(theta)/2"

[identity J-k1]
series = sum(n = 1 .. inf, sin(2*n*pi*theta)/(2*n*pi)^3)
closed = (theta^3 - (3/2)*theta^2 + theta/2)/12
domain = [0, 1]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row J with k = 1; B_3(theta)/12"

[identity J-k2]
series = sum(n = 1 .. inf, sin(2*n*pi*theta)/(2*n*pi)^5)
closed = -(theta^5 - (5/2)*theta^4 + (5/3)*theta^3 - theta/6)/240
domain = [0, 1]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row J with k = 2; -B_5(theta)/240"

[identity J-k3]
series = sum(n = 1 .. inf, sin(2*n*pi*theta)/(2*n*pi)^7)
closed = (theta^7 - (7/2)*theta^6 + (7/2)*theta^5 - (7/6)*theta^3 + theta/6)/10080
domain = [0, 1]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row J with k = 3; B_7(theta)/10080"

[identity K]
series = bisum(n, cos((n - a)*theta)/(n - a))
closed = -pi/tan(a*pi)
domain = (0, 2*pi)
method = bilateral
params = a in {1/4, 0.3, 1.4}
terms = 600
tol = 1e-5
status = expected_pass
ref = "historical table, row K"

[identity L]
series = bisum(n, sin((n - a)*theta)/(n - a))
closed = pi
domain = (0, 2*pi)
method = bilateral
params = a in {1/4, 0.3, 1.4}
terms = 600
tol = 1e-5
status = expected_pass
ref = "historical table, row L"

[identity M]
series = sum(n = 1 .. inf, (-1)^(n+1)*cos(n*theta)/n^4)
closed = 7*pi^4/720 - pi^2*theta^2/24 + theta^4/48
domain = [-pi, pi]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row M; k = 2, theta -> theta/(2 pi) + 1/2 in I"

[identity N]
series = sum(n = 1 .. inf, (-1)^(n+1)*sin(n*theta)^2/n^4)
closed = pi^2*theta^2/12 - theta^4/6
domain = [-pi/2, pi/2]
method = direct
tol = 1e-8
status = expected_pass
ref = "historical table, row N; sin^2 = (1 - cos 2 n theta)/2"

# arctan(1/(x^m (1+x)^n)) family at x = e^{2 i theta}.  The closed form
# carries (2 cos theta)^n in the numerator; the 1862 printing shows
# (2 cos theta)^m there, which only agrees when m = n.

[identity arctan-recip-cos]
series = sum(k = 0 .. inf, (-1)^k*cos((2*k+1)*m_p*theta)/((2*k+1)*(2*cos(theta))^((2*k+1)*n_p)))
closed = (1/2)*atan(2*(2*cos(theta))^n_p*cos(m_p*theta)/((2*cos(theta))^(2*n_p) - 1))
domain = (0, pi/3)
method = direct
params = m_p in {1, 2}
params = n_p in {1, 2}
terms = 4000
tol = 1e-8
status = expected_pass
ref = "other functions: arctan reciprocal, cosine part"

[identity arctan-recip-sin]
series = sum(k = 0 .. inf, (-1)^k*sin((2*k+1)*m_p*theta)/((2*k+1)*(2*cos(theta))^((2*k+1)*n_p)))
closed = (1/4)*log((1 + 2*(2*cos(theta))^n_p*sin(m_p*theta) + (2*cos(theta))^(2*n_p))/(1 - 2*(2*cos(theta))^n_p*sin(m_p*theta) + (2*cos(theta))^(2*n_p)))
domain = (0, pi/3)
method = direct
params = m_p in {1, 2}
params = n_p in {1, 2}
terms = 4000
tol = 1e-8
status = expected_pass
ref = "other functions: arctan reciprocal, sine part"

# log(1 + x + x^2) family at x = e^{2 i theta}.

[identity log1xx2-1]
series = sum(k = 1 .. inf, (-1)^(k-1)*cos(3*k*theta)/(k*(2*cos(theta))^k))
closed = log((1 + 2*cos(2*theta))/(2*cos(theta)))
domain = (-pi/3, pi/3)
method = direct
terms = 4000
tol = 1e-8
status = expected_pass
ref = "log(1+x+x^2) family, row 1"

[identity log1xx2-2]
series = sum(k = 1 .. inf, (-1)^(k-1)*sin(3*k*theta)/(k*(2*cos(theta))^k))
closed = theta
domain = (-pi/3, pi/3)
method = direct
terms = 4000
tol = 1e-8
status = expected_pass
ref = "log(1+x+x^2) family, row 2"

# Rows 3 and 4 converge only where |2 cos theta| < 1, i.e. on
# (pi/3, 2 pi/3), where 1 + 2 cos 2 theta is negative: the convergent
# sums are log|1 + 2 cos 2 theta| and 2 theta - pi (principal branch).
# The printed forms log(1 + 2 cos 2 theta) and 2 theta belong to the
# divergent range |theta| < pi/3.

[identity log1xx2-3]
series = sum(k = 1 .. inf, (-1)^(k-1)*(2*cos(theta))^k*cos(3*k*theta)/k)
closed = log(abs(1 + 2*cos(2*theta)))
domain = (pi/3, 2*pi/3)
method = direct
terms = 4000
tol = 1e-8
status = expected_pass
ref = "log(1+x+x^2) family, row 3, on its range of convergence"

[identity log1xx2-4]
series = sum(k = 1 .. inf, (-1)^(k-1)*(2*cos(theta))^k*sin(3*k*theta)/k)
closed = 2*theta - pi
domain = (pi/3, 2*pi/3)
method = direct
terms = 4000
tol = 1e-8
status = expected_pass
ref = "log(1+x+x^2) family, row 4 read with sin, on its range of convergence"

[identity log1xx2-4-literal]
series = sum(k = 1 .. inf, (-1)^(k-1)*(2*cos(theta))^k*cos(3*k*theta)/k)
closed = 2*theta
domain = (pi/3, 2*pi/3)
method = direct
terms = 4000
tol = 1e-8
status = known_discrepant
ref = "log(1+x+x^2) family, fourth row as printed (duplicate cos, sum 2 theta)"

# 1 + x + ... + x^{n+r} family, shipped with n = 1, r = 2.  The printed
# start index k = 0 divides by zero; the series is read with k = 1 and
# the Mercator sign pattern (-1)^{k-1}.

[identity sinratio-cos]
series = sum(k = 1 .. inf, (-1)^(k-1)*(sin(theta)/sin(2*theta))^k*cos(3*k*theta)/k)
closed = log(sin(3*theta)/sin(2*theta))
domain = (0, pi/3)
method = direct
terms = 4000
tol = 1e-8
status = expected_pass
ref = "sin-ratio family, cosine part, n = 1, r = 2"

[identity sinratio-sin]
series = sum(k = 1 .. inf, (-1)^(k-1)*(sin(theta)/sin(2*theta))^k*sin(3*k*theta)/k)
closed = theta
domain = (0, pi/3)
method = direct
terms = 4000
tol = 1e-8
status = expected_pass
ref = "sin-ratio family, sine part, n = 1, r = 2"

# The two "elegant formulae": quotients of entire series equal to
# tan(cos theta).  Written as single series identical to zero, so that
# 20-term partial sums decide them to full precision.

[identity elegant-1]
series = sum(n = 0 .. inf, (-1)^n*(cos((2*n+1)*theta)/fact(2*n+1) - tan(cos(theta))*cos(2*n*theta)/fact(2*n)))
closed = 0
domain = (-pi, pi)
method = direct
terms = 20
tol = 1e-12
status = expected_pass
ref = "elegant formula, cosine quotient"

[identity elegant-2]
series = sum(n = 0 .. inf, (-1)^(n-1)*sin(2*n*theta)/fact(2*n) - tan(cos(theta))*(-1)^n*sin((2*n+1)*theta)/fact(2*n+1))
closed = 0
domain = (-pi, pi)
method = direct
terms = 20
tol = 1e-12
status = expected_pass
ref = "elegant formula, sine quotient"

[identity piecewise-cube]
series = sum(n = 0 .. inf, (-1)^n*cos((2*n+1)*theta)/(2*n+1)^3)
closed = piecewise((0,pi/2]: pi^3/32 - pi*theta^2/8; [pi/2,3*pi/2]: 3*pi^3/32 - pi^2*theta/4 + pi*theta^2/8; [3*pi/2,2*pi): -15*pi^3/32 + pi^2*theta/2 - pi*theta^2/8)
domain = (0, 2*pi)
method = direct
terms = 20000
tol = 1e-8
status = expected_pass
ref = "several ranges of application: (2n+1)^-3 example"

# Harmonic-number series.  The printed right side log(2 cos theta) +
# theta tan theta pairs with x = e^{2 i theta}; with the printed series
# in cis(n theta) the consistent closed form uses theta/2 throughout.

[identity harmonic-cis]
series = sum(n = 1 .. inf, 2*(-1)^(n-1)*harmonic(n)*cis(n*theta))
closed = log(2*cos(theta/2)) + (theta/2)*tan(theta/2) + cis(pi/2)*(theta/2 - tan(theta/2)*log(2*cos(theta/2)))
domain = (-pi, pi)
method = abel
tol = 1e-5
status = expected_pass
ref = "more examples: harmonic-number series"

# Exact Maclaurin identities, compared coefficient-by-coefficient.

[identity log1px-ratio]
check = log1px_over_1px
method = exact_coeffs
status = expected_pass
ref = "more examples: log(1+x)/(1+x) = sum (-1)^(n-1) H_n x^n"

[identity log-x-over-sinx]
check = log_x_over_sinx
method = exact_coeffs
status = expected_pass
ref = "more examples: log(x/sin x) via even Bernoulli numbers"

[identity log-secx]
check = log_secx
method = exact_coeffs
status = expected_pass
ref = "more examples: log(sec x) via even Bernoulli numbers"
)CATALOG";

}  // namespace

const std::string& default_catalog_text() {
  static const std::string text(kCatalog);
  return text;
}

}  // namespace blissard
