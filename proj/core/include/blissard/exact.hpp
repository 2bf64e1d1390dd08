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

#ifndef BLISSARD_EXACT_HPP
#define BLISSARD_EXACT_HPP

#include <blissard/rational.hpp>

namespace blissard {

/// H_n = 1 + 1/2 + ... + 1/n, exactly.  H_0 = 0.
Rational harmonic(long n);

/// Bernoulli number B_n with the convention B_1 = -1/2, computed from the
/// defining recurrence sum_{k=0..n} C(n+1,k) B_k = 0.
Rational bernoulli_number(long n);

/// Bernoulli polynomial B_n(x) = sum_{k=0..n} C(n,k) B_k x^{n-k}.
Rational bernoulli_poly(long n, const Rational& x);

/// A_{n,k} = sum_{j=1..k} (-1)^{k-j} C(n, j-1) / (k-j+1), for 1 <= k <= n.
/// Head coefficients of the Maclaurin expansion of (1+x)^n log(1+x).
Rational a_coeff(long n, long k);

/// sum_{k=0..n} (-1)^k C(n,k) / (m+k), m > 0.
Rational lemma1_lhs(long n, const Rational& m);

/// n! / prod_{k=0..n} (m+k), m > 0.  Multiplicative recurrence, no factorials.
Rational lemma1_rhs(long n, const Rational& m);

/// (-1)^{k-1} (k-1)! n! / (n+k)!, k >= 1, via the term recurrence
/// t_{j+1} = -t_j * j / (n+j+1).  Tail coefficients of (1+x)^n log(1+x).
Rational tail_coeff(long n, long k);

}  // namespace blissard

#endif  // BLISSARD_EXACT_HPP
