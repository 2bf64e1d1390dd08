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

#ifndef BLISSARD_SERIES_HPP
#define BLISSARD_SERIES_HPP

#include <blissard/expr.hpp>

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <variant>

namespace blissard {

/// Term supplied as native code instead of an expression tree.
using NativeTerm = std::function<std::complex<double>(long n, double theta)>;

/// One-sided (n = start, start+1, ...) or bilateral (all integers) series.
/// The term is an expression in the index variable, theta and any bound
/// parameters, or a native callback.
struct SeriesSpec {
  std::string index_var = "n";
  long start = 1;
  bool bilateral = false;
  std::variant<Expr, NativeTerm> term;
  std::map<std::string, std::complex<double>, std::less<>> parameters;
};

enum class SumMethod { direct, abel, euler, bilateral_direct };

const char* to_string(SumMethod m);

struct SumEstimate {
  std::complex<double> value;
  double error_bound = 0;  // heuristic flag, not a guarantee
  long terms_used = 0;
  SumMethod method = SumMethod::direct;
};

struct SeriesError : std::runtime_error {
  explicit SeriesError(const std::string& msg, long index = 0)
      : std::runtime_error(msg), index(index) {}
  long index;
};

/// Sum of the first n_terms terms; error_bound is |last term|.
SumEstimate partial_sum(const SeriesSpec& s, double theta, long n_terms);

/// Radial summation: evaluates g(r_j) = sum term(n) r_j^n at radii
/// r_j = 1 - 2^-j (j = 3,4,...,24) and extrapolates the ladder to r = 1,
/// stopping when two successive extrapolated values differ by < tol/4.
/// Inner sums truncate once 16 consecutive damped terms fall below
/// tol * 2^-10, with a hard cap of 2 * 2^(j+4) terms per radius.
SumEstimate abel_sum(const SeriesSpec& s, double theta, double tol);

/// Euler transform of an alternating series; forward-difference depth up
/// to 64, stopping when the transformed increment is < tol/4.  The sign
/// pattern is validated on the first 16 terms; series with exact zero
/// terms fall back to direct summation.
SumEstimate euler_sum(const SeriesSpec& s, double theta, double tol);

/// Symmetric bilateral sum: the n = 0 term plus pairs (n, -n) for
/// n = 1..n_pairs.  With acceleration, a Wynn epsilon table over the last
/// partial sums extrapolates the limit; without it the raw symmetric sum
/// is returned with additions in a fixed documented order
/// (s = t(0); for n = 1..N: s += t(n); s += t(-n)).
SumEstimate bilateral_sum(const SeriesSpec& s, double theta, double a, long n_pairs,
                          bool accelerate = true);

}  // namespace blissard

#endif  // BLISSARD_SERIES_HPP
