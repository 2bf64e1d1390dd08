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

#ifndef BLISSARD_CATALOG_HPP
#define BLISSARD_CATALOG_HPP

#include <blissard/expr.hpp>
#include <blissard/series.hpp>

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blissard {

struct Domain {
  Expr lo, hi;
  bool lo_closed = false, hi_closed = false;
  double lo_value = 0, hi_value = 0;  // evaluated at load
};

enum class VerifyMethod { direct, abel, euler, bilateral, exact_coeffs };
enum class IdentityStatus { expected_pass, known_discrepant };

const char* to_string(VerifyMethod m);
const char* to_string(IdentityStatus s);

struct ParamSpec {
  std::string name;
  std::vector<double> values;  // in declaration order
};

/// One catalog row: a series, its claimed closed form, the domain the
/// claim is made on, and how to check it.
struct Identity {
  std::string id;
  SeriesSpec series;
  Expr closed;
  Domain domain;
  std::vector<ParamSpec> parameters;
  VerifyMethod method = VerifyMethod::direct;
  IdentityStatus status = IdentityStatus::expected_pass;
  std::string ref;
  double tol = 1e-8;
  long terms = 100000;          // direct-method term count / bilateral pair count
  std::string exact_check;      // builtin name, method == exact_coeffs only
};

struct CatalogError : std::runtime_error {
  CatalogError(const std::string& msg, const std::string& id, int line)
      : std::runtime_error("catalog" + (id.empty() ? std::string() : " [" + id + "]") +
                           " line " + std::to_string(line) + ": " + msg),
        identity_id(id),
        line(line) {}
  std::string identity_id;
  int line;
};

std::vector<Identity> load_catalog(std::string_view text);

/// The catalog shipped inside the library.
const std::string& default_catalog_text();
const std::vector<Identity>& default_catalog();

struct VerificationSample {
  double theta = 0;
  std::vector<std::pair<std::string, double>> params;
  SumEstimate estimate;
  std::complex<double> closed_value;
  double abs_error = 0;
  bool ok = false;
  std::string note;
};

struct VerificationReport {
  std::string identity_id;
  std::vector<VerificationSample> samples;  // sorted by theta
  bool passed = false;
  double tolerance = 0;
};

/// Uniformly spaced points strictly inside the domain:
/// lo + i (hi-lo)/(count+1), i = 1..count.
std::vector<double> interior_samples(const Domain& d, int count);

/// Runs the identity's method at each theta (and over its parameter
/// grid), comparing against the closed form by complex modulus.
VerificationReport verify(const Identity& ident, std::span<const double> thetas, double tol);

/// Same, at the identity's own tolerance and 25 interior samples.
VerificationReport verify_default(const Identity& ident);

/// Joint complex check of the two first-logarithmic-function identities:
/// the Maclaurin tail of x^m (1+x)^n log(1+x) at x = e^{i theta} against
/// the trigonometric closed form, via radial summation of the tail.
VerificationReport verify_identity_I_II(int m, int n, std::span<const double> thetas, double tol);

/// Joint complex check for x^m (1-x)^n log(1-x).
VerificationReport verify_identity_III_IV(int m, int n, std::span<const double> thetas, double tol);

/// theta = 0 numeric alternating series:
/// sum (-1)^{k-1} (k-1)! n!/(n+k)! = 2^n log 2 - sum_k A_{n,k}.
VerificationReport verify_theta0_series(int n, double tol);

/// theta = pi/2 numeric alternating series against the imaginary part of
/// the m = -n closed form (the sign matches the -imag reading).
VerificationReport verify_pi_half_series(int n, double tol);

/// Exact Maclaurin comparisons (method == exact_coeffs); order <= 16.
bool verify_exact_coeffs(const Identity& ident, std::size_t order);
/// Detailed variant; on mismatch `bad_index` holds the coefficient index.
bool verify_exact_coeffs(const Identity& ident, std::size_t order, std::size_t& bad_index);

/// Native (non-textual) identity ids known to verify_native.
std::vector<std::string> native_identity_ids();
bool is_native_identity(std::string_view id);

/// Runs a native identity over its default parameter grid.
VerificationReport verify_native(std::string_view id, double tol);
/// Default tolerance used by check-all for a native identity.
double native_default_tol(std::string_view id);

}  // namespace blissard

#endif  // BLISSARD_CATALOG_HPP
