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
#include <blissard/exact.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace blissard {

namespace {

using C = std::complex<double>;

// Signed tail coefficients (-1)^{k-1} (k-1)! n! / (n+k)! as doubles,
// grown on demand and cached per n.
double tail_coeff_double(int n, long k) {
  static std::unordered_map<int, std::vector<double>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[n];
  if (v.empty()) v = {0.0, 1.0 / (n + 1)};  // v[1] = t_1
  while (static_cast<long>(v.size()) <= k) {
    const long j = static_cast<long>(v.size()) - 1;
    v.push_back(-v.back() * static_cast<double>(j) / static_cast<double>(n + j + 1));
  }
  return v[k];
}

// (2k-2)! n! / (n+2k-1)! as doubles (unsigned), cached per n.
double pi_half_coeff_double(int n, long k) {
  static std::unordered_map<int, std::vector<double>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[n];
  if (v.empty()) v = {0.0, 1.0 / (n + 1)};  // k = 1: 0! n!/(n+1)!
  while (static_cast<long>(v.size()) <= k) {
    const long j = static_cast<long>(v.size()) - 1;  // have u_j, make u_{j+1}
    const double num = static_cast<double>(2 * j) * static_cast<double>(2 * j - 1);
    const double den = static_cast<double>(n + 2 * j + 1) * static_cast<double>(n + 2 * j);
    v.push_back(v.back() * num / den);
  }
  return v[k];
}

std::vector<double> a_coeff_doubles(int n) {
  std::vector<double> a(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) a[k] = a_coeff(n, k).to_double();
  return a;
}

// -sum_k A_{n,k} cis((k+m)t)
//   + (2 cos(t/2))^n [log(2 cos(t/2)) + i t/2] cis((m+n/2) t)
C closed_first_log(int m, int n, double t) {
  const std::vector<double> a = a_coeff_doubles(n);
  C head{};
  for (int k = 1; k <= n; ++k) head += a[k] * std::polar(1.0, (k + m) * t);
  const double c = 2.0 * std::cos(t / 2.0);
  const C logfac(std::log(c), t / 2.0);
  return -head + std::pow(c, n) * logfac * std::polar(1.0, (m + 0.5 * n) * t);
}

// sum_k A_{n,k} cis((k+m)t)
//   + (2 sin(t/2))^n [log(2 sin(t/2)) + i t/2] cis(n pi/2 - (m+n/2) t)
C closed_second_log(int m, int n, double t) {
  const std::vector<double> a = a_coeff_doubles(n);
  C head{};
  for (int k = 1; k <= n; ++k) head += a[k] * std::polar(1.0, (k + m) * t);
  const double s = 2.0 * std::sin(t / 2.0);
  const C logfac(std::log(s), t / 2.0);
  return head + std::pow(s, n) * logfac * std::polar(1.0, n * M_PI / 2.0 - (m + 0.5 * n) * t);
}

VerificationSample make_sample(double theta, std::vector<std::pair<std::string, double>> params,
                               const SumEstimate& est, C closed, double tol) {
  VerificationSample s;
  s.theta = theta;
  s.params = std::move(params);
  s.estimate = est;
  s.closed_value = closed;
  s.abs_error = std::abs(est.value - closed);
  s.ok = std::isfinite(s.abs_error) && s.abs_error <= tol;
  return s;
}

VerificationSample failed_sample(double theta, std::vector<std::pair<std::string, double>> params,
                                 const std::string& why) {
  VerificationSample s;
  s.theta = theta;
  s.params = std::move(params);
  s.abs_error = std::numeric_limits<double>::infinity();
  s.ok = false;
  s.note = why;
  return s;
}

}  // namespace

VerificationReport verify_identity_I_II(int m, int n, std::span<const double> thetas, double tol) {
  if (n < 1) throw std::invalid_argument("verify_identity_I_II: need n >= 1");
  VerificationReport rep{"I-II", {}, true, tol};
  std::vector<double> ts(thetas.begin(), thetas.end());
  std::sort(ts.begin(), ts.end());
  SeriesSpec lhs;
  lhs.start = 1;
  lhs.term = NativeTerm([m, n](long k, double t) {
    return tail_coeff_double(n, k) * std::polar(1.0, (m + n + k) * t);
  });
  for (double t : ts) {
    std::vector<std::pair<std::string, double>> params{{"m", double(m)}, {"n", double(n)}};
    try {
      const SumEstimate est = abel_sum(lhs, t, tol / 8);
      rep.samples.push_back(make_sample(t, std::move(params), est, closed_first_log(m, n, t), tol));
    } catch (const SeriesError& err) {
      rep.samples.push_back(failed_sample(t, std::move(params), err.what()));
    }
    rep.passed = rep.passed && rep.samples.back().ok;
  }
  return rep;
}

VerificationReport verify_identity_III_IV(int m, int n, std::span<const double> thetas, double tol) {
  if (n < 1) throw std::invalid_argument("verify_identity_III_IV: need n >= 1");
  VerificationReport rep{"III-IV", {}, true, tol};
  std::vector<double> ts(thetas.begin(), thetas.end());
  std::sort(ts.begin(), ts.end());
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  SeriesSpec lhs;
  lhs.start = 1;
  lhs.term = NativeTerm([m, n, sign](long k, double t) {
    return sign * std::abs(tail_coeff_double(n, k)) * std::polar(1.0, (m + n + k) * t);
  });
  for (double t : ts) {
    std::vector<std::pair<std::string, double>> params{{"m", double(m)}, {"n", double(n)}};
    try {
      const SumEstimate est = abel_sum(lhs, t, tol / 8);
      rep.samples.push_back(make_sample(t, std::move(params), est, closed_second_log(m, n, t), tol));
    } catch (const SeriesError& err) {
      rep.samples.push_back(failed_sample(t, std::move(params), err.what()));
    }
    rep.passed = rep.passed && rep.samples.back().ok;
  }
  return rep;
}

VerificationReport verify_theta0_series(int n, double tol) {
  if (n < 0) throw std::invalid_argument("verify_theta0_series: need n >= 0");
  VerificationReport rep{"theta0-alt", {}, true, tol};
  SeriesSpec s;
  s.start = 1;
  s.term = NativeTerm([n](long k, double) { return C(tail_coeff_double(n, k), 0.0); });
  double rhs = std::pow(2.0, n) * std::log(2.0);
  for (int k = 1; k <= n; ++k) rhs -= a_coeff(n, k).to_double();
  std::vector<std::pair<std::string, double>> params{{"n", double(n)}};
  try {
    const SumEstimate est = euler_sum(s, 0.0, tol / 4);
    rep.samples.push_back(make_sample(0.0, std::move(params), est, C(rhs, 0.0), tol));
  } catch (const SeriesError& err) {
    rep.samples.push_back(failed_sample(0.0, std::move(params), err.what()));
  }
  rep.passed = rep.samples.back().ok;
  return rep;
}

VerificationReport verify_pi_half_series(int n, double tol) {
  if (n < 2) throw std::invalid_argument("verify_pi_half_series: need n >= 2");
  VerificationReport rep{"pi2-alt", {}, true, tol};
  const double t = M_PI / 2.0;
  SeriesSpec s;
  s.start = 1;
  s.term = NativeTerm([n](long k, double) {
    const double u = pi_half_coeff_double(n, k);
    return C((k % 2 == 1) ? u : -u, 0.0);
  });
  std::vector<std::pair<std::string, double>> params{{"n", double(n)}};
  SumEstimate est;
  try {
    est = euler_sum(s, t, tol / 4);
  } catch (const SeriesError& err) {
    rep.samples.push_back(failed_sample(t, params, err.what()));
    rep.samples.push_back(failed_sample(t, params, err.what()));
    rep.passed = false;
    return rep;
  }

  // the printed right side, reading its log(2 cos theta/2) at theta = pi/2
  double printed = 0;
  for (int k = 1; k <= n; ++k)
    printed += a_coeff(n, k).to_double() * std::sin((n - k) * M_PI / 2.0);
  printed += std::pow(2.0, 0.5 * n) *
             (M_PI / 4.0 * std::cos(n * M_PI / 4.0) -
              std::sin(n * M_PI / 4.0) * std::log(2.0 * std::cos(M_PI / 4.0)));
  VerificationSample s1 = make_sample(t, params, est, C(printed, 0.0), tol);
  s1.note = "printed right side, log read at theta = pi/2";
  rep.samples.push_back(std::move(s1));

  // the script's route: -imag of the m = -n closed form must equal the
  // (-1)^k reading of the series, i.e. imag equals our (-1)^{k-1} sum
  const double via_imag = closed_first_log(-n, n, t).imag();
  VerificationSample s2 = make_sample(t, params, est, C(via_imag, 0.0), tol);
  s2.note = "imaginary part of the m=-n closed form";
  rep.samples.push_back(std::move(s2));

  rep.passed = rep.samples[0].ok && rep.samples[1].ok;
  return rep;
}

// ---------------------------------------------------------------------
// Registry used by the CLI: native identities with default grids.
// ---------------------------------------------------------------------

namespace {

constexpr double kIIIIVThetas[] = {0.5, 1.7, 2.9, 4.1, 5.3};
constexpr double kIIIThetas[] = {-2.6, -1.1, 0.4, 1.9, 2.7};

VerificationReport merge(std::string id, std::vector<VerificationReport> parts) {
  VerificationReport rep{std::move(id), {}, true, parts.empty() ? 0 : parts.front().tolerance};
  for (auto& p : parts) {
    rep.passed = rep.passed && p.passed;
    for (auto& s : p.samples) rep.samples.push_back(std::move(s));
  }
  std::stable_sort(rep.samples.begin(), rep.samples.end(),
                   [](const VerificationSample& a, const VerificationSample& b) {
                     return a.theta < b.theta;
                   });
  return rep;
}

}  // namespace

std::vector<std::string> native_identity_ids() {
  return {"I", "II", "III", "IV", "Iprime", "IIprime", "theta0-alt", "pi2-alt"};
}

bool is_native_identity(std::string_view id) {
  const auto ids = native_identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

double native_default_tol(std::string_view id) {
  if (id == "theta0-alt") return 1e-10;
  return 1e-6;
}

VerificationReport verify_native(std::string_view id, double tol) {
  std::vector<VerificationReport> parts;
  if (id == "I" || id == "II") {
    for (int m = 0; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        parts.push_back(verify_identity_I_II(m, n, kIIIThetas, tol));
  } else if (id == "Iprime" || id == "IIprime") {
    for (int n = 1; n <= 4; ++n)
      parts.push_back(verify_identity_I_II(-n, n, kIIIThetas, tol));
  } else if (id == "III" || id == "IV") {
    for (int m = 0; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        parts.push_back(verify_identity_III_IV(m, n, kIIIIVThetas, tol));
  } else if (id == "theta0-alt") {
    for (int n = 0; n <= 8; ++n) parts.push_back(verify_theta0_series(n, tol));
  } else if (id == "pi2-alt") {
    for (int n = 2; n <= 8; ++n) parts.push_back(verify_pi_half_series(n, tol));
  } else {
    throw std::invalid_argument("unknown native identity '" + std::string(id) + "'");
  }
  return merge(std::string(id), std::move(parts));
}

}  // namespace blissard
