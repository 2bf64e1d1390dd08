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

#include <blissard/validity.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blissard {

HeuristicRange heuristic_range(const HeuristicTerm& t) {
  if (t.r.sign() <= 0) throw std::invalid_argument("heuristic_range: requires r > 0");
  if (t.m < 1) throw std::invalid_argument("heuristic_range: requires m >= 1");
  const double mr = static_cast<double>(t.m) * t.r.to_double();
  HeuristicRange out;
  out.half_width = (t.alternating ? M_PI : 2.0 * M_PI) / mr;
  out.endpoints_included = true;
  return out;
}

RangeScan scan_breakpoints(const Identity& ident, double theta_min, double theta_max,
                           double step, double threshold) {
  if (!(step > 0)) throw std::invalid_argument("scan_breakpoints: requires step > 0");
  if (!(theta_min < theta_max)) throw std::invalid_argument("scan_breakpoints: empty range");
  if (ident.method == VerifyMethod::exact_coeffs)
    throw std::invalid_argument("scan_breakpoints: identity has no theta domain");

  RangeScan scan;
  scan.threshold = threshold;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (long i = 1; ; ++i) {
    const double t = theta_min + static_cast<double>(i) * step;
    if (t >= theta_max - step / 2) break;
    scan.grid.push_back(t);
    const std::vector<double> one{t};
    // engine precision well below the crossing threshold
    const VerificationReport rep = verify(ident, one, std::max(threshold / 64.0, 1e-12));
    double err = nan;
    if (!rep.samples.empty()) {
      // parameterized identities scan their first parameter combination
      const VerificationSample& s = rep.samples.front();
      if (s.note.empty() && std::isfinite(s.abs_error)) err = s.abs_error;
    }
    scan.errors.push_back(err);
  }
  for (std::size_t i = 1; i < scan.errors.size(); ++i) {
    const double a = scan.errors[i - 1], b = scan.errors[i];
    if (std::isfinite(a) && std::isfinite(b) && a <= threshold && b > threshold)
      scan.breakpoints.push_back(scan.grid[i]);
  }
  return scan;
}

}  // namespace blissard
