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

#ifndef BLISSARD_VALIDITY_HPP
#define BLISSARD_VALIDITY_HPP

#include <blissard/catalog.hpp>
#include <blissard/rational.hpp>

#include <vector>

namespace blissard {

/// Shape of a general term (+-1)^k cos^m((p + k r) theta) / (p + k r)^n
/// for the heuristic range rule.
struct HeuristicTerm {
  Rational p;          // phase offset, > 0
  Rational r;          // phase step, > 0
  int m = 1;           // power of the trigonometric factor, >= 1
  Rational n_exp = 1;  // denominator exponent
  bool alternating = false;
};

struct HeuristicRange {
  double half_width = 0;
  bool endpoints_included = true;
};

/// |theta| < 2 pi/(m r) when all signs are positive, pi/(m r) when they
/// alternate; the endpoints are ordinarily included.
HeuristicRange heuristic_range(const HeuristicTerm& t);

struct RangeScan {
  std::vector<double> grid;         // strictly increasing
  std::vector<double> errors;      // |series - closed|; NaN marks a failed point
  std::vector<double> breakpoints;  // grid points where the error crosses
                                    // the threshold from below
  double threshold = 0;
};

/// Evaluates |series - closed| over the grid theta_min+step, ..., < theta_max
/// with the identity's own method; engine failures mark the point failed
/// and the scan continues.
RangeScan scan_breakpoints(const Identity& ident, double theta_min, double theta_max,
                           double step, double threshold);

}  // namespace blissard

#endif  // BLISSARD_VALIDITY_HPP
