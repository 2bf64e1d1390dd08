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

#include <doctest.h>

#include <cmath>

using namespace blissard;
using doctest::Approx;

namespace {

const Identity& by_id(const std::string& id) {
  for (const auto& ident : default_catalog())
    if (ident.id == id) return ident;
  REQUIRE_MESSAGE(false, "missing identity ", id);
  std::abort();
}

}  // namespace

TEST_CASE("heuristic range rule reproduces the table domains") {
  // rows E/F: cos((2n+1)theta) pattern -> p = 1, r = 2, m = 1, positive
  HeuristicTerm ef{Rational(1), Rational(2), 1, Rational(1), false};
  CHECK(heuristic_range(ef).half_width == Approx(M_PI));
  // rows G/H: same pattern, alternating
  HeuristicTerm gh{Rational(1), Rational(2), 1, Rational(1), true};
  CHECK(heuristic_range(gh).half_width == Approx(M_PI / 2));
  // row N: sin^2(n theta) -> m = 2, r = 1, alternating
  HeuristicTerm n{Rational(1), Rational(1), 2, Rational(4), true};
  CHECK(heuristic_range(n).half_width == Approx(M_PI / 2));
  CHECK(heuristic_range(n).endpoints_included);

  CHECK_THROWS_AS(heuristic_range(HeuristicTerm{Rational(1), Rational(0), 1, Rational(1), false}),
                  std::invalid_argument);
  CHECK_THROWS_AS(heuristic_range(HeuristicTerm{Rational(1), Rational(1), 0, Rational(1), false}),
                  std::invalid_argument);
}

TEST_CASE("scan finds the first piecewise branch boundary") {
  // the piecewise-cube series against only its first branch: the error
  // grows like (pi/4)(theta - pi/2)^2 past pi/2
  Identity first = by_id("piecewise-cube");
  first.closed = parse("pi^3/32 - pi*theta^2/8");
  first.terms = 2000;
  const RangeScan scan = scan_breakpoints(first, 0.0, 2 * M_PI, 0.005, 2e-5);
  REQUIRE(!scan.breakpoints.empty());
  CHECK(std::abs(scan.breakpoints.front() - M_PI / 2) < 0.02);
}

TEST_CASE("scan inside a verified domain reports no breakpoints") {
  Identity b = by_id("B");
  const RangeScan scan = scan_breakpoints(b, 0.1, 2 * M_PI - 0.1, 0.05, 1e-7);
  CHECK(scan.breakpoints.empty());
  for (double e : scan.errors) {
    CHECK(std::isfinite(e));
    CHECK(e <= 1e-7);
  }
}

TEST_CASE("scans are deterministic") {
  Identity d = by_id("D");
  const RangeScan s1 = scan_breakpoints(d, 0.5, 2.5, 0.05, 1e-6);
  const RangeScan s2 = scan_breakpoints(d, 0.5, 2.5, 0.05, 1e-6);
  REQUIRE(s1.errors.size() == s2.errors.size());
  for (std::size_t i = 0; i < s1.errors.size(); ++i) CHECK(s1.errors[i] == s2.errors[i]);
  CHECK(s1.grid == s2.grid);
}

TEST_CASE("scan argument validation") {
  Identity b = by_id("B");
  CHECK_THROWS_AS(scan_breakpoints(b, 0.0, 1.0, 0.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(scan_breakpoints(b, 1.0, 0.0, 0.1, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(scan_breakpoints(by_id("log-secx"), 0.0, 1.0, 0.1, 1e-6),
                  std::invalid_argument);
}
