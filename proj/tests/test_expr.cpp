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
#include <blissard/expr.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace blissard;
using doctest::Approx;

namespace {
std::complex<double> ev(const std::string& s, EvalContext ctx = {}) {
  return eval(parse(s), ctx);
}
}  // namespace

TEST_CASE("parse structure") {
  const Expr e = parse("(pi - theta)/2");
  const auto* div = std::get_if<BinaryNode>(&e.node());
  REQUIRE(div);
  CHECK(div->op == BinOp::Div);
  const auto* sub = std::get_if<BinaryNode>(&div->lhs.node());
  REQUIRE(sub);
  CHECK(sub->op == BinOp::Sub);
  CHECK(std::holds_alternative<PiNode>(sub->lhs.node()));
  const auto* v = std::get_if<VarNode>(&sub->rhs.node());
  REQUIRE(v);
  CHECK(v->name == "theta");

  const Expr neg = parse("-log(2*sin(theta/2))");
  const auto* u = std::get_if<UnaryNode>(&neg.node());
  REQUIRE(u);
  CHECK(u->fn == UnaryFn::Neg);
  const auto* lg = std::get_if<UnaryNode>(&u->arg.node());
  REQUIRE(lg);
  CHECK(lg->fn == UnaryFn::Log);

  const Expr params = parse("cis((m_p + n_p/2)*theta)");
  const auto fv = free_variables(params);
  CHECK(fv == std::vector<std::string>{"m_p", "n_p", "theta"});
}

TEST_CASE("numbers: exact rationals and decimals") {
  const Expr r = parse("3/2");
  const auto* num = std::get_if<NumberNode>(&r.node());
  REQUIRE(num);
  REQUIRE(std::holds_alternative<Rational>(num->value));
  CHECK(std::get<Rational>(num->value) == Rational(3, 2));

  const Expr d = parse("0.3");
  const auto* dn = std::get_if<NumberNode>(&d.node());
  REQUIRE(dn);
  CHECK(std::holds_alternative<double>(dn->value));

  // x/2 stays a division node
  const Expr e = parse("theta/2");
  CHECK(std::holds_alternative<BinaryNode>(e.node()));
}

TEST_CASE("precedence") {
  // ^ binds tighter than unary minus
  CHECK(ev("-2^2").real() == Approx(-4.0));
  CHECK(ev("(-2)^2").real() == Approx(4.0));
  // right associativity
  CHECK(ev("2^3^2").real() == Approx(512.0));
  CHECK(ev("2^-1").real() == Approx(0.5));
  // unary minus binds tighter than *
  CHECK(ev("-2*3").real() == Approx(-6.0));
  CHECK(ev("2*-3").real() == Approx(-6.0));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse("2*pi oops"), ParseError);
  CHECK_THROWS_AS(parse("sin 3"), ParseError);
  CHECK_THROWS_AS(parse("(1+2"), ParseError);
  CHECK_THROWS_AS(parse("nosuchfn(3)"), ParseError);
  try {
    parse("1 + @");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
  try {
    parse("(1+2");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("eval basics") {
  CHECK(std::abs(ev("cis(pi/2)") - std::complex<double>(0, 1)) < 1e-15);
  EvalContext ctx;
  ctx["theta"] = M_PI;
  CHECK(std::abs(eval(parse("(pi - theta)/2"), ctx)) < 1e-15);
  CHECK(eval(parse("-log(2*sin(theta/2))"), ctx).real() == Approx(-std::log(2.0)));
  CHECK(ev("fact(5)").real() == Approx(120.0));
  CHECK(ev("harmonic(3)").real() == Approx(11.0 / 6.0));
  CHECK_THROWS_AS(ev("theta"), EvalError);
  CHECK_THROWS_AS(ev("harmonic(1/3)"), EvalError);
  // singularities surface as non-finite values, never silently wrong ones
  CHECK(!std::isfinite(ev("1/(1-1)").real()));
  CHECK(!std::isfinite(ev("log(0)").real()));
}

TEST_CASE("piecewise selection and endpoints") {
  const Expr pw = parse("piecewise((0,1]: theta; [1,2]: 2 - theta; (2,3): 10)");
  EvalContext ctx;
  ctx["theta"] = 0.5;
  CHECK(eval(pw, ctx).real() == Approx(0.5));
  ctx["theta"] = 1.0;  // shared endpoint: first branch wins, both agree
  CHECK(eval(pw, ctx).real() == Approx(1.0));
  ctx["theta"] = 1.5;
  CHECK(eval(pw, ctx).real() == Approx(0.5));
  ctx["theta"] = 2.5;
  CHECK(eval(pw, ctx).real() == Approx(10.0));
  ctx["theta"] = 3.5;
  CHECK_THROWS_AS(eval(pw, ctx), EvalError);
  ctx["theta"] = 2.0;  // closed at 2 in branch two
  CHECK(eval(pw, ctx).real() == Approx(0.0));
}

TEST_CASE("print examples") {
  CHECK(print(parse("pi/4")) == "pi/4");
  const std::string pw = print(parse("piecewise((0,pi/2]: 1; [pi/2,pi): 2)"));
  CHECK(pw == "piecewise((0,pi/2]: 1; [pi/2,pi): 2)");
}

TEST_CASE("round trip: parse(print(e)) is structurally e") {
  const std::vector<std::string> cases = {
      "(pi - theta)/2",
      "-log(2*sin(theta/2))",
      "cis((m_p + n_p/2)*theta)",
      "2^3^2",
      "-2^2",
      "1/2 + theta*3/4",
      "piecewise((0,pi/2]: pi^3/32 - pi*theta^2/8; [pi/2,3*pi/2]: 0)",
      "sin(n*theta)^2/n^4",
      "0.3*theta - 1.25e-3",
      "-(theta + 1)*(theta - 1)",
  };
  for (const auto& s : cases) {
    const Expr e = parse(s);
    CHECK_MESSAGE(structurally_equal(parse(print(e)), e), "case: ", s, " printed: ", print(e));
  }
}

TEST_CASE("round trip over the whole shipped catalog") {
  for (const Identity& ident : default_catalog()) {
    if (ident.method == VerifyMethod::exact_coeffs) continue;
    const Expr* exprs[] = {std::get_if<Expr>(&ident.series.term), &ident.closed,
                           &ident.domain.lo, &ident.domain.hi};
    for (const Expr* e : exprs) {
      if (!e || !e->valid()) continue;
      CHECK_MESSAGE(structurally_equal(parse(print(*e)), *e),
                    "identity ", ident.id, ": ", print(*e));
    }
  }
}

TEST_CASE("unit-circle identities evaluate correctly") {
  // x = e^{i theta}:  x^n + x^-n = 2 cos n theta,
  // (1+x)^n = x^{n/2} (2 cos theta/2)^n,
  // (1-x)^n = e^{-i n pi/2} x^{n/2} (2 sin theta/2)^n
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> th(1e-3, 2 * M_PI - 1e-3);
  const Expr xn = parse("cis(n*theta)");
  const Expr xmn = parse("cis(-n*theta)");
  const Expr two_cos = parse("2*cos(n*theta)");
  const Expr lhs4 = parse("(1 + cis(theta))^n");
  const Expr rhs4 = parse("cis(n*theta/2)*(2*cos(theta/2))^n");
  const Expr lhs5 = parse("(1 - cis(theta))^n");
  const Expr rhs5 = parse("cis(-n*pi/2)*cis(n*theta/2)*(2*sin(theta/2))^n");
  for (int i = 0; i < 50; ++i) {
    const double theta = th(rng);
    for (int n = 1; n <= 6; ++n) {
      EvalContext ctx;
      ctx["theta"] = theta;
      ctx["n"] = double(n);
      CHECK(std::abs(eval(xn, ctx) + eval(xmn, ctx) - eval(two_cos, ctx)) < 1e-12);
      CHECK(std::abs(eval(lhs4, ctx) - eval(rhs4, ctx)) < 1e-12);
      CHECK(std::abs(eval(lhs5, ctx) - eval(rhs5, ctx)) < 1e-12);
    }
  }
}

TEST_CASE("eval is deterministic") {
  EvalContext ctx;
  ctx["theta"] = 1.2345;
  const Expr e = parse("-log(2*sin(theta/2)) + cis(3*theta)/7");
  const auto a = eval(e, ctx);
  const auto b = eval(e, ctx);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}
