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

#ifndef BLISSARD_EXPR_HPP
#define BLISSARD_EXPR_HPP

#include <blissard/rational.hpp>

#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace blissard {

/// Grammar:
///   expr    := term (("+"|"-") term)*
///   term    := unary (("*"|"/") unary)*
///   unary   := "-" unary | factor
///   factor  := primary ("^" unary)?          -- right associative
///   primary := number | "pi" | name | name "(" expr ("," expr)* ")"
///            | "(" expr ")" | piecewise
///   piecewise := "piecewise" "(" branch (";" branch)* ")"
///   branch  := ("("|"[") expr "," expr (")"|"]") ":" expr
///
/// Precedence: ^ > unary minus > * / > + -.  A quotient of two integer
/// literals folds to an exact rational literal; everything else stays
/// structural.  Numbers are exact rationals when written as integers
/// (or folded quotients) and doubles when written with a decimal point.

enum class UnaryFn {
  Neg, Sin, Cos, Tan, Sec, Log, Exp, Atan, Abs, Sqrt, Re, Im, Cis, Harmonic, Fact
};

enum class BinOp { Add, Sub, Mul, Div, Pow };

class Expr;

struct NumberNode {
  std::variant<Rational, double> value;
};
struct PiNode {};
struct VarNode {
  std::string name;
};
struct UnaryNode;
struct BinaryNode;
struct PiecewiseNode;

using ExprNode = std::variant<NumberNode, PiNode, VarNode, UnaryNode, BinaryNode, PiecewiseNode>;

/// Immutable expression handle with value semantics (shared nodes).
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  static Expr number(const Rational& r);
  static Expr number(double d);
  static Expr pi();
  static Expr var(std::string name);
  static Expr unary(UnaryFn fn, Expr arg);
  static Expr binary(BinOp op, Expr lhs, Expr rhs);

  bool valid() const { return node_ != nullptr; }
  const ExprNode& node() const { return *node_; }

 private:
  std::shared_ptr<const ExprNode> node_;
};

struct UnaryNode {
  UnaryFn fn;
  Expr arg;
};
struct BinaryNode {
  BinOp op;
  Expr lhs, rhs;
};
struct Interval {
  Expr lo, hi;
  bool lo_closed = false, hi_closed = false;
};
struct PiecewiseNode {
  std::vector<std::pair<Interval, Expr>> branches;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using EvalContext = std::map<std::string, std::complex<double>, std::less<>>;

Expr parse(std::string_view text);
std::string print(const Expr& e);
std::complex<double> eval(const Expr& e, const EvalContext& ctx);
bool structurally_equal(const Expr& a, const Expr& b);

/// Free variables referenced by the expression (excluding pi).
std::vector<std::string> free_variables(const Expr& e);

/// z^w with exact handling of integral real exponents (powers of -1 stay
/// exactly +-1, no imaginary dust from the complex pow branch cut).
std::complex<double> complex_pow(const std::complex<double>& base, const std::complex<double>& expo);

/// H_n as a double, cached; the argument must be a nonnegative integer.
double harmonic_double(long n);
/// n! as a double, cached.
double factorial_double(long n);

}  // namespace blissard

#endif  // BLISSARD_EXPR_HPP
