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

#include <blissard/expr.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>

namespace blissard {

Expr Expr::number(const Rational& r) { return Expr(std::make_shared<ExprNode>(NumberNode{r})); }
Expr Expr::number(double d) { return Expr(std::make_shared<ExprNode>(NumberNode{d})); }
Expr Expr::pi() { return Expr(std::make_shared<ExprNode>(PiNode{})); }
Expr Expr::var(std::string name) { return Expr(std::make_shared<ExprNode>(VarNode{std::move(name)})); }
Expr Expr::unary(UnaryFn fn, Expr arg) { return Expr(std::make_shared<ExprNode>(UnaryNode{fn, std::move(arg)})); }
Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<ExprNode>(BinaryNode{op, std::move(lhs), std::move(rhs)}));
}

namespace {

constexpr std::array<std::pair<const char*, UnaryFn>, 14> kFunctions = {{
    {"sin", UnaryFn::Sin}, {"cos", UnaryFn::Cos}, {"tan", UnaryFn::Tan},
    {"sec", UnaryFn::Sec}, {"log", UnaryFn::Log}, {"exp", UnaryFn::Exp},
    {"atan", UnaryFn::Atan}, {"abs", UnaryFn::Abs}, {"sqrt", UnaryFn::Sqrt},
    {"re", UnaryFn::Re}, {"im", UnaryFn::Im}, {"cis", UnaryFn::Cis},
    {"harmonic", UnaryFn::Harmonic}, {"fact", UnaryFn::Fact},
}};

const char* function_name(UnaryFn fn) {
  for (const auto& [name, f] : kFunctions)
    if (f == fn) return name;
  return "?";
}

bool lookup_function(std::string_view name, UnaryFn& out) {
  for (const auto& [fname, f] : kFunctions)
    if (name == fname) {
      out = f;
      return true;
    }
  return false;
}

struct Token {
  enum Kind {
    Number, Name, Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBracket, RBracket, Comma, Semi, Colon, End
  } kind;
  std::size_t pos = 0;
  Rational rat;        // Number, integer form
  double dbl = 0;      // Number, decimal form
  bool is_double = false;
  std::string text;    // Name
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::size_t pos) { out.push_back({k, pos}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      bool dec = false;
      if (i < src.size() && src[i] == '.') {
        if (i + 1 >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i + 1])))
          throw ParseError("expected digit after decimal point", i + 1);
        dec = true;
        ++i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
          dec = true;
          i = j;
          while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        }
      }
      Token t{Token::Number, start};
      std::string text(src.substr(start, i - start));
      if (dec) {
        t.is_double = true;
        t.dbl = std::strtod(text.c_str(), nullptr);
      } else {
        t.rat = Rational(BigInt(text));
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      Token t{Token::Name, start};
      t.text = std::string(src.substr(start, i - start));
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '+': push(Token::Plus, i); break;
      case '-': push(Token::Minus, i); break;
      case '*': push(Token::Star, i); break;
      case '/': push(Token::Slash, i); break;
      case '^': push(Token::Caret, i); break;
      case '(': push(Token::LParen, i); break;
      case ')': push(Token::RParen, i); break;
      case '[': push(Token::LBracket, i); break;
      case ']': push(Token::RBracket, i); break;
      case ',': push(Token::Comma, i); break;
      case ';': push(Token::Semi, i); break;
      case ':': push(Token::Colon, i); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Token::End, src.size()});
  return out;
}

const Rational* as_rational_literal(const Expr& e) {
  if (!e.valid()) return nullptr;
  const auto* num = std::get_if<NumberNode>(&e.node());
  if (!num) return nullptr;
  return std::get_if<Rational>(&num->value);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Expr parse_all() {
    Expr e = parse_expr();
    expect(Token::End, "end of input");
    return e;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  const Token& advance() { return toks_[idx_++]; }
  bool accept(Token::Kind k) {
    if (cur().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }
  void expect(Token::Kind k, const char* what) {
    if (cur().kind != k) throw ParseError(std::string("expected ") + what, cur().pos);
    ++idx_;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      BinOp op = advance().kind == Token::Plus ? BinOp::Add : BinOp::Sub;
      lhs = Expr::binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (cur().kind == Token::Star || cur().kind == Token::Slash) {
      bool div = advance().kind == Token::Slash;
      Expr rhs = parse_unary();
      if (div) {
        // integer/integer is an exact rational literal
        const Rational* lr = as_rational_literal(lhs);
        const Rational* rr = as_rational_literal(rhs);
        if (lr && rr && !rr->is_zero()) {
          lhs = Expr::number(*lr / *rr);
          continue;
        }
      }
      lhs = Expr::binary(div ? BinOp::Div : BinOp::Mul, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr parse_unary() {
    if (accept(Token::Minus)) return Expr::unary(UnaryFn::Neg, parse_unary());
    return parse_factor();
  }

  Expr parse_factor() {
    Expr base = parse_primary();
    if (accept(Token::Caret)) return Expr::binary(BinOp::Pow, std::move(base), parse_unary());
    return base;
  }

  Expr parse_primary() {
    const Token& t = cur();
    switch (t.kind) {
      case Token::Number: {
        advance();
        return t.is_double ? Expr::number(t.dbl) : Expr::number(t.rat);
      }
      case Token::LParen: {
        advance();
        Expr e = parse_expr();
        expect(Token::RParen, "')'");
        return e;
      }
      case Token::Name: {
        advance();
        if (t.text == "pi") return Expr::pi();
        if (t.text == "piecewise") return parse_piecewise(t.pos);
        UnaryFn fn;
        if (lookup_function(t.text, fn)) {
          expect(Token::LParen, "'(' after function name");
          Expr arg = parse_expr();
          expect(Token::RParen, "')'");
          return Expr::unary(fn, std::move(arg));
        }
        if (cur().kind == Token::LParen)
          throw ParseError("unknown function '" + t.text + "'", t.pos);
        return Expr::var(t.text);
      }
      default:
        throw ParseError("expected number, name or '('", t.pos);
    }
  }

  Expr parse_piecewise(std::size_t pos) {
    expect(Token::LParen, "'(' after piecewise");
    PiecewiseNode pw;
    do {
      Interval iv;
      if (accept(Token::LParen)) {
        iv.lo_closed = false;
      } else if (accept(Token::LBracket)) {
        iv.lo_closed = true;
      } else {
        throw ParseError("expected '(' or '[' opening a piecewise interval", cur().pos);
      }
      iv.lo = parse_expr();
      expect(Token::Comma, "','");
      iv.hi = parse_expr();
      if (accept(Token::RParen)) {
        iv.hi_closed = false;
      } else if (accept(Token::RBracket)) {
        iv.hi_closed = true;
      } else {
        throw ParseError("expected ')' or ']' closing a piecewise interval", cur().pos);
      }
      expect(Token::Colon, "':'");
      pw.branches.emplace_back(std::move(iv), parse_expr());
    } while (accept(Token::Semi));
    expect(Token::RParen, "')' closing piecewise");
    if (pw.branches.empty()) throw ParseError("piecewise needs at least one branch", pos);
    return Expr(std::make_shared<ExprNode>(std::move(pw)));
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

// Precedence levels used by both parser shape and printer:
// add/sub = 1, mul/div = 2, unary minus = 3, pow = 4, atoms = 5.
int precedence_of(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BinaryNode>) {
          switch (n.op) {
            case BinOp::Add:
            case BinOp::Sub: return 1;
            case BinOp::Mul:
            case BinOp::Div: return 2;
            case BinOp::Pow: return 4;
          }
          return 1;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return n.fn == UnaryFn::Neg ? 3 : 5;
        } else if constexpr (std::is_same_v<T, NumberNode>) {
          // "3/2" reads as a division and "-3" as a unary minus, so
          // non-integer or negative literals claim those precedences.
          if (const auto* r = std::get_if<Rational>(&n.value)) {
            if (!r->is_integer()) return 2;
            return r->sign() < 0 ? 3 : 5;
          }
          return std::get<double>(n.value) < 0 ? 3 : 5;
        } else {
          return 5;
        }
      },
      e.node());
}

std::string print_double(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

void print_rec(const Expr& e, int min_prec, std::string& out);

void print_paren(const Expr& e, int min_prec, std::string& out) {
  if (precedence_of(e) < min_prec) {
    out += '(';
    print_rec(e, 0, out);
    out += ')';
  } else {
    print_rec(e, min_prec, out);
  }
}

void print_rec(const Expr& e, int /*min_prec*/, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          if (const auto* r = std::get_if<Rational>(&n.value))
            out += r->to_string();
          else
            out += print_double(std::get<double>(n.value));
        } else if constexpr (std::is_same_v<T, PiNode>) {
          out += "pi";
        } else if constexpr (std::is_same_v<T, VarNode>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          if (n.fn == UnaryFn::Neg) {
            out += '-';
            print_paren(n.arg, 3, out);
          } else {
            out += function_name(n.fn);
            out += '(';
            print_rec(n.arg, 0, out);
            out += ')';
          }
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          switch (n.op) {
            case BinOp::Add:
              print_paren(n.lhs, 1, out); out += " + "; print_paren(n.rhs, 2, out); break;
            case BinOp::Sub:
              print_paren(n.lhs, 1, out); out += " - "; print_paren(n.rhs, 2, out); break;
            case BinOp::Mul:
              print_paren(n.lhs, 2, out); out += '*'; print_paren(n.rhs, 3, out); break;
            case BinOp::Div:
              print_paren(n.lhs, 2, out); out += '/'; print_paren(n.rhs, 3, out); break;
            case BinOp::Pow:
              print_paren(n.lhs, 5, out); out += '^'; print_paren(n.rhs, 3, out); break;
          }
        } else if constexpr (std::is_same_v<T, PiecewiseNode>) {
          out += "piecewise(";
          bool first = true;
          for (const auto& [iv, body] : n.branches) {
            if (!first) out += "; ";
            first = false;
            out += iv.lo_closed ? '[' : '(';
            print_rec(iv.lo, 0, out);
            out += ',';
            print_rec(iv.hi, 0, out);
            out += iv.hi_closed ? ']' : ')';
            out += ": ";
            print_rec(body, 0, out);
          }
          out += ')';
        }
      },
      e.node());
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  print_rec(e, 0, out);
  return out;
}

double harmonic_double(long n) {
  if (n < 0) throw EvalError("harmonic: negative argument");
  static std::vector<double> cache{0.0};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= n)
    cache.push_back(cache.back() + 1.0 / static_cast<double>(cache.size()));
  return cache[n];
}

double factorial_double(long n) {
  if (n < 0) throw EvalError("fact: negative argument");
  static const std::vector<double> table = [] {
    std::vector<double> t{1.0};
    for (int k = 1; k <= 170; ++k) t.push_back(t.back() * k);
    return t;
  }();
  if (n > 170) return std::numeric_limits<double>::infinity();
  return table[n];
}

std::complex<double> complex_pow(const std::complex<double>& base, const std::complex<double>& expo) {
  if (expo.imag() == 0.0) {
    const double er = expo.real();
    if (er == std::nearbyint(er) && std::abs(er) < 9.0e15) {
      if (base.imag() == 0.0) return {std::pow(base.real(), er), 0.0};
      long long n = static_cast<long long>(er);
      bool inv = n < 0;
      unsigned long long k = inv ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
      std::complex<double> acc{1.0, 0.0}, b = base;
      while (k) {
        if (k & 1ull) acc *= b;
        b *= b;
        k >>= 1;
      }
      return inv ? 1.0 / acc : acc;
    }
    if (base.imag() == 0.0 && base.real() >= 0.0) return {std::pow(base.real(), er), 0.0};
  }
  return std::pow(base, expo);
}

static long integer_argument(const std::complex<double>& v, const char* fn) {
  const double x = v.real();
  if (std::abs(v.imag()) > 1e-9 || std::abs(x - std::nearbyint(x)) > 1e-9)
    throw EvalError(std::string(fn) + ": argument must be an integer");
  return static_cast<long>(std::llround(x));
}

std::complex<double> eval(const Expr& e, const EvalContext& ctx) {
  using C = std::complex<double>;
  return std::visit(
      [&](const auto& n) -> C {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          if (const auto* r = std::get_if<Rational>(&n.value)) return {r->to_double(), 0.0};
          return {std::get<double>(n.value), 0.0};
        } else if constexpr (std::is_same_v<T, PiNode>) {
          return {M_PI, 0.0};
        } else if constexpr (std::is_same_v<T, VarNode>) {
          auto it = ctx.find(n.name);
          if (it == ctx.end()) throw EvalError("unbound variable '" + n.name + "'");
          return it->second;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          const C v = eval(n.arg, ctx);
          switch (n.fn) {
            case UnaryFn::Neg: return -v;
            case UnaryFn::Sin: return std::sin(v);
            case UnaryFn::Cos: return std::cos(v);
            case UnaryFn::Tan: return std::tan(v);
            case UnaryFn::Sec: return 1.0 / std::cos(v);
            case UnaryFn::Log: return std::log(v);
            case UnaryFn::Exp: return std::exp(v);
            case UnaryFn::Atan: return std::atan(v);
            case UnaryFn::Abs: return {std::abs(v), 0.0};
            case UnaryFn::Sqrt: return std::sqrt(v);
            case UnaryFn::Re: return {v.real(), 0.0};
            case UnaryFn::Im: return {v.imag(), 0.0};
            case UnaryFn::Cis: return std::exp(C{0.0, 1.0} * v);
            case UnaryFn::Harmonic: return {harmonic_double(integer_argument(v, "harmonic")), 0.0};
            case UnaryFn::Fact: return {factorial_double(integer_argument(v, "fact")), 0.0};
          }
          throw EvalError("unknown unary function");
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          const C a = eval(n.lhs, ctx);
          const C b = eval(n.rhs, ctx);
          switch (n.op) {
            case BinOp::Add: return a + b;
            case BinOp::Sub: return a - b;
            case BinOp::Mul: return a * b;
            case BinOp::Div: return a / b;
            case BinOp::Pow: return complex_pow(a, b);
          }
          throw EvalError("unknown binary operator");
        } else if constexpr (std::is_same_v<T, PiecewiseNode>) {
          auto it = ctx.find("theta");
          if (it == ctx.end()) throw EvalError("piecewise: 'theta' not bound");
          const double x = it->second.real();
          for (const auto& [iv, body] : n.branches) {
            const double lo = eval(iv.lo, ctx).real();
            const double hi = eval(iv.hi, ctx).real();
            const bool above = iv.lo_closed ? x >= lo : x > lo;
            const bool below = iv.hi_closed ? x <= hi : x < hi;
            if (above && below) return eval(body, ctx);
          }
          throw EvalError("piecewise: argument outside all branches");
        }
      },
      e.node());
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, NumberNode>) {
          if (na.value.index() != nb.value.index()) return false;
          if (const auto* r = std::get_if<Rational>(&na.value))
            return *r == std::get<Rational>(nb.value);
          return std::get<double>(na.value) == std::get<double>(nb.value);
        } else if constexpr (std::is_same_v<T, PiNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, VarNode>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return na.fn == nb.fn && structurally_equal(na.arg, nb.arg);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return na.op == nb.op && structurally_equal(na.lhs, nb.lhs) &&
                 structurally_equal(na.rhs, nb.rhs);
        } else if constexpr (std::is_same_v<T, PiecewiseNode>) {
          if (na.branches.size() != nb.branches.size()) return false;
          for (std::size_t i = 0; i < na.branches.size(); ++i) {
            const auto& [ia, ba] = na.branches[i];
            const auto& [ib, bb] = nb.branches[i];
            if (ia.lo_closed != ib.lo_closed || ia.hi_closed != ib.hi_closed) return false;
            if (!structurally_equal(ia.lo, ib.lo) || !structurally_equal(ia.hi, ib.hi)) return false;
            if (!structurally_equal(ba, bb)) return false;
          }
          return true;
        }
      },
      a.node());
}

static void collect_vars(const Expr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarNode>) {
          out.insert(n.name);
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          collect_vars(n.arg, out);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          collect_vars(n.lhs, out);
          collect_vars(n.rhs, out);
        } else if constexpr (std::is_same_v<T, PiecewiseNode>) {
          for (const auto& [iv, body] : n.branches) {
            collect_vars(iv.lo, out);
            collect_vars(iv.hi, out);
            collect_vars(body, out);
          }
        }
      },
      e.node());
}

std::vector<std::string> free_variables(const Expr& e) {
  std::set<std::string> s;
  collect_vars(e, s);
  return {s.begin(), s.end()};
}

}  // namespace blissard
