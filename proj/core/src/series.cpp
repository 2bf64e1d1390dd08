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

#include <blissard/series.hpp>

#include <cmath>
#include <vector>

namespace blissard {

using C = std::complex<double>;

const char* to_string(SumMethod m) {
  switch (m) {
    case SumMethod::direct: return "direct";
    case SumMethod::abel: return "abel";
    case SumMethod::euler: return "euler";
    case SumMethod::bilateral_direct: return "bilateral_direct";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------
// Compiled term evaluation.  Series engines evaluate terms millions of
// times, so expression terms are flattened once into a postfix tape with
// theta and parameters folded to constants; only the index stays live.
// ---------------------------------------------------------------------

struct Tape {
  enum class Op : unsigned char { Const, Index, Unary, Binary };
  struct Instr {
    Op op;
    UnaryFn fn;
    BinOp bin;
    C value;
  };
  std::vector<Instr> instrs;
  mutable std::vector<C> stack;

  C eval(long n) const {
    std::size_t sp = 0;
    for (const Instr& ins : instrs) {
      switch (ins.op) {
        case Op::Const:
          stack[sp++] = ins.value;
          break;
        case Op::Index:
          stack[sp++] = C(static_cast<double>(n), 0.0);
          break;
        case Op::Unary: {
          C& v = stack[sp - 1];
          switch (ins.fn) {
            case UnaryFn::Neg: v = -v; break;
            case UnaryFn::Sin: v = std::sin(v); break;
            case UnaryFn::Cos: v = std::cos(v); break;
            case UnaryFn::Tan: v = std::tan(v); break;
            case UnaryFn::Sec: v = 1.0 / std::cos(v); break;
            case UnaryFn::Log: v = std::log(v); break;
            case UnaryFn::Exp: v = std::exp(v); break;
            case UnaryFn::Atan: v = std::atan(v); break;
            case UnaryFn::Abs: v = C(std::abs(v), 0.0); break;
            case UnaryFn::Sqrt: v = std::sqrt(v); break;
            case UnaryFn::Re: v = C(v.real(), 0.0); break;
            case UnaryFn::Im: v = C(v.imag(), 0.0); break;
            case UnaryFn::Cis: v = std::exp(C(0.0, 1.0) * v); break;
            case UnaryFn::Harmonic: v = C(harmonic_double(tape_integer(v, "harmonic")), 0.0); break;
            case UnaryFn::Fact: v = C(factorial_double(tape_integer(v, "fact")), 0.0); break;
          }
          break;
        }
        case Op::Binary: {
          C b = stack[--sp];
          C& a = stack[sp - 1];
          switch (ins.bin) {
            case BinOp::Add: a += b; break;
            case BinOp::Sub: a -= b; break;
            case BinOp::Mul: a *= b; break;
            case BinOp::Div: a /= b; break;
            case BinOp::Pow: a = complex_pow(a, b); break;
          }
          break;
        }
      }
    }
    return stack[0];
  }

  static long tape_integer(const C& v, const char* fn) {
    const double x = v.real();
    if (std::abs(v.imag()) > 1e-9 || std::abs(x - std::nearbyint(x)) > 1e-9)
      throw SeriesError(std::string(fn) + ": argument must be an integer");
    return static_cast<long>(std::llround(x));
  }
};

// Flattens the expression; subtrees free of the index variable are folded
// into constants with theta/parameters bound.  Piecewise terms are not
// supported in series positions.
class TapeCompiler {
 public:
  TapeCompiler(const std::string& index_var, const EvalContext& fixed)
      : index_var_(index_var), fixed_(fixed) {}

  Tape compile(const Expr& e) {
    Tape t;
    std::size_t depth = emit(e, t, 0);
    t.stack.resize(depth);
    return t;
  }

 private:
  bool depends_on_index(const Expr& e) const {
    for (const auto& v : free_variables(e))
      if (v == index_var_) return true;
    return false;
  }

  // returns the peak stack depth needed
  std::size_t emit(const Expr& e, Tape& t, std::size_t base) {
    if (!depends_on_index(e)) {
      t.instrs.push_back({Tape::Op::Const, UnaryFn::Neg, BinOp::Add, eval(e, fixed_)});
      return base + 1;
    }
    return std::visit(
        [&](const auto& n) -> std::size_t {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarNode>) {
            t.instrs.push_back({Tape::Op::Index, UnaryFn::Neg, BinOp::Add, C{}});
            return base + 1;
          } else if constexpr (std::is_same_v<T, UnaryNode>) {
            std::size_t d = emit(n.arg, t, base);
            t.instrs.push_back({Tape::Op::Unary, n.fn, BinOp::Add, C{}});
            return d;
          } else if constexpr (std::is_same_v<T, BinaryNode>) {
            std::size_t dl = emit(n.lhs, t, base);
            std::size_t dr = emit(n.rhs, t, base + 1);
            t.instrs.push_back({Tape::Op::Binary, UnaryFn::Neg, n.op, C{}});
            return std::max(dl, dr);
          } else {
            throw SeriesError("series term uses an unsupported construct");
          }
        },
        e.node());
  }

  const std::string& index_var_;
  const EvalContext& fixed_;
};

// A term evaluator bound to a fixed theta and parameter set.
struct BoundTerm {
  std::variant<Tape, NativeTerm> impl;
  double theta;

  static BoundTerm bind(const SeriesSpec& s, double theta) {
    BoundTerm b;
    b.theta = theta;
    if (const auto* native = std::get_if<NativeTerm>(&s.term)) {
      b.impl = *native;
    } else {
      EvalContext ctx = s.parameters;
      ctx["theta"] = C(theta, 0.0);
      TapeCompiler compiler(s.index_var, ctx);
      b.impl = compiler.compile(std::get<Expr>(s.term));
    }
    return b;
  }

  C operator()(long n) const {
    if (const auto* tape = std::get_if<Tape>(&impl)) return tape->eval(n);
    return std::get<NativeTerm>(impl)(n, theta);
  }
};

void check_finite(const C& v, long n) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw SeriesError("non-finite term at index " + std::to_string(n), n);
}

// Ladder extrapolation for sequences whose error is a power series in
// h_j = 2^-j: row m removes the 2^-jm component, with the known ratio
// 2^m at every level.  Numerically stable at any depth, unlike iterated
// Aitken whose second differences can vanish.
class RatioLadder {
 public:
  // returns the current best extrapolation after appending g_j
  C append(const C& g) {
    std::vector<C> row(prev_.size() + 1);
    row[0] = g;
    for (std::size_t m = 1; m < row.size(); ++m) {
      const double fac = std::ldexp(1.0, static_cast<int>(m));  // 2^m
      row[m] = (fac * row[m - 1] - prev_[m - 1]) / (fac - 1.0);
    }
    prev_ = std::move(row);
    return prev_.back();
  }

 private:
  std::vector<C> prev_;
};

// Wynn epsilon table over a window of partial sums; returns the deepest
// even-column entry.  Robust on oscillatory tails where plain Aitken
// second differences cross zero.
C wynn_epsilon(const std::vector<C>& sums) {
  std::vector<std::vector<C>> cols;
  cols.push_back(sums);
  C best = sums.back();
  while (cols.back().size() >= 2) {
    const std::vector<C>& cur = cols.back();
    const std::vector<C>* prev = cols.size() >= 2 ? &cols[cols.size() - 2] : nullptr;
    std::vector<C> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const C d = cur[i + 1] - cur[i];
      const C carry = prev ? (*prev)[i + 1] : C{};
      next[i] = (d == C{}) ? carry : carry + 1.0 / d;
    }
    cols.push_back(std::move(next));
    if (cols.size() % 2 == 1) best = cols.back().back();  // even epsilon column
  }
  return best;
}

}  // namespace

SumEstimate partial_sum(const SeriesSpec& s, double theta, long n_terms) {
  if (s.bilateral) throw SeriesError("partial_sum: series is bilateral");
  if (n_terms < 1) throw SeriesError("partial_sum: need n_terms >= 1");
  const BoundTerm term = BoundTerm::bind(s, theta);
  C sum{}, comp{};  // Kahan compensation
  C last{};
  for (long i = 0; i < n_terms; ++i) {
    const long n = s.start + i;
    last = term(n);
    check_finite(last, n);
    const C y = last - comp;
    const C t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return {sum, std::abs(last), n_terms, SumMethod::direct};
}

SumEstimate abel_sum(const SeriesSpec& s, double theta, double tol) {
  if (s.bilateral) throw SeriesError("abel_sum: series is bilateral");
  if (!(tol > 0)) throw SeriesError("abel_sum: need tol > 0");
  const BoundTerm term = BoundTerm::bind(s, theta);
  constexpr int kFirstRadius = 3;
  constexpr int kLastRadius = 24;
  const double inner_cut = tol * std::ldexp(1.0, -10);

  RatioLadder ladder;
  long total_terms = 0;
  bool have_prev = false;
  C prev{};
  for (int j = kFirstRadius; j <= kLastRadius; ++j) {
    const double r = 1.0 - std::ldexp(1.0, -j);
    const long cap = 2L * (1L << (j + 4));
    C g{}, comp{};
    double rp = std::pow(r, static_cast<double>(s.start));
    int consecutive_small = 0;
    long n = s.start;
    for (long count = 0; count < cap; ++count, ++n) {
      const C t0 = term(n);
      check_finite(t0, n);
      const C t = t0 * rp;
      const C y = t - comp;
      const C acc = g + y;
      comp = (acc - g) - y;
      g = acc;
      rp *= r;
      // a single small term proves nothing when the terms have periodic
      // zeros (sin(2 pi n theta) at rational theta), so require a run
      consecutive_small = std::abs(t) < inner_cut ? consecutive_small + 1 : 0;
      if (consecutive_small >= 16) break;
    }
    total_terms += n - s.start;
    const C v = ladder.append(g);
    if (have_prev && std::abs(v - prev) < tol / 4.0)
      return {v, std::abs(v - prev), total_terms, SumMethod::abel};
    prev = v;
    have_prev = true;
  }
  throw SeriesError("abel_sum: failed to stabilize within 24 radii");
}

SumEstimate euler_sum(const SeriesSpec& s, double theta, double tol) {
  if (s.bilateral) throw SeriesError("euler_sum: series is bilateral");
  if (!(tol > 0)) throw SeriesError("euler_sum: need tol > 0");
  const BoundTerm term = BoundTerm::bind(s, theta);

  // Sign inspection over the first 16 terms (real parts).
  bool has_zero = false;
  int flips = 0, pairs = 0;
  double prev_sign = 0;
  for (long i = 0; i < 16; ++i) {
    const C t = term(s.start + i);
    check_finite(t, s.start + i);
    const double re = t.real();
    if (re == 0.0) {
      has_zero = true;
      continue;
    }
    const double sign = re > 0 ? 1.0 : -1.0;
    if (prev_sign != 0) {
      ++pairs;
      if (sign != prev_sign) ++flips;
    }
    prev_sign = sign;
  }
  if (has_zero) {
    // zero terms: alternation is undecidable, sum directly
    C sum{}, comp{};
    C last{};
    int consecutive_small = 0;
    const double cut = tol * std::ldexp(1.0, -10);
    long n = s.start;
    for (long count = 0; count < 1000000; ++count, ++n) {
      last = term(n);
      check_finite(last, n);
      const C y = last - comp;
      const C t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      consecutive_small = std::abs(last) < cut ? consecutive_small + 1 : 0;
      if (consecutive_small >= 16) break;
    }
    return {sum, std::abs(last), n - s.start, SumMethod::direct};
  }
  if (2 * flips <= pairs)
    throw SeriesError("euler_sum: terms do not alternate in sign");

  constexpr int kMaxDepth = 64;
  // a_j := (-1)^j t_j so that the series is sum (-1)^j a_j; the transform
  // is sum_k (-1)^k Delta^k a_0 / 2^{k+1}
  std::vector<C> a;
  std::vector<std::vector<C>> diff;  // diff[k][i] = (Delta^k a)(i)
  C sum{};
  for (int k = 0; k < kMaxDepth; ++k) {
    const long n = s.start + k;
    C t = term(n);
    check_finite(t, n);
    a.push_back((k % 2 == 0) ? t : -t);
    diff.emplace_back();
    diff[0].push_back(a.back());
    for (int m = 1; m <= k; ++m)
      diff[m].push_back(diff[m - 1][k - m + 1] - diff[m - 1][k - m]);
    const C head = diff[k][0];
    const C increment = ((k % 2 == 0) ? head : -head) / std::ldexp(1.0, k + 1);
    sum += increment;
    if (k >= 4 && std::abs(increment) < tol / 4.0)
      return {sum, std::abs(increment), k + 1, SumMethod::euler};
  }
  throw SeriesError("euler_sum: transform did not converge within depth 64");
}

SumEstimate bilateral_sum(const SeriesSpec& s, double theta, double a, long n_pairs,
                          bool accelerate) {
  if (n_pairs < 1) throw SeriesError("bilateral_sum: need n_pairs >= 1");
  if (a == std::nearbyint(a))
    throw SeriesError("bilateral_sum: integer a hits the pole n = a");
  SeriesSpec bound = s;
  bound.parameters["a"] = C(a, 0.0);
  const BoundTerm term = BoundTerm::bind(bound, theta);

  constexpr long kWindow = 49;
  const long window = std::min<long>(kWindow, n_pairs);
  std::vector<C> tail_sums;
  tail_sums.reserve(window);

  C sum = term(0);
  check_finite(sum, 0);
  for (long n = 1; n <= n_pairs; ++n) {
    const C tp = term(n);
    check_finite(tp, n);
    sum += tp;
    const C tm = term(-n);
    check_finite(tm, -n);
    sum += tm;
    if (n > n_pairs - window) tail_sums.push_back(sum);
  }
  const long used = 2 * n_pairs + 1;
  if (!accelerate || tail_sums.size() < 3)
    return {sum, std::abs(term(n_pairs + 1)), used, SumMethod::bilateral_direct};
  const C v = wynn_epsilon(tail_sums);
  return {v, std::abs(v - sum), used, SumMethod::bilateral_direct};
}

}  // namespace blissard
