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
#include <blissard/truncated_series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace blissard {

const char* to_string(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::direct: return "direct";
    case VerifyMethod::abel: return "abel";
    case VerifyMethod::euler: return "euler";
    case VerifyMethod::bilateral: return "bilateral";
    case VerifyMethod::exact_coeffs: return "exact_coeffs";
  }
  return "?";
}

const char* to_string(IdentityStatus s) {
  return s == IdentityStatus::expected_pass ? "expected_pass" : "known_discrepant";
}

namespace {

std::string strip(std::string_view sv) {
  std::size_t b = sv.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = sv.find_last_not_of(" \t\r");
  return std::string(sv.substr(b, e - b + 1));
}

// comment starts at the first '#' outside quotes
std::string strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

// splits "head, tail" at the first comma at parenthesis depth 0
bool split_top_comma(std::string_view s, std::string& head, std::string& tail) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      head = strip(s.substr(0, i));
      tail = strip(s.substr(i + 1));
      return true;
    }
  }
  return false;
}

double eval_constant(const Expr& e, const char* what, const std::string& id, int line) {
  try {
    const std::complex<double> v = eval(e, {});
    if (std::abs(v.imag()) > 1e-12)
      throw CatalogError(std::string(what) + " is not real", id, line);
    return v.real();
  } catch (const EvalError& err) {
    throw CatalogError(std::string(what) + ": " + err.what(), id, line);
  }
}

struct Loader {
  std::vector<Identity> out;
  std::set<std::string> seen_ids;

  Identity cur;
  bool in_entry = false;
  bool have_series = false, have_closed = false, have_domain = false, have_method = false;
  int entry_line = 0;

  void flush(int line) {
    if (!in_entry) return;
    if (!have_method) throw CatalogError("missing method", cur.id, entry_line);
    if (cur.method == VerifyMethod::exact_coeffs) {
      if (cur.exact_check.empty())
        throw CatalogError("exact_coeffs entry needs a check line", cur.id, entry_line);
    } else {
      if (!have_series) throw CatalogError("missing series", cur.id, entry_line);
      if (!have_closed) throw CatalogError("missing closed form", cur.id, entry_line);
      if (!have_domain) throw CatalogError("missing domain", cur.id, entry_line);
      if ((cur.method == VerifyMethod::bilateral) != cur.series.bilateral)
        throw CatalogError("method is bilateral iff the series is bisum", cur.id, entry_line);
      validate_domain(line);
      validate_piecewise(line);
    }
    out.push_back(cur);
    cur = Identity{};
    in_entry = false;
    have_series = have_closed = have_domain = have_method = false;
  }

  void validate_domain(int line) {
    cur.domain.lo_value = eval_constant(cur.domain.lo, "domain lower bound", cur.id, line);
    cur.domain.hi_value = eval_constant(cur.domain.hi, "domain upper bound", cur.id, line);
    if (!(cur.domain.lo_value < cur.domain.hi_value))
      throw CatalogError("domain lower bound must be below upper bound", cur.id, line);
  }

  void validate_piecewise(int line) {
    const auto* pw = std::get_if<PiecewiseNode>(&cur.closed.node());
    if (!pw) return;
    double prev_hi = 0;
    bool first = true;
    for (const auto& [iv, body] : pw->branches) {
      EvalContext ctx;
      const double lo = eval(iv.lo, ctx).real();
      const double hi = eval(iv.hi, ctx).real();
      if (!(lo < hi)) throw CatalogError("piecewise branch interval is empty", cur.id, line);
      if (!first && lo < prev_hi - 1e-12)
        throw CatalogError("piecewise branches out of order", cur.id, line);
      prev_hi = hi;
      first = false;
    }
    // agreement at shared endpoints
    for (std::size_t i = 0; i + 1 < pw->branches.size(); ++i) {
      const auto& [iva, va] = pw->branches[i];
      const auto& [ivb, vb] = pw->branches[i + 1];
      EvalContext ctx;
      const double hia = eval(iva.hi, ctx).real();
      const double lob = eval(ivb.lo, ctx).real();
      if (std::abs(hia - lob) <= 1e-12 && iva.hi_closed && ivb.lo_closed) {
        EvalContext at;
        at["theta"] = std::complex<double>(hia, 0.0);
        const std::complex<double> a = eval(va, at);
        const std::complex<double> b = eval(vb, at);
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        if (std::abs(a - b) > 1e-10 * scale)
          throw CatalogError("piecewise branches disagree at shared endpoint", cur.id, entry_line);
      }
    }
  }

  void parse_series(const std::string& val, int line) {
    auto open = val.find('(');
    if (open == std::string::npos || val.back() != ')')
      throw CatalogError("series must be sum(...) or bisum(...)", cur.id, line);
    const std::string kind = strip(val.substr(0, open));
    const std::string inner(val.begin() + open + 1, val.end() - 1);
    std::string head, term_text;
    if (!split_top_comma(inner, head, term_text))
      throw CatalogError("series: missing term expression", cur.id, line);
    SeriesSpec spec;
    if (kind == "sum") {
      auto eq = head.find('=');
      auto dots = head.find("..");
      if (eq == std::string::npos || dots == std::string::npos ||
          strip(head.substr(dots + 2)) != "inf")
        throw CatalogError("series sum needs the form sum(v = start .. inf, term)", cur.id, line);
      spec.index_var = strip(head.substr(0, eq));
      spec.start = std::strtol(strip(head.substr(eq + 1, dots - eq - 1)).c_str(), nullptr, 10);
      spec.bilateral = false;
    } else if (kind == "bisum") {
      spec.index_var = head;
      spec.bilateral = true;
      spec.start = 0;
    } else {
      throw CatalogError("series must be sum(...) or bisum(...)", cur.id, line);
    }
    if (spec.index_var.empty()) throw CatalogError("series: empty index variable", cur.id, line);
    try {
      spec.term = parse(term_text);
    } catch (const ParseError& err) {
      throw CatalogError(std::string("series term: ") + err.what(), cur.id, line);
    }
    cur.series = std::move(spec);
    have_series = true;
  }

  void parse_domain(const std::string& val, int line) {
    if (val.size() < 3) throw CatalogError("malformed domain", cur.id, line);
    char open = val.front(), close = val.back();
    if ((open != '(' && open != '[') || (close != ')' && close != ']'))
      throw CatalogError("domain needs ( or [ endpoints", cur.id, line);
    std::string lo, hi;
    if (!split_top_comma(std::string_view(val).substr(1, val.size() - 2), lo, hi))
      throw CatalogError("domain needs two endpoints", cur.id, line);
    try {
      cur.domain.lo = parse(lo);
      cur.domain.hi = parse(hi);
    } catch (const ParseError& err) {
      throw CatalogError(std::string("domain: ") + err.what(), cur.id, line);
    }
    cur.domain.lo_closed = open == '[';
    cur.domain.hi_closed = close == ']';
    have_domain = true;
  }

  void parse_params(const std::string& val, int line) {
    auto in_pos = val.find(" in ");
    auto brace = val.find('{');
    auto brace_end = val.rfind('}');
    if (in_pos == std::string::npos || brace == std::string::npos ||
        brace_end == std::string::npos || brace_end < brace)
      throw CatalogError("params needs the form: name in {v1, v2}", cur.id, line);
    ParamSpec p;
    p.name = strip(val.substr(0, in_pos));
    std::stringstream ss(val.substr(brace + 1, brace_end - brace - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = strip(item);
      if (item.empty()) continue;
      try {
        p.values.push_back(eval_constant(parse(item), "param value", cur.id, line));
      } catch (const ParseError& err) {
        throw CatalogError(std::string("param value: ") + err.what(), cur.id, line);
      }
    }
    if (p.name.empty() || p.values.empty())
      throw CatalogError("params needs a name and at least one value", cur.id, line);
    cur.parameters.push_back(std::move(p));
  }

  void handle_line(const std::string& raw, int line) {
    const std::string text = strip(strip_comment(raw));
    if (text.empty()) return;
    if (text.front() == '[') {
      if (text.back() != ']' || text.rfind("[identity ", 0) != 0)
        throw CatalogError("expected [identity <id>]", "", line);
      flush(line);
      in_entry = true;
      entry_line = line;
      cur.id = strip(text.substr(10, text.size() - 11));
      if (cur.id.empty()) throw CatalogError("empty identity id", "", line);
      if (!seen_ids.insert(cur.id).second)
        throw CatalogError("duplicate identity id", cur.id, line);
      return;
    }
    if (!in_entry) throw CatalogError("field outside an [identity] block", "", line);
    auto eq = text.find('=');
    if (eq == std::string::npos) throw CatalogError("expected key = value", cur.id, line);
    const std::string key = strip(text.substr(0, eq));
    const std::string val = strip(text.substr(eq + 1));
    if (key == "series") {
      parse_series(val, line);
    } else if (key == "closed") {
      try {
        cur.closed = parse(val);
      } catch (const ParseError& err) {
        throw CatalogError(std::string("closed form: ") + err.what(), cur.id, line);
      }
      have_closed = true;
    } else if (key == "domain") {
      parse_domain(val, line);
    } else if (key == "method") {
      if (val == "direct") cur.method = VerifyMethod::direct;
      else if (val == "abel") cur.method = VerifyMethod::abel;
      else if (val == "euler") cur.method = VerifyMethod::euler;
      else if (val == "bilateral") cur.method = VerifyMethod::bilateral;
      else if (val == "exact_coeffs") cur.method = VerifyMethod::exact_coeffs;
      else throw CatalogError("unknown method '" + val + "'", cur.id, line);
      have_method = true;
    } else if (key == "params") {
      parse_params(val, line);
    } else if (key == "status") {
      if (val == "expected_pass") cur.status = IdentityStatus::expected_pass;
      else if (val == "known_discrepant") cur.status = IdentityStatus::known_discrepant;
      else throw CatalogError("unknown status '" + val + "'", cur.id, line);
    } else if (key == "ref") {
      std::string r = val;
      if (r.size() >= 2 && r.front() == '"' && r.back() == '"') r = r.substr(1, r.size() - 2);
      cur.ref = r;
    } else if (key == "tol") {
      cur.tol = std::strtod(val.c_str(), nullptr);
      if (!(cur.tol > 0)) throw CatalogError("tol must be positive", cur.id, line);
    } else if (key == "terms") {
      cur.terms = std::strtol(val.c_str(), nullptr, 10);
      if (cur.terms < 1) throw CatalogError("terms must be positive", cur.id, line);
    } else if (key == "check") {
      cur.exact_check = val;
    } else {
      throw CatalogError("unknown key '" + key + "'", cur.id, line);
    }
  }
};

}  // namespace

std::vector<Identity> load_catalog(std::string_view text) {
  Loader loader;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++line;
    loader.handle_line(std::string(text.substr(pos, nl - pos)), line);
    pos = nl + 1;
  }
  loader.flush(line);
  return loader.out;
}

const std::vector<Identity>& default_catalog() {
  static const std::vector<Identity> cat = load_catalog(default_catalog_text());
  return cat;
}

std::vector<double> interior_samples(const Domain& d, int count) {
  std::vector<double> out;
  out.reserve(count);
  const double w = d.hi_value - d.lo_value;
  for (int i = 1; i <= count; ++i)
    out.push_back(d.lo_value + w * static_cast<double>(i) / static_cast<double>(count + 1));
  return out;
}

namespace {

// Expands the declared parameter grid in declaration order.
void param_combos(const std::vector<ParamSpec>& specs, std::size_t i,
                  std::vector<std::pair<std::string, double>>& cur,
                  std::vector<std::vector<std::pair<std::string, double>>>& out) {
  if (i == specs.size()) {
    out.push_back(cur);
    return;
  }
  for (double v : specs[i].values) {
    cur.emplace_back(specs[i].name, v);
    param_combos(specs, i + 1, cur, out);
    cur.pop_back();
  }
}

SumEstimate run_method(const Identity& ident, double theta,
                       const std::vector<std::pair<std::string, double>>& params, double tol) {
  SeriesSpec spec = ident.series;
  for (const auto& [name, value] : params) spec.parameters[name] = {value, 0.0};
  switch (ident.method) {
    case VerifyMethod::direct:
      return partial_sum(spec, theta, ident.terms);
    case VerifyMethod::abel:
      return abel_sum(spec, theta, tol / 8);
    case VerifyMethod::euler:
      return euler_sum(spec, theta, tol / 8);
    case VerifyMethod::bilateral: {
      double a = 0;
      bool found = false;
      for (const auto& [name, value] : params)
        if (name == "a") {
          a = value;
          found = true;
        }
      if (!found) throw SeriesError("bilateral identity needs parameter 'a'");
      const long pairs = ident.terms == 100000 ? 600 : ident.terms;
      return bilateral_sum(spec, theta, a, pairs, true);
    }
    case VerifyMethod::exact_coeffs:
      throw SeriesError("exact_coeffs entries have no theta samples");
  }
  throw SeriesError("unknown method");
}

}  // namespace

VerificationReport verify(const Identity& ident, std::span<const double> thetas, double tol) {
  VerificationReport rep;
  rep.identity_id = ident.id;
  rep.tolerance = tol;
  rep.passed = true;

  if (ident.method == VerifyMethod::exact_coeffs) {
    std::size_t bad = 0;
    const bool ok = verify_exact_coeffs(ident, kDefaultSeriesOrder, bad);
    VerificationSample s;
    s.ok = ok;
    s.abs_error = ok ? 0.0 : 1.0;
    s.note = ok ? "exact coefficients match to order 16"
                : "coefficient mismatch at index " + std::to_string(bad);
    rep.samples.push_back(std::move(s));
    rep.passed = ok;
    return rep;
  }

  std::vector<double> sorted(thetas.begin(), thetas.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<std::pair<std::string, double>>> combos;
  std::vector<std::pair<std::string, double>> scratch;
  param_combos(ident.parameters, 0, scratch, combos);

  for (double theta : sorted) {
    for (const auto& combo : combos) {
      VerificationSample s;
      s.theta = theta;
      s.params = combo;
      EvalContext ctx;
      ctx["theta"] = {theta, 0.0};
      for (const auto& [name, value] : combo) ctx[name] = {value, 0.0};
      try {
        s.closed_value = eval(ident.closed, ctx);
        s.estimate = run_method(ident, theta, combo, tol);
        s.abs_error = std::abs(s.estimate.value - s.closed_value);
        s.ok = std::isfinite(s.abs_error) && s.abs_error <= tol;
        if (!std::isfinite(s.abs_error)) s.note = "non-finite comparison";
      } catch (const SeriesError& err) {
        s.ok = false;
        s.abs_error = std::numeric_limits<double>::infinity();
        s.note = err.what();
      } catch (const EvalError& err) {
        s.ok = false;
        s.abs_error = std::numeric_limits<double>::infinity();
        s.note = err.what();
      }
      rep.passed = rep.passed && s.ok;
      rep.samples.push_back(std::move(s));
    }
  }
  return rep;
}

VerificationReport verify_default(const Identity& ident) {
  if (ident.method == VerifyMethod::exact_coeffs) return verify(ident, {}, ident.tol);
  const std::vector<double> thetas = interior_samples(ident.domain, 25);
  return verify(ident, thetas, ident.tol);
}

// ---------------------------------------------------------------------
// Exact Maclaurin comparisons.
// ---------------------------------------------------------------------

namespace {

// sin(x)/x as an exact series: sum (-1)^k x^{2k} / (2k+1)!
TruncatedSeries sinx_over_x(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < order; i += 2) {
    const long k = static_cast<long>(i) / 2;
    Rational c = Rational(1) / Rational(factorial(2 * k + 1));
    s.at(i) = (k % 2 == 0) ? c : -c;
  }
  return s;
}

// cos(x) as an exact series
TruncatedSeries cos_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < order; i += 2) {
    const long k = static_cast<long>(i) / 2;
    Rational c = Rational(1) / Rational(factorial(2 * k));
    s.at(i) = (k % 2 == 0) ? c : -c;
  }
  return s;
}

bool compare_exact(const std::string& name, std::size_t order, std::size_t& bad_index) {
  TruncatedSeries lhs(order), rhs(order);
  if (name == "log1px_over_1px") {
    const TruncatedSeries opx = TruncatedSeries::one_plus_x(order);
    lhs = ts_div(ts_log(opx), opx);
    for (std::size_t i = 1; i < order; ++i) {
      const Rational h = harmonic(static_cast<long>(i));
      rhs.at(i) = (i % 2 == 1) ? h : -h;
    }
  } else if (name == "log_x_over_sinx") {
    lhs = ts_log(ts_div(TruncatedSeries::one(order), sinx_over_x(order)));
    for (std::size_t i = 2; i < order; i += 2) {
      const long m = static_cast<long>(i);
      // 2^{2n} |B_{2n}| / (2n) * 1/(2n)!  with 2n = m
      const Rational b = abs(bernoulli_number(m));
      rhs.at(i) = Rational(BigInt(1) << m) * b / Rational(m) / Rational(factorial(m));
    }
  } else if (name == "log_secx") {
    lhs = ts_log(ts_div(TruncatedSeries::one(order), cos_series(order)));
    for (std::size_t i = 2; i < order; i += 2) {
      const long m = static_cast<long>(i);
      const Rational b = abs(bernoulli_number(m));
      const BigInt p = BigInt(1) << m;  // 2^{2n}
      rhs.at(i) = Rational(p) * Rational(p - 1) * b / Rational(m) / Rational(factorial(m));
    }
  } else {
    throw std::invalid_argument("unknown exact check '" + name + "'");
  }
  for (std::size_t i = 0; i < order; ++i) {
    if (lhs[i] != rhs[i]) {
      bad_index = i;
      return false;
    }
  }
  return true;
}

}  // namespace

bool verify_exact_coeffs(const Identity& ident, std::size_t order) {
  std::size_t bad = 0;
  return verify_exact_coeffs(ident, order, bad);
}

bool verify_exact_coeffs(const Identity& ident, std::size_t order, std::size_t& bad_index) {
  if (ident.method != VerifyMethod::exact_coeffs)
    throw std::invalid_argument("verify_exact_coeffs: identity is not exact_coeffs");
  if (order > 16) throw std::invalid_argument("verify_exact_coeffs: order must be <= 16");
  return compare_exact(ident.exact_check, order, bad_index);
}

}  // namespace blissard
