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

#include <blissard/umbral.hpp>
#include <blissard/exact.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace blissard {

static std::vector<UmbralPoly::Term> normalize(std::vector<UmbralPoly::Term> terms) {
  std::map<Rational, Rational> by_exponent;
  for (auto& t : terms) by_exponent[t.exponent] += t.coeff;
  std::vector<UmbralPoly::Term> out;
  out.reserve(by_exponent.size());
  for (auto& [e, c] : by_exponent)
    if (!c.is_zero()) out.push_back({c, e});
  return out;
}

UmbralPoly::UmbralPoly(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

UmbralPoly UmbralPoly::monomial(const Rational& c, const Rational& e) {
  return UmbralPoly({{c, e}});
}

UmbralPoly UmbralPoly::constant(const Rational& c) { return monomial(c, 0); }

std::string UmbralPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += terms_[i].coeff.to_string();
    if (!terms_[i].exponent.is_zero()) s += "*R^" + terms_[i].exponent.to_string();
  }
  return s;
}

UmbralPoly u_add(const UmbralPoly& a, const UmbralPoly& b) {
  std::vector<UmbralPoly::Term> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return UmbralPoly(std::move(all));
}

UmbralPoly u_sub(const UmbralPoly& a, const UmbralPoly& b) {
  std::vector<UmbralPoly::Term> all = a.terms();
  for (const auto& t : b.terms()) all.push_back({-t.coeff, t.exponent});
  return UmbralPoly(std::move(all));
}

UmbralPoly u_mul(const UmbralPoly& a, const UmbralPoly& b) {
  std::vector<UmbralPoly::Term> prod;
  prod.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      prod.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
  return UmbralPoly(std::move(prod));
}

UmbralPoly u_pow(const UmbralPoly& a, long n) {
  if (n < 0) throw std::invalid_argument("u_pow: negative exponent");
  UmbralPoly r = UmbralPoly::constant(1);
  for (long i = 0; i < n; ++i) r = u_mul(r, a);
  return r;
}

Rational u_eval(const UmbralPoly& a) {
  Rational s = 0;
  for (const auto& t : a.terms()) {
    if (t.exponent.sign() < 0)
      throw std::domain_error("u_eval: negative exponent R^" + t.exponent.to_string());
    s += t.exponent.is_zero() ? t.coeff : t.coeff / t.exponent;
  }
  return s;
}

bool verify_lemma1_induction(long n_max, std::span<const Rational> m_values) {
  const UmbralPoly one_minus_r = u_sub(UmbralPoly::constant(1), UmbralPoly::monomial(1, 1));
  for (const Rational& m : m_values) {
    if (m.sign() <= 0) throw std::domain_error("verify_lemma1_induction: requires m > 0");
    UmbralPoly pw = UmbralPoly::constant(1);  // (1-R)^n, built up
    for (long n = 0; n <= n_max; ++n) {
      const UmbralPoly next = u_mul(pw, one_minus_r);  // (1-R)^{n+1}
      const Rational lhs = u_eval(u_mul(UmbralPoly::monomial(1, m), next));
      const Rational a = u_eval(u_mul(UmbralPoly::monomial(1, m), pw));
      const Rational b = u_eval(u_mul(UmbralPoly::monomial(1, m + 1), pw));
      if (lhs != a - b) return false;
      if (lhs != lemma1_rhs(n + 1, m)) return false;
      if (a != lemma1_rhs(n, m)) return false;
      if (b != lemma1_rhs(n, m + 1)) return false;
      pw = next;
    }
  }
  return true;
}

}  // namespace blissard
