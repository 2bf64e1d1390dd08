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

#ifndef BLISSARD_UMBRAL_HPP
#define BLISSARD_UMBRAL_HPP

#include <blissard/rational.hpp>

#include <span>
#include <string>
#include <vector>

namespace blissard {

/// Formal polynomial in the umbral symbol R with rational exponents:
/// a normalized sum of terms c * R^e with pairwise distinct exponents,
/// sorted ascending, zero coefficients dropped.
class UmbralPoly {
 public:
  struct Term {
    Rational coeff;
    Rational exponent;
    friend bool operator==(const Term&, const Term&) = default;
  };

  UmbralPoly() = default;
  explicit UmbralPoly(std::vector<Term> terms);

  /// c * R^e
  static UmbralPoly monomial(const Rational& c, const Rational& e);
  /// the constant c = c * R^0
  static UmbralPoly constant(const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  friend bool operator==(const UmbralPoly&, const UmbralPoly&) = default;

 private:
  std::vector<Term> terms_;  // normalized
};

UmbralPoly u_add(const UmbralPoly& a, const UmbralPoly& b);
UmbralPoly u_sub(const UmbralPoly& a, const UmbralPoly& b);

/// Distributive product with the exponent law R^m R^n = R^{m+n}.
UmbralPoly u_mul(const UmbralPoly& a, const UmbralPoly& b);

/// Repeated u_mul; u_pow(a, 0) is the constant 1.
UmbralPoly u_pow(const UmbralPoly& a, long n);

/// Blissard's lowering functional with R_k = 1/k: a term c R^e maps to
/// c/e for e > 0 and to c for e = 0; negative exponents are an error.
Rational u_eval(const UmbralPoly& a);

/// Replays the Lemma 1 induction step mechanically: for every n <= n_max
/// and m in m_values checks, exactly,
///   u_eval(R^m (1-R)^{n+1}) = u_eval(R^m (1-R)^n) - u_eval(R^{m+1} (1-R)^n)
/// and that each side equals the corresponding product form.
bool verify_lemma1_induction(long n_max, std::span<const Rational> m_values);

}  // namespace blissard

#endif  // BLISSARD_UMBRAL_HPP
