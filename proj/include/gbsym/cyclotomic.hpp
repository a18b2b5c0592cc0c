/* Copyright (C) 2026 The gbsym Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef GBSYM_CYCLOTOMIC_HPP
#define GBSYM_CYCLOTOMIC_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gbsym/rational.hpp>

namespace gbsym {

// Monic integer polynomial, ascending coefficients.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

namespace detail {

// Reduction data for Q(zeta_m): Phi_m and x^j mod Phi_m for every j that
// a product or a zeta power can produce.
struct CycloModulus {
  int m;
  int phi;
  IntPolynomial poly;
  std::vector<std::vector<std::int64_t>> power_residues;
};

const CycloModulus& cyclo_modulus(int m);

} // namespace detail

// Phi_m by recursive exact division of x^m - 1. Memoized; safe to call
// from several threads.
const IntPolynomial& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Exact element of Q(zeta_m), stored as its canonical residue modulo
/// Phi_m in the power basis 1, zeta, ..., zeta^(phi(m)-1). Two elements
/// of the same order are equal iff their coefficient vectors are equal.
///
/// Binary operations require equal orders and throw std::invalid_argument
/// otherwise; use lift_to_order() to move into a common field first.
class CycloElement {
public:
  // Zero of Q (order 1).
  CycloElement();

  static CycloElement zero(int m);
  static CycloElement one(int m);
  static CycloElement constant(int m, const Rational& q);
  // Takes coefficients already reduced mod Phi_m; size must equal phi(m).
  static CycloElement from_coeffs(int m, std::vector<Rational> coeffs);

  int order() const { return mod_->m; }
  int degree_bound() const { return mod_->phi; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws std::domain_error unless is_rational().
  const Rational& rational_value() const;

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const CycloElement& rhs);
  CycloElement& operator*=(const Rational& q);
  // this += a * q
  CycloElement& add_scaled(const CycloElement& a, const Rational& q);

  CycloElement operator-() const;

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, const Rational& q) { return a *= q; }
  friend CycloElement operator*(const Rational& q, CycloElement a) { return a *= q; }

  friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
  CycloElement(const detail::CycloModulus* mod, std::vector<Rational> coeffs)
      : mod_(mod), coeffs_(std::move(coeffs))
  {
  }

  void require_same_order(const CycloElement& other, const char* op) const;

  const detail::CycloModulus* mod_;
  std::vector<Rational> coeffs_;
};

inline CycloElement scale(CycloElement a, const Rational& q) { return a *= q; }

// zeta_m^(k mod m), reduced mod Phi_m.
CycloElement zeta(int m, long k);

// Image under zeta_m -> zeta_{m2}^(m2/m); order(a) must divide m2.
CycloElement lift_to_order(const CycloElement& a, int m2);

// "[c0, c1, ...] @ zeta(m)"
std::string to_string(const CycloElement& a);
std::ostream& operator<<(std::ostream& os, const CycloElement& a);

} // namespace gbsym

#endif // GBSYM_CYCLOTOMIC_HPP
