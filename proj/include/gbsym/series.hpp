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
#ifndef GBSYM_SERIES_HPP
#define GBSYM_SERIES_HPP

#include <vector>

#include <gbsym/cyclotomic.hpp>

namespace gbsym {

/// Power series in t over Q(zeta_m), truncated after t^N.
///
/// Coefficients are ordinary (the coefficient of t^k, not t^k/k!); use
/// egf_coeff() to read the exponential-generating-function coefficient.
/// Every coefficient shares the series' cyclotomic order.
class TruncatedSeries {
public:
  // Zero series of truncation N over Q(zeta_m).
  TruncatedSeries(int field_order, int truncation);
  explicit TruncatedSeries(std::vector<CycloElement> coeffs);

  static TruncatedSeries constant(const CycloElement& c, int truncation);
  // t^j (zero when j > truncation).
  static TruncatedSeries monomial(int field_order, int j, int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  int field_order() const { return field_order_; }
  const std::vector<CycloElement>& coeffs() const { return coeffs_; }
  const CycloElement& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  CycloElement& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& q);
  TruncatedSeries& operator*=(const CycloElement& c);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  // Cauchy product truncated at the smaller truncation order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& q) { return a *= q; }
  friend TruncatedSeries operator*(const Rational& q, TruncatedSeries a) { return a *= q; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
  int field_order_;
  std::vector<CycloElement> coeffs_;
};

// Same series with every coefficient lifted into Q(zeta_m2).
TruncatedSeries lift_to_order(const TruncatedSeries& a, int m2);

// Truncation lowered to n (n <= a.truncation()).
TruncatedSeries truncate(const TruncatedSeries& a, int n);

// exp(c t) = sum c^k t^k / k!, k = 0..N.
TruncatedSeries exp_series(const CycloElement& c, int truncation);
TruncatedSeries exp_series(const Rational& c, int field_order, int truncation);

// Multiplicative inverse. The constant term must be a nonzero rational:
// throws NotInvertible on zero and Unsupported on an irrational constant.
TruncatedSeries series_invert(const TruncatedSeries& a);

// Exact division by t^j; throws NotDivisible if a low coefficient is nonzero.
TruncatedSeries shift_down(const TruncatedSeries& a, int j);

// Multiplication by t^j, keeping the truncation order.
TruncatedSeries shift_up(const TruncatedSeries& a, int j);

// n! * [t^n] a; throws std::out_of_range when n exceeds the truncation.
CycloElement egf_coeff(const TruncatedSeries& a, int n);

// (exp(c t) - 1) / t, truncated at N. Constant term c.
TruncatedSeries exp_minus_one_over_t(const Rational& c, int field_order, int truncation);

} // namespace gbsym

#endif // GBSYM_SERIES_HPP
