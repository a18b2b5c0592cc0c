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
#include <gbsym/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <gbsym/errors.hpp>

namespace gbsym {

namespace {

void require_truncation(int n)
{
  if (n < 0)
    throw std::invalid_argument("truncation order must be nonnegative, got " + std::to_string(n));
}

// Brings b to a's field when one order divides the other; returns the common order.
int common_order(int a, int b)
{
  if (a == b)
    return a;
  if (b % a == 0)
    return b;
  if (a % b == 0)
    return a;
  throw std::invalid_argument("series field orders " + std::to_string(a) + " and " + std::to_string(b) +
                              " have no common lift");
}

} // namespace

TruncatedSeries::TruncatedSeries(int field_order, int truncation) : field_order_(field_order)
{
  require_truncation(truncation);
  coeffs_.assign(static_cast<std::size_t>(truncation + 1), CycloElement::zero(field_order));
}

TruncatedSeries::TruncatedSeries(std::vector<CycloElement> coeffs) : coeffs_(std::move(coeffs))
{
  if (coeffs_.empty())
    throw std::invalid_argument("series needs at least a constant term");
  field_order_ = coeffs_.front().order();
  for (const auto& c : coeffs_)
    if (c.order() != field_order_)
      throw std::invalid_argument("series coefficients must share one cyclotomic order");
}

TruncatedSeries TruncatedSeries::constant(const CycloElement& c, int truncation)
{
  TruncatedSeries s(c.order(), truncation);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int field_order, int j, int truncation)
{
  TruncatedSeries s(field_order, truncation);
  if (j >= 0 && j <= truncation)
    s.coeffs_[static_cast<std::size_t>(j)] = CycloElement::one(field_order);
  return s;
}

bool TruncatedSeries::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloElement& c) { return c.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
  const int m = common_order(field_order_, rhs.field_order_);
  if (m != field_order_)
    *this = lift_to_order(*this, m);
  const TruncatedSeries& b = rhs.field_order_ == m ? rhs : lift_to_order(rhs, m);
  const int n = std::min(truncation(), b.truncation());
  coeffs_.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k)
    coeffs_[static_cast<std::size_t>(k)] += b[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) { return *this += -rhs; }

TruncatedSeries& TruncatedSeries::operator*=(const Rational& q)
{
  for (auto& c : coeffs_)
    c *= q;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const CycloElement& c)
{
  const int m = common_order(field_order_, c.order());
  if (m != field_order_)
    *this = lift_to_order(*this, m);
  const CycloElement lifted = lift_to_order(c, m);
  for (auto& x : coeffs_)
    x *= lifted;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const
{
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a_in, const TruncatedSeries& b_in)
{
  const int m = common_order(a_in.field_order_, b_in.field_order_);
  const TruncatedSeries& a = a_in.field_order_ == m ? a_in : lift_to_order(a_in, m);
  const TruncatedSeries& b = b_in.field_order_ == m ? b_in : lift_to_order(b_in, m);
  const int n = std::min(a.truncation(), b.truncation());
  TruncatedSeries out(m, n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero())
      continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero())
        continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries lift_to_order(const TruncatedSeries& a, int m2)
{
  std::vector<CycloElement> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs())
    c.push_back(lift_to_order(x, m2));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate(const TruncatedSeries& a, int n)
{
  require_truncation(n);
  if (n > a.truncation())
    throw std::out_of_range("cannot raise truncation order from " + std::to_string(a.truncation()) + " to " +
                            std::to_string(n));
  return TruncatedSeries(std::vector<CycloElement>(a.coeffs().begin(), a.coeffs().begin() + n + 1));
}

TruncatedSeries exp_series(const CycloElement& c, int truncation)
{
  require_truncation(truncation);
  TruncatedSeries s(c.order(), truncation);
  CycloElement power = CycloElement::one(c.order());
  s[0] = power;
  for (int k = 1; k <= truncation; ++k) {
    power *= c;
    power *= Rational(1, k);
    s[k] = power;
  }
  return s;
}

TruncatedSeries exp_series(const Rational& c, int field_order, int truncation)
{
  require_truncation(truncation);
  TruncatedSeries s(field_order, truncation);
  Rational term = 1;
  s[0] = CycloElement::constant(field_order, term);
  for (int k = 1; k <= truncation; ++k) {
    term *= c;
    term /= k;
    s[k] = CycloElement::constant(field_order, term);
  }
  return s;
}

TruncatedSeries series_invert(const TruncatedSeries& a)
{
  const CycloElement& a0 = a[0];
  if (a0.is_zero())
    throw NotInvertible("series with zero constant term is not invertible");
  if (!a0.is_rational())
    throw Unsupported("series inversion requires a rational constant term, got " + to_string(a0));
  const Rational inv0 = 1 / a0.rational_value();
  const int n = a.truncation();
  TruncatedSeries b(a.field_order(), n);
  b[0] = CycloElement::constant(a.field_order(), inv0);
  for (int k = 1; k <= n; ++k) {
    CycloElement acc = CycloElement::zero(a.field_order());
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero())
        acc += a[j] * b[k - j];
    b[k] = acc * Rational(-inv0);
  }
  return b;
}

TruncatedSeries shift_down(const TruncatedSeries& a, int j)
{
  if (j < 0 || j > a.truncation())
    throw std::out_of_range("shift_down by " + std::to_string(j) + " exceeds truncation " +
                            std::to_string(a.truncation()));
  for (int k = 0; k < j; ++k)
    if (!a[k].is_zero())
      throw NotDivisible("series is not divisible by t^" + std::to_string(j) + ": coefficient of t^" +
                         std::to_string(k) + " is nonzero");
  return TruncatedSeries(std::vector<CycloElement>(a.coeffs().begin() + j, a.coeffs().end()));
}

TruncatedSeries shift_up(const TruncatedSeries& a, int j)
{
  if (j < 0)
    throw std::invalid_argument("shift_up by a negative amount");
  TruncatedSeries r(a.field_order(), a.truncation());
  for (int k = 0; k + j <= a.truncation(); ++k)
    r[k + j] = a[k];
  return r;
}

CycloElement egf_coeff(const TruncatedSeries& a, int n)
{
  if (n < 0 || n > a.truncation())
    throw std::out_of_range("egf coefficient " + std::to_string(n) + " beyond truncation " +
                            std::to_string(a.truncation()));
  return a[n] * Rational(factorial(static_cast<unsigned>(n)));
}

TruncatedSeries exp_minus_one_over_t(const Rational& c, int field_order, int truncation)
{
  TruncatedSeries e = exp_series(c, field_order, truncation + 1);
  e[0] = CycloElement::zero(field_order);
  return shift_down(e, 1);
}

} // namespace gbsym
