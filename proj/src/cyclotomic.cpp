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
#include <gbsym/cyclotomic.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gbsym {

namespace {

void require_positive(int m)
{
  if (m <= 0)
    throw std::invalid_argument("cyclotomic order must be positive, got " + std::to_string(m));
}

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t b, std::int64_t c)
{
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return out;
}

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den)
{
  std::vector<std::int64_t> rem = num.coeffs;
  const int dn = den.degree();
  const int nn = num.degree();
  std::vector<std::int64_t> quot(static_cast<std::size_t>(nn - dn + 1), 0);
  for (int i = nn - dn; i >= 0; --i) {
    std::int64_t lead = rem[static_cast<std::size_t>(i + dn)];
    quot[static_cast<std::size_t>(i)] = lead;
    if (lead == 0)
      continue;
    for (int j = 0; j <= dn; ++j) {
      auto& r = rem[static_cast<std::size_t>(i + j)];
      r = checked_sub_mul(r, lead, den.coeffs[static_cast<std::size_t>(j)]);
    }
  }
  for (auto r : rem)
    if (r != 0)
      throw std::logic_error("inexact division while building cyclotomic polynomial");
  return IntPolynomial{std::move(quot)};
}

// x^j mod poly for j in [0, count); poly monic of degree phi.
std::vector<std::vector<std::int64_t>> power_residues(const IntPolynomial& poly, int count)
{
  const int phi = poly.degree();
  std::vector<std::vector<std::int64_t>> table;
  table.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> cur(static_cast<std::size_t>(phi), 0);
  if (phi == 0)
    throw std::logic_error("degree-zero modulus");
  cur[0] = 1;
  for (int j = 0; j < count; ++j) {
    table.push_back(cur);
    // cur *= x, then fold x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1})
    std::int64_t top = cur.back();
    for (int i = phi - 1; i > 0; --i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    for (int i = 0; i < phi; ++i)
      cur[static_cast<std::size_t>(i)] =
          checked_sub_mul(cur[static_cast<std::size_t>(i)], top, poly.coeffs[static_cast<std::size_t>(i)]);
  }
  return table;
}

struct ModulusRegistry {
  std::mutex lock;
  std::map<int, std::unique_ptr<const detail::CycloModulus>> entries;
};

ModulusRegistry& registry()
{
  static ModulusRegistry r;
  return r;
}

IntPolynomial build_cyclotomic(int m)
{
  // x^m - 1 divided by Phi_e for every proper divisor e
  std::vector<std::int64_t> c(static_cast<std::size_t>(m + 1), 0);
  c[0] = -1;
  c[static_cast<std::size_t>(m)] = 1;
  IntPolynomial p{std::move(c)};
  for (int e = 1; e < m; ++e)
    if (m % e == 0)
      p = divide_exact(p, detail::cyclo_modulus(e).poly);
  return p;
}

} // namespace

int euler_phi(int m)
{
  require_positive(m);
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    result -= result / p;
  }
  if (n > 1)
    result -= result / n;
  return result;
}

namespace detail {

const CycloModulus& cyclo_modulus(int m)
{
  require_positive(m);
  auto& reg = registry();
  {
    std::lock_guard<std::mutex> guard(reg.lock);
    auto it = reg.entries.find(m);
    if (it != reg.entries.end())
      return *it->second;
  }
  // Built outside the lock because construction recurses into divisors.
  // Two threads may build the same entry; the first insert wins.
  IntPolynomial poly = build_cyclotomic(m);
  const int phi = poly.degree();
  const int count = std::max(m, 2 * phi - 1);
  auto entry = std::make_unique<const CycloModulus>(CycloModulus{m, phi, poly, power_residues(poly, count)});
  std::lock_guard<std::mutex> guard(reg.lock);
  auto [it, inserted] = reg.entries.emplace(m, std::move(entry));
  return *it->second;
}

} // namespace detail

const IntPolynomial& cyclotomic_polynomial(int m) { return detail::cyclo_modulus(m).poly; }

CycloElement::CycloElement() : CycloElement(zero(1)) {}

CycloElement CycloElement::zero(int m)
{
  const auto& mod = detail::cyclo_modulus(m);
  return CycloElement(&mod, std::vector<Rational>(static_cast<std::size_t>(mod.phi)));
}

CycloElement CycloElement::one(int m) { return constant(m, Rational(1)); }

CycloElement CycloElement::constant(int m, const Rational& q)
{
  CycloElement r = zero(m);
  r.coeffs_[0] = q;
  r.coeffs_[0].canonicalize();
  return r;
}

CycloElement CycloElement::from_coeffs(int m, std::vector<Rational> coeffs)
{
  const auto& mod = detail::cyclo_modulus(m);
  if (coeffs.size() != static_cast<std::size_t>(mod.phi))
    throw std::invalid_argument("coefficient vector length must equal phi(m)");
  for (auto& c : coeffs)
    c.canonicalize();
  return CycloElement(&mod, std::move(coeffs));
}

bool CycloElement::is_zero() const
{
  for (const auto& c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

bool CycloElement::is_rational() const
{
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      return false;
  return true;
}

const Rational& CycloElement::rational_value() const
{
  if (!is_rational())
    throw std::domain_error("cyclotomic element is not rational: " + to_string(*this));
  return coeffs_[0];
}

void CycloElement::require_same_order(const CycloElement& other, const char* op) const
{
  if (mod_->m != other.mod_->m)
    throw std::invalid_argument(std::string("cyclotomic ") + op + ": order mismatch (" + std::to_string(mod_->m) +
                                " vs " + std::to_string(other.mod_->m) + ")");
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs)
{
  require_same_order(rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs)
{
  require_same_order(rhs, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const Rational& q)
{
  for (auto& c : coeffs_)
    c *= q;
  return *this;
}

CycloElement& CycloElement::add_scaled(const CycloElement& a, const Rational& q)
{
  require_same_order(a, "add_scaled");
  Rational tmp;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    tmp = a.coeffs_[i] * q;
    coeffs_[i] += tmp;
  }
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs)
{
  *this = *this * rhs;
  return *this;
}

CycloElement CycloElement::operator-() const
{
  CycloElement r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b)
{
  a.require_same_order(b, "multiply");
  const int phi = a.mod_->phi;
  if (phi == 1)
    return CycloElement(a.mod_, {a.coeffs_[0] * b.coeffs_[0]});

  std::vector<Rational> full(static_cast<std::size_t>(2 * phi - 1));
  Rational tmp;
  for (int i = 0; i < phi; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0)
      continue;
    for (int j = 0; j < phi; ++j) {
      const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj == 0)
        continue;
      tmp = ai * bj;
      full[static_cast<std::size_t>(i + j)] += tmp;
    }
  }
  std::vector<Rational> out(full.begin(), full.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    const auto& fk = full[static_cast<std::size_t>(k)];
    if (fk == 0)
      continue;
    const auto& residue = a.mod_->power_residues[static_cast<std::size_t>(k)];
    for (int i = 0; i < phi; ++i) {
      auto r = residue[static_cast<std::size_t>(i)];
      if (r == 0)
        continue;
      tmp = fk * static_cast<long>(r);
      out[static_cast<std::size_t>(i)] += tmp;
    }
  }
  return CycloElement(a.mod_, std::move(out));
}

bool operator==(const CycloElement& a, const CycloElement& b)
{
  return a.mod_->m == b.mod_->m && a.coeffs_ == b.coeffs_;
}

CycloElement zeta(int m, long k)
{
  const auto& mod = detail::cyclo_modulus(m);
  long e = k % m;
  if (e < 0)
    e += m;
  const auto& residue = mod.power_residues[static_cast<std::size_t>(e)];
  std::vector<Rational> c(residue.size());
  for (std::size_t i = 0; i < residue.size(); ++i)
    c[i] = static_cast<long>(residue[i]);
  return CycloElement::from_coeffs(m, std::move(c));
}

CycloElement lift_to_order(const CycloElement& a, int m2)
{
  require_positive(m2);
  const int m = a.order();
  if (m2 % m != 0)
    throw std::invalid_argument("lift_to_order: " + std::to_string(m) + " does not divide " + std::to_string(m2));
  if (m2 == m)
    return a;
  const long step = m2 / m;
  CycloElement r = CycloElement::zero(m2);
  for (int i = 0; i < a.degree_bound(); ++i)
    if (a.coeff(i) != 0)
      r.add_scaled(zeta(m2, step * i), a.coeff(i));
  return r;
}

std::string to_string(const CycloElement& a)
{
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < a.degree_bound(); ++i) {
    if (i)
      os << ", ";
    os << a.coeff(i).get_str();
  }
  os << "] @ zeta(" << a.order() << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElement& a) { return os << to_string(a); }

} // namespace gbsym
