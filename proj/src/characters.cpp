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
#include <gbsym/characters.hpp>

#include <numeric>
#include <tuple>
#include <stdexcept>
#include <string>

namespace gbsym {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod)
{
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0)
    base += mod;
  while (exp > 0) {
    if (exp & 1)
      result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % mod);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod)
{
  std::int64_t old_r = a % mod, r = mod, old_s = 1, s = 0;
  if (old_r < 0)
    old_r += mod;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1)
    throw std::logic_error("mod_inverse of non-unit");
  old_s %= mod;
  return old_s < 0 ? old_s + mod : old_s;
}

// Generator of the cyclic group (Z/p^k)^* for odd p.
int primitive_root_prime_power(int p, int pk)
{
  const int phi = pk / p * (p - 1);
  auto prime_factors = factorize(phi);
  for (int g = 2; g < pk; ++g) {
    if (g % p == 0)
      continue;
    bool ok = true;
    for (auto [q, e] : prime_factors) {
      if (mod_pow(g, phi / q, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  throw std::logic_error("no primitive root found mod " + std::to_string(pk));
}

// Residue x with x = g (mod q) and x = 1 (mod d/q), gcd(q, d/q) = 1.
int crt_lift(int g, int q, int d)
{
  if (q == d)
    return g % d;
  const std::int64_t rest = d / q;
  const std::int64_t t = ((static_cast<std::int64_t>(g) - 1) % q + q) % q * mod_inverse(rest % q, q) % q;
  return static_cast<int>((1 + rest * t) % d);
}

} // namespace

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm_i64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<std::pair<int, int>> factorize(int n)
{
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long>(p) * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e)
      out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

int UnitGroupStructure::group_order() const
{
  int n = 1;
  for (const auto& g : generators)
    n *= g.order;
  return n;
}

UnitGroupStructure unit_group_structure(int d)
{
  if (d <= 0)
    throw std::invalid_argument("modulus must be positive, got " + std::to_string(d));
  UnitGroupStructure s;
  s.modulus = d;
  for (auto [p, k] : factorize(d)) {
    int pk = 1;
    for (int i = 0; i < k; ++i)
      pk *= p;
    if (p != 2) {
      s.generators.push_back({crt_lift(primitive_root_prime_power(p, pk), pk, d), pk / p * (p - 1)});
    } else if (k == 2) {
      s.generators.push_back({crt_lift(3, 4, d), 2});
    } else if (k >= 3) {
      s.generators.push_back({crt_lift(pk - 1, pk, d), 2});
      s.generators.push_back({crt_lift(5, pk, d), pk / 4});
    }
  }

  const auto du = static_cast<std::size_t>(d);
  s.dlog.assign(du, {});
  s.unit.assign(du, false);
  const std::size_t ng = s.generators.size();
  std::vector<int> exps(ng, 0);
  const int total = s.group_order();
  for (int idx = 0; idx < total; ++idx) {
    std::int64_t value = 1 % d;
    for (std::size_t i = 0; i < ng; ++i)
      value = value * mod_pow(s.generators[i].residue, exps[i], d) % d;
    auto v = static_cast<std::size_t>(value);
    if (s.unit[v])
      throw std::logic_error("unit group generators are not independent mod " + std::to_string(d));
    s.unit[v] = true;
    s.dlog[v] = exps;
    // mixed-radix increment, last generator fastest
    for (std::size_t i = ng; i-- > 0;) {
      if (++exps[i] < s.generators[i].order)
        break;
      exps[i] = 0;
    }
  }
  return s;
}

DirichletChar::DirichletChar(int modulus, int label, std::vector<int> generator_exponents, int order,
                             std::vector<int> value_exponents)
    : modulus_(modulus), label_(label), order_(order), generator_exponents_(std::move(generator_exponents)),
      value_exponents_(std::move(value_exponents))
{
  if (value_exponents_.size() != static_cast<std::size_t>(modulus_))
    throw std::invalid_argument("character value table must have one entry per residue");
  values_.reserve(value_exponents_.size());
  for (int e : value_exponents_)
    values_.push_back(e < 0 ? CycloElement::zero(order_) : zeta(order_, e));
  conductor_ = gbsym::conductor(*this);
}

const CycloElement& DirichletChar::value(long a) const
{
  long r = a % modulus_;
  if (r < 0)
    r += modulus_;
  return values_[static_cast<std::size_t>(r)];
}

int conductor(const DirichletChar& chi)
{
  const int d = chi.modulus();
  const auto& exps = chi.value_exponents();
  for (int f = 1; f < d; ++f) {
    if (d % f != 0)
      continue;
    bool trivial_on_kernel = true;
    for (int a = 1; a < d && trivial_on_kernel; a += f) {
      // a runs over residues = 1 mod f
      if (exps[static_cast<std::size_t>(a)] > 0)
        trivial_on_kernel = false;
    }
    if (trivial_on_kernel)
      return f;
  }
  return d;
}

std::vector<DirichletChar> enumerate_characters(int d)
{
  const UnitGroupStructure s = unit_group_structure(d);
  const std::size_t ng = s.generators.size();
  int lcm_order = 1;
  for (const auto& g : s.generators)
    lcm_order = std::lcm(lcm_order, g.order);

  std::vector<DirichletChar> out;
  const int total = s.group_order();
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> e(ng, 0);
  for (int label = 0; label < total; ++label) {
    int order = 1;
    for (std::size_t i = 0; i < ng; ++i)
      order = std::lcm(order, s.generators[i].order / std::gcd(s.generators[i].order, e[i]));

    // chi(u) = zeta_R^(sum e_i f_i R/n_i), re-expressed as a power of zeta_order
    std::vector<int> value_exps(static_cast<std::size_t>(d), -1);
    for (int a = 0; a < d; ++a) {
      if (!s.is_unit(a))
        continue;
      const auto& f = s.dlog[static_cast<std::size_t>(a)];
      std::int64_t big = 0;
      for (std::size_t i = 0; i < ng; ++i)
        big += static_cast<std::int64_t>(e[i]) * f[i] * (lcm_order / s.generators[i].order);
      big %= lcm_order;
      const int step = lcm_order / order;
      if (big % step != 0)
        throw std::logic_error("character value outside its order's roots of unity");
      value_exps[static_cast<std::size_t>(a)] = static_cast<int>(big / step);
    }
    out.emplace_back(d, label, e, order, std::move(value_exps));

    for (std::size_t i = ng; i-- > 0;) {
      if (++e[i] < s.generators[i].order)
        break;
      e[i] = 0;
    }
  }
  return out;
}

std::vector<DirichletChar> primitive_characters(int d)
{
  std::vector<DirichletChar> out;
  for (auto& chi : enumerate_characters(d))
    if (chi.primitive())
      out.push_back(std::move(chi));
  return out;
}

DirichletChar find_character(int d, int label)
{
  auto all = enumerate_characters(d);
  if (label < 0 || static_cast<std::size_t>(label) >= all.size())
    throw std::out_of_range("no character with label " + std::to_string(label) + " mod " + std::to_string(d));
  return std::move(all[static_cast<std::size_t>(label)]);
}

} // namespace gbsym
