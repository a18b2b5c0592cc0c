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
#pragma once

// Reference computations used as independent expected values in tests.
// They go straight from definitions (recurrences, brute-force sums and
// searches) and share no code with the library's series machinery.

#include <numeric>
#include <random>
#include <vector>

#include <gbsym/characters.hpp>
#include <gbsym/cyclotomic.hpp>
#include <gbsym/rational.hpp>

namespace gbsym::oracle {

inline Rational ipow(const Rational& x, unsigned e)
{
  Rational r(1);
  for (unsigned i = 0; i < e; ++i)
    r *= x;
  return r;
}

inline BigInt choose(unsigned n, unsigned k)
{
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// B_0..B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(int n)
{
  std::vector<Rational> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int k = 0; k < m; ++k)
      acc += Rational(choose(static_cast<unsigned>(m + 1), static_cast<unsigned>(k))) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b;
}

// Ordinary B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Rational bernoulli_poly(int n, const Rational& x)
{
  const auto b = bernoulli_numbers(n);
  Rational acc(0);
  for (int k = 0; k <= n; ++k)
    acc += Rational(choose(static_cast<unsigned>(n), static_cast<unsigned>(k))) * b[static_cast<std::size_t>(k)] *
           ipow(x, static_cast<unsigned>(n - k));
  return acc;
}

// B_{n,chi}(x) = d^{n-1} sum_{a<d} chi(a) B_n((x+a)/d).
inline CycloElement gen_bernoulli_poly(const DirichletChar& chi, int n, const Rational& x)
{
  const int d = chi.modulus();
  CycloElement acc = CycloElement::zero(chi.order());
  for (int a = 0; a < d; ++a)
    acc.add_scaled(chi.values()[static_cast<std::size_t>(a)], bernoulli_poly(n, (x + a) / d));
  Rational scale = n >= 1 ? ipow(Rational(d), static_cast<unsigned>(n - 1)) : Rational(1, d);
  return acc * scale;
}

inline CycloElement gen_bernoulli_number(const DirichletChar& chi, int n)
{
  return oracle::gen_bernoulli_poly(chi, n, Rational(0));
}

// sum_{a=0}^{n} chi(a) a^k with 0^0 = 1, term by term.
inline CycloElement power_sum(const DirichletChar& chi, int k, long n)
{
  const long d = chi.modulus();
  CycloElement acc = CycloElement::zero(chi.order());
  for (long a = 0; a <= n; ++a)
    acc.add_scaled(chi.values()[static_cast<std::size_t>(a % d)], ipow(Rational(a), static_cast<unsigned>(k)));
  return acc;
}

inline std::vector<int> units(int d)
{
  std::vector<int> out;
  for (int a = 0; a < d; ++a)
    if (std::gcd(a, d) == 1)
      out.push_back(a);
  return out;
}

inline int multiplicative_order(int a, int d)
{
  if (d == 1)
    return 1;
  int x = a % d, k = 1;
  while (x != 1) {
    x = x * a % d;
    ++k;
  }
  return k;
}

// Smallest f | d such that chi(a) = chi(b) whenever a, b are units mod d
// with a = b (mod f).
inline int conductor(const DirichletChar& chi)
{
  const int d = chi.modulus();
  const auto u = units(d);
  for (int f = 1; f <= d; ++f) {
    if (d % f != 0)
      continue;
    bool ok = true;
    for (int a : u)
      for (int b : u)
        if (a % f == b % f && !(chi.values()[static_cast<std::size_t>(a)] == chi.values()[static_cast<std::size_t>(b)]))
          ok = false;
    if (ok)
      return f;
  }
  return d;
}

inline Rational random_rational(std::mt19937& rng, int span = 9, int den = 7)
{
  std::uniform_int_distribution<int> num(-span, span), dd(1, den);
  Rational q(num(rng), dd(rng));
  q.canonicalize();
  return q;
}

inline CycloElement random_element(std::mt19937& rng, int m)
{
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
  for (auto& x : c)
    x = random_rational(rng);
  return CycloElement::from_coeffs(m, c);
}

} // namespace gbsym::oracle
