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
#include <doctest.h>

#include <gbsym/errors.hpp>
#include <gbsym/series.hpp>

#include "oracles.hpp"

using namespace gbsym;

namespace {

TruncatedSeries rational_series(std::vector<Rational> c, int m = 1)
{
  std::vector<CycloElement> v;
  for (auto& q : c)
    v.push_back(CycloElement::constant(m, q));
  return TruncatedSeries(std::move(v));
}

TruncatedSeries random_series(std::mt19937& rng, int m, int n)
{
  std::vector<CycloElement> v;
  for (int k = 0; k <= n; ++k)
    v.push_back(oracle::random_element(rng, m));
  return TruncatedSeries(std::move(v));
}

// direct sum of c^k t^k / k!
TruncatedSeries brute_exp(const Rational& c, int n)
{
  std::vector<Rational> v;
  Rational term(1);
  for (int k = 0; k <= n; ++k) {
    v.push_back(term);
    term = term * c / (k + 1);
  }
  return rational_series(v);
}

// direct Cauchy product, no shortcuts
TruncatedSeries brute_product(const TruncatedSeries& a, const TruncatedSeries& b)
{
  const int n = std::min(a.truncation(), b.truncation());
  TruncatedSeries r(a.field_order(), n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

} // namespace

TEST_SUITE("series")
{
  TEST_CASE("exponential series")
  {
    CHECK(exp_series(Rational(0), 1, 5) == TruncatedSeries::constant(CycloElement::one(1), 5));
    CHECK(exp_series(Rational(1), 1, 3) ==
          rational_series({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
    const auto e = exp_series(zeta(4, 1), 2);
    CHECK(e[0] == CycloElement::one(4));
    CHECK(e[1] == zeta(4, 1));
    CHECK(e[2] == CycloElement::constant(4, Rational(-1, 2)));
    CHECK(egf_coeff(exp_series(Rational(3), 1, 6), 4) == CycloElement::constant(1, Rational(81)));
    for (int c = -3; c <= 3; ++c)
      CHECK(exp_series(Rational(c, 2), 1, 9) == brute_exp(Rational(c, 2), 9));
  }

  TEST_CASE("exp homomorphism")
  {
    CHECK(exp_series(Rational(2), 1, 8) * exp_series(Rational(3), 1, 8) == exp_series(Rational(5), 1, 8));
    CHECK(brute_product(brute_exp(Rational(2), 8), brute_exp(Rational(3), 8)) == brute_exp(Rational(5), 8));
    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = oracle::random_rational(rng), b = oracle::random_rational(rng);
      CHECK(exp_series(a, 1, 12) * exp_series(b, 1, 12) == exp_series(a + b, 1, 12));
    }
  }

  TEST_CASE("ring laws")
  {
    std::mt19937 rng(99);
    for (int m : {1, 3, 4}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_series(rng, m, 12), b = random_series(rng, m, 12), c = random_series(rng, m, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * b == brute_product(a, b));
        CHECK((a + (-a)).is_zero());
        CHECK(TruncatedSeries::constant(CycloElement::one(m), 12) * a == a);
      }
    }
  }

  TEST_CASE("mixing truncations and orders")
  {
    const auto a = exp_series(Rational(1), 1, 8);
    const auto b = exp_series(Rational(1), 1, 5);
    CHECK((a * b).truncation() == 5);
    CHECK((a + b).truncation() == 5);
    const auto z4 = exp_series(zeta(4, 1), 5);
    const auto lifted = a + z4;
    CHECK(lifted.field_order() == 4);
    CHECK(lifted == lift_to_order(truncate(a, 5), 4) + z4);
    CHECK_THROWS_AS(exp_series(zeta(3, 1), 5) + z4, std::invalid_argument);
  }

  TEST_CASE("inversion")
  {
    const auto inv = series_invert(rational_series({Rational(1), Rational(1), Rational(0), Rational(0)}));
    CHECK(inv == rational_series({Rational(1), Rational(-1), Rational(1), Rational(-1)}));

    const auto bern = series_invert(exp_minus_one_over_t(Rational(1), 1, 14));
    const auto b = oracle::bernoulli_numbers(12);
    for (int n = 0; n <= 12; ++n)
      CHECK(egf_coeff(bern, n) == CycloElement::constant(1, b[static_cast<std::size_t>(n)]));
    CHECK(egf_coeff(bern, 2).rational_value() == Rational(1, 6));
    CHECK(egf_coeff(bern, 1).rational_value() == Rational(-1, 2));

    const auto s = exp_minus_one_over_t(Rational(3), 1, 10);
    CHECK(series_invert(series_invert(s)) == s);
    CHECK(brute_product(s, series_invert(s)) == TruncatedSeries::constant(CycloElement::one(1), 10));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_series(rng, 4, 10);
      a[0] = CycloElement::constant(4, Rational(trial + 1, 3));
      const auto one = TruncatedSeries::constant(CycloElement::one(4), 10);
      CHECK(a * series_invert(a) == one);
      CHECK(series_invert(a) * a == one);
    }

    CHECK_THROWS_AS(series_invert(rational_series({Rational(0), Rational(1)})), NotInvertible);
    CHECK_THROWS_AS(series_invert(TruncatedSeries::constant(zeta(4, 1), 3)), Unsupported);
  }

  TEST_CASE("shifts")
  {
    CHECK(shift_down(rational_series({Rational(0), Rational(1), Rational(1)}), 1) ==
          rational_series({Rational(1), Rational(1)}));
    auto e = exp_series(Rational(4), 1, 6);
    e[0] -= CycloElement::one(1);
    CHECK(shift_down(e, 1)[0] == CycloElement::constant(1, Rational(4)));
    CHECK_THROWS_AS(shift_down(exp_series(Rational(4), 1, 6), 1), NotDivisible);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const auto s = random_series(rng, 3, 9);
      const auto product = TruncatedSeries::monomial(3, 3, 9) * s;
      CHECK(shift_down(product, 3) == truncate(s, 6));
      CHECK(shift_down(shift_up(s, 3), 3) == truncate(s, 6));
    }
  }

  TEST_CASE("egf coefficients")
  {
    CHECK(egf_coeff(TruncatedSeries(1, 4), 3).is_zero());
    CHECK_THROWS_AS(egf_coeff(TruncatedSeries(1, 4), 5), std::out_of_range);
    const auto s = exp_minus_one_over_t(Rational(2), 1, 6);
    // (e^{2t} - 1)/t = sum 2^{k+1} t^k / (k+1)!
    for (int k = 0; k <= 6; ++k)
      CHECK(egf_coeff(s, k).rational_value() == oracle::ipow(Rational(2), static_cast<unsigned>(k + 1)) / (k + 1));
  }
}
