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

#include <gbsym/cyclotomic.hpp>
#include <gbsym/rational.hpp>

#include "oracles.hpp"

using namespace gbsym;

namespace {

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b)
{
  IntPolynomial r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

CycloElement c(int m, std::vector<Rational> v) { return CycloElement::from_coeffs(m, std::move(v)); }

} // namespace

TEST_SUITE("rational")
{
  TEST_CASE("canonical form")
  {
    CHECK(to_string(make_rational(2, -4)) == "-1/2");
    CHECK(to_string(make_rational(0, -7)) == "0");
    CHECK(to_string(make_rational(6, 3)) == "2");
    CHECK(make_rational(3, 9).get_den() == 3);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("parsing")
  {
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("-7/14") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("7/-14"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  }

  TEST_CASE("integer helpers")
  {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS(pow(Rational(0), -1));
  }
}

TEST_SUITE("cyclotomic")
{
  TEST_CASE("cyclotomic polynomials")
  {
    CHECK(cyclotomic_polynomial(1).coeffs == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(2).coeffs == std::vector<std::int64_t>{1, 1});
    CHECK(cyclotomic_polynomial(4).coeffs == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6).coeffs == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12).coeffs == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    // first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105.degree() == 48);
    CHECK(p105.coeffs[7] == -2);
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_polynomial(-3), std::invalid_argument);
  }

  TEST_CASE("product over divisors is x^m - 1")
  {
    for (int m = 1; m <= 40; ++m) {
      IntPolynomial prod{{1}};
      for (int e = 1; e <= m; ++e)
        if (m % e == 0)
          prod = poly_mul(prod, cyclotomic_polynomial(e));
      std::vector<std::int64_t> expect(static_cast<std::size_t>(m + 1), 0);
      expect[0] = -1;
      expect[static_cast<std::size_t>(m)] = 1;
      CHECK_MESSAGE(prod.coeffs == expect, "m = " << m);
      CHECK(cyclotomic_polynomial(m).degree() == euler_phi(m));
    }
  }

  TEST_CASE("roots of unity")
  {
    CHECK(zeta(4, 2) == CycloElement::constant(4, Rational(-1)));
    CHECK(zeta(4, 1) * zeta(4, 1) == CycloElement::constant(4, Rational(-1)));
    CHECK(zeta(6, 1) + zeta(6, 5) == CycloElement::one(6));
    CHECK(zeta(5, -1) == zeta(5, 4));
    CHECK(zeta(1, 0) == CycloElement::one(1));
    CHECK_THROWS_AS(zeta(0, 1), std::invalid_argument);
    for (int m = 1; m <= 12; ++m) {
      CHECK(zeta(m, m) == CycloElement::one(m));
      for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j)
          CHECK(zeta(m, k) * zeta(m, j) == zeta(m, k + j));
    }
  }

  TEST_CASE("sum of all m-th roots of unity")
  {
    for (int m = 1; m <= 12; ++m) {
      CycloElement s = CycloElement::zero(m);
      for (int k = 0; k < m; ++k)
        s += zeta(m, k);
      CHECK(s == (m == 1 ? CycloElement::one(m) : CycloElement::zero(m)));
    }
    // brute expansion for m = 5: x^4 = -(1 + x + x^2 + x^3) mod Phi_5
    CHECK(zeta(5, 4) == c(5, {Rational(-1), Rational(-1), Rational(-1), Rational(-1)}));
  }

  TEST_CASE("linearity and rendering")
  {
    CHECK(scale(zeta(3, 1), Rational(2, 3)) + scale(zeta(3, 1), Rational(1, 3)) == zeta(3, 1));
    CHECK(to_string(zeta(3, 2)) == "[-1, -1] @ zeta(3)");
    CHECK(to_string(c(4, {Rational(1, 2), Rational(-3, 4)})) == "[1/2, -3/4] @ zeta(4)");
    CHECK(to_string(CycloElement::constant(1, Rational(5, 2))) == "[5/2] @ zeta(1)");
    CHECK(zeta(4, 1).is_rational() == false);
    CHECK(CycloElement::constant(6, Rational(7)).rational_value() == 7);
    CHECK(CycloElement::constant(3, Rational(3, 3)) == CycloElement::one(3));
    CHECK_THROWS_AS(zeta(4, 1).rational_value(), std::domain_error);
  }

  TEST_CASE("order mismatch is rejected")
  {
    CHECK_THROWS_AS(zeta(3, 1) + zeta(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(zeta(3, 1) * zeta(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(CycloElement::from_coeffs(5, {Rational(1)}), std::invalid_argument);
  }

  TEST_CASE("lift to a multiple order")
  {
    CHECK(lift_to_order(CycloElement::one(2), 4) == CycloElement::one(4));
    CHECK(lift_to_order(zeta(2, 1), 4) == CycloElement::constant(4, Rational(-1)));
    CHECK(lift_to_order(zeta(3, 1), 6) == zeta(6, 2));
    CHECK(lift_to_order(zeta(4, 1), 12) == zeta(12, 3));
    CHECK_THROWS_AS(lift_to_order(zeta(3, 1), 4), std::invalid_argument);
    CHECK(lift_to_order(CycloElement::constant(3, Rational(2, 7)), 15).rational_value() == Rational(2, 7));
  }

  TEST_CASE("ring laws on random elements")
  {
    std::mt19937 rng(20260);
    for (int m : {1, 2, 3, 4, 5, 7, 8, 9, 12, 15}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = oracle::random_element(rng, m);
        const auto b = oracle::random_element(rng, m);
        const auto x = oracle::random_element(rng, m);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * x == a * (b * x));
        CHECK(a * (b + x) == a * b + a * x);
        CHECK(a - a == CycloElement::zero(m));
        CHECK(a + (-a) == CycloElement::zero(m));
        CHECK(a * CycloElement::one(m) == a);
      }
    }
  }

  TEST_CASE("lift is a ring homomorphism")
  {
    std::mt19937 rng(77);
    for (auto [m, m2] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {3, 12}, {4, 8}, {5, 10}, {6, 12}, {4, 12}}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = oracle::random_element(rng, m);
        const auto b = oracle::random_element(rng, m);
        CHECK(lift_to_order(a * b, m2) == lift_to_order(a, m2) * lift_to_order(b, m2));
        CHECK(lift_to_order(a + b, m2) == lift_to_order(a, m2) + lift_to_order(b, m2));
      }
    }
  }
}
