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
#ifndef GBSYM_RATIONAL_HPP
#define GBSYM_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gbsym {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (gcd-reduced, positive denominator) after every operation
// performed through its operators; values built from raw parts must go
// through make_rational().
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

// base^exp for any integer exponent; base must be nonzero when exp < 0.
Rational pow(const Rational& base, long exp);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise or when q = 0.
Rational parse_rational(std::string_view text);

} // namespace gbsym

#endif // GBSYM_RATIONAL_HPP
