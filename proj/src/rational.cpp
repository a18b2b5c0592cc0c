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
#include <gbsym/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace gbsym {

Rational make_rational(const BigInt& num, const BigInt& den)
{
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, long exp)
{
  if (exp < 0) {
    if (base == 0)
      throw std::domain_error("negative power of zero");
    Rational inv = 1 / base;
    return pow(inv, -exp);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  // base is canonical, so powers of coprime parts stay coprime
  return r;
}

BigInt factorial(unsigned n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k)
{
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_text(std::string_view s, bool allow_sign)
{
  if (s.empty())
    return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+'))
    i = 1;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

BigInt parse_int(std::string_view s)
{
  if (!s.empty() && s[0] == '+')
    s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  return make_rational(parse_int(num), parse_int(den));
}

} // namespace gbsym
