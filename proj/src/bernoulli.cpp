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
#include <gbsym/bernoulli.hpp>

#include <mutex>
#include <stdexcept>
#include <string>

namespace gbsym {

namespace {

// Slack above the requested degree; the extra coefficients are computed
// but never read.
constexpr int kTruncationSlack = 4;

void require_degree(int n)
{
  if (n < 0)
    throw std::invalid_argument("degree must be nonnegative, got " + std::to_string(n));
}

} // namespace

Rational ordinary_bernoulli(int n)
{
  require_degree(n);
  static std::shared_mutex lock;
  static std::vector<Rational> memo;
  {
    std::shared_lock<std::shared_mutex> read(lock);
    if (static_cast<std::size_t>(n) < memo.size())
      return memo[static_cast<std::size_t>(n)];
  }
  std::unique_lock<std::shared_mutex> write(lock);
  if (static_cast<std::size_t>(n) >= memo.size()) {
    const int target = std::max(n, 2 * static_cast<int>(memo.size())) + kTruncationSlack;
    const TruncatedSeries b = series_invert(exp_minus_one_over_t(Rational(1), 1, target));
    memo.clear();
    for (int k = 0; k <= target; ++k)
      memo.push_back(egf_coeff(b, k).rational_value());
  }
  return memo[static_cast<std::size_t>(n)];
}

TruncatedSeries character_exp_sum(const DirichletChar& chi, const Rational& s, int truncation)
{
  const int m = chi.order();
  const int d = chi.modulus();
  TruncatedSeries out(m, truncation);
  // coefficient k: (s^k / k!) * sum_a chi(a) a^k
  Rational scale = 1;
  for (int k = 0; k <= truncation; ++k) {
    if (k > 0) {
      scale *= s;
      scale /= k;
    }
    CycloElement acc = CycloElement::zero(m);
    for (int a = 0; a < d; ++a) {
      const CycloElement& v = chi.value(a);
      if (v.is_zero())
        continue;
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
      acc.add_scaled(v, Rational(power));
    }
    out[k] = acc * scale;
  }
  return out;
}

TruncatedSeries gen_bernoulli_series(const DirichletChar& chi, int truncation)
{
  const int m = chi.order();
  const TruncatedSeries denom = exp_minus_one_over_t(Rational(chi.modulus()), m, truncation);
  return series_invert(denom) * character_exp_sum(chi, Rational(1), truncation);
}

CycloElement gen_bernoulli_number(const DirichletChar& chi, int n)
{
  require_degree(n);
  return egf_coeff(gen_bernoulli_series(chi, n + kTruncationSlack), n);
}

CycloElement bernoulli_poly_from_numbers(std::span<const CycloElement* const> numbers, int n, const Rational& x,
                                         int field_order)
{
  if (static_cast<std::size_t>(n) >= numbers.size())
    throw std::out_of_range("not enough Bernoulli numbers for degree " + std::to_string(n));
  CycloElement acc = CycloElement::zero(field_order);
  Rational xp = 1; // x^(n-k), walking k downward
  Rational term;
  for (int k = n; k >= 0; --k) {
    const auto& bk = *numbers[static_cast<std::size_t>(k)];
    if (!bk.is_zero()) {
      term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
      term *= xp;
      acc.add_scaled(bk, term);
    }
    xp *= x;
  }
  return acc;
}

CycloElement gen_bernoulli_poly(const DirichletChar& chi, int n, const Rational& x)
{
  require_degree(n);
  const TruncatedSeries g = gen_bernoulli_series(chi, n + kTruncationSlack);
  std::vector<CycloElement> numbers;
  std::vector<const CycloElement*> refs;
  for (int k = 0; k <= n; ++k)
    numbers.push_back(egf_coeff(g, k));
  for (const auto& b : numbers)
    refs.push_back(&b);
  return bernoulli_poly_from_numbers(refs, n, x, chi.order());
}

CycloElement gen_bernoulli_poly_by_series(const DirichletChar& chi, int n, const Rational& x)
{
  require_degree(n);
  const int truncation = n + kTruncationSlack;
  const TruncatedSeries g = exp_series(x, chi.order(), truncation) * gen_bernoulli_series(chi, truncation);
  return egf_coeff(g, n);
}

CycloElement power_sum(const DirichletChar& chi, int k, long n)
{
  if (k < 0 || n < 0)
    throw std::invalid_argument("power_sum needs k >= 0 and n >= 0");
  const int d = chi.modulus();
  CycloElement acc = CycloElement::zero(chi.order());
  // group the terms by residue class so each character value is scaled once
  for (int r = 0; r < d && r <= n; ++r) {
    const CycloElement& v = chi.value(r);
    if (v.is_zero())
      continue;
    BigInt sum = 0, power;
    for (long a = r; a <= n; a += d) {
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
      sum += power;
    }
    acc.add_scaled(v, Rational(sum));
  }
  return acc;
}

TruncatedSeries power_sum_series(const DirichletChar& chi, int w, int truncation)
{
  if (w < 1)
    throw std::invalid_argument("power_sum_series needs w >= 1");
  const int m = chi.order();
  const Rational d(chi.modulus());
  const TruncatedSeries numer = exp_minus_one_over_t(d * w, m, truncation);
  const TruncatedSeries denom = exp_minus_one_over_t(d, m, truncation);
  return numer * series_invert(denom) * character_exp_sum(chi, Rational(1), truncation);
}

BernoulliCache::BernoulliCache(DirichletChar chi) : chi_(std::move(chi)) {}

const CycloElement& BernoulliCache::number(int n) const
{
  require_degree(n);
  {
    std::shared_lock<std::shared_mutex> read(lock_);
    if (static_cast<std::size_t>(n) < numbers_.size())
      return numbers_[static_cast<std::size_t>(n)];
  }
  std::unique_lock<std::shared_mutex> write(lock_);
  if (static_cast<std::size_t>(n) >= numbers_.size()) {
    const int target = std::max(n, 2 * static_cast<int>(numbers_.size()));
    const TruncatedSeries g = gen_bernoulli_series(chi_, target + kTruncationSlack);
    for (int k = static_cast<int>(numbers_.size()); k <= target; ++k)
      numbers_.push_back(egf_coeff(g, k));
  }
  return numbers_[static_cast<std::size_t>(n)];
}

const CycloElement& BernoulliCache::period_power_sum(int k, int w) const
{
  if (w < 1)
    throw std::invalid_argument("period_power_sum needs w >= 1");
  const auto key = std::make_pair(k, w);
  {
    std::shared_lock<std::shared_mutex> read(lock_);
    auto it = power_sums_.find(key);
    if (it != power_sums_.end())
      return it->second;
  }
  CycloElement value = power_sum(chi_, k, static_cast<long>(w) * chi_.modulus() - 1);
  std::unique_lock<std::shared_mutex> write(lock_);
  return power_sums_.try_emplace(key, std::move(value)).first->second;
}

std::vector<const CycloElement*> BernoulliCache::numbers_upto(int n) const
{
  number(n);
  std::vector<const CycloElement*> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  std::shared_lock<std::shared_mutex> read(lock_);
  for (int k = 0; k <= n; ++k)
    out.push_back(&numbers_[static_cast<std::size_t>(k)]);
  return out;
}

CycloElement BernoulliCache::poly(int n, const Rational& x) const
{
  require_degree(n);
  return bernoulli_poly_from_numbers(numbers_upto(n), n, x, chi_.order());
}

std::vector<CycloElement> BernoulliCache::poly_prefix(int n, const Rational& x) const
{
  require_degree(n);
  const auto numbers = numbers_upto(n);
  std::vector<Rational> xp(static_cast<std::size_t>(n + 1));
  xp[0] = 1;
  for (int j = 1; j <= n; ++j)
    xp[static_cast<std::size_t>(j)] = xp[static_cast<std::size_t>(j - 1)] * x;

  std::vector<CycloElement> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    CycloElement acc = CycloElement::zero(chi_.order());
    for (int k = 0; k <= m; ++k) {
      const auto& bk = *numbers[static_cast<std::size_t>(k)];
      if (bk.is_zero())
        continue;
      acc.add_scaled(bk, Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k))) *
                             xp[static_cast<std::size_t>(m - k)]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

} // namespace gbsym
