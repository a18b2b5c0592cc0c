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
#ifndef GBSYM_BERNOULLI_HPP
#define GBSYM_BERNOULLI_HPP

#include <deque>
#include <map>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include <gbsym/characters.hpp>
#include <gbsym/series.hpp>

namespace gbsym {

// B_n from t/(e^t - 1). Memoized process-wide.
Rational ordinary_bernoulli(int n);

// sum_{a=0}^{d-1} chi(a) e^{a s t}, truncated at N, over Q(zeta_order(chi)).
TruncatedSeries character_exp_sum(const DirichletChar& chi, const Rational& s, int truncation);

// t/(e^{dt} - 1) * sum_{a<d} chi(a) e^{at}: egf of B_{n,chi}.
TruncatedSeries gen_bernoulli_series(const DirichletChar& chi, int truncation);

// B_{n,chi}, read off the generating series (no memo; see BernoulliCache).
CycloElement gen_bernoulli_number(const DirichletChar& chi, int n);

// B_{n,chi}(x) by the binomial expansion sum_k C(n,k) B_{k,chi} x^(n-k).
CycloElement gen_bernoulli_poly(const DirichletChar& chi, int n, const Rational& x);

// sum_k C(n,k) numbers[k] x^(n-k) over Q(zeta_field_order).
CycloElement bernoulli_poly_from_numbers(std::span<const CycloElement* const> numbers, int n, const Rational& x,
                                         int field_order);

// B_{n,chi}(x) read off e^{xt} times the generating series.
CycloElement gen_bernoulli_poly_by_series(const DirichletChar& chi, int n, const Rational& x);

// S_k(n, chi) = sum_{a=0}^{n} chi(a) a^k, with 0^0 = 1.
CycloElement power_sum(const DirichletChar& chi, int k, long n);

// ((e^{wdt} - 1)/(e^{dt} - 1)) * sum_{a<d} chi(a) e^{at}, truncated at N;
// its egf coefficients are S_k(wd - 1, chi).
TruncatedSeries power_sum_series(const DirichletChar& chi, int w, int truncation);

/// Memo of B_{n,chi} and S_k(wd - 1, chi) for one character.
///
/// Lookups may run concurrently from several threads; extensions are
/// serialized. References returned stay valid for the cache's lifetime.
class BernoulliCache {
public:
  explicit BernoulliCache(DirichletChar chi);

  BernoulliCache(const BernoulliCache&) = delete;
  BernoulliCache& operator=(const BernoulliCache&) = delete;

  const DirichletChar& character() const { return chi_; }
  int field_order() const { return chi_.order(); }

  const CycloElement& number(int n) const;
  // Pointers to B_{0,chi} .. B_{n,chi}.
  std::vector<const CycloElement*> numbers_upto(int n) const;
  // S_k(w d - 1, chi)
  const CycloElement& period_power_sum(int k, int w) const;

  CycloElement poly(int n, const Rational& x) const;
  // B_{0,chi}(x), ..., B_{n,chi}(x)
  std::vector<CycloElement> poly_prefix(int n, const Rational& x) const;

private:
  DirichletChar chi_;
  mutable std::shared_mutex lock_;
  mutable std::deque<CycloElement> numbers_;
  mutable std::map<std::pair<int, int>, CycloElement> power_sums_;
};

} // namespace gbsym

#endif // GBSYM_BERNOULLI_HPP
