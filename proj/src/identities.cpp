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
#include <gbsym/identities.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace gbsym {

Weights permute(const Weights& w, const WeightPermutation& sigma)
{
  return {w[static_cast<std::size_t>(sigma[0] - 1)], w[static_cast<std::size_t>(sigma[1] - 1)],
          w[static_cast<std::size_t>(sigma[2] - 1)]};
}

const std::array<WeightPermutation, 6>& all_permutations()
{
  static const std::array<WeightPermutation, 6> perms{
      {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  return perms;
}

BigInt multinomial(int n, int k, int l, int m)
{
  if (k < 0 || l < 0 || m < 0 || k + l + m != n)
    throw std::invalid_argument("multinomial needs nonnegative k + l + m = n");
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
         binomial(static_cast<unsigned>(n - k), static_cast<unsigned>(l));
}

namespace {

Rational wpow(std::int64_t w, long e) { return pow(Rational(static_cast<long>(w)), e); }

Rational as_rational(std::int64_t w) { return Rational(static_cast<long>(w)); }

void require_truncation(int n)
{
  if (n < 0)
    throw std::invalid_argument("truncation order must be nonnegative");
}

} // namespace

// ---------------------------------------------------------------------------
// LambdaSpec

int LambdaSpec::arity(LambdaFamily family, int index)
{
  switch (family) {
  case LambdaFamily::L23:
  case LambdaFamily::L13:
    return 3 - index;
  case LambdaFamily::L12:
    return index == 0 ? 1 : 0;
  }
  return 0;
}

void LambdaSpec::validate() const
{
  const int max_index = family == LambdaFamily::L12 ? 1 : 3;
  if (index < 0 || index > max_index)
    throw std::invalid_argument("lambda index " + std::to_string(index) + " out of range for " + name());
  for (auto w : weights)
    if (w < 1)
      throw std::invalid_argument("lambda weights must be positive integers");
  if (static_cast<int>(ys.size()) != arity(family, index))
    throw std::invalid_argument(name() + " takes " + std::to_string(arity(family, index)) + " y-arguments, got " +
                                std::to_string(ys.size()));
}

std::string LambdaSpec::name() const
{
  switch (family) {
  case LambdaFamily::L23:
    return "L23^" + std::to_string(index);
  case LambdaFamily::L13:
    return "L13^" + std::to_string(index);
  case LambdaFamily::L12:
    return "L12^" + std::to_string(index);
  }
  return "?";
}

std::vector<LambdaSpec> all_lambda_specs(const Weights& w, const std::array<Rational, 3>& ys)
{
  std::vector<LambdaSpec> out;
  auto add = [&](LambdaFamily f, int i) {
    LambdaSpec s{f, i, w, {}};
    s.ys.assign(ys.begin(), ys.begin() + LambdaSpec::arity(f, i));
    out.push_back(std::move(s));
  };
  for (int i = 0; i <= 3; ++i)
    add(LambdaFamily::L23, i);
  for (int i = 0; i <= 3; ++i)
    add(LambdaFamily::L13, i);
  add(LambdaFamily::L12, 0);
  add(LambdaFamily::L12, 1);
  return out;
}

namespace {

// prefactor * t^t_power * e^{exp_rate t} * prod(e^{c t} - 1 : numer)
//   / prod(e^{c t} - 1 : denom) * prod(sum_a chi(a) e^{a s t} : char_rates)
struct ClosedForm {
  Rational prefactor = 1;
  int t_power = 0;
  Rational exp_rate = 0;
  std::vector<Rational> numer;
  std::vector<Rational> denom;
  std::vector<Rational> char_rates;
};

ClosedForm closed_form(const LambdaSpec& spec, int d)
{
  const auto [w1, w2, w3] = spec.weights;
  const Rational W = as_rational(w1 * w2 * w3);
  const Rational dr(d);
  Rational ysum = 0;
  for (const auto& y : spec.ys)
    ysum += y;

  ClosedForm f;
  const int i = spec.index;
  switch (spec.family) {
  case LambdaFamily::L23:
    f.prefactor = pow(W, 2 - i);
    f.t_power = 3 - i;
    f.exp_rate = W * ysum;
    f.numer.assign(static_cast<std::size_t>(i), dr * W);
    f.denom = {dr * as_rational(w2 * w3), dr * as_rational(w1 * w3), dr * as_rational(w1 * w2)};
    f.char_rates = {as_rational(w2 * w3), as_rational(w1 * w3), as_rational(w1 * w2)};
    break;
  case LambdaFamily::L13:
    f.prefactor = pow(W, 1 - i);
    f.t_power = 3 - i;
    f.exp_rate = W * ysum;
    f.numer.assign(static_cast<std::size_t>(i), dr * W);
    f.denom = {dr * as_rational(w1), dr * as_rational(w2), dr * as_rational(w3)};
    f.char_rates = {as_rational(w1), as_rational(w2), as_rational(w3)};
    break;
  case LambdaFamily::L12:
    f.denom = {dr * as_rational(w1), dr * as_rational(w2), dr * as_rational(w3)};
    f.char_rates = {as_rational(w1), as_rational(w2), as_rational(w3)};
    if (i == 0) {
      f.prefactor = W;
      f.t_power = 3;
      f.exp_rate = as_rational(w2 * w3 + w1 * w3 + w1 * w2) * ysum;
    } else {
      f.prefactor = 1 / W;
      f.numer = {dr * as_rational(w2 * w3), dr * as_rational(w1 * w3), dr * as_rational(w1 * w2)};
    }
    break;
  }
  return f;
}

} // namespace

TruncatedSeries lambda_series(const LambdaSpec& spec, const DirichletChar& chi, int truncation)
{
  spec.validate();
  require_truncation(truncation);
  const ClosedForm f = closed_form(spec, chi.modulus());
  const int m = chi.order();
  const int N = truncation;

  // each (e^{ct} - 1) contributes t * E(c) with E(c) = (e^{ct} - 1)/t
  const int net_t = f.t_power + static_cast<int>(f.numer.size()) - static_cast<int>(f.denom.size());
  if (net_t < 0)
    throw std::logic_error("t-degree bookkeeping violated in " + spec.name());

  TruncatedSeries s = exp_series(f.exp_rate, m, N);
  s *= f.prefactor;
  for (const auto& c : f.numer)
    s = s * exp_minus_one_over_t(c, m, N);
  for (const auto& c : f.denom)
    s = s * series_invert(exp_minus_one_over_t(c, m, N));
  for (const auto& r : f.char_rates)
    s = s * character_exp_sum(chi, r, N);
  return shift_up(s, net_t);
}

namespace {

// integral of chi(x) e^{s (x + shift) t} dx = sum_k B_{k,chi}(shift) (s t)^k / k!
TruncatedSeries character_integral(const BernoulliCache& cache, const Rational& s, const Rational& shift, int N)
{
  const auto b = cache.poly_prefix(N, shift);
  TruncatedSeries out(cache.field_order(), N);
  Rational scale = 1;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      scale *= s;
      scale /= k;
    }
    out[k] = b[static_cast<std::size_t>(k)] * scale;
  }
  return out;
}

// integral of e^{c z t} dz = sum_k B_k (c t)^k / k!
TruncatedSeries plain_integral(const Rational& c, int field_order, int N)
{
  TruncatedSeries out(field_order, N);
  Rational scale = 1;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      scale *= c;
      scale /= k;
    }
    out[k] = CycloElement::constant(field_order, ordinary_bernoulli(k) * scale);
  }
  return out;
}

} // namespace

TruncatedSeries lambda_series_from_integrals(const LambdaSpec& spec, const BernoulliCache& cache, int truncation)
{
  spec.validate();
  require_truncation(truncation);
  const int N = truncation;
  const int m = cache.field_order();
  const int d = cache.character().modulus();
  const auto [w1, w2, w3] = spec.weights;
  const Weights w = spec.weights;
  const Rational W = as_rational(w1 * w2 * w3);
  const Rational dr(d);
  const int i = spec.index;
  auto y = [&](int j) -> Rational { return j < static_cast<int>(spec.ys.size()) ? spec.ys[static_cast<std::size_t>(j)] : Rational(0); };

  switch (spec.family) {
  case LambdaFamily::L23:
  case LambdaFamily::L13: {
    TruncatedSeries s = TruncatedSeries::constant(CycloElement::constant(m, pow(dr, i)), N);
    for (int j = 0; j < 3; ++j) {
      const Rational wj = as_rational(w[static_cast<std::size_t>(j)]);
      // L23: variable j carries rate W/w_j and shift w_j y_j; L13: rate w_j and shift (W/w_j) y_j
      const Rational rate = spec.family == LambdaFamily::L23 ? Rational(W / wj) : wj;
      const Rational shift = spec.family == LambdaFamily::L23 ? Rational(wj * y(j)) : Rational((W / wj) * y(j));
      s = s * character_integral(cache, rate, shift, N);
    }
    if (i > 0) {
      const TruncatedSeries inv = series_invert(plain_integral(dr * W, m, N));
      for (int k = 0; k < i; ++k)
        s = s * inv;
    }
    return s;
  }
  case LambdaFamily::L12:
    if (i == 0) {
      const Rational yy = y(0);
      return character_integral(cache, as_rational(w1), as_rational(w2) * yy, N) *
             character_integral(cache, as_rational(w2), as_rational(w3) * yy, N) *
             character_integral(cache, as_rational(w3), as_rational(w1) * yy, N);
    } else {
      TruncatedSeries s = TruncatedSeries::constant(CycloElement::constant(m, pow(dr, 3)), N);
      for (int j = 0; j < 3; ++j)
        s = s * character_integral(cache, as_rational(w[static_cast<std::size_t>(j)]), Rational(0), N);
      s = s * series_invert(plain_integral(dr * as_rational(w2 * w3), m, N));
      s = s * series_invert(plain_integral(dr * as_rational(w1 * w3), m, N));
      s = s * series_invert(plain_integral(dr * as_rational(w1 * w2), m, N));
      return s;
    }
  }
  throw std::logic_error("unknown lambda family");
}

// ---------------------------------------------------------------------------
// Expansions

const std::array<Expansion, 9>& all_expansions()
{
  static const std::array<Expansion, 9> all{Expansion::S,  Expansion::U,  Expansion::V,  Expansion::X, Expansion::Z,
                                            Expansion::A1, Expansion::B1, Expansion::C1, Expansion::D1};
  return all;
}

std::string_view expansion_label(Expansion e)
{
  switch (e) {
  case Expansion::S: return "s";
  case Expansion::U: return "u";
  case Expansion::V: return "v";
  case Expansion::X: return "x";
  case Expansion::Z: return "z";
  case Expansion::A1: return "a1";
  case Expansion::B1: return "b1";
  case Expansion::C1: return "c1";
  case Expansion::D1: return "d1";
  }
  return "?";
}

Expansion parse_expansion(std::string_view label)
{
  for (auto e : all_expansions())
    if (expansion_label(e) == label)
      return e;
  throw std::invalid_argument("unknown expansion label '" + std::string(label) + "'");
}

LambdaSpec expansion_lambda_spec(Expansion e, const Weights& w, const std::array<Rational, 3>& ys)
{
  auto make = [&](LambdaFamily f, int i) {
    LambdaSpec s{f, i, w, {}};
    s.ys.assign(ys.begin(), ys.begin() + LambdaSpec::arity(f, i));
    return s;
  };
  switch (e) {
  case Expansion::S: return make(LambdaFamily::L23, 0);
  case Expansion::U:
  case Expansion::V: return make(LambdaFamily::L23, 1);
  case Expansion::X:
  case Expansion::Z:
  case Expansion::A1: return make(LambdaFamily::L23, 2);
  case Expansion::B1: return make(LambdaFamily::L23, 3);
  case Expansion::C1: return make(LambdaFamily::L12, 0);
  case Expansion::D1: return make(LambdaFamily::L12, 1);
  }
  throw std::logic_error("unknown expansion");
}

namespace {

struct Evaluator {
  const BernoulliCache& cache;
  int n;
  std::int64_t a, b, c; // w1, w2, w3 after permutation
  const std::array<Rational, 3>& ys;
  const ExpansionOptions& opt;

  int field() const { return cache.field_order(); }
  long d() const { return cache.character().modulus(); }
  const CycloElement& S(int k, std::int64_t w) const { return cache.period_power_sum(k, static_cast<int>(w)); }

  // sum over k + l + m = n of multinomial * f(k, l, m) * weight(k, l, m)
  template <typename Term, typename Weight>
  CycloElement multinomial_sum(Term&& term, Weight&& weight) const
  {
    CycloElement acc = CycloElement::zero(field());
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) {
        const int m = n - k - l;
        CycloElement t = term(k, l, m);
        if (t.is_zero())
          continue;
        acc.add_scaled(t, Rational(multinomial(n, k, l, m)) * weight(k, l, m));
      }
    }
    return acc;
  }

  static CycloElement product(const CycloElement& x, const CycloElement& y, const CycloElement& z)
  {
    if (x.is_zero() || y.is_zero() || z.is_zero())
      return CycloElement::zero(x.order());
    return x * y * z;
  }

  // sum_{alpha < w d} chi(alpha) B_j(base + ratio * alpha), j = 0..n
  std::vector<CycloElement> shifted_sums(std::int64_t w, const Rational& base, const Rational& ratio) const
  {
    const auto& chi = cache.character();
    std::vector<CycloElement> out(static_cast<std::size_t>(n + 1), CycloElement::zero(field()));
    for (long alpha = 0; alpha < w * d(); ++alpha) {
      const CycloElement& v = chi.value(alpha);
      if (v.is_zero())
        continue;
      const auto prefix = cache.poly_prefix(n, base + ratio * alpha);
      for (int j = 0; j <= n; ++j)
        if (!prefix[static_cast<std::size_t>(j)].is_zero())
          out[static_cast<std::size_t>(j)] += v * prefix[static_cast<std::size_t>(j)];
    }
    return out;
  }

  CycloElement eval_s() const
  {
    const auto ba = cache.poly_prefix(n, as_rational(a) * ys[0]);
    const auto bb = cache.poly_prefix(n, as_rational(b) * ys[1]);
    const auto bc = cache.poly_prefix(n, as_rational(c) * ys[2]);
    return multinomial_sum([&](int k, int l, int m) { return product(ba[k], bb[l], bc[m]); },
                           [&](int k, int l, int m) -> Rational {
                             return wpow(a, l + m + opt.exponent_shift) * wpow(b, k + m) * wpow(c, k + l);
                           });
  }

  CycloElement eval_u() const
  {
    const auto ba = cache.poly_prefix(n, as_rational(a) * ys[0]);
    const auto bb = cache.poly_prefix(n, as_rational(b) * ys[1]);
    return multinomial_sum([&](int k, int l, int m) { return product(ba[k], bb[l], S(m, c)); },
                           [&](int k, int l, int m) -> Rational {
                             return wpow(a, l + m + opt.exponent_shift) * wpow(b, k + m) * wpow(c, k + l - 1);
                           });
  }

  CycloElement eval_v() const
  {
    const std::int64_t ratio_den = opt.v_ratio_denominator.value_or(c);
    const auto ba = cache.poly_prefix(n, as_rational(a) * ys[0]);
    const auto inner = shifted_sums(c, as_rational(b) * ys[1], as_rational(b) / as_rational(ratio_den));
    CycloElement acc = CycloElement::zero(field());
    for (int k = 0; k <= n; ++k) {
      const auto& x = ba[static_cast<std::size_t>(k)];
      const auto& y = inner[static_cast<std::size_t>(n - k)];
      if (x.is_zero() || y.is_zero())
        continue;
      acc.add_scaled(x * y, Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                                wpow(a, n - k) * wpow(b, k));
    }
    return acc * wpow(c, n - 1 + opt.exponent_shift);
  }

  CycloElement eval_x() const
  {
    const auto ba = cache.poly_prefix(n, as_rational(a) * ys[0]);
    return multinomial_sum([&](int k, int l, int m) { return product(ba[k], S(l, b), S(m, c)); },
                           [&](int k, int l, int m) -> Rational {
                             return wpow(a, l + m + opt.exponent_shift) * wpow(b, k + m - 1) * wpow(c, k + l - 1);
                           });
  }

  CycloElement eval_z() const
  {
    const auto inner = shifted_sums(b, as_rational(a) * ys[0], as_rational(a) / as_rational(b));
    CycloElement acc = CycloElement::zero(field());
    for (int k = 0; k <= n; ++k) {
      const auto& x = inner[static_cast<std::size_t>(k)];
      const auto& s = S(n - k, c);
      if (x.is_zero() || s.is_zero())
        continue;
      acc.add_scaled(x * s, Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                                wpow(a, n - k) * wpow(c, k - 1));
    }
    return acc * wpow(b, n - 1 + opt.exponent_shift);
  }

  CycloElement eval_a1() const
  {
    const auto& chi = cache.character();
    const auto numbers = cache.numbers_upto(n);
    const Rational base = as_rational(a) * ys[0];
    const Rational ra = as_rational(a) / as_rational(b);
    const Rational rb = as_rational(a) / as_rational(c);
    CycloElement acc = CycloElement::zero(field());
    for (long alpha = 0; alpha < b * d(); ++alpha) {
      const CycloElement& va = chi.value(alpha);
      if (va.is_zero())
        continue;
      const Rational xa = base + ra * alpha;
      CycloElement inner = CycloElement::zero(field());
      for (long beta = 0; beta < c * d(); ++beta) {
        const CycloElement& vb = chi.value(beta);
        if (vb.is_zero())
          continue;
        const CycloElement bn = bernoulli_poly_from_numbers(numbers, n, xa + rb * beta, field());
        if (!bn.is_zero())
          inner += vb * bn;
      }
      if (!inner.is_zero())
        acc += va * inner;
    }
    return acc * (wpow(b, n - 1 + opt.exponent_shift) * wpow(c, n - 1));
  }

  CycloElement eval_b1() const
  {
    return multinomial_sum([&](int k, int l, int m) { return product(S(k, a), S(l, b), S(m, c)); },
                           [&](int k, int l, int m) -> Rational {
                             return wpow(a, l + m - 1 + opt.exponent_shift) * wpow(b, k + m - 1) *
                                    wpow(c, k + l - 1);
                           });
  }

  CycloElement eval_c1() const
  {
    const Rational y = ys[0];
    const auto bb = cache.poly_prefix(n, as_rational(b) * y);
    const auto bc = cache.poly_prefix(n, as_rational(c) * y);
    const auto ba = cache.poly_prefix(n, as_rational(a) * y);
    return multinomial_sum([&](int k, int l, int m) { return product(bb[k], bc[l], ba[m]); },
                           [&](int k, int l, int m) -> Rational {
                             return wpow(a, k + opt.exponent_shift) * wpow(b, l) * wpow(c, m);
                           });
  }

  CycloElement eval_d1() const
  {
    return multinomial_sum([&](int k, int l, int m) { return product(S(k, b), S(l, c), S(m, a)); },
                           [&](int k, int l, int m) -> Rational {
                             return wpow(a, k - 1 + opt.exponent_shift) * wpow(b, l - 1) * wpow(c, m - 1);
                           });
  }
};

} // namespace

CycloElement expansion_sum(Expansion e, int n, const BernoulliCache& cache, const Weights& w,
                           const std::array<Rational, 3>& ys, const ExpansionOptions& options)
{
  if (n < 0)
    throw std::invalid_argument("expansion degree must be nonnegative");
  for (auto x : w)
    if (x < 1)
      throw std::invalid_argument("weights must be positive integers");
  const Evaluator ev{cache, n, w[0], w[1], w[2], ys, options};
  switch (e) {
  case Expansion::S: return ev.eval_s();
  case Expansion::U: return ev.eval_u();
  case Expansion::V: return ev.eval_v();
  case Expansion::X: return ev.eval_x();
  case Expansion::Z: return ev.eval_z();
  case Expansion::A1: return ev.eval_a1();
  case Expansion::B1: return ev.eval_b1();
  case Expansion::C1: return ev.eval_c1();
  case Expansion::D1: return ev.eval_d1();
  }
  throw std::invalid_argument("unknown expansion");
}

// ---------------------------------------------------------------------------
// Theorems

const std::array<TheoremId, 8>& all_theorems()
{
  static const std::array<TheoremId, 8> all{TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,
                                            TheoremId::T5, TheoremId::T6, TheoremId::T7, TheoremId::T8};
  return all;
}

std::string theorem_name(TheoremId t) { return "T" + std::to_string(static_cast<int>(t)); }

TheoremId parse_theorem(std::string_view text)
{
  std::string_view digits = text;
  if (!digits.empty() && (digits[0] == 'T' || digits[0] == 't'))
    digits.remove_prefix(1);
  if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '8')
    return static_cast<TheoremId>(digits[0] - '0');
  throw std::invalid_argument("unknown theorem '" + std::string(text) + "' (expected T1..T8)");
}

int theorem_arity(TheoremId t)
{
  switch (t) {
  case TheoremId::T1: return 3;
  case TheoremId::T2:
  case TheoremId::T3: return 2;
  case TheoremId::T4:
  case TheoremId::T5:
  case TheoremId::T6:
  case TheoremId::T7: return 1;
  case TheoremId::T8: return 0;
  }
  return 0;
}

Expansion theorem_expansion(TheoremId t)
{
  switch (t) {
  case TheoremId::T1: return Expansion::S;
  case TheoremId::T2: return Expansion::U;
  case TheoremId::T3: return Expansion::V;
  case TheoremId::T4: return Expansion::X;
  case TheoremId::T5: return Expansion::Z;
  case TheoremId::T6: return Expansion::A1;
  case TheoremId::T7: return Expansion::C1;
  case TheoremId::T8: return Expansion::D1;
  }
  throw std::logic_error("unknown theorem");
}

const std::vector<WeightPermutation>& theorem_permutations(TheoremId t)
{
  static const std::map<TheoremId, std::vector<WeightPermutation>> table{
      {TheoremId::T1, {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}},
      {TheoremId::T2, {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 2, 1}, {3, 1, 2}}},
      {TheoremId::T3, {{3, 2, 1}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 3}, {1, 2, 3}}},
      {TheoremId::T4, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}},
      {TheoremId::T5, {{2, 1, 3}, {3, 1, 2}, {1, 2, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}}},
      {TheoremId::T6, {{3, 1, 2}, {1, 2, 3}, {2, 3, 1}}},
      {TheoremId::T7, {{3, 1, 2}, {2, 1, 3}}},
      {TheoremId::T8, {{3, 1, 2}, {2, 1, 3}}},
  };
  return table.at(t);
}

namespace {

// Variants absorbed by index relabelling: (permutation, displayed expression it equals).
const std::vector<std::pair<WeightPermutation, int>>& coset_variants(TheoremId t)
{
  static const std::vector<std::pair<WeightPermutation, int>> none;
  // l <-> m swap
  static const std::vector<std::pair<WeightPermutation, int>> t4{
      {{1, 3, 2}, 0}, {{2, 1, 3}, 1}, {{3, 2, 1}, 2}};
  // cyclic (k, l, m) relabellings
  static const std::vector<std::pair<WeightPermutation, int>> t8{
      {{1, 2, 3}, 0}, {{2, 3, 1}, 0}, {{1, 3, 2}, 1}, {{3, 2, 1}, 1}};
  if (t == TheoremId::T4)
    return t4;
  if (t == TheoremId::T8)
    return t8;
  return none;
}

std::array<Rational, 3> padded_ys(const std::vector<Rational>& ys)
{
  std::array<Rational, 3> out{Rational(0), Rational(0), Rational(0)};
  for (std::size_t i = 0; i < ys.size() && i < 3; ++i)
    out[i] = ys[i];
  return out;
}

// Alternate form of the fifth T3 expression: shift ratio with w2 in the denominator.
constexpr int kT3AlternateExpression = 4;

} // namespace

void TheoremInstance::validate() const
{
  if (n < 0)
    throw std::invalid_argument("theorem degree must be nonnegative");
  for (auto w : weights)
    if (w < 1)
      throw std::invalid_argument("weights must be positive integers");
  if (static_cast<int>(ys.size()) != theorem_arity(theorem))
    throw std::invalid_argument(theorem_name(theorem) + " takes " + std::to_string(theorem_arity(theorem)) +
                                " y-arguments, got " + std::to_string(ys.size()));
}

std::vector<CycloElement> theorem_expressions(const TheoremInstance& instance, const BernoulliCache& cache,
                                              const std::optional<Perturbation>& perturbation)
{
  instance.validate();
  const auto& chi = cache.character();
  if (chi.modulus() != instance.character.modulus || chi.label() != instance.character.label)
    throw std::invalid_argument("cache character does not match the instance");
  const Expansion e = theorem_expansion(instance.theorem);
  const auto ys = padded_ys(instance.ys);
  const auto& perms = theorem_permutations(instance.theorem);
  std::vector<CycloElement> values;
  values.reserve(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    ExpansionOptions opt;
    if (perturbation && perturbation->theorem == instance.theorem && perturbation->expression == static_cast<int>(i))
      opt.exponent_shift = perturbation->delta;
    values.push_back(expansion_sum(e, instance.n, cache, permute(instance.weights, perms[i]), ys, opt));
  }
  return values;
}

VerificationReport verify_theorem(const TheoremInstance& instance, const BernoulliCache& cache,
                                  const std::optional<Perturbation>& perturbation)
{
  VerificationReport r;
  r.instance = instance;
  r.values = theorem_expressions(instance, cache, perturbation);
  for (std::size_t j = 1; j < r.values.size(); ++j) {
    if (r.values[j] != r.values[0]) {
      r.all_equal = false;
      r.mismatch = std::make_pair(0, static_cast<int>(j));
      break;
    }
  }

  const Expansion e = theorem_expansion(instance.theorem);
  const auto ys = padded_ys(instance.ys);
  for (const auto& [sigma, target] : coset_variants(instance.theorem)) {
    r.coset_values.push_back(expansion_sum(e, instance.n, cache, permute(instance.weights, sigma), ys));
    r.coset_targets.push_back(target);
    if (r.coset_values.back() != r.values[static_cast<std::size_t>(target)])
      r.coset_collapse = false;
  }

  if (instance.theorem == TheoremId::T3) {
    const auto& sigma = theorem_permutations(TheoremId::T3)[kT3AlternateExpression];
    ExpansionOptions opt;
    opt.v_ratio_denominator = instance.weights[1];
    r.w2_ratio_variant = expansion_sum(e, instance.n, cache, permute(instance.weights, sigma), ys, opt);
    r.w2_ratio_variant_equal = *r.w2_ratio_variant == r.values[0];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

std::vector<DirichletChar> select_characters(const GridDescription& grid, int d)
{
  auto all = enumerate_characters(d);
  std::vector<DirichletChar> out;
  if (grid.labels.empty()) {
    for (auto& chi : all)
      if (grid.include_imprimitive || chi.primitive())
        out.push_back(std::move(chi));
    return out;
  }
  for (int label : grid.labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= all.size())
      throw std::invalid_argument("no character with label " + std::to_string(label) + " mod " + std::to_string(d));
    const auto& chi = all[static_cast<std::size_t>(label)];
    if (!grid.include_imprimitive && !chi.primitive())
      throw std::invalid_argument("character " + std::to_string(label) + " mod " + std::to_string(d) +
                                  " is imprimitive (conductor " + std::to_string(chi.conductor()) +
                                  "); enable imprimitive characters to include it");
    out.push_back(chi);
  }
  return out;
}

} // namespace

std::vector<TheoremInstance> expand_grid(const GridDescription& grid)
{
  if (grid.n_min < 0 || grid.n_max < grid.n_min)
    throw std::invalid_argument("grid degree range must satisfy 0 <= n_min <= n_max");
  std::vector<TheoremInstance> out;
  for (int d : grid.moduli) {
    for (const auto& chi : select_characters(grid, d)) {
      for (TheoremId t : grid.theorems) {
        const auto arity = static_cast<std::size_t>(theorem_arity(t));
        for (const auto& w : grid.weights) {
          std::vector<std::vector<Rational>> seen;
          for (const auto& ytuple : grid.ys) {
            std::vector<Rational> ys(ytuple.begin(), ytuple.begin() + static_cast<long>(arity));
            if (std::find(seen.begin(), seen.end(), ys) != seen.end())
              continue;
            seen.push_back(ys);
            for (int n = grid.n_min; n <= grid.n_max; ++n)
              out.push_back(TheoremInstance{t, n, w, ys, CharRef{d, chi.label()}});
          }
          if (grid.ys.empty() && arity == 0)
            for (int n = grid.n_min; n <= grid.n_max; ++n)
              out.push_back(TheoremInstance{t, n, w, {}, CharRef{d, chi.label()}});
        }
      }
    }
  }
  return out;
}

SweepResult sweep_verify(const GridDescription& grid, int jobs)
{
  const auto instances = expand_grid(grid);
  SweepResult result;
  if (instances.empty())
    return result;

  std::map<std::pair<int, int>, std::unique_ptr<BernoulliCache>> caches;
  for (const auto& inst : instances) {
    auto key = std::make_pair(inst.character.modulus, inst.character.label);
    if (caches.count(key) == 0) {
      auto cache = std::make_unique<BernoulliCache>(find_character(key.first, key.second));
      cache->number(grid.n_max);
      caches.emplace(key, std::move(cache));
    }
  }

  result.reports.resize(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_lock;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < instances.size(); i = next++) {
        const auto& inst = instances[i];
        const auto& cache = *caches.at({inst.character.modulus, inst.character.label});
        result.reports[i] = verify_theorem(inst, cache, grid.perturbation);
      }
    } catch (...) {
      std::lock_guard<std::mutex> guard(error_lock);
      if (!error)
        error = std::current_exception();
      next = instances.size();
    }
  };
  if (jobs <= 0)
    jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), instances.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back(worker);
    for (auto& th : pool)
      th.join();
  }
  if (error)
    std::rethrow_exception(error);

  auto& s = result.summary;
  s.instances = result.reports.size();
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const auto& r = result.reports[i];
    r.passed() ? ++s.passed : ++s.failed;
    if (r.w2_ratio_variant_equal) {
      ++s.w2_ratio_variant_checked;
      if (!*r.w2_ratio_variant_equal) {
        ++s.w2_ratio_variant_failed;
        if (!s.first_w2_ratio_variant_failure)
          s.first_w2_ratio_variant_failure = i;
      }
    }
  }
  return result;
}

} // namespace gbsym
