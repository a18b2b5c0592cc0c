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
// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <gbsym/identities.hpp>

#include "cli.hpp"
#include "oracles.hpp"

using namespace gbsym;

namespace {

using Ys = std::array<Rational, 3>;

const std::vector<int> kModuli{1, 3, 4, 5, 7, 8};
const std::vector<Weights> kWeights{{1, 1, 1}, {1, 2, 3}, {2, 3, 5}, {3, 4, 7}};
const std::vector<Ys> kYs{{Rational(0), Rational(1, 2), Rational(2, 3)},
                          {Rational(1, 2), Rational(2, 3), Rational(0)},
                          {Rational(2, 3), Rational(0), Rational(1, 2)}};

int worker_count()
{
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string describe(const DirichletChar& chi, const Weights& w)
{
  std::ostringstream os;
  os << "d=" << chi.modulus() << " chi=" << chi.label() << " w=(" << w[0] << "," << w[1] << "," << w[2] << ")";
  return os.str();
}

std::string spec_key(const LambdaSpec& s)
{
  std::string k = s.name() + "|" + std::to_string(s.weights[0]) + "," + std::to_string(s.weights[1]) + "," +
                  std::to_string(s.weights[2]) + "|";
  for (const auto& y : s.ys)
    k += to_string(y) + ",";
  return k;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why)
  {
    if (pass)
      detail = "first failure: " + why;
    pass = false;
  }
};

// Visits each distinct lambda spec once per primitive character on the grid.
void for_each_grid_spec(const std::function<void(const DirichletChar&, const BernoulliCache&, const LambdaSpec&)>& fn)
{
  for (int d : kModuli)
    for (const auto& chi : primitive_characters(d)) {
      const BernoulliCache cache(chi);
      std::set<std::string> seen;
      for (const auto& w : kWeights)
        for (const auto& ys : kYs)
          for (const auto& spec : all_lambda_specs(w, ys))
            if (seen.insert(spec_key(spec)).second)
              fn(chi, cache, spec);
    }
}

Outcome theorem_suite(const SweepResult& sweep)
{
  Outcome o;
  const auto& s = sweep.summary;
  if (s.failed != 0)
    o.fail(std::to_string(s.failed) + " failing instances");
  std::set<std::pair<int, std::string>> tuples;
  for (const auto& r : sweep.reports) {
    std::string key;
    for (const auto& y : r.instance.ys)
      key += to_string(y) + ",";
    tuples.insert({static_cast<int>(r.instance.theorem), key});
  }
  for (auto t : all_theorems()) {
    std::size_t count = 0;
    for (const auto& [id, key] : tuples)
      count += id == static_cast<int>(t);
    if (theorem_arity(t) > 0 && count < 3)
      o.fail(theorem_name(t) + " sampled only " + std::to_string(count) + " y tuples");
  }
  if (o.pass)
    o.detail = std::to_string(s.instances) + " instances, " + std::to_string(s.passed) + " passed";
  return o;
}

Outcome expansion_consistency()
{
  Outcome o;
  std::size_t checks = 0;
  for (int d : kModuli)
    for (const auto& chi : primitive_characters(d)) {
      const BernoulliCache cache(chi);
      for (const auto& w : kWeights)
        for (const auto& ys : kYs)
          for (auto e : all_expansions()) {
            const auto series = lambda_series(expansion_lambda_spec(e, w, ys), chi, 14);
            for (int n = 0; n <= 10; ++n) {
              ++checks;
              if (!(egf_coeff(series, n) == expansion_sum(e, n, cache, w, ys)))
                o.fail(std::string(expansion_label(e)) + " " + describe(chi, w) + " n=" + std::to_string(n));
            }
          }
    }
  if (o.pass)
    o.detail = std::to_string(checks) + " coefficient checks over 9 expansions";
  return o;
}

Outcome permutation_invariance()
{
  Outcome o;
  std::size_t checks = 0;
  for_each_grid_spec([&](const DirichletChar& chi, const BernoulliCache&, const LambdaSpec& spec) {
    const auto base = lambda_series(spec, chi, 12);
    for (const auto& sigma : all_permutations()) {
      LambdaSpec p = spec;
      p.weights = permute(spec.weights, sigma);
      ++checks;
      if (!(lambda_series(p, chi, 12) == base))
        o.fail(spec.name() + " " + describe(chi, p.weights));
    }
  });
  if (o.pass)
    o.detail = std::to_string(checks) + " permuted series compared at order 12";
  return o;
}

Outcome dual_route()
{
  Outcome o;
  std::size_t checks = 0;
  for_each_grid_spec([&](const DirichletChar& chi, const BernoulliCache& cache, const LambdaSpec& spec) {
    ++checks;
    if (!(lambda_series(spec, chi, 12) == lambda_series_from_integrals(spec, cache, 12)))
      o.fail(spec.name() + " " + describe(chi, spec.weights));
  });
  if (o.pass)
    o.detail = std::to_string(checks) + " series pairs at order 12";
  return o;
}

Outcome bernoulli_oracle()
{
  Outcome o;
  const auto b = oracle::bernoulli_numbers(12);
  for (int n = 0; n <= 12; ++n)
    if (ordinary_bernoulli(n) != b[static_cast<std::size_t>(n)])
      o.fail("ordinary B_" + std::to_string(n));
  if (ordinary_bernoulli(1) != Rational(-1, 2) || ordinary_bernoulli(4) != Rational(-1, 30))
    o.fail("B_1 or B_4 literal");
  std::size_t checks = 0;
  for (int d = 1; d <= 12; ++d)
    for (const auto& chi : primitive_characters(d))
      for (int n = 0; n <= 16; ++n) {
        ++checks;
        if (!(gen_bernoulli_number(chi, n) == oracle::gen_bernoulli_number(chi, n)))
          o.fail("d=" + std::to_string(d) + " chi=" + std::to_string(chi.label()) + " n=" + std::to_string(n));
      }
  if (o.pass)
    o.detail = std::to_string(checks) + " generalized values, B_0..B_12 vs recurrence";
  return o;
}

Outcome power_sum_identity()
{
  Outcome o;
  std::size_t checks = 0;
  for (int d = 1; d <= 8; ++d)
    for (const auto& chi : enumerate_characters(d))
      for (int w = 1; w <= 4; ++w) {
        const auto s = power_sum_series(chi, w, 12);
        for (int k = 0; k <= 12; ++k) {
          ++checks;
          if (!(egf_coeff(s, k) == oracle::power_sum(chi, k, static_cast<long>(w) * d - 1)))
            o.fail("d=" + std::to_string(d) + " chi=" + std::to_string(chi.label()) + " w=" + std::to_string(w) +
                   " k=" + std::to_string(k));
        }
      }
  const auto chi4 = find_character(4, 1);
  if (!(egf_coeff(power_sum_series(chi4, 2, 12), 2) == CycloElement::constant(2, Rational(-32))))
    o.fail("S_2(7, chi_4) != -32");
  if (o.pass)
    o.detail = std::to_string(checks) + " coefficients, S_2(7,chi_4) = -32";
  return o;
}

Outcome spot_checks()
{
  Outcome o;
  const auto chi4 = find_character(4, 1);
  const Rational expect[] = {Rational(-1, 2), Rational(0), Rational(3, 2)};
  for (int n = 1; n <= 3; ++n) {
    const auto formula = oracle::gen_bernoulli_number(chi4, n);
    const auto computed = gen_bernoulli_number(chi4, n);
    if (!(formula == CycloElement::constant(2, expect[n - 1])) || !(computed == formula))
      o.fail("B_" + std::to_string(n) + ",chi_4");
  }
  const BernoulliCache cache(find_character(1, 0));
  TheoremInstance inst;
  inst.theorem = TheoremId::T8;
  inst.n = 1;
  inst.weights = {1, 2, 3};
  inst.character = {1, 0};
  const auto report = verify_theorem(inst, cache);
  for (const auto& v : report.values)
    if (!(v == CycloElement::constant(1, Rational(5, 2))))
      o.fail("T8 value " + to_string(v));
  if (o.pass)
    o.detail = "B_{1,2,3;chi_4} = -1/2, 0, 3/2; T8 common value 5/2";
  return o;
}

Outcome shift_difference()
{
  Outcome o;
  std::size_t checks = 0;
  for (int d = 1; d <= 8; ++d)
    for (const auto& chi : enumerate_characters(d))
      for (int w = 1; w <= 3; ++w)
        for (const Rational& x : {Rational(0), Rational(1, 2), Rational(2, 3)})
          for (int n = 0; n <= 10; ++n) {
            CycloElement rhs = CycloElement::zero(chi.order());
            if (n > 0) {
              for (int a = 0; a < w * d; ++a)
                rhs.add_scaled(chi.value(a), oracle::ipow(x + a, static_cast<unsigned>(n - 1)));
              rhs *= Rational(n);
            }
            ++checks;
            if (!(gen_bernoulli_poly(chi, n, x + w * d) - gen_bernoulli_poly(chi, n, x) == rhs))
              o.fail("d=" + std::to_string(d) + " w=" + std::to_string(w) + " n=" + std::to_string(n));
          }
  if (o.pass)
    o.detail = std::to_string(checks) + " instances";
  return o;
}

Outcome alternate_ratio_probe(const SweepResult& sweep, const GridDescription& grid)
{
  Outcome o;
  std::size_t t3 = 0, unequal_weights = 0;
  for (const auto& r : sweep.reports) {
    if (r.instance.theorem != TheoremId::T3)
      continue;
    ++t3;
    if (!r.passed())
      o.fail("orbit T3 failed");
    if (r.instance.weights[1] != r.instance.weights[2] && r.w2_ratio_variant_equal.has_value())
      ++unequal_weights;
  }
  const auto doc = cli::report_document("sweep", grid, sweep);
  if (t3 == 0 || unequal_weights == 0)
    o.fail("no T3 instance with w2 != w3 probed");
  if (doc["findings"].empty())
    o.fail("no finding emitted");
  if (o.pass)
    o.detail = "orbit T3 passes on " + std::to_string(t3) + " instances; finding: " +
               doc["findings"][0].get<std::string>();
  return o;
}

Outcome mutation_sensitivity(int jobs)
{
  Outcome o;
  std::size_t mutants = 0;
  for (auto t : all_theorems()) {
    const int count = static_cast<int>(theorem_permutations(t).size());
    for (int e = 0; e < count; ++e) {
      GridDescription g;
      g.moduli = {1, 3, 4};
      g.theorems = {t};
      g.n_max = 6;
      g.weights = kWeights;
      g.ys = kYs;
      g.perturbation = Perturbation{t, e, 1};
      ++mutants;
      if (sweep_verify(g, jobs).summary.failed == 0)
        o.fail(theorem_name(t) + " expression " + std::to_string(e) + " survived");
    }
  }
  if (o.pass)
    o.detail = "all " + std::to_string(mutants) + " single-exponent mutants detected";
  return o;
}

} // namespace

int main()
{
  const int jobs = worker_count();
  int failures = 0;
  auto report = [&](const std::string& name, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::endl;
  };

  const GridDescription grid = cli::default_sweep_grid();
  SweepResult sweep;
  report("theorem-suite", [&] {
    sweep = sweep_verify(grid, jobs);
    return theorem_suite(sweep);
  });
  report("expansion-consistency", expansion_consistency);
  report("permutation-invariance", permutation_invariance);
  report("dual-route-equality", dual_route);
  report("bernoulli-oracle", bernoulli_oracle);
  report("power-sum-identity", power_sum_identity);
  report("known-values", spot_checks);
  report("shift-difference-law", shift_difference);
  report("t3-alternate-ratio-probe", [&] { return alternate_ratio_probe(sweep, grid); });
  report("mutation-sensitivity", [&] { return mutation_sensitivity(jobs); });

  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) +
                                                                          " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
