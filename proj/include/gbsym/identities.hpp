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
#ifndef GBSYM_IDENTITIES_HPP
#define GBSYM_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gbsym/bernoulli.hpp>

namespace gbsym {

using Weights = std::array<std::int64_t, 3>;

// Index triple (1-based) selecting (w_p, w_q, w_r) from (w1, w2, w3).
using WeightPermutation = std::array<int, 3>;

Weights permute(const Weights& w, const WeightPermutation& sigma);
const std::array<WeightPermutation, 6>& all_permutations();

BigInt multinomial(int n, int k, int l, int m);

// ---------------------------------------------------------------------------
// Quotient generating functions

enum class LambdaFamily { L23, L13, L12 };

struct LambdaSpec {
  LambdaFamily family = LambdaFamily::L23;
  int index = 0;
  Weights weights{1, 1, 1};
  std::vector<Rational> ys;

  // Number of y-arguments the family/index takes.
  static int arity(LambdaFamily family, int index);
  // Throws std::invalid_argument on out-of-range index, weights < 1 or wrong ys length.
  void validate() const;
  std::string name() const;
};

// Every family/index combination with the given weights and the leading
// entries of ys (missing slots read as 0).
std::vector<LambdaSpec> all_lambda_specs(const Weights& w, const std::array<Rational, 3>& ys);

// Closed form: products of (e^{ct} - 1) factors and character sums, each
// denominator divided by t and inverted.
TruncatedSeries lambda_series(const LambdaSpec& spec, const DirichletChar& chi, int truncation);

// Same quotient assembled from the per-variable integral series
// sum_k B_{k,chi}(x) (s t)^k / k! and the plain integrals sum_k B_k (c t)^k / k!.
TruncatedSeries lambda_series_from_integrals(const LambdaSpec& spec, const BernoulliCache& cache, int truncation);

// ---------------------------------------------------------------------------
// Finite coefficient expansions

enum class Expansion { S, U, V, X, Z, A1, B1, C1, D1 };

const std::array<Expansion, 9>& all_expansions();
std::string_view expansion_label(Expansion e);
// Throws std::invalid_argument for an unknown label.
Expansion parse_expansion(std::string_view label);

// The quotient whose n-th egf coefficient the expansion equals.
LambdaSpec expansion_lambda_spec(Expansion e, const Weights& w, const std::array<Rational, 3>& ys);

// Tuning knobs for evaluating one expansion; the defaults give the plain sum.
struct ExpansionOptions {
  // Added to the exponent of the first weight-power factor.
  int exponent_shift = 0;
  // (v) only: denominator weight of the shift ratio inside the inner sum,
  // replacing w3. Used to evaluate the alternate T3 expression.
  std::optional<std::int64_t> v_ratio_denominator;
};

// Exact value of the expansion's n-th coefficient for weights w and
// y-arguments ys (unused slots ignored).
CycloElement expansion_sum(Expansion e, int n, const BernoulliCache& cache, const Weights& w,
                           const std::array<Rational, 3>& ys, const ExpansionOptions& options = {});

// ---------------------------------------------------------------------------
// Symmetry theorems

enum class TheoremId { T1 = 1, T2, T3, T4, T5, T6, T7, T8 };

const std::array<TheoremId, 8>& all_theorems();
std::string theorem_name(TheoremId t);
// Accepts "T3", "t3" or "3".
TheoremId parse_theorem(std::string_view text);
int theorem_arity(TheoremId t);
Expansion theorem_expansion(TheoremId t);
// Weight permutations of the theorem's expressions, in display order.
const std::vector<WeightPermutation>& theorem_permutations(TheoremId t);

struct CharRef {
  int modulus = 1;
  int label = 0;
  friend bool operator==(const CharRef&, const CharRef&) = default;
};

struct TheoremInstance {
  TheoremId theorem = TheoremId::T1;
  int n = 0;
  Weights weights{1, 1, 1};
  std::vector<Rational> ys; // exactly theorem_arity(theorem) entries
  CharRef character;

  void validate() const;
};

// Deliberate fault injection: shifts one weight exponent of one expression.
struct Perturbation {
  TheoremId theorem = TheoremId::T1;
  int expression = 0;
  int delta = 1;
};

std::vector<CycloElement> theorem_expressions(const TheoremInstance& instance, const BernoulliCache& cache,
                                              const std::optional<Perturbation>& perturbation = std::nullopt);

struct VerificationReport {
  TheoremInstance instance;
  std::vector<CycloElement> values;
  bool all_equal = true;
  std::optional<std::pair<int, int>> mismatch;

  // Permuted variants that collapse onto displayed expressions (T4, T8):
  // coset_values[i] must equal values[coset_targets[i]].
  std::vector<CycloElement> coset_values;
  std::vector<int> coset_targets;
  bool coset_collapse = true;

  // T3 only: the fifth expression with ratio w1/w2 (instead of w1/w3) inside
  // the w3 block, and whether it matches the others.
  std::optional<CycloElement> w2_ratio_variant;
  std::optional<bool> w2_ratio_variant_equal;

  bool passed() const { return all_equal && coset_collapse; }
};

VerificationReport verify_theorem(const TheoremInstance& instance, const BernoulliCache& cache,
                                  const std::optional<Perturbation>& perturbation = std::nullopt);

// ---------------------------------------------------------------------------
// Grid sweeps

struct GridDescription {
  std::vector<int> moduli;
  bool include_imprimitive = false;
  // Restrict to these labels; empty means every label passing the filter.
  std::vector<int> labels;
  std::vector<TheoremId> theorems;
  int n_min = 0;
  int n_max = 0;
  std::vector<Weights> weights;
  // Each theorem reads its leading slots; tuples that coincide on those
  // slots yield one instance.
  std::vector<std::array<Rational, 3>> ys;
  std::optional<Perturbation> perturbation;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // T3 alternate-ratio probe
  std::size_t w2_ratio_variant_checked = 0;
  std::size_t w2_ratio_variant_failed = 0;
  std::optional<std::size_t> first_w2_ratio_variant_failure; // index into reports
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

// Instances in grid order (modulus, character, theorem, weights, ys, n).
std::vector<TheoremInstance> expand_grid(const GridDescription& grid);

// Reports come back in grid order regardless of the worker count.
SweepResult sweep_verify(const GridDescription& grid, int jobs = 1);

} // namespace gbsym

#endif // GBSYM_IDENTITIES_HPP
