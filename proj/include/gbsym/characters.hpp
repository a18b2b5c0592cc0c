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
#ifndef GBSYM_CHARACTERS_HPP
#define GBSYM_CHARACTERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gbsym/cyclotomic.hpp>

namespace gbsym {

struct UnitGenerator {
  int residue;
  int order;
  friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

// (Z/dZ)^* as a direct product of cyclic factors, one generator each.
struct UnitGroupStructure {
  int modulus = 1;
  std::vector<UnitGenerator> generators;
  // dlog[a] is the exponent vector of unit a; empty for non-units (and for
  // the single residue when d = 1, which has no generators).
  std::vector<std::vector<int>> dlog;
  std::vector<bool> unit;

  int group_order() const;
  bool is_unit(int a) const { return unit[static_cast<std::size_t>(a)]; }
};

UnitGroupStructure unit_group_structure(int d);

/// A Dirichlet character mod d with its exact value table in Q(zeta_r),
/// where r is the order of the character. values[a] = 0 for gcd(a, d) > 1,
/// except for d = 1 where the single value is 1.
class DirichletChar {
public:
  DirichletChar(int modulus, int label, std::vector<int> generator_exponents, int order,
                std::vector<int> value_exponents);

  int modulus() const { return modulus_; }
  int label() const { return label_; }
  int order() const { return order_; }
  int conductor() const { return conductor_; }
  bool primitive() const { return conductor_ == modulus_; }
  bool trivial() const { return order_ == 1; }

  // Exponent assigned to each generator, in the generator's own cyclic group.
  const std::vector<int>& generator_exponents() const { return generator_exponents_; }
  // values[a] = zeta_r^exponent[a], or zero when exponent[a] < 0.
  const std::vector<int>& value_exponents() const { return value_exponents_; }
  const std::vector<CycloElement>& values() const { return values_; }

  const CycloElement& value(long a) const;

private:
  int modulus_;
  int label_;
  int order_;
  int conductor_ = 1;
  std::vector<int> generator_exponents_;
  std::vector<int> value_exponents_;
  std::vector<CycloElement> values_;
};

// All phi(d) characters, labelled by lexicographic order of their
// generator exponent vectors. Label 0 is the trivial character.
std::vector<DirichletChar> enumerate_characters(int d);

std::vector<DirichletChar> primitive_characters(int d);

// Throws std::out_of_range for an unknown label.
DirichletChar find_character(int d, int label);

// Smallest f | d with chi(a) = 1 for every unit a = 1 (mod f).
int conductor(const DirichletChar& chi);

// chi(a mod d), mathematical mod.
inline const CycloElement& char_value(const DirichletChar& chi, long a) { return chi.value(a); }

std::vector<std::pair<int, int>> factorize(int n);
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

} // namespace gbsym

#endif // GBSYM_CHARACTERS_HPP
