// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Polarization x_i^b -> x_{i,1} ... x_{i,b} and its specialization map.

#ifndef VNUM_POLAR_HPP_
#define VNUM_POLAR_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "vnum/core.hpp"
#include "vnum/decomp.hpp"

namespace vnum {

class Polarization {
 public:
  // Target variables come in blocks by source index, j ascending inside a
  // block, sized by the bounding multidegree of `ideal`. Throws for zero.
  explicit Polarization(const MonomialIdeal& ideal);

  const VarContext& source() const { return source_; }
  const VarContext& target() const { return target_; }
  const MonomialIdeal& image() const { return image_; }

  // Target index of x_{i,j}, j is 1-based.
  std::size_t target_index(std::size_t i, std::size_t j) const;
  // (i, j) of a target variable, j 1-based.
  std::pair<std::size_t, std::size_t> block_of(std::size_t target_var) const {
    return blocks_.at(target_var);
  }
  std::size_t block_size(std::size_t i) const { return bounds_.at(i); }

  // u^P for u in the source context. Throws when u exceeds the bounding
  // multidegree.
  Monomial polarize(const Monomial& u) const;

  Monomial specialize(const Monomial& f) const;
  MonomialIdeal specialize(const MonomialIdeal& ideal) const;
  MonomialPrime specialize(const MonomialPrime& prime) const;

 private:
  VarContext source_;
  VarContext target_;
  Exponents bounds_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
  MonomialIdeal image_;
};

Polarization polarize(const MonomialIdeal& ideal);

struct PolarizationRow {
  MonomialPrime prime;            // p in Ass(I)
  std::size_t v_prime = 0;        // v_p(I)
  std::vector<std::pair<MonomialPrime, std::size_t>> lifts;  // q over p, v_q(I^P)
  std::size_t min_lift = 0;
};

struct PolarizationReport {
  std::vector<PolarizationRow> rows;
  std::size_t v_ideal = 0;
  std::size_t v_polarized = 0;
  bool part_a = false;  // pi(Ass(I^P)) = Ass(I)
  bool part_b = false;  // v_p(I) <= v_q(I^P) for all q
  bool part_c = false;  // v_p(I) = min over q above p
  bool part_d = false;  // v(I) = v(I^P)
  bool holds() const { return part_a && part_b && part_c && part_d; }
};

PolarizationReport verify_polarization_theorem(const MonomialIdeal& ideal,
                                               DecompositionCache* cache = nullptr);

}  // namespace vnum

#endif  // VNUM_POLAR_HPP_
