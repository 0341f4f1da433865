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

// Finite posets, their down-set lattices and Hibi ideals
// H_P = (prod_{p in D} x_p * prod_{p not in D} y_p : D a down-set of P).

#ifndef VNUM_HIBI_HPP_
#define VNUM_HIBI_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vnum/core.hpp"

namespace vnum {

// Elements 0..n-1, at most 64. leq(i, j) is the reflexive-transitive order.
class Poset {
 public:
  // Cover relations (lower, upper). Throws on loops or cycles.
  Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return below_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return below_[j] >> i & 1U; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  // Elements p with i < p < j.
  std::size_t strictly_between(std::size_t i, std::size_t j) const;
  // Cover relations of the closed order, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  bool operator==(const Poset& other) const { return below_ == other.below_; }

 private:
  Poset() = default;
  // below_[j] has bit i set iff i <= j.
  std::vector<std::uint64_t> below_;

  friend Poset poset_power(const Poset& p, int k);
  friend std::vector<Poset> posets_up_to_isomorphism(std::size_t n);
};

// Down-sets as bitmasks, sorted by size then value.
std::vector<std::uint64_t> poset_ideals(const Poset& p);

// Context x1..xn, y1..yn (x_i at index i, y_i at index n + i).
VarContext hibi_context(std::size_t n);
MonomialIdeal hibi_ideal(const Poset& p);
MonomialIdeal hibi_ideal(const Poset& p, const VarContext& ctx);

// P(k): element (i, l), l = 1..k, sits at index i * k + (l - 1), and
// (i, r) >= (j, s) iff p_i >= p_j and r >= s.
Poset poset_power(const Poset& p, int k);

struct HibiPolarizationCheck {
  MonomialIdeal polarized;  // modified polarization of H_P^k, in the P(k) context
  MonomialIdeal expected;   // H_{P(k)}
  bool holds = false;
};

// Polarizes H_P^k, relabels y_{i,l} -> y_{i,k+1-l} and compares with H_{P(k)}
// under x_{i,l} <-> x_{(i,l)}, y_{i,l} <-> y_{(i,l)}.
HibiPolarizationCheck hibi_power_polarization_check(const Poset& p, int k);

// Closed-form v_{(x_i, y_j)}(H_P^k) over comparable pairs i <= j.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> hibi_v_expected(const Poset& p,
                                                                            int k);
// The primes (x_i, y_j), i <= j, in the hibi_context of p.
std::vector<MonomialPrime> hibi_expected_primes(const Poset& p, const VarContext& ctx);

// H_P^k equals the intersection of (x_i, y_j)^k over comparable pairs.
bool hibi_symbolic_intersection_check(const Poset& p, int k);

// One representative per isomorphism class on n elements (n <= 5).
std::vector<Poset> posets_up_to_isomorphism(std::size_t n);

}  // namespace vnum

#endif  // VNUM_HIBI_HPP_
