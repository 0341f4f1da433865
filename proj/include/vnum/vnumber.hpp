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

// v-numbers of monomial ideals.
//
// v_p(I) is read off the minimal generators of the module (I:p)/I: it is the
// least degree of such a generator g with (I:g) = p. For monomial ideals
// those generators are exactly G(I:p) minus I. v(I) is the minimum of v_p(I)
// over Ass(I).

#ifndef VNUM_VNUMBER_HPP_
#define VNUM_VNUMBER_HPP_

#include <map>
#include <optional>
#include <vector>

#include "vnum/core.hpp"
#include "vnum/decomp.hpp"

namespace vnum {

struct VWitness {
  MonomialPrime prime;
  Monomial monomial;
  std::size_t degree = 0;
};

// Minimal monomial generators of (I:p)/I. Throws when p is not in Ass(I).
std::vector<Monomial> colon_module_gens(const MonomialIdeal& ideal, const MonomialPrime& prime,
                                        DecompositionCache* cache = nullptr);

// alpha((I:p)/I): least degree among colon_module_gens.
std::size_t module_initial_degree(const MonomialIdeal& ideal, const MonomialPrime& prime,
                                  DecompositionCache* cache = nullptr);

// v_p(I) with the lexicographically smallest witness among those of least
// degree. Throws when p is not in Ass(I).
VWitness v_at_prime(const MonomialIdeal& ideal, const MonomialPrime& prime,
                    DecompositionCache* cache = nullptr);

// v(I). Throws for the zero or unit ideal.
VWitness v_number(const MonomialIdeal& ideal, DecompositionCache* cache = nullptr);

// Exhaustive search by degree for a monomial f outside I whose colon is a
// prime. Independent of the decomposition code.
std::size_t v_oracle(const MonomialIdeal& ideal);

struct TailLaw {
  std::size_t alpha = 0;
  long b = 0;
  int k0 = 0;  // window is [k0, K]
};

struct VReport {
  int horizon = 0;
  std::size_t alpha = 0;
  bool equigenerated = false;
  // per_prime[k-1] maps each prime of Ass(I^k) to v_p(I^k).
  std::vector<std::map<MonomialPrime, std::size_t>> per_prime;
  std::vector<std::size_t> v;             // v(I^k), k = 1..K
  std::vector<std::size_t> alpha_power;   // alpha(I^k)
  std::vector<VWitness> witnesses;        // one per k
  std::optional<TailLaw> tail_law;        // equigenerated ideals only
  // Flags.
  bool lower_bound_holds = true;          // v(I^k) >= alpha(I^k) - 1 for all k
  std::optional<bool> tail_b_at_least_minus_one;
  bool linear_powers_law = false;         // v(I^k) = alpha k - 1 for all k <= K
  std::vector<bool> in_alpha_band;        // alpha k - 1 <= v(I^k) <= alpha k
};

VReport v_function(const MonomialIdeal& ideal, int horizon,
                   DecompositionCache* cache = nullptr);

// Largest window [k0, K] (length >= 2) on which v_k - alpha k is constant.
std::optional<TailLaw> fit_tail_law(const std::vector<std::size_t>& v, std::size_t alpha);

struct ColonBound {
  Monomial f;
  std::size_t v_ideal = 0;
  std::size_t v_colon = 0;
  bool holds = false;
};

struct PrimeBound {
  MonomialPrime prime;
  std::size_t v_prime = 0;
  long lower = 0;  // alpha(I) - 1
  bool holds = false;
};

struct BoundsReport {
  std::vector<ColonBound> colon_bounds;
  std::vector<Monomial> skipped;  // samples lying in I
  std::vector<PrimeBound> prime_bounds;
  bool all_hold = true;
};

// v(I) <= v(I:f) + deg f for each sample outside I and v_p(I) >= alpha(I) - 1
// for every associated prime.
BoundsReport check_bounds(const MonomialIdeal& ideal, const std::vector<Monomial>& samples,
                          DecompositionCache* cache = nullptr);

struct ModuleDegreeRow {
  MonomialPrime prime;
  std::size_t v_prime = 0;
  std::size_t module_alpha = 0;
  bool is_max = false;
  bool holds = false;  // v_p >= alpha, with equality on Max(I)
};

struct ModuleDegreeReport {
  std::vector<ModuleDegreeRow> rows;
  bool has_embedded = false;
  // Only meaningful without embedded primes: v(I) = min_p alpha((I:p)/I).
  std::optional<bool> unmixed_identity;
  // No module generator lies in I + m (I:p).
  bool nakayama_ok = true;
  bool all_hold = true;
};

ModuleDegreeReport check_module_degrees(const MonomialIdeal& ideal,
                                        DecompositionCache* cache = nullptr);

}  // namespace vnum

#endif  // VNUM_VNUMBER_HPP_
