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

// Linear quotients: checking an order, searching for one, extending an ideal
// to a larger one step by step, and exhaustive Simon-type sweeps.
//
// An order u_1, ..., u_m of G(I) has linear quotients when every colon
// (u_1, ..., u_{j-1}) : u_j, j >= 2, is generated by variables. Whether u_j
// may follow a prefix depends only on the set of placed generators, so the
// searches memoize dead sets instead of dead sequences.

#ifndef VNUM_LQ_HPP_
#define VNUM_LQ_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnum/core.hpp"

namespace vnum {

struct LQOrder {
  std::vector<Monomial> order;
  // colon_supports[j] lists the variables generating the j-th colon;
  // entry 0 is empty.
  std::vector<std::vector<std::size_t>> colon_supports;
};

struct LQCheck {
  bool ok = false;
  std::size_t failing_step = 0;             // 0-based position in the order
  std::optional<Monomial> bad_generator;    // non-variable colon generator
  std::vector<std::vector<std::size_t>> colon_supports;
};

// Throws if the list is not a divisibility antichain.
LQCheck is_lq_order(const VarContext& ctx, std::span<const Monomial> gens);

enum class SearchStatus { kFound, kExhausted, kBudget };
std::string to_string(SearchStatus s);

struct SearchBudget {
  std::uint64_t max_nodes = 2'000'000;
};

struct LQSearch {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<LQOrder> order;
  std::uint64_t nodes = 0;
};

LQSearch find_lq_order(const MonomialIdeal& ideal, SearchBudget budget = {});

struct ExtensionCertificate {
  MonomialIdeal base;
  MonomialIdeal target;
  std::vector<Monomial> base_order;
  std::vector<Monomial> added;
  // Variables generating (base, v_1, ..., v_{j-1}) : v_j for each added v_j.
  std::vector<std::vector<std::size_t>> colon_supports;

  std::vector<Monomial> full_order() const;
};

struct ExtensionSearch {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<ExtensionCertificate> certificate;
  std::uint64_t nodes = 0;
};

// Orders G(target) minus G(base) so that every step, the first included, has
// a variable-generated colon. Throws unless G(base) is inside G(target), both
// are equigenerated in one degree and base_order is a verified order of
// G(base).
ExtensionSearch extend_by_lq(const MonomialIdeal& base, std::span<const Monomial> base_order,
                             const MonomialIdeal& target, SearchBudget budget = {});

enum class SimonMode { kSquarefree, kMonomial };
std::string to_string(SimonMode m);
SimonMode parse_simon_mode(const std::string& s);

struct SimonReport {
  std::size_t n = 0;
  std::size_t d = 0;
  SimonMode mode = SimonMode::kSquarefree;
  std::size_t subsets_total = 0;        // nonempty subsets of G(target)
  std::size_t subsets_enumerated = 0;   // one per permutation class
  std::size_t lq_ideals = 0;
  std::size_t extended = 0;
  std::vector<MonomialIdeal> counterexamples;
  bool exhaustive = true;
};

// Target is I_{n,d} (squarefree) or m^d (monomial) in x1..xn.
MonomialIdeal simon_target(std::size_t n, std::size_t d, SimonMode mode);
SimonReport simon_search(std::size_t n, std::size_t d, SimonMode mode,
                         SearchBudget budget = {});
// Canonical representative of a generator subset under variable permutations,
// as the sorted list of target generator indices.
std::vector<std::size_t> canonical_subset(const MonomialIdeal& target,
                                          const std::vector<std::size_t>& subset);

// The polarized order is a linear-quotients order of the polarization.
bool lq_polarization_transfer(const MonomialIdeal& ideal, std::span<const Monomial> order);

struct LinearPowers {
  std::vector<LQSearch> per_power;  // index k-1
  bool certified = false;           // every power up to K has an order
};

LinearPowers linear_powers_certificate(const MonomialIdeal& ideal, int horizon,
                                       SearchBudget budget = {});

struct AlphaBandCheck {
  bool applicable = false;   // I is m^d, or I extends to m^d
  bool is_full_power = false;
  std::optional<Monomial> first_added;
  bool first_colon_linear = false;
  std::size_t v = 0;
  std::size_t alpha = 0;
  bool holds = false;        // alpha - 1 <= v <= alpha
};

// For an equigenerated ideal with linear quotients that extends to m^d:
// the first added generator has a linear colon and v(I) lies in
// [alpha - 1, alpha].
AlphaBandCheck alpha_band_check(const MonomialIdeal& ideal, SearchBudget budget = {});

}  // namespace vnum

#endif  // VNUM_LQ_HPP_
