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

#ifndef VNUM_POLYMATROID_HPP_
#define VNUM_POLYMATROID_HPP_

#include <vector>

#include "vnum/core.hpp"
#include "vnum/graph.hpp"

namespace vnum {

/// Exchange property: for u, v in G(I) and i with deg_i(u) > deg_i(v) there
/// is j with deg_j(u) < deg_j(v) and x_j (u / x_i) in G(I).
/// Throws for a non-equigenerated ideal.
bool is_polymatroidal(const MonomialIdeal& ideal);

/// Dual exchange: deg_i(u) < deg_i(v) gives j with deg_j(u) > deg_j(v) and
/// x_i (u / x_j) in G(I).
bool dual_exchange_holds(const MonomialIdeal& ideal);

struct ColonPolymatroidal {
  bool applicable = false;  // alpha(I) >= 2
  bool holds = false;
  std::vector<std::size_t> failing_variables;
  /// Variables dividing no generator; there (I : x_i) = I and they are skipped.
  std::vector<std::size_t> outside_support;
};

/// Every (I : x_i) with x_i dividing some generator is polymatroidal and
/// generated in degree alpha(I) - 1.
ColonPolymatroidal colon_polymatroidal_check(const MonomialIdeal& ideal);

/// Degree-d monomials with a_i <= caps[i]. Throws when empty.
MonomialIdeal veronese_type(const VarContext& ctx, std::size_t d, const Exponents& caps);
/// p_{A_1} ... p_{A_r} with 0-based variable sets.
MonomialIdeal transversal(const VarContext& ctx,
                          const std::vector<std::vector<std::size_t>>& sets);
/// I_{n,d}: all squarefree monomials of degree d.
MonomialIdeal veronese_squarefree(const VarContext& ctx, std::size_t d);
/// One variable per edge; generators are the spanning forests of maximum
/// size. At most 8 edges.
MonomialIdeal graphic_matroid(const Graph& g);
MonomialIdeal graphic_matroid(const Graph& g, const VarContext& edge_ctx);

}  // namespace vnum

#endif  // VNUM_POLYMATROID_HPP_
