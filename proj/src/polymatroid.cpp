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

#include "vnum/polymatroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace vnum {

namespace {

void require_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !stats(ideal).equigenerated) {
    throw Error("exchange properties need an equigenerated ideal");
  }
}

bool is_generator(const MonomialIdeal& ideal, const Exponents& e) {
  return std::binary_search(ideal.gens().begin(), ideal.gens().end(), e, expo::canonical_less);
}

// x_add (u / x_drop), with u divisible by x_drop.
Exponents swap_one(Exponents u, std::size_t drop, std::size_t add) {
  --u[drop];
  ++u[add];
  return u;
}

}  // namespace

bool is_polymatroidal(const MonomialIdeal& ideal) {
  require_equigenerated(ideal);
  const auto n = ideal.context().size();
  for (const auto& u : ideal.gens()) {
    for (const auto& v : ideal.gens()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          found = u[j] < v[j] && is_generator(ideal, swap_one(u, i, j));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool dual_exchange_holds(const MonomialIdeal& ideal) {
  require_equigenerated(ideal);
  const auto n = ideal.context().size();
  for (const auto& u : ideal.gens()) {
    for (const auto& v : ideal.gens()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] >= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          found = u[j] > v[j] && is_generator(ideal, swap_one(u, j, i));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

ColonPolymatroidal colon_polymatroidal_check(const MonomialIdeal& ideal) {
  const auto st = stats(ideal);
  ColonPolymatroidal out;
  if (st.alpha < 2) return out;
  out.applicable = true;
  const auto degvec = bounding_multidegree(ideal);
  for (std::size_t i = 0; i < ideal.context().size(); ++i) {
    if (degvec[i] == 0) {
      out.outside_support.push_back(i);
      continue;
    }
    const auto q = colon(ideal, Monomial::variable(ideal.context(), i));
    const auto sq = stats(q);
    const bool ok = sq.equigenerated && sq.alpha + 1 == st.alpha && is_polymatroidal(q);
    if (!ok) out.failing_variables.push_back(i);
  }
  out.holds = out.failing_variables.empty();
  return out;
}

MonomialIdeal veronese_type(const VarContext& ctx, std::size_t d, const Exponents& caps) {
  if (d == 0) throw Error("veronese_type needs d >= 1");
  if (caps.size() != ctx.size()) throw Error("cap vector length mismatch");
  auto gens = monomials_of_degree(ctx.size(), d);
  std::erase_if(gens, [&](const Exponents& e) { return !expo::divides(e, caps); });
  if (gens.empty()) throw Error("veronese_type is empty (sum of caps below d)");
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal transversal(const VarContext& ctx,
                          const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.empty()) throw Error("transversal needs at least one set");
  MonomialIdeal acc = MonomialIdeal::unit(ctx);
  for (const auto& a : sets) {
    if (a.empty()) throw Error("transversal sets must be nonempty");
    acc = multiply(acc, MonomialPrime(ctx, a).to_ideal());
  }
  return acc;
}

MonomialIdeal veronese_squarefree(const VarContext& ctx, std::size_t d) {
  if (d == 0 || d > ctx.size()) throw Error("veronese_squarefree needs 1 <= d <= n");
  return veronese_type(ctx, d, Exponents(ctx.size(), 1));
}

MonomialIdeal graphic_matroid(const Graph& g, const VarContext& edge_ctx) {
  const auto edges = g.edges();
  if (edges.empty()) throw Error("graphic matroid of an edgeless graph");
  if (edges.size() > 8) throw Error("graphic_matroid is limited to 8 edges");
  if (edge_ctx.size() != edges.size()) throw Error("context size does not match edge count");
  const std::size_t n = g.size();
  // Forest test with a tiny union-find per subset.
  auto acyclic = [&](std::uint32_t mask) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(mask >> e & 1U)) continue;
      const auto a = find(edges[e].first);
      const auto b = find(edges[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  std::vector<std::uint32_t> forests;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << edges.size()); ++mask) {
    if (!acyclic(mask)) continue;
    const int size = std::popcount(mask);
    if (size > best) {
      best = size;
      forests.clear();
    }
    if (size == best) forests.push_back(mask);
  }
  std::vector<Exponents> gens;
  for (auto mask : forests) {
    Exponents e(edges.size(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) e[k] = mask >> k & 1U;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(edge_ctx, std::move(gens));
}

MonomialIdeal graphic_matroid(const Graph& g) {
  return graphic_matroid(g, VarContext::numbered("x", g.edge_count()));
}

}  // namespace vnum
