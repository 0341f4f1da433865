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

// Slow reference computations used only by the tests. Nothing here calls
// the decomposition or v-number code under test.

#ifndef VNUM_TESTS_ORACLES_HPP_
#define VNUM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vnum/core.hpp"

namespace oracle {

using vnum::Exponents;
using vnum::MonomialIdeal;

// Raw divisibility membership, independent of MonomialIdeal::contains.
inline bool member(const std::vector<Exponents>& gens, const Exponents& f) {
  for (const auto& g : gens) {
    bool divides = true;
    for (std::size_t i = 0; i < g.size() && divides; ++i) divides = g[i] <= f[i];
    if (divides) return true;
  }
  return false;
}

inline bool member(const MonomialIdeal& ideal, const Exponents& f) {
  return member(std::vector<Exponents>(ideal.gens().begin(), ideal.gens().end()), f);
}

// All exponent vectors of total degree <= d.
inline std::vector<Exponents> monomials_up_to(std::size_t n, std::size_t d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (std::size_t a = 0; a <= left; ++a) {
      e[i] = static_cast<vnum::Exponent>(a);
      self(self, i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// Every exponent vector dividing `box`.
inline std::vector<Exponents> box_monomials(const Exponents& box) {
  std::vector<Exponents> out;
  Exponents e(box.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == box[i]) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

inline Exponents add(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline std::size_t degree(const Exponents& a) {
  std::size_t d = 0;
  for (auto x : a) d += x;
  return d;
}

// g in (I : f)  <=>  f g in I, for every g of degree <= d.
inline bool colon_agrees(const MonomialIdeal& ideal, const Exponents& f,
                         const MonomialIdeal& claimed, std::size_t d) {
  for (const auto& g : monomials_up_to(ideal.context().size(), d)) {
    if (member(claimed, g) != member(ideal, add(f, g))) return false;
  }
  return true;
}

// The colon (I : f), as a sorted generator list of the prime it equals, or
// nullopt when it is not generated by variables. Derived from membership:
// x_i lies in (I : f) iff f x_i in I, and (I : f) is prime iff every
// generator of I divides f x_i for some such x_i, which we test by checking
// that each minimal generator u of (I : f) (computed as u / gcd(u, f)) is
// divisible by one of the variables found.
inline std::optional<std::vector<std::size_t>> prime_colon(const MonomialIdeal& ideal,
                                                           const Exponents& f) {
  if (member(ideal, f)) return std::nullopt;
  const auto n = f.size();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i) {
    auto g = f;
    ++g[i];
    if (member(ideal, g)) vars.push_back(i);
  }
  if (vars.empty()) return std::nullopt;
  for (const auto& u : ideal.gens()) {
    bool covered = false;
    for (auto i : vars) covered = covered || u[i] > f[i];
    if (!covered) return std::nullopt;
  }
  return vars;
}

// v_p by exhaustive search over the bounding box of I; p given by support.
inline std::optional<std::size_t> v_prime_brute(const MonomialIdeal& ideal,
                                                const std::vector<std::size_t>& support) {
  const auto box = vnum::bounding_multidegree(ideal);
  std::optional<std::size_t> best;
  for (const auto& f : box_monomials(box)) {
    const auto p = prime_colon(ideal, f);
    if (p && *p == support && (!best || degree(f) < *best)) best = degree(f);
  }
  return best;
}

inline std::optional<std::size_t> v_brute(const MonomialIdeal& ideal) {
  const auto box = vnum::bounding_multidegree(ideal);
  std::optional<std::size_t> best;
  for (const auto& f : box_monomials(box)) {
    if (prime_colon(ideal, f) && (!best || degree(f) < *best)) best = degree(f);
  }
  return best;
}

inline std::set<std::vector<std::size_t>> ass_brute(const MonomialIdeal& ideal) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : box_monomials(vnum::bounding_multidegree(ideal))) {
    if (auto p = prime_colon(ideal, f)) out.insert(*p);
  }
  return out;
}

// Irreducible components by recursive splitting: a generator u = x_i^a w
// with w != 1 splits I into (I', x_i^a) and (I', w). Components are pure
// power vectors (0 = absent), returned irredundant and sorted.
inline std::vector<Exponents> split_decomposition(std::vector<Exponents> gens) {
  const std::size_t n = gens.front().size();
  // Minimalize by raw divisibility.
  auto minimal = [](std::vector<Exponents> g) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Exponents> keep;
    for (std::size_t a = 0; a < g.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
        if (a == b) continue;
        bool div = true;
        for (std::size_t i = 0; i < g[a].size() && div; ++i) div = g[b][i] <= g[a][i];
        redundant = div;
      }
      if (!redundant) keep.push_back(g[a]);
    }
    return keep;
  };
  std::vector<Exponents> comps;
  auto rec = [&](auto&& self, std::vector<Exponents> g) -> void {
    g = minimal(std::move(g));
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::size_t support = 0;
      std::size_t first = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (g[k][i] > 0 && support++ == 0) first = i;
      }
      if (support < 2) continue;
      Exponents pure(n, 0);
      pure[first] = g[k][first];
      Exponents rest = g[k];
      rest[first] = 0;
      auto left = g;
      left[k] = pure;
      auto right = g;
      right[k] = rest;
      self(self, std::move(left));
      self(self, std::move(right));
      return;
    }
    Exponents c(n, 0);
    for (const auto& u : g) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] > 0) c[i] = u[i];
      }
    }
    comps.push_back(c);
  };
  rec(rec, std::move(gens));
  // Drop components containing another: C contains D iff supp D within
  // supp C and C_i <= D_i on supp D.
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<Exponents> out;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b) {
      if (a == b) continue;
      bool contains = true;
      for (std::size_t i = 0; i < n && contains; ++i) {
        if (comps[b][i] > 0) contains = comps[a][i] > 0 && comps[a][i] <= comps[b][i];
      }
      redundant = contains;
    }
    if (!redundant) out.push_back(comps[a]);
  }
  return out;
}

}  // namespace oracle

#endif  // VNUM_TESTS_ORACLES_HPP_
