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

#include "vnum/hibi.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "vnum/polar.hpp"

namespace vnum {

Poset::Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers)
    : below_(n, 0) {
  if (n > 64) throw Error("posets are limited to 64 elements");
  for (std::size_t i = 0; i < n; ++i) below_[i] = std::uint64_t{1} << i;
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw Error("cover relation out of range");
    if (lo == hi) throw Error("cover relation " + std::to_string(lo + 1) + " < itself");
    below_[hi] |= std::uint64_t{1} << lo;
  }
  // Transitive closure: everything below k is below whatever lies above k.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (below_[j] >> k & 1U) below_[j] |= below_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq(i, j) && leq(j, i)) {
        throw Error("cover relations contain a cycle through elements " + std::to_string(i + 1) +
                    " and " + std::to_string(j + 1));
      }
    }
  }
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset(n, covers);
}

Poset Poset::antichain(std::size_t n) { return Poset(n, {}); }

std::size_t Poset::strictly_between(std::size_t i, std::size_t j) const {
  std::size_t count = 0;
  for (std::size_t l = 0; l < size(); ++l) {
    if (less(i, l) && less(l, j)) ++count;
  }
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less(i, j) && strictly_between(i, j) == 0) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::uint64_t> poset_ideals(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 24) throw Error("down-set enumeration is limited to 24 elements");
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.leq(i, j)) below[j] |= std::uint64_t{1} << i;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool closed = true;
    for (std::size_t j = 0; j < n && closed; ++j) {
      if (s >> j & 1U) closed = (below[j] & ~s) == 0;
    }
    if (closed) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return out;
}

VarContext hibi_context(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return VarContext(std::move(names));
}

MonomialIdeal hibi_ideal(const Poset& p, const VarContext& ctx) {
  const std::size_t n = p.size();
  if (ctx.size() != 2 * n) throw Error("Hibi context must have 2n variables");
  std::vector<Exponents> gens;
  for (auto down : poset_ideals(p)) {
    Exponents e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (down >> i & 1U) {
        e[i] = 1;
      } else {
        e[n + i] = 1;
      }
    }
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal hibi_ideal(const Poset& p) { return hibi_ideal(p, hibi_context(p.size())); }

Poset poset_power(const Poset& p, int k) {
  if (k < 1) throw Error("poset_power requires k >= 1");
  const std::size_t n = p.size();
  const auto kk = static_cast<std::size_t>(k);
  if (n * kk > 64) throw Error("poset_power result exceeds 64 elements");
  Poset out;
  out.below_.assign(n * kk, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < kk; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!p.leq(j, i)) continue;
        for (std::size_t s = 0; s <= r; ++s) {
          out.below_[i * kk + r] |= std::uint64_t{1} << (j * kk + s);
        }
      }
    }
  }
  return out;
}

HibiPolarizationCheck hibi_power_polarization_check(const Poset& p, int k) {
  if (k < 1) throw Error("hibi_power_polarization_check requires k >= 1");
  const std::size_t n = p.size();
  const auto kk = static_cast<std::size_t>(k);
  const auto hk = power(hibi_ideal(p), k);
  const Polarization pol(hk);

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t l = 1; l <= kk; ++l) {
      names.push_back("x" + std::to_string(i) + "_" + std::to_string(l));
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t l = 1; l <= kk; ++l) {
      names.push_back("y" + std::to_string(i) + "_" + std::to_string(l));
    }
  }
  const VarContext ctx(std::move(names));

  // Target variable of the standard polarization -> P(k) variable, with the
  // y-blocks reversed.
  std::vector<std::size_t> remap(pol.target().size());
  for (std::size_t t = 0; t < remap.size(); ++t) {
    const auto [src, j] = pol.block_of(t);
    if (j > kk) throw Error("internal: polarization block longer than k");
    if (src < n) {
      remap[t] = src * kk + (j - 1);
    } else {
      remap[t] = n * kk + (src - n) * kk + (kk - j);
    }
  }
  std::vector<Exponents> gens;
  for (const auto& g : pol.image().gens()) {
    Exponents e(ctx.size(), 0);
    for (std::size_t t = 0; t < g.size(); ++t) e[remap[t]] += g[t];
    gens.push_back(std::move(e));
  }
  HibiPolarizationCheck out{MonomialIdeal(ctx, std::move(gens)),
                            hibi_ideal(poset_power(p, k), ctx), false};
  out.holds = out.polarized == out.expected;
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> hibi_v_expected(const Poset& p,
                                                                            int k) {
  if (k < 1) throw Error("hibi_v_expected requires k >= 1");
  const std::size_t base = p.size() * static_cast<std::size_t>(k);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.leq(i, j)) continue;
      out[{i, j}] = i == j ? base - 1 : base + p.strictly_between(i, j);
    }
  }
  return out;
}

std::vector<MonomialPrime> hibi_expected_primes(const Poset& p, const VarContext& ctx) {
  std::vector<MonomialPrime> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq(i, j)) out.emplace_back(ctx, std::vector<std::size_t>{i, p.size() + j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool hibi_symbolic_intersection_check(const Poset& p, int k) {
  const auto ctx = hibi_context(p.size());
  const auto lhs = power(hibi_ideal(p, ctx), k);
  std::optional<MonomialIdeal> rhs;
  for (const auto& q : hibi_expected_primes(p, ctx)) {
    auto qk = power(q.to_ideal(), k);
    rhs = rhs ? intersect(*rhs, qk) : std::move(qk);
  }
  return rhs && lhs == *rhs;
}

std::vector<Poset> posets_up_to_isomorphism(std::size_t n) {
  if (n > 5) throw Error("poset class enumeration is limited to 5 elements");
  // Every class has a naturally labeled member (i < j whenever p_i < p_j),
  // so it suffices to scan relations on pairs i < j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> seen;
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::uint64_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i) below[i] = std::uint64_t{1} << i;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1U) below[pairs[e].second] |= std::uint64_t{1} << pairs[e].first;
    }
    // Keep transitively closed relations only.
    bool transitive = true;
    for (std::size_t j = 0; j < n && transitive; ++j) {
      for (std::size_t k = 0; k < n && transitive; ++k) {
        if (below[j] >> k & 1U) transitive = (below[k] & ~below[j]) == 0;
      }
    }
    if (!transitive) continue;
    std::uint64_t code = ~std::uint64_t{0};
    for (const auto& pm : perms) {
      std::uint64_t img = 0;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          if (below[j] >> i & 1U) img |= std::uint64_t{1} << (pm[i] * n + pm[j]);
        }
      }
      code = std::min(code, img);
    }
    if (!seen.insert(code).second) continue;
    Poset p;
    p.below_ = std::move(below);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace vnum
