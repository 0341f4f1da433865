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

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "vnum/decomp.hpp"
#include "vnum/graph.hpp"
#include "vnum/hibi.hpp"

using namespace vnum;
using th::ideal;

namespace {

MonomialIdeal intersect_all(const std::vector<IrreducibleComponent>& comps) {
  auto acc = comps.front().to_ideal();
  for (std::size_t i = 1; i < comps.size(); ++i) acc = intersect(acc, comps[i].to_ideal());
  return acc;
}

std::vector<Exponents> powers_of(const std::vector<IrreducibleComponent>& comps) {
  std::vector<Exponents> out;
  for (const auto& c : comps) out.push_back(c.powers());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<std::size_t>> supports(const std::vector<MonomialPrime>& ps) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& p : ps) out.insert(p.support());
  return out;
}

}  // namespace

TEST_CASE("irreducible decomposition examples") {
  const VarContext ctx({"x", "y"});
  const auto i = ideal(ctx, {"x^2", "x*y"});
  const auto comps = irreducible_decomposition(i);
  CHECK(powers_of(comps) == std::vector<Exponents>{{1, 0}, {2, 1}});
  CHECK(intersect_all(comps) == i);

  const auto m2 = power(MonomialIdeal::maximal(ctx), 2);
  CHECK(powers_of(irreducible_decomposition(m2)) == std::vector<Exponents>{{1, 2}, {2, 1}});
  CHECK(intersect_all(irreducible_decomposition(m2)) == m2);

  const auto c3 = th::xyz();
  const auto sq = ideal(c3, {"x*y", "x*z"});
  CHECK(powers_of(irreducible_decomposition(sq)) == std::vector<Exponents>{{0, 1, 1}, {1, 0, 0}});

  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(ctx)), Error);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(ctx)), Error);
}

TEST_CASE("decomposition agrees with recursive splitting") {
  const auto t = th::terai();
  CHECK(powers_of(irreducible_decomposition(t)) ==
        oracle::split_decomposition({t.gens().begin(), t.gens().end()}));
  const VarContext ctx({"a", "b", "c"});
  const auto i = ideal(ctx, {"a^3*b", "a*b^2*c", "c^3", "b^3"});
  CHECK(powers_of(irreducible_decomposition(i)) ==
        oracle::split_decomposition({i.gens().begin(), i.gens().end()}));
  CHECK(intersect_all(irreducible_decomposition(i)) == i);
}

TEST_CASE("associated primes") {
  const auto c = VarContext::numbered("x", 3);
  for (int d = 1; d <= 3; ++d) {
    const auto ass = associated_primes(power(MonomialIdeal::maximal(c), d));
    REQUIRE(ass.primes.size() == 1);
    CHECK(ass.primes.front().size() == 3);
  }
  const VarContext ctx({"x", "y"});
  const auto ass = associated_primes(ideal(ctx, {"x^2", "x*y"}));
  CHECK(supports(ass.primes) == std::set<std::vector<std::size_t>>{{0}, {0, 1}});
  CHECK(ass.has_embedded());
  CHECK(ass.embedded().size() == 1);
  CHECK(ass.is_max(MonomialPrime(ctx, {0, 1})));

  const Poset fork(3, {{0, 1}, {0, 2}});
  const auto hp = hibi_ideal(fork);
  for (int k = 1; k <= 3; ++k) {
    const auto a = associated_primes(power(hp, k));
    CHECK(a.primes == hibi_expected_primes(fork, hp.context()));
  }
}

TEST_CASE("ass_oracle") {
  const VarContext ctx({"x", "y"});
  const auto o = ass_oracle(ideal(ctx, {"x^2", "x*y"}), {2, 1});
  CHECK(supports(o) == std::set<std::vector<std::size_t>>{{0}, {0, 1}});
  const auto c = th::xyz();
  const MonomialPrime p(c, {0, 2});
  CHECK(ass_oracle(p.to_ideal(), {1, 0, 1}) == std::vector<MonomialPrime>{p});
  const auto c4 = VarContext::numbered("x", 4);
  const auto i43 = ideal(c4, {"x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"});
  const auto o43 = ass_oracle(i43, {1, 1, 1, 1});
  CHECK(o43.size() == 6);
  for (const auto& q : o43) CHECK(q.size() == 2);
  CHECK(supports(o43) == oracle::ass_brute(i43));
}

TEST_CASE("depth zero") {
  const VarContext ctx({"x", "y"});
  CHECK(has_depth_zero(power(MonomialIdeal::maximal(ctx), 3)));
  CHECK_FALSE(has_depth_zero(ideal(ctx, {"x"})));
  CHECK(has_depth_zero(ideal(ctx, {"x^2", "x*y"})));
}

TEST_CASE("ass of powers") {
  const auto c = th::xyz();
  const MonomialPrime p(c, {0, 1});
  const auto ap = ass_powers(p.to_ideal(), 3);
  REQUIRE(ap.per_power.size() == 3);
  for (const auto& a : ap.per_power) CHECK(a.primes == std::vector<MonomialPrime>{p});
  CHECK(ap.stable_at_horizon);

  // Edge ideal of a triangle: m appears at the second power and stays.
  const auto tri = ass_powers(edge_ideal(Graph::complete(3)), 3);
  for (std::size_t k = 1; k < tri.per_power.size(); ++k) {
    for (const auto& q : tri.per_power[k - 1].primes) CHECK(tri.per_power[k].contains(q));
  }
  CHECK(tri.per_power[1].primes.size() == tri.per_power[0].primes.size() + 1);
}

TEST_CASE("cache returns identical components") {
  DecompositionCache cache;
  const auto t = th::terai();
  const auto first = irreducible_decomposition(t, &cache);
  CHECK(cache.size() >= 1);
  CHECK(irreducible_decomposition(t, &cache) == first);
}
