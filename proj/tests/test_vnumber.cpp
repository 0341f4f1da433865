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

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "vnum/graph.hpp"
#include "vnum/hibi.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;
using th::ideal;
using th::mono;

TEST_CASE("module generators of (I:p)/I") {
  const auto c = th::xyz();
  for (int d = 1; d <= 3; ++d) {
    const auto m = MonomialIdeal::maximal(c);
    const auto gens = colon_module_gens(power(m, d), MonomialPrime(c, {0, 1, 2}));
    CHECK(gens.size() == monomials_of_degree(3, d - 1).size());
    for (const auto& g : gens) CHECK(g.degree() == static_cast<std::size_t>(d - 1));
  }
  const VarContext ctx({"x", "y"});
  const auto i = ideal(ctx, {"x^2", "x*y"});
  // G(I : (x)) = {x, y}, and neither lies in I; only y has colon (x).
  CHECK(colon_module_gens(i, MonomialPrime(ctx, {0})) ==
        std::vector<Monomial>{mono(ctx, "y"), mono(ctx, "x")});
  CHECK(colon_module_gens(i, MonomialPrime(ctx, {0, 1})) ==
        std::vector<Monomial>{mono(ctx, "x")});
  CHECK_THROWS_AS(colon_module_gens(i, MonomialPrime(ctx, {1})), Error);
}

TEST_CASE("v at a prime") {
  const auto c = th::xyz();
  const auto m = MonomialIdeal::maximal(c);
  CHECK(v_at_prime(power(m, 3), MonomialPrime(c, {0, 1, 2})).degree == 2);

  const Poset fork(3, {{0, 1}, {0, 2}});
  const auto hp = hibi_ideal(fork);
  const auto& hc = hp.context();
  CHECK(v_at_prime(hp, th::prime(hc, {"x1", "y3"})).degree == 3);
  CHECK(v_at_prime(hp, th::prime(hc, {"x2", "y2"})).degree == 2);

  const VarContext ctx({"x", "y"});
  const auto w = v_at_prime(ideal(ctx, {"x^2", "x*y"}), MonomialPrime(ctx, {0}));
  CHECK(w.degree == 1);
  CHECK(w.monomial == mono(ctx, "y"));
}

TEST_CASE("v-number") {
  const auto c = th::xyz();
  const auto m = MonomialIdeal::maximal(c);
  for (int d = 1; d <= 3; ++d) {
    CHECK(v_number(power(m, d)).degree == static_cast<std::size_t>(d - 1));
  }
  CHECK(v_number(ideal(c, {"x", "z"})).degree == 0);
  const auto t = th::terai();
  const auto w = v_number(t);
  CHECK(w.degree == 3);
  CHECK(colon(t, w.monomial) == w.prime.to_ideal());
  CHECK_FALSE(t.contains(w.monomial));
  CHECK(v_number(hibi_ideal(Poset(3, {{0, 1}, {0, 2}}))).degree == 2);
  CHECK_THROWS_AS(v_number(MonomialIdeal::unit(c)), Error);
}

TEST_CASE("oracle agrees") {
  const VarContext ctx({"x", "y"});
  CHECK(v_oracle(ideal(ctx, {"x^2", "x*y"})) == 1);
  const auto c = th::xyz();
  CHECK(v_oracle(power(MonomialIdeal::maximal(c), 3)) == 2);
  CHECK(v_oracle(hibi_ideal(Poset(3, {{0, 1}, {0, 2}}))) == 2);
  CHECK(v_oracle(th::terai()) == 3);
  const auto i = ideal(c, {"x^3*y", "x*y^2*z", "z^2", "y^3"});
  CHECK(v_number(i).degree == v_oracle(i));
  CHECK(oracle::v_brute(i) == v_oracle(i));
}

TEST_CASE("v-function") {
  const auto rt = v_function(th::terai(), 3);
  CHECK(rt.v == std::vector<std::size_t>{3, 5, 8});
  REQUIRE(rt.tail_law.has_value());
  CHECK(rt.tail_law->alpha == 3);
  CHECK(rt.tail_law->b == -1);
  CHECK(rt.tail_law->k0 == 2);
  CHECK(rt.lower_bound_holds);
  CHECK_FALSE(rt.linear_powers_law);

  const auto c = th::xyz();
  for (int d = 1; d <= 3; ++d) {
    const auto r = v_function(power(MonomialIdeal::maximal(c), d), 3);
    const auto du = static_cast<std::size_t>(d);
    CHECK(r.v == std::vector<std::size_t>{du - 1, 2 * du - 1, 3 * du - 1});
    CHECK(r.linear_powers_law);
  }
  // Path on 4 vertices has a chordal complement.
  const auto path = v_function(edge_ideal(Graph::path(4)), 3);
  CHECK(path.v == std::vector<std::size_t>{1, 3, 5});
  CHECK_THROWS_AS(v_function(th::terai(), 0), Error);
}

TEST_CASE("tail law fitting") {
  CHECK_FALSE(fit_tail_law({3}, 3).has_value());
  const auto t = fit_tail_law({2, 5, 8, 11}, 3);
  REQUIRE(t.has_value());
  CHECK(t->k0 == 1);
  CHECK(t->b == -1);
  const auto late = fit_tail_law({1, 5, 7, 9}, 2);
  REQUIRE(late.has_value());
  CHECK(late->k0 == 2);
  CHECK(late->b == 1);
  CHECK_FALSE(fit_tail_law({1, 5, 6}, 2).has_value());
}

TEST_CASE("bounds") {
  const VarContext ctx({"x", "y"});
  const auto i = ideal(ctx, {"x^2", "x*y"});
  const auto r = check_bounds(i, {mono(ctx, "y"), mono(ctx, "x^2")});
  CHECK(r.all_hold);
  REQUIRE(r.colon_bounds.size() == 1);
  CHECK(r.colon_bounds[0].v_ideal == 1);
  CHECK(r.colon_bounds[0].v_colon == 0);
  CHECK(r.skipped.size() == 1);

  const auto c = th::xyz();
  CHECK(check_bounds(ideal(c, {"x", "y"}), {mono(c, "z")}).all_hold);

  const auto t = th::terai();
  std::vector<Monomial> samples;
  for (const auto& e : oracle::monomials_up_to(6, 2)) {
    if (samples.size() == 20) break;
    samples.emplace_back(t.context(), e);
  }
  CHECK(check_bounds(t, samples).all_hold);
}

TEST_CASE("module degree identities") {
  const VarContext ctx({"x", "y"});
  const auto r = check_module_degrees(ideal(ctx, {"x^2", "x*y"}));
  CHECK(r.all_hold);
  CHECK(r.has_embedded);
  CHECK_FALSE(r.unmixed_identity.has_value());
  const auto t = check_module_degrees(th::terai());
  CHECK(t.all_hold);
  REQUIRE(t.unmixed_identity.has_value());
  CHECK(*t.unmixed_identity);
  CHECK(t.nakayama_ok);
}
