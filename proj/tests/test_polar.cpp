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
#include "vnum/polar.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;
using th::ideal;
using th::mono;

TEST_CASE("polarizing a pure power") {
  const VarContext ctx({"x"});
  const Polarization pol(ideal(ctx, {"x^3"}));
  CHECK(pol.target().size() == 3);
  const auto img = pol.image().generator(0);
  CHECK(img.degree() == 3);
  CHECK(img.is_squarefree());
  for (std::size_t j = 1; j <= 3; ++j) CHECK(img[pol.target_index(0, j)] == 1);
}

TEST_CASE("polarizing (x^2, xy)") {
  const VarContext ctx({"x", "y"});
  const auto i = ideal(ctx, {"x^2", "x*y"});
  const Polarization pol(i);
  REQUIRE(pol.target().size() == 3);
  const auto& t = pol.target();
  Exponents a(3, 0);
  a[pol.target_index(0, 1)] = 1;
  a[pol.target_index(0, 2)] = 1;
  Exponents b(3, 0);
  b[pol.target_index(0, 1)] = 1;
  b[pol.target_index(1, 1)] = 1;
  CHECK(pol.image() == MonomialIdeal(t, {a, b}));
  CHECK(pol.specialize(pol.image()) == i);
  CHECK(pol.specialize(Monomial(t, a)) == mono(ctx, "x^2"));
  CHECK(pol.specialize(MonomialPrime(t, {pol.target_index(0, 2), pol.target_index(1, 1)})) ==
        MonomialPrime(ctx, {0, 1}));
  CHECK_THROWS_AS(pol.polarize(mono(ctx, "x^3")), Error);
  CHECK_THROWS_AS(pol.specialize(mono(ctx, "x")), ContextMismatch);
}

TEST_CASE("generator-wise invariants") {
  const VarContext ctx({"a", "b", "c"});
  const auto i = ideal(ctx, {"a^3*b", "a*b^2*c", "c^3", "b^3"});
  const Polarization pol(i);
  CHECK(pol.image().size() == i.size());
  CHECK(pol.image().is_squarefree());
  for (const auto& u : i.generators()) {
    const auto up = pol.polarize(u);
    CHECK(up.degree() == u.degree());
    CHECK(pol.specialize(up) == u);
  }
}

TEST_CASE("squarefree ideals polarize by relabeling") {
  const auto t = th::terai();
  const Polarization pol(t);
  CHECK(pol.target().size() == t.context().size());
  const auto r = verify_polarization_theorem(t);
  CHECK(r.holds());
}

TEST_CASE("correspondence theorem on small examples") {
  const VarContext ctx({"x", "y"});
  const auto r = verify_polarization_theorem(ideal(ctx, {"x^2", "x*y"}));
  CHECK(r.v_ideal == 1);
  CHECK(r.v_polarized == 1);
  CHECK(r.holds());
  const auto m2 = power(MonomialIdeal::maximal(ctx), 2);
  const auto rm = verify_polarization_theorem(m2);
  CHECK(rm.v_ideal == 1);
  CHECK(rm.v_polarized == 1);
  REQUIRE(rm.rows.size() == 1);
  CHECK(rm.rows[0].lifts.size() >= 1);
  CHECK(rm.holds());
}

// The v-number equality fails for (x^2, x y z): the colon of the polarized
// ideal by x_{1,2} is (x_{1,1}), a degree-one witness, while every degree-one
// colon of I itself is non-prime. Both sides are confirmed by exhaustive search.
TEST_CASE("polarization can lower the v-number") {
  const VarContext ctx({"x1", "x2", "x3"});
  const auto i = ideal(ctx, {"x1^2", "x1*x2*x3"});
  const Polarization pol(i);
  CHECK(oracle::v_brute(i) == 2);
  CHECK(oracle::v_brute(pol.image()) == 1);
  const auto r = verify_polarization_theorem(i);
  CHECK(r.part_a);
  CHECK(r.v_ideal == 2);
  CHECK(r.v_polarized == 1);
  CHECK_FALSE(r.part_d);
}
