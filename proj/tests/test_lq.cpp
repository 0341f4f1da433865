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
#include "vnum/lq.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;
using th::ideal;
using th::mono;

namespace {

std::vector<Monomial> ordered(const VarContext& ctx, const std::vector<std::string>& gens) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(mono(ctx, g));
  return out;
}

MonomialIdeal i43(const VarContext& c) {
  return ideal(c, {"x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"});
}

}  // namespace

TEST_CASE("linear quotient orders") {
  const auto c = VarContext::numbered("x", 4);
  const auto order = ordered(c, {"x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"});
  const auto r = is_lq_order(c, order);
  CHECK(r.ok);
  using V = std::vector<std::size_t>;
  CHECK(r.colon_supports == std::vector<V>{{}, {2}, {1}, {0}});

  for (const auto& o : {ordered(c, {"x1*x2", "x3*x4"}), ordered(c, {"x3*x4", "x1*x2"})}) {
    const auto bad = is_lq_order(c, o);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failing_step == 1);
    REQUIRE(bad.bad_generator.has_value());
    CHECK(bad.bad_generator->degree() == 2);
  }
  CHECK(is_lq_order(c, ordered(c, {"x1*x4"})).ok);
  CHECK_THROWS_AS(is_lq_order(c, ordered(c, {"x1", "x1*x2"})), Error);
}

TEST_CASE("order search") {
  const auto c = th::xyz();
  for (int d = 1; d <= 3; ++d) {
    const auto s = find_lq_order(power(MonomialIdeal::maximal(c), d));
    CHECK(s.status == SearchStatus::kFound);
    REQUIRE(s.order.has_value());
    CHECK(is_lq_order(c, s.order->order).ok);
  }
  const auto c4 = VarContext::numbered("x", 4);
  const auto none = find_lq_order(ideal(c4, {"x1*x2", "x3*x4"}));
  CHECK(none.status == SearchStatus::kExhausted);
  CHECK_FALSE(none.order.has_value());

  const auto t = find_lq_order(th::terai());
  CHECK(t.status != SearchStatus::kBudget);
  if (t.order) CHECK(is_lq_order(th::terai().context(), t.order->order).ok);

  const auto tiny = find_lq_order(i43(c4), SearchBudget{1});
  CHECK(tiny.status != SearchStatus::kExhausted);
}

TEST_CASE("extension by linear quotients") {
  const auto c = VarContext::numbered("x", 4);
  const auto base = ideal(c, {"x1*x2*x3"});
  const auto ext = extend_by_lq(base, base.generators(), i43(c));
  REQUIRE(ext.status == SearchStatus::kFound);
  const auto& cert = *ext.certificate;
  CHECK(cert.added == ordered(c, {"x1*x2*x4", "x1*x3*x4", "x2*x3*x4"}));
  using V = std::vector<std::size_t>;
  CHECK(cert.colon_supports == std::vector<V>{{2}, {1}, {0}});
  CHECK(is_lq_order(c, cert.full_order()).ok);

  const auto self = extend_by_lq(i43(c), i43(c).generators(), i43(c));
  REQUIRE(self.certificate.has_value());
  CHECK(self.certificate->added.empty());

  const VarContext xy({"x", "y"});
  const auto m2 = power(MonomialIdeal::maximal(xy), 2);
  const std::vector<std::vector<std::string>> subs{{"x^2"}, {"x*y"}, {"x^2", "x*y"}, {"x*y", "y^2"}};
  for (const auto& sub : subs) {
    const auto b = ideal(xy, sub);
    const auto o = find_lq_order(b);
    REQUIRE(o.order.has_value());
    CHECK(extend_by_lq(b, o.order->order, m2).status == SearchStatus::kFound);
  }
  CHECK_THROWS_AS(extend_by_lq(ideal(c, {"x1*x2"}), ordered(c, {"x1*x2"}), i43(c)), Error);
}

TEST_CASE("simon searches") {
  const auto sq = simon_search(4, 3, SimonMode::kSquarefree);
  CHECK(sq.subsets_total == 15);
  CHECK(sq.exhaustive);
  CHECK(sq.counterexamples.empty());
  CHECK(sq.extended == sq.lq_ideals);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto r = simon_search(2, d, SimonMode::kMonomial);
    CHECK(r.exhaustive);
    CHECK(r.counterexamples.empty());
  }
  const auto m32 = simon_search(3, 2, SimonMode::kMonomial);
  CHECK(m32.subsets_total == 63);
  CHECK(m32.exhaustive);
  CHECK(m32.counterexamples.empty());
  CHECK(simon_target(4, 3, SimonMode::kSquarefree).size() == 4);
  CHECK(parse_simon_mode("monomial") == SimonMode::kMonomial);
  CHECK_THROWS_AS(parse_simon_mode("other"), Error);
}

TEST_CASE("canonical subsets are permutation invariant") {
  const auto target = simon_target(3, 2, SimonMode::kMonomial);
  // Generator indices of x1^2 and x2^2 versus x2^2 and x3^2.
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  const auto& ctx = target.context();
  for (std::size_t i = 0; i < target.size(); ++i) {
    const auto g = target.generator(i);
    if (g == mono(ctx, "x1^2") || g == mono(ctx, "x2^2")) a.push_back(i);
    if (g == mono(ctx, "x2^2") || g == mono(ctx, "x3^2")) b.push_back(i);
  }
  CHECK(canonical_subset(target, a) == canonical_subset(target, b));
}

TEST_CASE("polarization transfers linear quotients") {
  const VarContext xy({"x", "y"});
  CHECK(lq_polarization_transfer(ideal(xy, {"x^2", "x*y"}), ordered(xy, {"x^2", "x*y"})));
  CHECK(lq_polarization_transfer(power(MonomialIdeal::maximal(xy), 2),
                                 ordered(xy, {"x^2", "x*y", "y^2"})));
  const auto c = VarContext::numbered("x", 4);
  CHECK(lq_polarization_transfer(i43(c),
                                 ordered(c, {"x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"})));
}

TEST_CASE("linear powers") {
  const auto c = th::xyz();
  const auto m2 = linear_powers_certificate(power(MonomialIdeal::maximal(c), 2), 3);
  CHECK(m2.certified);
  CHECK(m2.per_power.size() == 3);
  const auto c4 = VarContext::numbered("x", 4);
  CHECK_FALSE(linear_powers_certificate(ideal(c4, {"x1*x2", "x3*x4"}), 1).certified);
}

TEST_CASE("alpha band") {
  const auto c = VarContext::numbered("x", 3);
  const auto r = alpha_band_check(ideal(c, {"x1^2", "x1*x2"}));
  CHECK(r.applicable);
  CHECK(r.first_colon_linear);
  CHECK(r.holds);
  CHECK(r.v + 1 >= r.alpha);
  CHECK(r.v <= r.alpha);
  const auto full = alpha_band_check(power(MonomialIdeal::maximal(c), 2));
  CHECK(full.is_full_power);
  CHECK(full.holds);
}
