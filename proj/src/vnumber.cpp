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

#include "vnum/vnumber.hpp"

#include <algorithm>
#include <limits>

namespace vnum {

namespace {

void require_associated(const MonomialIdeal& ideal, const MonomialPrime& prime,
                        DecompositionCache* cache) {
  if (!(ideal.context() == prime.context())) throw ContextMismatch();
  if (!associated_primes(ideal, cache).contains(prime)) {
    throw Error("prime " + prime.to_string() + " is not associated to " + ideal.to_string());
  }
}

// G(I:p) minus I, ordered by degree and then lexicographically ascending.
std::vector<Exponents> module_gens(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  const auto quotient = colon(ideal, prime);
  std::vector<Exponents> out;
  for (const auto& g : quotient.gens()) {
    if (!ideal.contains(g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    const auto da = expo::degree(a);
    const auto db = expo::degree(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

VWitness witness_at(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  const auto target = prime.to_ideal();
  for (const auto& g : module_gens(ideal, prime)) {
    Monomial f(ideal.context(), g);
    if (colon(ideal, f) == target) return VWitness{prime, f, f.degree()};
  }
  throw Error("internal: no module generator realizes associated prime " + prime.to_string());
}

bool witness_before(const VWitness& a, const VWitness& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.monomial.exponents() != b.monomial.exponents()) {
    return a.monomial.exponents() < b.monomial.exponents();
  }
  return a.prime < b.prime;
}

}  // namespace

std::vector<Monomial> colon_module_gens(const MonomialIdeal& ideal, const MonomialPrime& prime,
                                        DecompositionCache* cache) {
  require_associated(ideal, prime, cache);
  std::vector<Monomial> out;
  for (auto& g : module_gens(ideal, prime)) out.emplace_back(ideal.context(), std::move(g));
  return out;
}

std::size_t module_initial_degree(const MonomialIdeal& ideal, const MonomialPrime& prime,
                                  DecompositionCache* cache) {
  require_associated(ideal, prime, cache);
  const auto gens = module_gens(ideal, prime);
  // p in Ass(I) forces (I:p) != I, so the module is nonzero.
  return expo::degree(gens.front());
}

VWitness v_at_prime(const MonomialIdeal& ideal, const MonomialPrime& prime,
                    DecompositionCache* cache) {
  require_associated(ideal, prime, cache);
  return witness_at(ideal, prime);
}

VWitness v_number(const MonomialIdeal& ideal, DecompositionCache* cache) {
  const auto ass = associated_primes(ideal, cache);
  std::optional<VWitness> best;
  for (const auto& p : ass.primes) {
    auto w = witness_at(ideal, p);
    if (!best || witness_before(w, *best)) best = std::move(w);
  }
  return *best;
}

std::size_t v_oracle(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw Error("v-number of a zero or unit ideal");
  const auto box = bounding_multidegree(ideal);
  const auto n = ideal.context().size();
  // A least-degree witness never needs an exponent above the bounding
  // multidegree, so the search is total within the box.
  const auto cap = expo::degree(box);
  for (std::size_t d = 0; d <= cap; ++d) {
    for (const auto& f : monomials_of_degree(n, d)) {
      if (!expo::divides(f, box) || ideal.contains(f)) continue;
      if (as_prime(colon(ideal, Monomial(ideal.context(), f)))) return d;
    }
  }
  throw Error("internal: v_oracle found no prime colon within the bounding box");
}

std::optional<TailLaw> fit_tail_law(const std::vector<std::size_t>& v, std::size_t alpha) {
  if (v.size() < 2) return std::nullopt;
  auto offset = [&](std::size_t k) {  // k is 1-based
    return static_cast<long>(v[k - 1]) - static_cast<long>(alpha * k);
  };
  const std::size_t last = v.size();
  std::size_t k0 = last;
  while (k0 > 1 && offset(k0 - 1) == offset(last)) --k0;
  if (last - k0 + 1 < 2) return std::nullopt;
  return TailLaw{alpha, offset(last), static_cast<int>(k0)};
}

VReport v_function(const MonomialIdeal& ideal, int horizon, DecompositionCache* cache) {
  if (horizon < 1) throw Error("v_function requires K >= 1");
  const auto st = stats(ideal);
  VReport rep;
  rep.horizon = horizon;
  rep.alpha = st.alpha;
  rep.equigenerated = st.equigenerated;
  rep.linear_powers_law = true;
  MonomialIdeal pw = ideal;
  for (int k = 1; k <= horizon; ++k) {
    if (k > 1) pw = multiply(pw, ideal);
    const auto ass = associated_primes(pw, cache);
    std::map<MonomialPrime, std::size_t> table;
    std::optional<VWitness> best;
    for (const auto& p : ass.primes) {
      auto w = witness_at(pw, p);
      table.emplace(p, w.degree);
      if (!best || witness_before(w, *best)) best = std::move(w);
    }
    const auto a_k = stats(pw).alpha;
    const auto v_k = best->degree;
    rep.per_prime.push_back(std::move(table));
    rep.v.push_back(v_k);
    rep.alpha_power.push_back(a_k);
    rep.witnesses.push_back(*best);
    if (v_k + 1 < a_k) rep.lower_bound_holds = false;
    const auto ak = st.alpha * static_cast<std::size_t>(k);
    if (v_k + 1 != ak) rep.linear_powers_law = false;
    rep.in_alpha_band.push_back(v_k + 1 >= ak && v_k <= ak);
  }
  if (st.equigenerated) {
    rep.tail_law = fit_tail_law(rep.v, st.alpha);
    if (rep.tail_law) rep.tail_b_at_least_minus_one = rep.tail_law->b >= -1;
  }
  return rep;
}

BoundsReport check_bounds(const MonomialIdeal& ideal, const std::vector<Monomial>& samples,
                          DecompositionCache* cache) {
  BoundsReport rep;
  const auto v_ideal = v_number(ideal, cache).degree;
  for (const auto& f : samples) {
    if (ideal.contains(f)) {
      rep.skipped.push_back(f);
      continue;
    }
    const auto v_colon = v_number(colon(ideal, f), cache).degree;
    const bool holds = v_ideal <= v_colon + f.degree();
    rep.all_hold = rep.all_hold && holds;
    rep.colon_bounds.push_back(ColonBound{f, v_ideal, v_colon, holds});
  }
  const long lower = static_cast<long>(stats(ideal).alpha) - 1;
  for (const auto& p : associated_primes(ideal, cache).primes) {
    const auto vp = witness_at(ideal, p).degree;
    const bool holds = static_cast<long>(vp) >= lower;
    rep.all_hold = rep.all_hold && holds;
    rep.prime_bounds.push_back(PrimeBound{p, vp, lower, holds});
  }
  return rep;
}

ModuleDegreeReport check_module_degrees(const MonomialIdeal& ideal, DecompositionCache* cache) {
  ModuleDegreeReport rep;
  const auto ass = associated_primes(ideal, cache);
  const auto m = MonomialIdeal::maximal(ideal.context());
  rep.has_embedded = ass.has_embedded();
  std::size_t min_alpha = std::numeric_limits<std::size_t>::max();
  std::size_t v_ideal = std::numeric_limits<std::size_t>::max();
  for (const auto& p : ass.primes) {
    const auto gens = module_gens(ideal, p);
    const auto quotient = colon(ideal, p);
    const auto shadow = sum(ideal, multiply(m, quotient));
    for (const auto& g : gens) {
      if (shadow.contains(g)) rep.nakayama_ok = false;
    }
    ModuleDegreeRow row{p, witness_at(ideal, p).degree, expo::degree(gens.front()),
                        ass.is_max(p), false};
    row.holds = row.v_prime >= row.module_alpha &&
                (!row.is_max || row.v_prime == row.module_alpha);
    rep.all_hold = rep.all_hold && row.holds;
    min_alpha = std::min(min_alpha, row.module_alpha);
    v_ideal = std::min(v_ideal, row.v_prime);
    rep.rows.push_back(std::move(row));
  }
  if (!rep.has_embedded) {
    rep.unmixed_identity = v_ideal == min_alpha;
    rep.all_hold = rep.all_hold && *rep.unmixed_identity;
  }
  rep.all_hold = rep.all_hold && rep.nakayama_ok;
  return rep;
}

}  // namespace vnum
