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

#include "vnum/polar.hpp"

#include <algorithm>
#include <map>

#include "vnum/vnumber.hpp"

namespace vnum {

namespace {

VarContext make_target(const VarContext& source, const Exponents& bounds) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 1; j <= bounds[i]; ++j) {
      names.push_back(source.name(i) + "_" + std::to_string(j));
    }
  }
  return VarContext(std::move(names));
}

}  // namespace

Polarization::Polarization(const MonomialIdeal& ideal)
    : source_(ideal.context()),
      target_(make_target(ideal.context(), bounding_multidegree(ideal))),
      bounds_(bounding_multidegree(ideal)),
      image_(target_) {
  if (ideal.is_zero()) throw Error("polarization of the zero ideal");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    offsets_.push_back(offset);
    for (std::size_t j = 1; j <= bounds_[i]; ++j) blocks_.emplace_back(i, j);
    offset += bounds_[i];
  }
  std::vector<Exponents> gens;
  for (const auto& u : ideal.gens()) gens.push_back(polarize(Monomial(source_, u)).exponents());
  image_ = MonomialIdeal(target_, std::move(gens));
}

std::size_t Polarization::target_index(std::size_t i, std::size_t j) const {
  if (i >= bounds_.size() || j < 1 || j > bounds_[i]) {
    throw Error("polarization index out of range");
  }
  return offsets_[i] + (j - 1);
}

Monomial Polarization::polarize(const Monomial& u) const {
  if (!(u.context() == source_)) throw ContextMismatch();
  Exponents e(target_.size(), 0);
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (u[i] > bounds_[i]) throw Error("monomial exceeds the polarization bounds");
    for (std::size_t j = 1; j <= u[i]; ++j) e[offsets_[i] + j - 1] = 1;
  }
  return Monomial(target_, std::move(e));
}

Monomial Polarization::specialize(const Monomial& f) const {
  if (!(f.context() == target_)) throw ContextMismatch();
  Exponents e(source_.size(), 0);
  for (std::size_t t = 0; t < blocks_.size(); ++t) e[blocks_[t].first] += f[t];
  return Monomial(source_, std::move(e));
}

MonomialIdeal Polarization::specialize(const MonomialIdeal& ideal) const {
  if (!(ideal.context() == target_)) throw ContextMismatch();
  std::vector<Exponents> gens;
  for (const auto& g : ideal.gens()) {
    gens.push_back(specialize(Monomial(target_, g)).exponents());
  }
  return MonomialIdeal(source_, std::move(gens));
}

MonomialPrime Polarization::specialize(const MonomialPrime& prime) const {
  if (!(prime.context() == target_)) throw ContextMismatch();
  std::vector<std::size_t> support;
  for (auto t : prime.support()) support.push_back(blocks_[t].first);
  return MonomialPrime(source_, std::move(support));
}

Polarization polarize(const MonomialIdeal& ideal) { return Polarization(ideal); }

PolarizationReport verify_polarization_theorem(const MonomialIdeal& ideal,
                                               DecompositionCache* cache) {
  const Polarization pol(ideal);
  const auto& lifted = pol.image();
  const auto ass = associated_primes(ideal, cache);
  const auto ass_pol = associated_primes(lifted, cache);

  std::map<MonomialPrime, PolarizationRow> rows;
  for (const auto& p : ass.primes) {
    rows.emplace(p, PolarizationRow{p, v_at_prime(ideal, p, cache).degree, {}, 0});
  }

  PolarizationReport rep;
  rep.part_a = true;
  rep.part_b = true;
  std::vector<MonomialPrime> images;
  for (const auto& q : ass_pol.primes) {
    const auto p = pol.specialize(q);
    images.push_back(p);
    const auto vq = v_at_prime(lifted, q, cache).degree;
    auto it = rows.find(p);
    if (it == rows.end()) {
      rep.part_a = false;  // q lies over a non-associated prime
      continue;
    }
    it->second.lifts.emplace_back(q, vq);
    if (it->second.v_prime > vq) rep.part_b = false;
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images != ass.primes) rep.part_a = false;

  rep.part_c = true;
  for (auto& [p, row] : rows) {
    if (row.lifts.empty()) {
      rep.part_c = false;
      continue;
    }
    row.min_lift = row.lifts.front().second;
    for (const auto& [q, vq] : row.lifts) row.min_lift = std::min(row.min_lift, vq);
    if (row.min_lift != row.v_prime) rep.part_c = false;
    rep.rows.push_back(row);
  }
  for (const auto& [p, row] : rows) {
    if (row.lifts.empty()) rep.rows.push_back(row);
  }
  rep.v_ideal = v_number(ideal, cache).degree;
  rep.v_polarized = v_number(lifted, cache).degree;
  rep.part_d = rep.v_ideal == rep.v_polarized;
  return rep;
}

}  // namespace vnum
