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

#include "vnum/decomp.hpp"

#include <algorithm>
#include <set>

namespace vnum {

namespace {

// Component A (pure powers) contains component B iff every pure power of B
// is divisible by a pure power of A, i.e. supp B within supp A and
// A_i <= B_i on supp B.
bool component_contains(const Exponents& b, const Exponents& a) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    if (a[i] == 0 || a[i] > b[i]) return false;
  }
  return true;
}

// u lies in the component iff some pure power of the component divides u.
bool component_has(const Exponents& comp, const Exponents& u) {
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (comp[i] > 0 && u[i] >= comp[i]) return true;
  }
  return false;
}

// Splitting one generator at a time: with I' = I + (u) and u = prod x_i^{a_i},
// every component C of I gives C + (u) = intersect_i (C + (x_i^{a_i})).
// Components already containing u survive unchanged and can never become
// redundant; only the freshly split ones are screened.
std::vector<Exponents> decompose(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.context().size();
  std::vector<Exponents> comps;
  bool first = true;
  for (const auto& u : ideal.gens()) {
    if (first) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Exponents c(n, 0);
        c[i] = u[i];
        comps.push_back(std::move(c));
      }
      first = false;
      continue;
    }
    std::vector<Exponents> kept;
    std::vector<Exponents> fresh;
    for (auto& c : comps) {
      if (component_has(c, u)) {
        kept.push_back(std::move(c));
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        Exponents d = c;
        d[i] = u[i];  // c[i] is 0 or exceeds u[i] here
        fresh.push_back(std::move(d));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    std::vector<Exponents> survivors;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool redundant = false;
      for (const auto& k : kept) {
        if (component_contains(k, fresh[a])) {
          redundant = true;
          break;
        }
      }
      for (std::size_t b = 0; !redundant && b < fresh.size(); ++b) {
        if (b != a && component_contains(fresh[b], fresh[a])) redundant = true;
      }
      if (!redundant) survivors.push_back(fresh[a]);
    }
    comps = std::move(kept);
    comps.insert(comps.end(), std::make_move_iterator(survivors.begin()),
                 std::make_move_iterator(survivors.end()));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

// ------------------------------------------------------ IrreducibleComponent

IrreducibleComponent::IrreducibleComponent(VarContext ctx, Exponents powers)
    : ctx_(std::move(ctx)), powers_(std::move(powers)) {
  if (powers_.size() != ctx_.size()) throw Error("component length mismatch");
  if (std::all_of(powers_.begin(), powers_.end(), [](Exponent e) { return e == 0; })) {
    throw Error("irreducible component needs a nonempty support");
  }
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i] > 0) support.push_back(i);
  }
  return MonomialPrime(ctx_, std::move(support));
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i] == 0) continue;
    Exponents e(powers_.size(), 0);
    e[i] = powers_[i];
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ctx_, std::move(gens));
}

std::string IrreducibleComponent::to_string() const { return to_ideal().to_string(); }

// -------------------------------------------------------------------- AssSet

std::vector<MonomialPrime> AssSet::embedded() const {
  std::vector<MonomialPrime> out;
  for (const auto& p : primes) {
    if (std::find(min_primes.begin(), min_primes.end(), p) == min_primes.end()) {
      out.push_back(p);
    }
  }
  return out;
}

bool AssSet::contains(const MonomialPrime& p) const {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

bool AssSet::is_max(const MonomialPrime& p) const {
  return std::find(max_primes.begin(), max_primes.end(), p) != max_primes.end();
}

AssSet make_ass_set(std::vector<MonomialPrime> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  AssSet out;
  for (const auto& p : primes) {
    bool maximal = true;
    bool minimal = true;
    for (const auto& q : primes) {
      if (q == p) continue;
      if (p.is_subset_of(q)) maximal = false;
      if (q.is_subset_of(p)) minimal = false;
    }
    if (maximal) out.max_primes.push_back(p);
    if (minimal) out.min_primes.push_back(p);
  }
  out.primes = std::move(primes);
  return out;
}

// -------------------------------------------------------- DecompositionCache

std::shared_ptr<const std::vector<IrreducibleComponent>> DecompositionCache::find(
    const MonomialIdeal& ideal) const {
  Key key{ideal.context().id(), {ideal.gens().begin(), ideal.gens().end()}};
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : it->second;
}

void DecompositionCache::store(
    const MonomialIdeal& ideal,
    std::shared_ptr<const std::vector<IrreducibleComponent>> components) {
  Key key{ideal.context().id(), {ideal.gens().begin(), ideal.gens().end()}};
  std::lock_guard lock(mutex_);
  entries_.emplace(std::move(key), std::move(components));
}

std::size_t DecompositionCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

// ---------------------------------------------------------------- operations

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            DecompositionCache* cache) {
  if (ideal.is_zero()) throw Error("decomposition of the zero ideal");
  if (ideal.is_unit()) throw Error("decomposition of the unit ideal");
  if (cache != nullptr) {
    if (auto hit = cache->find(ideal)) return *hit;
  }
  std::vector<IrreducibleComponent> out;
  for (auto& c : decompose(ideal)) out.emplace_back(ideal.context(), std::move(c));
  if (cache != nullptr) {
    cache->store(ideal, std::make_shared<const std::vector<IrreducibleComponent>>(out));
  }
  return out;
}

AssSet associated_primes(const MonomialIdeal& ideal, DecompositionCache* cache) {
  std::vector<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal, cache)) primes.push_back(c.radical());
  return make_ass_set(std::move(primes));
}

std::vector<MonomialPrime> ass_oracle(const MonomialIdeal& ideal, const Exponents& box) {
  const auto& ctx = ideal.context();
  if (box.size() != ctx.size()) throw Error("oracle box length mismatch");
  std::set<MonomialPrime> found;
  Exponents f(ctx.size(), 0);
  // Odometer over the box.
  while (true) {
    if (!ideal.contains(f)) {
      if (auto p = as_prime(colon(ideal, Monomial(ctx, f)))) found.insert(*p);
    }
    std::size_t i = 0;
    while (i < f.size() && f[i] == box[i]) f[i++] = 0;
    if (i == f.size()) break;
    ++f[i];
  }
  return {found.begin(), found.end()};
}

bool has_depth_zero(const MonomialIdeal& ideal) {
  return !(colon(ideal, MonomialIdeal::maximal(ideal.context())) == ideal);
}

AssPowers ass_powers(const MonomialIdeal& ideal, int horizon, DecompositionCache* cache) {
  if (horizon < 1) throw Error("ass_powers requires K >= 1");
  AssPowers out;
  MonomialIdeal pw = ideal;
  for (int k = 1; k <= horizon; ++k) {
    if (k > 1) pw = multiply(pw, ideal);
    out.per_power.push_back(associated_primes(pw, cache));
  }
  const auto& v = out.per_power;
  out.stable_at_horizon = v.size() >= 2 && v[v.size() - 1].primes == v[v.size() - 2].primes;
  return out;
}

}  // namespace vnum
