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

// Irreducible decomposition and associated primes of monomial ideals.

#ifndef VNUM_DECOMP_HPP_
#define VNUM_DECOMP_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "vnum/core.hpp"

namespace vnum {

// (x_i^{e_i} : e_i > 0). Entries equal to zero are absent variables.
class IrreducibleComponent {
 public:
  IrreducibleComponent(VarContext ctx, Exponents powers);

  const VarContext& context() const { return ctx_; }
  const Exponents& powers() const { return powers_; }
  MonomialPrime radical() const;
  MonomialIdeal to_ideal() const;
  std::string to_string() const;

  bool operator==(const IrreducibleComponent& other) const {
    return ctx_ == other.ctx_ && powers_ == other.powers_;
  }

 private:
  VarContext ctx_;
  Exponents powers_;
};

struct AssSet {
  std::vector<MonomialPrime> primes;      // sorted
  std::vector<MonomialPrime> max_primes;  // inclusion-maximal members
  std::vector<MonomialPrime> min_primes;  // inclusion-minimal members

  std::vector<MonomialPrime> embedded() const;
  bool contains(const MonomialPrime& p) const;
  bool has_embedded() const { return min_primes.size() != primes.size(); }
  bool is_max(const MonomialPrime& p) const;
};

// Decompositions keyed by canonical ideal form. Safe for concurrent use.
class DecompositionCache {
 public:
  std::shared_ptr<const std::vector<IrreducibleComponent>> find(
      const MonomialIdeal& ideal) const;
  void store(const MonomialIdeal& ideal,
             std::shared_ptr<const std::vector<IrreducibleComponent>> components);
  std::size_t size() const;

 private:
  using Key = std::pair<const void*, std::vector<Exponents>>;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const std::vector<IrreducibleComponent>>> entries_;
};

// Irredundant irreducible decomposition. Throws for the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal, DecompositionCache* cache = nullptr);

AssSet make_ass_set(std::vector<MonomialPrime> primes);
AssSet associated_primes(const MonomialIdeal& ideal, DecompositionCache* cache = nullptr);

// Brute force: every f with exponents bounded by `box` whose colon is prime.
std::vector<MonomialPrime> ass_oracle(const MonomialIdeal& ideal, const Exponents& box);

// m in Ass(I), tested as (I : m) != I.
bool has_depth_zero(const MonomialIdeal& ideal);

struct AssPowers {
  std::vector<AssSet> per_power;  // index k-1
  // Last two computed sets agree. Observation only.
  bool stable_at_horizon = false;
};

AssPowers ass_powers(const MonomialIdeal& ideal, int horizon,
                     DecompositionCache* cache = nullptr);

}  // namespace vnum

#endif  // VNUM_DECOMP_HPP_
