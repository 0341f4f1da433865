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

// Variable contexts, monomials and monomial ideals.
//
// Everything here is coefficient-free: a monomial is an exponent vector over
// a VarContext, an ideal is its minimal generating set G(I). All values are
// immutable once built and every operation is a pure function.

#ifndef VNUM_CORE_HPP_
#define VNUM_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vnum {

using Exponent = std::uint32_t;
using Exponents = std::vector<Exponent>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised whenever two objects from different contexts meet.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("objects belong to different variable contexts") {}
};

// Ordered list of distinct variable labels. Copies share the label list;
// two contexts are equal only if they share it.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  // x1, x2, ..., xn
  static VarContext numbered(std::string_view prefix, std::size_t n);

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const VarContext& other) const { return data_ == other.data_; }
  // Stable identity, usable as a cache key component.
  const void* id() const { return data_.get(); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

class Monomial {
 public:
  // The unit monomial.
  explicit Monomial(VarContext ctx);
  Monomial(VarContext ctx, Exponents exponents);

  static Monomial variable(const VarContext& ctx, std::size_t i);

  const VarContext& context() const { return ctx_; }
  const Exponents& exponents() const { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::size_t degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // u / gcd(u, f)
  Monomial colon(const Monomial& f) const;
  // Exact quotient; throws when other does not divide *this.
  Monomial operator/(const Monomial& other) const;

  std::string to_string() const;

  bool operator==(const Monomial& other) const {
    return ctx_ == other.ctx_ && exps_ == other.exps_;
  }

 private:
  VarContext ctx_;
  Exponents exps_;
};

// Kernels on raw exponent vectors of equal length.
namespace expo {
std::size_t degree(const Exponents& a);
bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents gcd(const Exponents& a, const Exponents& b);
Exponents product(const Exponents& a, const Exponents& b);
Exponents colon(const Exponents& u, const Exponents& f);
// Canonical generator order: degree ascending, then exponent vectors in
// descending lexicographic order (x1^2 before x1x2 before x2^2).
bool canonical_less(const Exponents& a, const Exponents& b);
// Reduces to the divisibility antichain, canonically sorted.
std::vector<Exponents> minimalize(std::vector<Exponents> gens);
}  // namespace expo

// A monomial ideal stored as its minimal generating set G(I), canonically
// sorted, so two ideals are equal iff their representations are equal.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  // Zero ideal.
  explicit MonomialIdeal(VarContext ctx);
  // Minimalizes the given exponent vectors.
  MonomialIdeal(VarContext ctx, std::vector<Exponents> gens);

  static MonomialIdeal unit(const VarContext& ctx);
  // m = (x_1, ..., x_n)
  static MonomialIdeal maximal(const VarContext& ctx);

  const VarContext& context() const { return ctx_; }
  std::span<const Exponents> gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  Monomial generator(std::size_t i) const { return Monomial(ctx_, gens_.at(i)); }
  std::vector<Monomial> generators() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  // Generated by variables only (a monomial prime, or zero).
  bool is_variable_generated() const;

  bool contains(const Monomial& f) const;
  bool contains(const Exponents& f) const;
  bool contains(const MonomialIdeal& other) const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const {
    return ctx_ == other.ctx_ && gens_ == other.gens_;
  }
  bool operator<(const MonomialIdeal& other) const { return gens_ < other.gens_; }

 private:
  struct Presorted {};
  MonomialIdeal(VarContext ctx, std::vector<Exponents> gens, Presorted);

  VarContext ctx_;
  std::vector<Exponents> gens_;
};

// p_A = (x_i : i in A), A nonempty.
class MonomialPrime {
 public:
  MonomialPrime(VarContext ctx, std::vector<std::size_t> support);

  const VarContext& context() const { return ctx_; }
  const std::vector<std::size_t>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool contains_variable(std::size_t i) const;
  // Inclusion of primes: p_A is contained in p_B iff A is a subset of B.
  bool is_subset_of(const MonomialPrime& other) const;

  MonomialIdeal to_ideal() const;
  std::vector<std::string> labels() const;
  std::string to_string() const;

  bool operator==(const MonomialPrime& other) const {
    return ctx_ == other.ctx_ && support_ == other.support_;
  }
  bool operator<(const MonomialPrime& other) const { return support_ < other.support_; }

 private:
  VarContext ctx_;
  std::vector<std::size_t> support_;
};

// The prime generated by the ideal's generators, if they are all variables.
std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal);

struct IdealStats {
  std::size_t alpha = 0;
  std::size_t omega = 0;
  Exponents degvec;
  bool equigenerated = false;
  bool squarefree = false;
};

MonomialIdeal minimalize(const VarContext& ctx, std::span<const Monomial> gens);
bool contains(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
// Throws when other is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& other);
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialPrime& prime);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
// Throws for k < 1.
MonomialIdeal power(const MonomialIdeal& ideal, int k);
// Throws for the zero ideal.
IdealStats stats(const MonomialIdeal& ideal);
// Componentwise max of generator exponents (the bounding multidegree).
Exponents bounding_multidegree(const MonomialIdeal& ideal);

// Every monomial of the given degree, in canonical order.
std::vector<Exponents> monomials_of_degree(std::size_t n, std::size_t degree);

}  // namespace vnum

#endif  // VNUM_CORE_HPP_
