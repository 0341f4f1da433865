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

#include "vnum/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace vnum {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

void require_same(const VarContext& a, const VarContext& b) {
  if (!(a == b)) throw ContextMismatch();
}

}  // namespace

// ---------------------------------------------------------------- VarContext

VarContext::VarContext(std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty variable label");
    if (!data->index.emplace(names[i], i).second) {
      throw Error("duplicate variable label '" + names[i] + "'");
    }
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

VarContext VarContext::numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return VarContext(std::move(names));
}

std::optional<std::size_t> VarContext::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

// --------------------------------------------------------------------- expo

namespace expo {

std::size_t degree(const Exponents& a) {
  return std::accumulate(a.begin(), a.end(), std::size_t{0});
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents gcd(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Exponents colon(const Exponents& u, const Exponents& f) {
  Exponents r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] > f[i] ? u[i] - f[i] : 0;
  return r;
}

bool canonical_less(const Exponents& a, const Exponents& b) {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da < db;
  return b < a;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> kept;
  kept.reserve(gens.size());
  // Sorted by degree: a generator can only be divided by an earlier one.
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace expo

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(VarContext ctx) : ctx_(std::move(ctx)), exps_(ctx_.size(), 0) {}

Monomial::Monomial(VarContext ctx, Exponents exponents)
    : ctx_(std::move(ctx)), exps_(std::move(exponents)) {
  if (exps_.size() != ctx_.size()) {
    throw Error("exponent vector length does not match context size");
  }
}

Monomial Monomial::variable(const VarContext& ctx, std::size_t i) {
  Exponents e(ctx.size(), 0);
  e.at(i) = 1;
  return Monomial(ctx, std::move(e));
}

std::size_t Monomial::degree() const { return expo::degree(exps_); }

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same(ctx_, other.ctx_);
  return expo::divides(exps_, other.exps_);
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same(ctx_, other.ctx_);
  return Monomial(ctx_, expo::product(exps_, other.exps_));
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same(ctx_, other.ctx_);
  return Monomial(ctx_, expo::lcm(exps_, other.exps_));
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same(ctx_, other.ctx_);
  return Monomial(ctx_, expo::gcd(exps_, other.exps_));
}

Monomial Monomial::colon(const Monomial& f) const {
  require_same(ctx_, f.ctx_);
  return Monomial(ctx_, expo::colon(exps_, f.exps_));
}

Monomial Monomial::operator/(const Monomial& other) const {
  require_same(ctx_, other.ctx_);
  if (!expo::divides(other.exps_, exps_)) throw Error("monomial quotient is not exact");
  return Monomial(ctx_, expo::colon(exps_, other.exps_));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += ctx_.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

// ------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(VarContext ctx) : ctx_(std::move(ctx)) {}

MonomialIdeal::MonomialIdeal(VarContext ctx, std::vector<Exponents> gens)
    : ctx_(std::move(ctx)) {
  for (const auto& g : gens) {
    if (g.size() != ctx_.size()) {
      throw Error("exponent vector length does not match context size");
    }
  }
  gens_ = expo::minimalize(std::move(gens));
}

MonomialIdeal::MonomialIdeal(VarContext ctx, std::vector<Exponents> gens, Presorted)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::unit(const VarContext& ctx) {
  return MonomialIdeal(ctx, {Exponents(ctx.size(), 0)}, Presorted{});
}

MonomialIdeal MonomialIdeal::maximal(const VarContext& ctx) {
  std::vector<Exponents> gens;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Exponents e(ctx.size(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.emplace_back(ctx_, g);
  return out;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && expo::degree(gens_.front()) == 0;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Exponents& g) {
    return std::all_of(g.begin(), g.end(), [](Exponent e) { return e <= 1; });
  });
}

bool MonomialIdeal::is_variable_generated() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Exponents& g) { return expo::degree(g) == 1; });
}

bool MonomialIdeal::contains(const Exponents& f) const {
  for (const auto& g : gens_) {
    if (expo::divides(g, f)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const Monomial& f) const {
  require_same(ctx_, f.context());
  return contains(f.exponents());
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same(ctx_, other.ctx_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const Exponents& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += Monomial(ctx_, gens_[i]).to_string();
  }
  return out + ")";
}

// ------------------------------------------------------------ MonomialPrime

MonomialPrime::MonomialPrime(VarContext ctx, std::vector<std::size_t> support)
    : ctx_(std::move(ctx)), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (support_.empty()) throw Error("a monomial prime needs a nonempty support");
  if (support_.back() >= ctx_.size()) throw Error("prime support index out of range");
}

bool MonomialPrime::contains_variable(std::size_t i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  require_same(ctx_, other.ctx_);
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(),
                       support_.end());
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Exponents> gens;
  for (auto i : support_) {
    Exponents e(ctx_.size(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ctx_, std::move(gens));
}

std::vector<std::string> MonomialPrime::labels() const {
  std::vector<std::string> out;
  for (auto i : support_) out.push_back(ctx_.name(i));
  return out;
}

std::string MonomialPrime::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (k > 0) out += ", ";
    out += ctx_.name(support_[k]);
  }
  return out + ")";
}

std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !ideal.is_variable_generated()) return std::nullopt;
  std::vector<std::size_t> support;
  for (const auto& g : ideal.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) support.push_back(i);
    }
  }
  return MonomialPrime(ideal.context(), std::move(support));
}

// --------------------------------------------------------------- operations

MonomialIdeal minimalize(const VarContext& ctx, std::span<const Monomial> gens) {
  std::vector<Exponents> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) {
    require_same(ctx, g.context());
    raw.push_back(g.exponents());
  }
  return MonomialIdeal(ctx, std::move(raw));
}

bool contains(const MonomialIdeal& ideal, const Monomial& f) { return ideal.contains(f); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_same(ideal.context(), f.context());
  std::vector<Exponents> gens;
  gens.reserve(ideal.size());
  for (const auto& u : ideal.gens()) gens.push_back(expo::colon(u, f.exponents()));
  return MonomialIdeal(ideal.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  require_same(ideal.context(), other.context());
  if (other.is_zero()) throw Error("colon by the zero ideal");
  std::optional<MonomialIdeal> acc;
  for (const auto& u : other.gens()) {
    auto c = colon(ideal, Monomial(ideal.context(), u));
    acc = acc ? intersect(*acc, c) : std::move(c);
  }
  return *acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialPrime& prime) {
  return colon(ideal, prime.to_ideal());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.context(), b.context());
  std::vector<Exponents> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) gens.push_back(expo::lcm(u, v));
  }
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.context(), b.context());
  std::vector<Exponents> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a.context(), b.context());
  std::vector<Exponents> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) gens.push_back(expo::product(u, v));
  }
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw Error("ideal power requires k >= 1");
  MonomialIdeal acc = ideal;
  for (int i = 1; i < k; ++i) acc = multiply(acc, ideal);
  return acc;
}

Exponents bounding_multidegree(const MonomialIdeal& ideal) {
  Exponents deg(ideal.context().size(), 0);
  for (const auto& g : ideal.gens()) {
    for (std::size_t i = 0; i < g.size(); ++i) deg[i] = std::max(deg[i], g[i]);
  }
  return deg;
}

IdealStats stats(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error("stats of the zero ideal");
  IdealStats s;
  s.alpha = std::numeric_limits<std::size_t>::max();
  for (const auto& g : ideal.gens()) {
    const auto d = expo::degree(g);
    s.alpha = std::min(s.alpha, d);
    s.omega = std::max(s.omega, d);
  }
  s.degvec = bounding_multidegree(ideal);
  s.equigenerated = s.alpha == s.omega;
  s.squarefree = ideal.is_squarefree();
  return s;
}

std::vector<Exponents> monomials_of_degree(std::size_t n, std::size_t degree) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  // Distribute `rest` over positions pos..n-1, largest first exponent first.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t rest) -> void {
    if (pos + 1 == n) {
      cur[pos] = static_cast<Exponent>(rest);
      out.push_back(cur);
      return;
    }
    for (std::size_t e = rest + 1; e-- > 0;) {
      cur[pos] = static_cast<Exponent>(e);
      self(self, pos + 1, rest - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace vnum
