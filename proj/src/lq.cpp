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

#include "vnum/lq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "vnum/polar.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

namespace {

struct StepResult {
  bool linear = false;
  std::size_t linear_count = 0;          // placed w with w:c a single variable
  std::vector<std::size_t> support;      // variables generating the colon
};

// Decides whether (placed) : c is generated by variables, without building
// the colon ideal. V collects the variables x_i occurring as some w:c; the
// colon is linear iff every w:c is divisible by a member of V.
StepResult step(const std::vector<const Exponents*>& placed, const Exponents& c) {
  const std::size_t n = c.size();
  std::vector<char> in_v(n, 0);
  StepResult r;
  for (const auto* w : placed) {
    std::size_t deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((*w)[i] > c[i]) {
        deg += (*w)[i] - c[i];
        var = i;
        if (deg > 1) break;
      }
    }
    if (deg == 1) {
      in_v[var] = 1;
      ++r.linear_count;
    }
  }
  for (const auto* w : placed) {
    bool covered = false;
    for (std::size_t i = 0; i < n && !covered; ++i) {
      covered = in_v[i] && (*w)[i] > c[i];
    }
    if (!covered) return r;
  }
  r.linear = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_v[i]) r.support.push_back(i);
  }
  return r;
}

// Backtracking over orders of `cands` appended to the fixed prefix `fixed`.
class OrderSearch {
 public:
  OrderSearch(const std::vector<Exponents>& fixed, const std::vector<Exponents>& cands,
              SearchBudget budget)
      : fixed_(fixed), cands_(cands), budget_(budget), placed_(cands.size(), 0),
        mask_((cands.size() + 63) / 64, 0) {}

  SearchStatus run() {
    if (dfs()) return SearchStatus::kFound;
    return over_budget_ ? SearchStatus::kBudget : SearchStatus::kExhausted;
  }

  const std::vector<std::size_t>& order() const { return order_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<const Exponents*> prefix() const {
    std::vector<const Exponents*> p;
    for (const auto& f : fixed_) p.push_back(&f);
    for (auto i : order_) p.push_back(&cands_[i]);
    return p;
  }

  void set(std::size_t i, bool on) {
    placed_[i] = on;
    if (on) {
      mask_[i / 64] |= std::uint64_t{1} << (i % 64);
    } else {
      mask_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }

  bool dfs() {
    if (++nodes_ > budget_.max_nodes) {
      over_budget_ = true;
      return false;
    }
    if (order_.size() == cands_.size()) return true;
    if (dead_.count(mask_)) return false;
    const auto placed = prefix();
    // Candidates with more linear neighbours first, then index order.
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      if (placed_[i]) continue;
      if (placed.empty()) {
        options.emplace_back(0, i);
        continue;
      }
      const auto r = step(placed, cands_[i]);
      if (r.linear) options.emplace_back(r.linear_count, i);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [score, i] : options) {
      set(i, true);
      order_.push_back(i);
      if (dfs()) return true;
      order_.pop_back();
      set(i, false);
      if (over_budget_) return false;
    }
    dead_.insert(mask_);
    return false;
  }

  const std::vector<Exponents>& fixed_;
  const std::vector<Exponents>& cands_;
  SearchBudget budget_;
  std::vector<char> placed_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::size_t> order_;
  std::set<std::vector<std::uint64_t>> dead_;
  std::uint64_t nodes_ = 0;
  bool over_budget_ = false;
};

void require_antichain(std::span<const Monomial> gens) {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (a != b && expo::divides(gens[a].exponents(), gens[b].exponents())) {
        throw Error("generator list is not a minimal generating set");
      }
    }
  }
}

std::vector<std::vector<std::size_t>> supports_along(const std::vector<Exponents>& order) {
  std::vector<std::vector<std::size_t>> out(order.size());
  std::vector<const Exponents*> placed;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (j > 0) out[j] = step(placed, order[j]).support;
    placed.push_back(&order[j]);
  }
  return out;
}

bool same_generator_set(const MonomialIdeal& ideal, std::span<const Monomial> order) {
  if (order.size() != ideal.size()) return false;
  std::vector<Exponents> sorted;
  for (const auto& u : order) {
    if (!(u.context() == ideal.context())) return false;
    sorted.push_back(u.exponents());
  }
  std::sort(sorted.begin(), sorted.end(), expo::canonical_less);
  return std::equal(sorted.begin(), sorted.end(), ideal.gens().begin());
}

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhausted:
      return "none (exhaustive)";
    case SearchStatus::kBudget:
      return "none (budget)";
  }
  return "unknown";
}

LQCheck is_lq_order(const VarContext& ctx, std::span<const Monomial> gens) {
  for (const auto& u : gens) {
    if (!(u.context() == ctx)) throw ContextMismatch();
  }
  require_antichain(gens);
  LQCheck out;
  out.colon_supports.resize(gens.size());
  std::vector<Exponents> prefix;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j > 0) {
      const MonomialIdeal q(ctx, prefix);
      const auto quotient = colon(q, gens[j]);
      for (const auto& g : quotient.gens()) {
        if (expo::degree(g) != 1) {
          out.failing_step = j;
          out.bad_generator = Monomial(ctx, g);
          return out;
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] > 0) out.colon_supports[j].push_back(i);
        }
      }
      std::sort(out.colon_supports[j].begin(), out.colon_supports[j].end());
    }
    prefix.push_back(gens[j].exponents());
  }
  out.ok = true;
  return out;
}

LQSearch find_lq_order(const MonomialIdeal& ideal, SearchBudget budget) {
  if (ideal.is_zero()) throw Error("linear quotients of the zero ideal");
  const std::vector<Exponents> none;
  const std::vector<Exponents> cands(ideal.gens().begin(), ideal.gens().end());
  OrderSearch search(none, cands, budget);
  LQSearch out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SearchStatus::kFound) {
    std::vector<Exponents> seq;
    LQOrder order;
    for (auto i : search.order()) {
      seq.push_back(cands[i]);
      order.order.emplace_back(ideal.context(), cands[i]);
    }
    order.colon_supports = supports_along(seq);
    out.order = std::move(order);
  }
  return out;
}

std::vector<Monomial> ExtensionCertificate::full_order() const {
  std::vector<Monomial> out = base_order;
  out.insert(out.end(), added.begin(), added.end());
  return out;
}

ExtensionSearch extend_by_lq(const MonomialIdeal& base, std::span<const Monomial> base_order,
                             const MonomialIdeal& target, SearchBudget budget) {
  if (!(base.context() == target.context())) throw ContextMismatch();
  if (base.is_zero() || target.is_zero()) throw Error("extension needs nonzero ideals");
  const auto sb = stats(base);
  const auto st = stats(target);
  if (!sb.equigenerated || !st.equigenerated || sb.alpha != st.alpha) {
    throw Error("extension needs ideals generated in one common degree");
  }
  for (const auto& g : base.gens()) {
    if (!std::binary_search(target.gens().begin(), target.gens().end(), g,
                            expo::canonical_less)) {
      throw Error("G(base) is not contained in G(target)");
    }
  }
  if (!same_generator_set(base, base_order)) {
    throw Error("base order is not an ordering of G(base)");
  }
  if (!is_lq_order(base.context(), base_order).ok) {
    throw Error("base order does not have linear quotients");
  }

  std::vector<Exponents> fixed;
  for (const auto& u : base_order) fixed.push_back(u.exponents());
  std::vector<Exponents> cands;
  for (const auto& g : target.gens()) {
    if (!base.contains(g)) cands.push_back(g);
  }
  OrderSearch search(fixed, cands, budget);
  ExtensionSearch out;
  out.status = search.run();
  out.nodes = search.nodes();
  if (out.status == SearchStatus::kFound) {
    ExtensionCertificate cert{base, target, {base_order.begin(), base_order.end()}, {}, {}};
    std::vector<const Exponents*> placed;
    for (const auto& f : fixed) placed.push_back(&f);
    for (auto i : search.order()) {
      cert.added.emplace_back(target.context(), cands[i]);
      cert.colon_supports.push_back(step(placed, cands[i]).support);
      placed.push_back(&cands[i]);
    }
    out.certificate = std::move(cert);
  }
  return out;
}

std::string to_string(SimonMode m) {
  return m == SimonMode::kSquarefree ? "squarefree" : "monomial";
}

SimonMode parse_simon_mode(const std::string& s) {
  if (s == "squarefree") return SimonMode::kSquarefree;
  if (s == "monomial") return SimonMode::kMonomial;
  throw Error("unknown simon mode '" + s + "' (expected squarefree or monomial)");
}

MonomialIdeal simon_target(std::size_t n, std::size_t d, SimonMode mode) {
  if (n == 0 || d == 0) throw Error("simon target needs n >= 1 and d >= 1");
  const auto ctx = VarContext::numbered("x", n);
  auto gens = monomials_of_degree(n, d);
  if (mode == SimonMode::kSquarefree) {
    std::erase_if(gens, [](const Exponents& e) {
      return std::any_of(e.begin(), e.end(), [](Exponent x) { return x > 1; });
    });
    if (gens.empty()) throw Error("squarefree target is empty (d > n)");
  }
  return MonomialIdeal(ctx, std::move(gens));
}

namespace {

// perm_tables[p][g]: index of the image of generator g under permutation p.
std::vector<std::vector<std::size_t>> permutation_tables(const MonomialIdeal& target) {
  const std::size_t n = target.context().size();
  std::map<Exponents, std::size_t> index;
  for (std::size_t g = 0; g < target.size(); ++g) index.emplace(target.gens()[g], g);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> tables;
  do {
    std::vector<std::size_t> table(target.size());
    for (std::size_t g = 0; g < target.size(); ++g) {
      const auto& e = target.gens()[g];
      Exponents img(n);
      for (std::size_t i = 0; i < n; ++i) img[perm[i]] = e[i];
      table[g] = index.at(img);
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

std::vector<std::size_t> canonical_with(const std::vector<std::vector<std::size_t>>& tables,
                                        const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> best;
  for (const auto& table : tables) {
    std::vector<std::size_t> img;
    img.reserve(subset.size());
    for (auto g : subset) img.push_back(table[g]);
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

}  // namespace

std::vector<std::size_t> canonical_subset(const MonomialIdeal& target,
                                          const std::vector<std::size_t>& subset) {
  if (target.context().size() > 7) throw Error("canonical_subset supports n <= 7");
  return canonical_with(permutation_tables(target), subset);
}

SimonReport simon_search(std::size_t n, std::size_t d, SimonMode mode, SearchBudget budget) {
  if (n > 6) throw Error("simon_search supports n <= 6");
  const auto target = simon_target(n, d, mode);
  const std::size_t m = target.size();
  if (m > 20) throw Error("simon_search: target has too many generators to enumerate");
  const auto tables = permutation_tables(target);
  SimonReport rep;
  rep.n = n;
  rep.d = d;
  rep.mode = mode;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    ++rep.subsets_total;
    std::vector<std::size_t> subset;
    for (std::size_t g = 0; g < m; ++g) {
      if (mask >> g & 1U) subset.push_back(g);
    }
    if (canonical_with(tables, subset) != subset) continue;
    ++rep.subsets_enumerated;
    std::vector<Exponents> gens;
    for (auto g : subset) gens.push_back(target.gens()[g]);
    const MonomialIdeal ideal(target.context(), std::move(gens));
    const auto lq = find_lq_order(ideal, budget);
    if (lq.status == SearchStatus::kBudget) {
      rep.exhaustive = false;
      continue;
    }
    if (lq.status != SearchStatus::kFound) continue;
    ++rep.lq_ideals;
    const auto ext = extend_by_lq(ideal, lq.order->order, target, budget);
    switch (ext.status) {
      case SearchStatus::kFound:
        ++rep.extended;
        break;
      case SearchStatus::kExhausted:
        rep.counterexamples.push_back(ideal);
        break;
      case SearchStatus::kBudget:
        rep.exhaustive = false;
        break;
    }
  }
  return rep;
}

bool lq_polarization_transfer(const MonomialIdeal& ideal, std::span<const Monomial> order) {
  const Polarization pol(ideal);
  std::vector<Monomial> lifted;
  for (const auto& u : order) lifted.push_back(pol.polarize(u));
  return is_lq_order(pol.target(), lifted).ok;
}

LinearPowers linear_powers_certificate(const MonomialIdeal& ideal, int horizon,
                                       SearchBudget budget) {
  if (horizon < 1) throw Error("linear_powers_certificate requires K >= 1");
  LinearPowers out;
  out.certified = true;
  MonomialIdeal pw = ideal;
  for (int k = 1; k <= horizon; ++k) {
    if (k > 1) pw = multiply(pw, ideal);
    auto s = find_lq_order(pw, budget);
    if (s.status != SearchStatus::kFound) out.certified = false;
    out.per_power.push_back(std::move(s));
  }
  return out;
}

AlphaBandCheck alpha_band_check(const MonomialIdeal& ideal, SearchBudget budget) {
  const auto st = stats(ideal);
  AlphaBandCheck out;
  out.alpha = st.alpha;
  if (!st.equigenerated) return out;
  const auto& ctx = ideal.context();
  MonomialIdeal full(ctx, monomials_of_degree(ctx.size(), st.alpha));
  if (ideal == full) {
    out.applicable = true;
    out.is_full_power = true;
  } else {
    const auto lq = find_lq_order(ideal, budget);
    if (lq.status != SearchStatus::kFound) return out;
    const auto ext = extend_by_lq(ideal, lq.order->order, full, budget);
    if (ext.status != SearchStatus::kFound) return out;
    out.applicable = true;
    out.first_added = ext.certificate->added.front();
    out.first_colon_linear = colon(ideal, *out.first_added).is_variable_generated();
  }
  out.v = v_number(ideal).degree;
  const bool band = out.v + 1 >= out.alpha && out.v <= out.alpha;
  out.holds = band && (out.is_full_power || out.first_colon_linear);
  return out;
}

}  // namespace vnum
