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

#include "vnum/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "vnum/graph.hpp"
#include "vnum/hibi.hpp"
#include "vnum/io.hpp"
#include "vnum/polar.hpp"
#include "vnum/polymatroid.hpp"

namespace vnum {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kPartialBudget:
      return "partial-budget";
    case Verdict::kFail:
      return "fail";
    case Verdict::kFalsification:
      return "falsification-event";
  }
  return "fail";
}

Verdict worst(Verdict a, Verdict b) { return std::max(a, b); }

namespace {

// ------------------------------------------------------------------ helpers

struct Outcome {
  json record = json::object();
  Verdict verdict = Verdict::kPass;
  std::vector<std::string> events;

  void flag(Verdict v, const std::string& what) {
    verdict = worst(verdict, v);
    events.push_back(record.value("id", std::string("?")) + ": " + what);
  }
  // Theorem-level checks raise falsification events.
  void check(bool ok, const std::string& what) {
    if (!ok) flag(Verdict::kFalsification, what);
  }
  // Implementation cross-checks raise plain failures.
  void cross_check(bool ok, const std::string& what) {
    if (!ok) flag(Verdict::kFail, what);
  }
};

unsigned thread_count(unsigned requested, std::size_t work) {
  unsigned t = requested != 0 ? requested : std::thread::hardware_concurrency();
  t = std::max(1U, t);
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Runs body(i, outcome) for every instance and appends the outcomes to the
// result in index order. Exceptions become failures of that instance.
template <class Body>
void run_instances(SuiteResult& result, const std::vector<std::string>& ids, unsigned threads,
                   Body body) {
  std::vector<Outcome> outcomes(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ids.size()) return;
      Outcome& out = outcomes[i];
      out.record["id"] = ids[i];
      try {
        body(i, out);
      } catch (const std::exception& e) {
        out.flag(Verdict::kFail, std::string("error: ") + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned t = thread_count(threads, ids.size());
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& out : outcomes) {
    out.record["verdict"] = to_string(out.verdict);
    result.instances.push_back(std::move(out.record));
    result.verdict = worst(result.verdict, out.verdict);
    for (auto& e : out.events) result.events.push_back(std::move(e));
  }
}

std::string pad_id(const std::string& prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return prefix + digits;
}

std::vector<std::string> numbered_ids(const std::string& prefix, std::size_t count) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < count; ++i) ids.push_back(pad_id(prefix, i));
  return ids;
}

json primes_json(const std::vector<MonomialPrime>& primes) {
  json out = json::array();
  for (const auto& p : primes) out.push_back(p.to_string());
  return out;
}

json witness_json(const VWitness& w) {
  return {{"prime", w.prime.to_string()}, {"monomial", w.monomial.to_string()},
          {"degree", w.degree}};
}

json ass_json(const AssSet& ass) {
  return {{"primes", primes_json(ass.primes)},
          {"max", primes_json(ass.max_primes)},
          {"min", primes_json(ass.min_primes)},
          {"embedded", primes_json(ass.embedded())}};
}

std::vector<Monomial> bound_samples(const VarContext& ctx) {
  const std::size_t top = ctx.size() <= 4 ? 2 : 1;
  std::vector<Monomial> out;
  for (std::size_t d = 1; d <= top; ++d) {
    for (auto& e : monomials_of_degree(ctx.size(), d)) out.emplace_back(ctx, std::move(e));
  }
  return out;
}

// Audits every power I^1..I^K and records the outcome under "bounds".
void audit_powers(const MonomialIdeal& ideal, int horizon, DecompositionCache* cache,
                  Outcome& out) {
  json rows = json::array();
  MonomialIdeal pw = ideal;
  for (int k = 1; k <= horizon; ++k) {
    if (k > 1) pw = multiply(pw, ideal);
    bool ok = true;
    auto row = audit_bounds(pw, cache, ok);
    row["k"] = k;
    rows.push_back(std::move(row));
    out.check(ok, "bound invariants fail on power k=" + std::to_string(k));
  }
  out.record["bounds"] = std::move(rows);
}

std::size_t count_if_true(const json& instances, const char* key) {
  std::size_t n = 0;
  for (const auto& inst : instances) {
    if (inst.contains(key) && inst[key].is_boolean() && inst[key].get<bool>()) ++n;
  }
  return n;
}

}  // namespace

// --------------------------------------------------------------- serializers

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return {{"vars", ideal.context().names()}, {"gens", std::move(gens)}};
}

json to_json(const VReport& r) {
  json per_prime = json::array();
  for (const auto& table : r.per_prime) {
    json t = json::object();
    for (const auto& [p, v] : table) t[p.to_string()] = v;
    per_prime.push_back(std::move(t));
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
  json tail = nullptr;
  if (r.tail_law) {
    tail = {{"alpha", r.tail_law->alpha}, {"b", r.tail_law->b}, {"k0", r.tail_law->k0},
            {"window", {r.tail_law->k0, r.horizon}}};
  }
  json band = json::array();
  for (bool b : r.in_alpha_band) band.push_back(b);
  json flags = {{"lower_bound_holds", r.lower_bound_holds},
                {"linear_powers_law", r.linear_powers_law},
                {"in_alpha_band", std::move(band)}};
  flags["tail_b_at_least_minus_one"] =
      r.tail_b_at_least_minus_one ? json(*r.tail_b_at_least_minus_one) : json(nullptr);
  return {{"K", r.horizon},
          {"alpha", r.alpha},
          {"equigenerated", r.equigenerated},
          {"v", r.v},
          {"alpha_power", r.alpha_power},
          {"per_prime", std::move(per_prime)},
          {"witnesses", std::move(witnesses)},
          {"tail_law", std::move(tail)},
          {"flags", std::move(flags)}};
}

json to_json(const SimonReport& r) {
  json ces = json::array();
  for (const auto& c : r.counterexamples) ces.push_back(to_json(c));
  return {{"n", r.n},
          {"d", r.d},
          {"mode", to_string(r.mode)},
          {"subsets_total", r.subsets_total},
          {"subsets_enumerated", r.subsets_enumerated},
          {"lq_ideals", r.lq_ideals},
          {"extended", r.extended},
          {"counterexamples", std::move(ces)},
          {"exhaustive", r.exhaustive}};
}

// ------------------------------------------------------------------- corpora

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::map<std::size_t, VarContext> contexts;
  std::set<std::pair<std::size_t, std::vector<Exponents>>> seen;
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 6;
    std::vector<Exponents> gens;
    for (std::size_t g = 0; g < m; ++g) {
      Exponents e(n);
      for (auto& a : e) a = static_cast<Exponent>(rng() % 4);
      gens.push_back(std::move(e));
    }
    auto it = contexts.try_emplace(n, VarContext::numbered("x", n)).first;
    MonomialIdeal ideal(it->second, std::move(gens));
    if (ideal.is_zero() || ideal.is_unit()) continue;
    std::vector<Exponents> key(ideal.gens().begin(), ideal.gens().end());
    if (!seen.emplace(n, std::move(key)).second) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<MonomialIdeal> random_equigenerated_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::map<std::size_t, VarContext> contexts;
  std::set<std::pair<std::size_t, std::vector<Exponents>>> seen;
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t d = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % 5;
    const auto pool = monomials_of_degree(n, d);
    std::vector<Exponents> gens;
    for (std::size_t g = 0; g < m; ++g) gens.push_back(pool[rng() % pool.size()]);
    auto it = contexts.try_emplace(n, VarContext::numbered("x", n)).first;
    MonomialIdeal ideal(it->second, std::move(gens));
    std::vector<Exponents> key(ideal.gens().begin(), ideal.gens().end());
    if (!seen.emplace(n, std::move(key)).second) continue;
    out.push_back(std::move(ideal));
  }
  return out;
}

// -------------------------------------------------------------------- audit

json audit_bounds(const MonomialIdeal& ideal, DecompositionCache* cache, bool& ok) {
  const auto bounds = check_bounds(ideal, bound_samples(ideal.context()), cache);
  bool prime_ok = true;
  for (const auto& pb : bounds.prime_bounds) prime_ok = prime_ok && pb.holds;
  bool colon_ok = true;
  for (const auto& cb : bounds.colon_bounds) colon_ok = colon_ok && cb.holds;
  const auto mod = check_module_degrees(ideal, cache);
  bool rows_ok = true;
  for (const auto& row : mod.rows) rows_ok = rows_ok && row.holds;
  ok = ok && bounds.all_hold && mod.all_hold;
  return {{"prime_lower_bound", prime_ok},
          {"colon_upper_bound", colon_ok},
          {"colon_samples", bounds.colon_bounds.size()},
          {"module_degrees", rows_ok},
          {"unmixed_identity",
           mod.unmixed_identity ? json(*mod.unmixed_identity) : json(nullptr)},
          {"nakayama", mod.nakayama_ok}};
}

// ------------------------------------------------------------------- suites

SuiteResult corpus_suite(const SuiteOptions& opts) {
  const std::size_t count = opts.samples != 0 ? opts.samples : 120;
  const auto corpus = random_corpus(opts.seed, count);
  SuiteResult res;
  run_instances(res, numbered_ids("C", count), opts.threads, [&](std::size_t i, Outcome& out) {
    const auto& ideal = corpus[i];
    DecompositionCache cache;
    out.record["ideal"] = to_json(ideal);

    const auto pol = verify_polarization_theorem(ideal, &cache);
    out.record["polarization"] = {{"a", pol.part_a},
                                  {"b", pol.part_b},
                                  {"c", pol.part_c},
                                  {"d", pol.part_d},
                                  {"v_ideal", pol.v_ideal},
                                  {"v_polarized", pol.v_polarized}};
    if (!pol.holds()) {
      // Reproducer: every lift q whose v_q(I^P) undercuts v_p(I).
      json lifts = json::array();
      for (const auto& row : pol.rows) {
        for (const auto& [q, vq] : row.lifts) {
          if (vq >= row.v_prime) continue;
          lifts.push_back({{"prime", row.prime.to_string()},
                           {"v_prime", row.v_prime},
                           {"lift", q.to_string()},
                           {"v_lift", vq}});
        }
      }
      out.record["polarization"]["polarized"] = to_json(Polarization(ideal).image());
      out.record["polarization"]["undercutting_lifts"] = std::move(lifts);
      std::string parts;
      for (const auto& [name, ok] : {std::pair{"a", pol.part_a}, std::pair{"b", pol.part_b},
                                     std::pair{"c", pol.part_c}, std::pair{"d", pol.part_d}}) {
        if (!ok) parts += std::string(parts.empty() ? "" : ",") + name;
      }
      out.check(false, "polarization theorem fails in part(s) " + parts);
    }

    const auto v = v_number(ideal, &cache);
    const auto vo = v_oracle(ideal);
    out.record["v"] = v.degree;
    out.record["v_oracle"] = vo;
    out.record["witness"] = witness_json(v);
    out.cross_check(v.degree == vo, "v_number differs from v_oracle");

    const auto ass = associated_primes(ideal, &cache);
    const auto ao = ass_oracle(ideal, bounding_multidegree(ideal));
    out.record["ass"] = ass_json(ass);
    out.cross_check(ass.primes == ao, "associated_primes differs from ass_oracle");

    const int horizon = std::max(1, opts.horizon);
    audit_powers(ideal, horizon, &cache, out);

    const auto st = stats(ideal);
    out.record["equigenerated"] = st.equigenerated;
    if (!st.equigenerated) return;

    // Linear quotient certificates re-verify independently of the search.
    const auto lq = find_lq_order(ideal, opts.budget);
    out.record["lq_order"] = to_string(lq.status);
    if (lq.order) {
      out.cross_check(is_lq_order(ideal.context(), lq.order->order).ok,
                      "returned order fails is_lq_order");
      out.check(lq_polarization_transfer(ideal, lq.order->order),
                "polarized order is not a linear quotient order");
    }
    const auto band = alpha_band_check(ideal, opts.budget);
    out.record["alpha_band"] = {{"applicable", band.applicable}, {"holds", band.holds}};
    if (band.applicable) out.check(band.holds, "alpha band check fails");

    const auto lp = linear_powers_certificate(ideal, horizon, opts.budget);
    out.record["linear_powers_certified"] = lp.certified;
    if (lp.certified && band.applicable) {
      // Observation only: offsets outside {-1, 0} are logged, never failed.
      const auto vf = v_function(ideal, horizon, &cache);
      json offsets = json::array();
      bool in_band = true;
      for (std::size_t k = 1; k <= vf.v.size(); ++k) {
        const long off = static_cast<long>(vf.v[k - 1]) - static_cast<long>(st.alpha * k);
        offsets.push_back(off);
        in_band = in_band && (off == -1 || off == 0);
      }
      out.record["power_offsets"] = {{"offsets", std::move(offsets)}, {"in_band", in_band}};
    }
  });
  std::size_t observed = 0;
  std::size_t outside = 0;
  for (const auto& inst : res.instances) {
    if (!inst.contains("power_offsets")) continue;
    ++observed;
    if (!inst["power_offsets"]["in_band"].get<bool>()) ++outside;
  }
  std::map<std::string, std::size_t> part_failures{{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}};
  for (const auto& inst : res.instances) {
    if (!inst.contains("polarization")) continue;
    for (auto& [name, n] : part_failures) {
      if (!inst["polarization"][name].get<bool>()) ++n;
    }
  }
  res.summary = {{"ideals", count},
                 {"seed", opts.seed},
                 {"polarization_part_failures", part_failures},
                 {"power_offset_observations", observed},
                 {"power_offset_outside_band", outside}};
  return res;
}

SuiteResult tail_suite(const SuiteOptions& opts) {
  const int horizon = opts.horizon > 0 ? opts.horizon : 4;
  const std::size_t count = opts.samples != 0 ? opts.samples : 60;
  std::vector<MonomialIdeal> ideals;
  for (auto& ideal : random_corpus(opts.seed, 120)) {
    if (stats(ideal).equigenerated) ideals.push_back(std::move(ideal));
  }
  for (auto& ideal : random_equigenerated_corpus(opts.seed, count)) {
    ideals.push_back(std::move(ideal));
  }
  SuiteResult res;
  run_instances(res, numbered_ids("T", ideals.size()), opts.threads,
                [&](std::size_t i, Outcome& out) {
                  const auto& ideal = ideals[i];
                  DecompositionCache cache;
                  out.record["ideal"] = to_json(ideal);
                  const auto vf = v_function(ideal, horizon, &cache);
                  out.record["vfunction"] = to_json(vf);
                  out.check(vf.lower_bound_holds, "v(I^k) < alpha(I^k) - 1");
                  if (vf.tail_b_at_least_minus_one) {
                    out.check(*vf.tail_b_at_least_minus_one, "tail law offset b < -1");
                  }
                  out.record["tail_window"] = vf.tail_law.has_value();
                  const auto ap = ass_powers(ideal, horizon, &cache);
                  out.record["ass_stable_at_horizon"] = ap.stable_at_horizon;
                  audit_powers(ideal, horizon, &cache, out);
                });
  res.summary = {{"ideals", ideals.size()},
                 {"K", horizon},
                 {"seed", opts.seed},
                 {"with_tail_window", count_if_true(res.instances, "tail_window")},
                 {"ass_stable_at_horizon", count_if_true(res.instances, "ass_stable_at_horizon")},
                 {"asymptotic_claims_verified", false}};
  return res;
}

SuiteResult edge_suite(const SuiteOptions& opts) {
  const std::size_t max_n = opts.max_size != 0 ? opts.max_size : 6;
  const int horizon = opts.horizon > 0 ? opts.horizon : 3;
  if (max_n > 6) throw Error("edge suite is limited to 6 vertices");
  std::vector<Graph> graphs;
  std::vector<std::string> ids;
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::size_t idx = 0;
    for (auto& g : graphs_up_to_isomorphism(n)) {
      if (g.edge_count() == 0) continue;
      ids.push_back("G" + std::to_string(n) + "-" + pad_id("", idx++));
      graphs.push_back(std::move(g));
    }
  }
  SuiteResult res;
  run_instances(res, ids, opts.threads, [&](std::size_t i, Outcome& out) {
    const auto& g = graphs[i];
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
    out.record["vertices"] = g.size();
    out.record["edges"] = std::move(edges);
    DecompositionCache cache;
    const auto ideal = edge_ideal(g);
    const bool cochordal = froberg_linear_resolution(g);
    out.record["cochordal"] = cochordal;
    const auto vf = v_function(ideal, horizon, &cache);
    out.record["vfunction"] = to_json(vf);
    if (cochordal) {
      out.check(vf.v[0] == 1, "v(I(G)) != 1");
      for (std::size_t k = 1; k <= vf.v.size(); ++k) {
        out.check(vf.v[k - 1] == 2 * k - 1, "v(I(G)^" + std::to_string(k) + ") != 2k-1");
      }
      const auto nc = neighborhood_colon_check(g);
      out.record["neighborhood_colon"] = {{"vertex", nc.first_vertex + 1}, {"holds", nc.holds}};
      out.check(nc.holds, "neighborhood colon identity fails");
    }
    // Persistence of v_p along powers where (I^{k+1} : I) = I^k.
    const auto omega = stats(ideal).omega;
    std::vector<MonomialIdeal> powers{ideal};
    for (int k = 2; k <= horizon; ++k) powers.push_back(multiply(powers.back(), ideal));
    std::size_t persistence_checks = 0;
    bool ass_chain = true;
    for (int k = 1; k < horizon; ++k) {
      const auto& lo = vf.per_prime[static_cast<std::size_t>(k - 1)];
      const auto& hi = vf.per_prime[static_cast<std::size_t>(k)];
      for (const auto& [p, v] : lo) ass_chain = ass_chain && hi.count(p) == 1;
      if (!(colon(powers[static_cast<std::size_t>(k)], ideal) ==
            powers[static_cast<std::size_t>(k - 1)])) {
        continue;
      }
      for (const auto& [p, v] : lo) {
        auto it = hi.find(p);
        if (it == hi.end()) continue;
        ++persistence_checks;
        out.check(it->second <= v + omega,
                  "v_p(I^{k+1}) > v_p(I^k) + omega at k=" + std::to_string(k));
      }
    }
    out.record["persistence_checks"] = persistence_checks;
    out.record["ass_chain"] = ass_chain;
    audit_powers(ideal, horizon, &cache, out);
  });

  // Chordality gate against an independent induced-cycle scan.
  std::size_t labeled = 0;
  std::size_t chordal = 0;
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      ++labeled;
      const bool peo = find_peo(g).has_value();
      chordal += peo ? 1 : 0;
      if (peo == has_long_induced_cycle(g)) {
        ++mismatches;
        if (mismatches <= 5) {
          std::ostringstream os;
          for (const auto& [a, b] : g.edges()) os << ' ' << a + 1 << '-' << b + 1;
          res.events.push_back("chordality mismatch on graph with edges" + os.str());
        }
      }
    }
  }
  if (mismatches != 0) res.verdict = worst(res.verdict, Verdict::kFail);
  res.summary = {{"max_vertices", max_n},
                 {"K", horizon},
                 {"classes", graphs.size()},
                 {"cochordal_classes", count_if_true(res.instances, "cochordal")},
                 {"ass_chain_holds", count_if_true(res.instances, "ass_chain")},
                 {"labeled_graphs", labeled},
                 {"chordal_labeled", chordal},
                 {"chordality_mismatches", mismatches}};
  return res;
}

namespace {

struct PolymatroidSample {
  std::string kind;
  json params;
  MonomialIdeal ideal;
};

std::vector<PolymatroidSample> polymatroid_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::map<std::size_t, VarContext> contexts;
  auto ctx_for = [&](std::size_t n) -> const VarContext& {
    return contexts.try_emplace(n, VarContext::numbered("x", n)).first->second;
  };
  std::vector<PolymatroidSample> out;
  while (out.size() < count) {
    switch (out.size() % 3) {
      case 0: {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t d = 1 + rng() % 4;
        Exponents caps(n);
        for (auto& c : caps) c = static_cast<Exponent>(rng() % (d + 1));
        if (expo::degree(caps) < d) continue;
        out.push_back({"veronese-type", {{"n", n}, {"d", d}, {"caps", caps}},
                       veronese_type(ctx_for(n), d, caps)});
        break;
      }
      case 1: {
        const std::size_t n = 2 + rng() % 3;
        const std::size_t r = 1 + rng() % 4;
        std::vector<std::vector<std::size_t>> sets;
        for (std::size_t s = 0; s < r; ++s) {
          std::uint64_t mask = 0;
          while (mask == 0) mask = rng() % (std::uint64_t{1} << n);
          std::vector<std::size_t> a;
          for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) a.push_back(i);
          }
          sets.push_back(std::move(a));
        }
        out.push_back({"transversal", {{"n", n}, {"sets", sets}},
                       transversal(ctx_for(n), sets)});
        break;
      }
      default: {
        const std::size_t v = 3 + rng() % 2;
        std::vector<std::pair<std::size_t, std::size_t>> all;
        for (std::size_t a = 0; a < v; ++a) {
          for (std::size_t b = a + 1; b < v; ++b) all.emplace_back(a, b);
        }
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t e = 1 + rng() % std::min<std::size_t>(4, all.size());
        all.resize(e);
        std::sort(all.begin(), all.end());
        const Graph g(v, all);
        json edges = json::array();
        for (const auto& [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
        out.push_back({"graphic", {{"vertices", v}, {"edges", std::move(edges)}},
                       graphic_matroid(g, ctx_for(e))});
        break;
      }
    }
  }
  return out;
}

}  // namespace

SuiteResult polymatroid_suite(const SuiteOptions& opts) {
  const std::size_t count = opts.samples != 0 ? opts.samples : 60;
  const int horizon = opts.horizon > 0 ? opts.horizon : 3;
  const auto samples = polymatroid_samples(opts.seed, count);
  SuiteResult res;
  run_instances(res, numbered_ids("M", count), opts.threads, [&](std::size_t i, Outcome& out) {
    const auto& s = samples[i];
    const auto& ideal = s.ideal;
    DecompositionCache cache;
    out.record["kind"] = s.kind;
    out.record["params"] = s.params;
    out.record["ideal"] = to_json(ideal);
    out.cross_check(is_polymatroidal(ideal), "sample is not polymatroidal");
    const auto vf = v_function(ideal, horizon, &cache);
    out.record["vfunction"] = to_json(vf);
    out.check(vf.linear_powers_law, "v(I^k) != alpha k - 1 for some k");
    const auto cp = colon_polymatroidal_check(ideal);
    out.record["colon_polymatroidal"] = {{"applicable", cp.applicable},
                                         {"holds", cp.holds},
                                         {"skipped_variables", cp.outside_support.size()}};
    if (cp.applicable) out.check(cp.holds, "a variable colon is not polymatroidal");
    // Product with the next sample over the same variables.
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (!(samples[j].ideal.context() == ideal.context())) continue;
      const bool ok = is_polymatroidal(multiply(ideal, samples[j].ideal));
      out.record["product_with"] = {{"partner", pad_id("M", j)}, {"polymatroidal", ok}};
      out.check(ok, "product with " + pad_id("M", j) + " is not polymatroidal");
      break;
    }
    audit_powers(ideal, horizon, &cache, out);
  });
  std::map<std::string, std::size_t> kinds;
  std::size_t products = 0;
  for (const auto& inst : res.instances) {
    ++kinds[inst["kind"].get<std::string>()];
    if (inst.contains("product_with")) ++products;
  }
  res.summary = {{"samples", count},
                 {"K", horizon},
                 {"seed", opts.seed},
                 {"kinds", kinds},
                 {"products_checked", products}};
  return res;
}

SuiteResult hibi_suite(const SuiteOptions& opts) {
  const std::size_t max_n = opts.max_size != 0 ? opts.max_size : 4;
  const int horizon = opts.horizon > 0 ? opts.horizon : 2;
  if (max_n > 5) throw Error("Hibi suite is limited to 5 elements");
  struct Case {
    Poset poset;
    int k;
  };
  std::vector<Case> cases;
  std::vector<std::string> ids;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t idx = 0;
    for (auto& p : posets_up_to_isomorphism(n)) {
      for (int k = 1; k <= horizon; ++k) {
        ids.push_back("P" + std::to_string(n) + "-" + pad_id("", idx) + "-k" +
                      std::to_string(k));
        cases.push_back({p, k});
      }
      ++idx;
    }
  }
  SuiteResult res;
  run_instances(res, ids, opts.threads, [&](std::size_t i, Outcome& out) {
    const auto& [p, k] = cases[i];
    const std::size_t n = p.size();
    json covers = json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({a + 1, b + 1});
    out.record["elements"] = n;
    out.record["covers"] = std::move(covers);
    out.record["k"] = k;
    DecompositionCache cache;
    const auto ctx = hibi_context(n);
    const auto base = hibi_ideal(p, ctx);
    const auto hk = power(base, k);
    const auto ass = associated_primes(hk, &cache);
    const auto expected = hibi_expected_primes(p, ctx);
    out.record["ass"] = primes_json(ass.primes);
    out.check(ass.primes == expected, "Ass(H_P^k) differs from the comparable-pair primes");

    json table = json::object();
    bool table_ok = true;
    for (const auto& [pair, want] : hibi_v_expected(p, k)) {
      const MonomialPrime q(ctx, {pair.first, n + pair.second});
      const auto got = ass.contains(q) ? v_at_prime(hk, q, &cache).degree : 0;
      table[q.to_string()] = {{"computed", got}, {"expected", want}};
      table_ok = table_ok && ass.contains(q) && got == want;
    }
    out.record["v_table"] = std::move(table);
    out.check(table_ok, "per-prime v-table differs from the closed form");

    const auto v = v_number(hk, &cache).degree;
    out.record["v"] = v;
    out.check(v + 1 == n * static_cast<std::size_t>(k), "v(H_P^k) != k|P| - 1");

    const auto pc = hibi_power_polarization_check(p, k);
    out.record["polarization_equality"] = pc.holds;
    out.check(pc.holds, "polarization of H_P^k differs from H_{P(k)}");
    const bool inter = hibi_symbolic_intersection_check(p, k);
    out.record["intersection_formula"] = inter;
    out.check(inter, "H_P^k differs from the intersection of (x_i, y_j)^k");
    audit_powers(base, k, &cache, out);
  });
  res.summary = {{"max_elements", max_n}, {"K", horizon}, {"cases", cases.size()}};
  return res;
}

SuiteResult depthzero_suite(const SuiteOptions& opts) {
  const int horizon = opts.horizon > 0 ? opts.horizon : 3;
  const std::size_t wanted = opts.samples != 0 ? opts.samples : 12;
  struct Case {
    std::string origin;
    MonomialIdeal ideal;
  };
  std::vector<Case> cases;
  std::map<std::size_t, VarContext> contexts;
  auto ctx_for = [&](std::size_t n) -> const VarContext& {
    return contexts.try_emplace(n, VarContext::numbered("x", n)).first->second;
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      cases.push_back({"maximal-power", MonomialIdeal(ctx_for(n), monomials_of_degree(n, d))});
    }
  }
  // Sampled equigenerated ideals whose powers all have depth zero and carry
  // linear quotient certificates.
  std::mt19937_64 rng(opts.seed);
  std::set<std::pair<std::size_t, std::vector<Exponents>>> seen;
  std::size_t found = 0;
  std::size_t attempts = 0;
  const std::size_t max_attempts = 4000;
  while (found < wanted && attempts < max_attempts) {
    ++attempts;
    const std::size_t n = 2 + rng() % 2;
    const std::size_t d = 2 + rng() % 2;
    const auto pool = monomials_of_degree(n, d);
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (rng() % 2 == 0) gens.push_back(pool[i]);
    }
    if (gens.empty() || gens.size() == pool.size()) continue;
    MonomialIdeal ideal(ctx_for(n), gens);
    if (!seen.emplace(n, gens).second) continue;
    bool depth_zero = true;
    MonomialIdeal pw = ideal;
    for (int k = 1; k <= horizon && depth_zero; ++k) {
      if (k > 1) pw = multiply(pw, ideal);
      depth_zero = has_depth_zero(pw);
    }
    if (!depth_zero) continue;
    if (!linear_powers_certificate(ideal, horizon, opts.budget).certified) continue;
    cases.push_back({"sampled", std::move(ideal)});
    ++found;
  }
  SuiteResult res;
  run_instances(res, numbered_ids("Z", cases.size()), opts.threads,
                [&](std::size_t i, Outcome& out) {
                  const auto& ideal = cases[i].ideal;
                  DecompositionCache cache;
                  out.record["origin"] = cases[i].origin;
                  out.record["ideal"] = to_json(ideal);
                  const auto st = stats(ideal);
                  const auto vf = v_function(ideal, horizon, &cache);
                  out.record["vfunction"] = to_json(vf);
                  out.check(vf.linear_powers_law, "v(I^k) != alpha k - 1 for some k");
                  const auto m = as_prime(MonomialIdeal::maximal(ideal.context()));
                  json module_alpha = json::array();
                  MonomialIdeal pw = ideal;
                  for (int k = 1; k <= horizon; ++k) {
                    if (k > 1) pw = multiply(pw, ideal);
                    const bool has_m = associated_primes(pw, &cache).contains(*m);
                    out.check(has_m, "m is not associated to I^" + std::to_string(k));
                    if (!has_m) continue;
                    const auto a = module_initial_degree(pw, *m, &cache);
                    module_alpha.push_back(a);
                    out.check(a + 1 == st.alpha * static_cast<std::size_t>(k),
                              "alpha((I^k : m) / I^k) != alpha k - 1 at k=" + std::to_string(k));
                  }
                  out.record["module_alpha"] = std::move(module_alpha);
                  audit_powers(ideal, horizon, &cache, out);
                });
  if (found < wanted) {
    res.verdict = worst(res.verdict, Verdict::kFail);
    res.events.push_back("only " + std::to_string(found) + " of " + std::to_string(wanted) +
                         " depth-zero samples found");
  }
  res.summary = {{"K", horizon},
                 {"seed", opts.seed},
                 {"maximal_powers", 9},
                 {"sampled", found},
                 {"attempts", attempts}};
  return res;
}

SuiteResult simon_suite(const SuiteOptions& opts) {
  struct Case {
    std::size_t n;
    std::size_t d;
    SimonMode mode;
  };
  const std::vector<Case> cases{{4, 2, SimonMode::kSquarefree}, {4, 3, SimonMode::kSquarefree},
                                {5, 2, SimonMode::kSquarefree}, {2, 1, SimonMode::kMonomial},
                                {2, 2, SimonMode::kMonomial},   {2, 3, SimonMode::kMonomial},
                                {2, 4, SimonMode::kMonomial},   {3, 2, SimonMode::kMonomial},
                                {3, 3, SimonMode::kMonomial}};
  std::vector<std::string> ids;
  for (const auto& c : cases) {
    ids.push_back(to_string(c.mode) + "-n" + std::to_string(c.n) + "-d" + std::to_string(c.d));
  }
  SuiteResult res;
  run_instances(res, ids, opts.threads, [&](std::size_t i, Outcome& out) {
    const auto& c = cases[i];
    const auto rep = simon_search(c.n, c.d, c.mode, opts.budget);
    out.record["report"] = to_json(rep);
    out.check(rep.counterexamples.empty(), "extension counterexample found");
    if (!rep.exhaustive) out.flag(Verdict::kPartialBudget, "search budget exhausted");
  });
  res.summary = {{"searches", cases.size()}, {"budget", opts.budget.max_nodes}};
  return res;
}

// ------------------------------------------------------------------- runner

std::vector<std::string> known_tasks() {
  return {"v",           "vfunction",         "ass",         "polarize-check",
          "simon",       "edge-suite",        "hibi-suite",  "polymatroid-suite",
          "depthzero-suite", "corpus-suite",  "tail-suite",  "simon-suite"};
}

namespace {

constexpr std::size_t kMaxVars = 16;
constexpr Exponent kMaxExponent = 12;
constexpr std::size_t kMaxGens = 200;
constexpr int kMaxHorizon = 8;

MonomialIdeal load_ideal(const ExperimentConfig& cfg, json& echo) {
  const int sources = int{cfg.ideal_path.has_value()} + int{cfg.graph_path.has_value()} +
                      int{cfg.poset_path.has_value()};
  if (sources != 1) {
    throw Error("task '" + cfg.task + "' needs exactly one of --ideal, --graph, --poset");
  }
  MonomialIdeal ideal = [&] {
    if (cfg.ideal_path) return read_ideal_file(*cfg.ideal_path);
    if (cfg.graph_path) {
      const auto g = read_graph_file(*cfg.graph_path);
      if (g.edge_count() == 0) throw Error("graph has no edges");
      return edge_ideal(g);
    }
    return hibi_ideal(read_poset_file(*cfg.poset_path));
  }();
  if (ideal.is_zero() || ideal.is_unit()) throw Error("input ideal is zero or the unit ideal");
  if (ideal.context().size() > kMaxVars) {
    throw Error("input has " + std::to_string(ideal.context().size()) +
                " variables; the cap is " + std::to_string(kMaxVars));
  }
  if (ideal.size() > kMaxGens) {
    throw Error("input has " + std::to_string(ideal.size()) + " generators; the cap is " +
                std::to_string(kMaxGens));
  }
  for (auto e : bounding_multidegree(ideal)) {
    if (e > kMaxExponent) {
      throw Error("input exponent " + std::to_string(e) + " exceeds the cap " +
                  std::to_string(kMaxExponent));
    }
  }
  echo["ideal"] = to_json(ideal);
  return ideal;
}

// Oracles enumerate the bounding box; skip them when it is large.
bool oracle_affordable(const MonomialIdeal& ideal) {
  double cells = 1;
  for (auto e : bounding_multidegree(ideal)) cells *= e + 1.0;
  return cells <= 50000;
}

SuiteResult single(const std::string& id, const std::function<void(Outcome&)>& body) {
  SuiteResult res;
  run_instances(res, {id}, 1, [&](std::size_t, Outcome& out) { body(out); });
  return res;
}

int horizon_or(const ExperimentConfig& cfg, int fallback) {
  const int k = cfg.horizon.value_or(fallback);
  if (k < 1) throw Error("--k must be at least 1");
  if (k > kMaxHorizon) throw Error("--k is capped at " + std::to_string(kMaxHorizon));
  return k;
}

}  // namespace

RunReport run(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto& tasks = known_tasks();
  if (std::find(tasks.begin(), tasks.end(), cfg.task) == tasks.end()) {
    throw Error("unknown task '" + cfg.task + "'");
  }
  json echo = {{"task", cfg.task}, {"seed", cfg.seed}, {"budget", cfg.budget}};
  if (cfg.ideal_path) echo["ideal_path"] = *cfg.ideal_path;
  if (cfg.graph_path) echo["graph_path"] = *cfg.graph_path;
  if (cfg.poset_path) echo["poset_path"] = *cfg.poset_path;

  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples.value_or(0);
  opts.max_size = cfg.max_size.value_or(0);
  opts.budget.max_nodes = cfg.budget;
  opts.threads = cfg.threads;
  if (cfg.samples) echo["samples"] = *cfg.samples;
  if (cfg.max_size) echo["max_size"] = *cfg.max_size;

  SuiteResult res;
  const auto& task = cfg.task;
  if (task == "v" || task == "vfunction" || task == "ass" || task == "polarize-check") {
    const auto ideal = load_ideal(cfg, echo);
    const int horizon = horizon_or(cfg, 3);
    if (task == "vfunction") echo["K"] = horizon;
    res = single("input", [&](Outcome& out) {
      DecompositionCache cache;
      out.record["ideal"] = to_json(ideal);
      if (task == "v") {
        const auto w = v_number(ideal, &cache);
        out.record["v"] = w.degree;
        out.record["witness"] = witness_json(w);
        json table = json::object();
        for (const auto& p : associated_primes(ideal, &cache).primes) {
          table[p.to_string()] = v_at_prime(ideal, p, &cache).degree;
        }
        out.record["per_prime"] = std::move(table);
        if (oracle_affordable(ideal)) {
          const auto vo = v_oracle(ideal);
          out.record["v_oracle"] = vo;
          out.cross_check(vo == w.degree, "v_number differs from v_oracle");
        }
      } else if (task == "vfunction") {
        const auto vf = v_function(ideal, horizon, &cache);
        out.record["vfunction"] = to_json(vf);
        out.check(vf.lower_bound_holds, "v(I^k) < alpha(I^k) - 1");
        if (vf.tail_b_at_least_minus_one) {
          out.check(*vf.tail_b_at_least_minus_one, "tail law offset b < -1");
        }
      } else if (task == "ass") {
        const auto ass = associated_primes(ideal, &cache);
        out.record["ass"] = ass_json(ass);
        json comps = json::array();
        for (const auto& c : irreducible_decomposition(ideal, &cache)) {
          comps.push_back(c.to_string());
        }
        out.record["irreducible_components"] = std::move(comps);
        out.record["depth_zero"] = has_depth_zero(ideal);
        if (oracle_affordable(ideal)) {
          const bool same = ass_oracle(ideal, bounding_multidegree(ideal)) == ass.primes;
          out.record["oracle_agrees"] = same;
          out.cross_check(same, "associated_primes differs from ass_oracle");
        }
      } else {
        const auto pol = verify_polarization_theorem(ideal, &cache);
        json rows = json::array();
        for (const auto& row : pol.rows) {
          json lifts = json::object();
          for (const auto& [q, v] : row.lifts) lifts[q.to_string()] = v;
          rows.push_back({{"prime", row.prime.to_string()},
                          {"v_prime", row.v_prime},
                          {"lifts", std::move(lifts)},
                          {"min_lift", row.min_lift}});
        }
        out.record["rows"] = std::move(rows);
        out.record["v_ideal"] = pol.v_ideal;
        out.record["v_polarized"] = pol.v_polarized;
        out.record["parts"] = {
            {"a", pol.part_a}, {"b", pol.part_b}, {"c", pol.part_c}, {"d", pol.part_d}};
        out.check(pol.holds(), "polarization theorem fails");
      }
    });
  } else if (task == "simon") {
    if (!cfg.n || !cfg.d) throw Error("task 'simon' needs --n and --d");
    const auto mode = parse_simon_mode(cfg.mode.value_or("squarefree"));
    if (*cfg.n > 6 || *cfg.d < 1 || *cfg.d > 12 ||
        simon_target(*cfg.n, *cfg.d, mode).size() > 20) {
      throw Error("task 'simon' needs n <= 6, d <= 12 and at most 20 target generators");
    }
    echo["n"] = *cfg.n;
    echo["d"] = *cfg.d;
    echo["mode"] = to_string(mode);
    res = single("simon", [&](Outcome& out) {
      const auto rep = simon_search(*cfg.n, *cfg.d, mode, opts.budget);
      out.record["report"] = to_json(rep);
      out.check(rep.counterexamples.empty(), "extension counterexample found");
      if (!rep.exhaustive) out.flag(Verdict::kPartialBudget, "search budget exhausted");
    });
  } else {
    if (cfg.horizon) opts.horizon = horizon_or(cfg, 0);
    if (task == "corpus-suite") {
      if (!cfg.horizon) opts.horizon = 2;
      res = corpus_suite(opts);
    } else {
      if (!cfg.horizon) opts.horizon = 0;  // suite default
      if (task == "edge-suite") {
        res = edge_suite(opts);
      } else if (task == "hibi-suite") {
        res = hibi_suite(opts);
      } else if (task == "polymatroid-suite") {
        res = polymatroid_suite(opts);
      } else if (task == "depthzero-suite") {
        res = depthzero_suite(opts);
      } else if (task == "tail-suite") {
        res = tail_suite(opts);
      } else {
        res = simon_suite(opts);
      }
    }
    echo["K"] = cfg.horizon ? json(opts.horizon) : json("default");
  }

  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  RunReport report;
  report.verdict = res.verdict;
  report.json = {{"schema", 1},
                 {"tool", "vnum"},
                 {"config", std::move(echo)},
                 {"verdict", to_string(res.verdict)},
                 {"summary", std::move(res.summary)},
                 {"events", res.events},
                 {"instances", std::move(res.instances)},
                 {"timing", {{"elapsed_ms", elapsed}}}};
  return report;
}

std::string v_tables_csv(const json& report) {
  std::ostringstream os;
  os << "instance,k,prime,v\n";
  for (const auto& inst : report.value("instances", json::array())) {
    if (!inst.contains("vfunction")) continue;
    const auto id = inst["id"].get<std::string>();
    const auto& vf = inst["vfunction"];
    const auto& tables = vf["per_prime"];
    for (std::size_t k = 0; k < tables.size(); ++k) {
      for (const auto& [prime, v] : tables[k].items()) {
        os << id << ',' << k + 1 << ",\"" << prime << "\"," << v.get<std::size_t>() << '\n';
      }
      os << id << ',' << k + 1 << ",*," << vf["v"][k].get<std::size_t>() << '\n';
    }
  }
  return os.str();
}

}  // namespace vnum
