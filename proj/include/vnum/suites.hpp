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

// Experiment suites over generated corpora, and the task runner behind the
// command line tool. Every suite is deterministic given its options; the
// instance list of a result is ordered by instance id.

#ifndef VNUM_SUITES_HPP_
#define VNUM_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vnum/core.hpp"
#include "vnum/decomp.hpp"
#include "vnum/lq.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

// Ordered by severity; combining results keeps the worst.
enum class Verdict { kPass, kPartialBudget, kFail, kFalsification };
std::string to_string(Verdict v);
Verdict worst(Verdict a, Verdict b);

struct SuiteOptions {
  int horizon = 3;
  std::uint64_t seed = 1;
  std::size_t samples = 0;   // 0 selects the suite default
  std::size_t max_size = 0;  // vertices or poset elements; 0 selects the default
  SearchBudget budget;
  unsigned threads = 0;      // 0 uses the hardware concurrency
};

struct SuiteResult {
  Verdict verdict = Verdict::kPass;
  nlohmann::json summary = nlohmann::json::object();
  nlohmann::json instances = nlohmann::json::array();
  std::vector<std::string> events;  // one line per failure or falsification
};

// Seeded corpora. random_corpus: n in [2, 4], exponents <= 3, 1 to 6
// generators, never zero or unit. random_equigenerated_corpus: n in [2, 4],
// degree in [1, 3], 1 to 5 generators of that degree.
std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count);
std::vector<MonomialIdeal> random_equigenerated_corpus(std::uint64_t seed, std::size_t count);

// Lower bound per prime, the colon upper bound over sampled monomials of
// degree <= 2 (degree 1 above four variables), and the module-degree
// identities. `ok` is cleared on any violation.
nlohmann::json audit_bounds(const MonomialIdeal& ideal, DecompositionCache* cache, bool& ok);

SuiteResult corpus_suite(const SuiteOptions& opts);       // default 120 ideals
SuiteResult tail_suite(const SuiteOptions& opts);         // K defaults to 4
SuiteResult edge_suite(const SuiteOptions& opts);         // up to 6 vertices
SuiteResult polymatroid_suite(const SuiteOptions& opts);  // default 60 samples
SuiteResult hibi_suite(const SuiteOptions& opts);         // up to 4 elements, K = 2
SuiteResult depthzero_suite(const SuiteOptions& opts);    // default 12 samples
SuiteResult simon_suite(const SuiteOptions& opts);

nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const VReport& report);
nlohmann::json to_json(const SimonReport& report);

struct ExperimentConfig {
  std::string task;
  std::optional<std::string> ideal_path;
  std::optional<std::string> graph_path;
  std::optional<std::string> poset_path;
  std::optional<std::size_t> n;
  std::optional<std::size_t> d;
  std::optional<std::string> mode;
  std::optional<int> horizon;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> max_size;
  unsigned threads = 0;
};

std::vector<std::string> known_tasks();

struct RunReport {
  Verdict verdict = Verdict::kPass;
  nlohmann::json json;  // schema 1
};

// Throws Error for invalid configurations and oversized inputs.
RunReport run(const ExperimentConfig& config);

// Rows "instance,k,prime,v" for every v-function found in the report.
std::string v_tables_csv(const nlohmann::json& report);

}  // namespace vnum

#endif  // VNUM_SUITES_HPP_
