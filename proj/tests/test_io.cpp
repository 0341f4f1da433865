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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "vnum/io.hpp"
#include "vnum/suites.hpp"

using namespace vnum;

namespace {

std::string data_file(const std::string& name) {
  return (std::filesystem::path(VNUM_SOURCE_DIR) / "data" / name).string();
}

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("ideal format") {
  const auto i = parse_ideal("vars: x y\nx^2\nx y\n");
  CHECK(i == th::ideal(i.context(), {"x^2", "x*y"}));
  const auto j = parse_ideal("# comment\nvars: x1 x2\n\nx1^2   # trailing\nx1*x2\n");
  CHECK(j.size() == 2);
  CHECK(parse_ideal("vars: x\n1\n").is_unit());
  const auto round = parse_ideal(format_ideal(i));
  CHECK(round.context().names() == i.context().names());
  CHECK(round.gens().size() == i.gens().size());
  CHECK(std::equal(round.gens().begin(), round.gens().end(), i.gens().begin()));
}

TEST_CASE("ideal format errors carry line numbers") {
  try {
    parse_ideal("vars: x y\nx^2\nz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_ideal("x^2\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("vars: x\nx^q\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal("vars: x x\nx\n"), ParseError);
}

TEST_CASE("graph and poset formats") {
  CHECK(parse_graph("1 2\n2 3\n") == Graph::path(3));
  CHECK(parse_graph("vertices: 5\n1 2\n").size() == 5);
  try {
    parse_graph("1 2\n2 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("1 2\n2 1\n"), ParseError);
  CHECK(parse_poset("1 < 2\n1 < 3\n") == Poset(3, {{0, 1}, {0, 2}}));
  CHECK_THROWS_AS(parse_poset("1 < 2\n2 < 1\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("1 > 2\n"), ParseError);
  CHECK_THROWS_AS(read_ideal_file("/nonexistent/file"), Error);
}

TEST_CASE("bundled data files") {
  CHECK(read_ideal_file(data_file("terai.txt")).size() == 10);
  CHECK(read_graph_file(data_file("path4.graph")) == Graph::path(4));
  CHECK(read_poset_file(data_file("fork.poset")) == Poset(3, {{0, 1}, {0, 2}}));
}

TEST_CASE("runner tasks") {
  ExperimentConfig vf;
  vf.task = "vfunction";
  vf.ideal_path = data_file("terai.txt");
  vf.horizon = 3;
  const auto r = run(vf);
  CHECK(r.verdict == Verdict::kPass);
  CHECK(r.json.at("schema") == 1);
  CHECK(r.json.at("instances").at(0).at("vfunction").at("v") == nlohmann::json({3, 5, 8}));
  CHECK(without_timing(run(vf).json) == without_timing(r.json));
  CHECK(v_tables_csv(r.json).find("instance,k,prime,v") == 0);

  ExperimentConfig s;
  s.task = "simon";
  s.n = 4;
  s.d = 3;
  s.mode = "squarefree";
  const auto sr = run(s);
  CHECK(sr.verdict == Verdict::kPass);
  const auto& inst = sr.json.at("instances").at(0).at("report");
  CHECK(inst.at("counterexamples").empty());
  CHECK(inst.at("exhaustive") == true);

  ExperimentConfig h;
  h.task = "hibi-suite";
  const auto hr = run(h);
  CHECK(hr.verdict == Verdict::kPass);
  CHECK(without_timing(run(h).json) == without_timing(hr.json));
}

TEST_CASE("runner rejects bad configurations") {
  ExperimentConfig bad;
  bad.task = "nope";
  CHECK_THROWS_AS(run(bad), Error);
  ExperimentConfig missing;
  missing.task = "v";
  CHECK_THROWS_AS(run(missing), Error);
  ExperimentConfig k0;
  k0.task = "vfunction";
  k0.ideal_path = data_file("terai.txt");
  k0.horizon = 0;
  CHECK_THROWS_AS(run(k0), Error);
  ExperimentConfig big;
  big.task = "simon";
  big.n = 9;
  big.d = 4;
  big.mode = "monomial";
  CHECK_THROWS_AS(run(big), Error);
  CHECK(worst(Verdict::kPartialBudget, Verdict::kFail) == Verdict::kFail);
  CHECK(to_string(Verdict::kFalsification) == "falsification-event");
}
