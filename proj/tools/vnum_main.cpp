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

// vnum <task> [--ideal F | --graph F | --poset F | --n N --d D --mode M]
//             [--k K] [--budget B] [--seed S] [--out F.json] [--csv F.csv]
//
// Exit status: 0 on pass or partial coverage, 1 on failure or falsification
// event, 2 on invalid usage or input.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vnum/suites.hpp"

namespace {

template <class T>
void copy_if_set(const CLI::Option* opt, const T& value, std::optional<T>& dst) {
  if (opt->count() > 0) dst = value;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw vnum::Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"v-numbers of monomial ideals and their powers"};
  vnum::ExperimentConfig cfg;
  std::string ideal, graph, poset, mode, out_path, csv_path;
  std::size_t n = 0, d = 0, samples = 0, max_size = 0;
  int k = 0;

  std::string task_help = "one of:";
  for (const auto& t : vnum::known_tasks()) task_help += " " + t;
  app.add_option("task", cfg.task, task_help)->required();
  auto* o_ideal = app.add_option("--ideal", ideal, "monomial ideal file");
  auto* o_graph = app.add_option("--graph", graph, "graph edge list (edge ideal)");
  auto* o_poset = app.add_option("--poset", poset, "poset cover relations (Hibi ideal)");
  o_ideal->excludes(o_graph)->excludes(o_poset);
  o_graph->excludes(o_poset);
  auto* o_n = app.add_option("--n", n, "number of variables (simon)");
  auto* o_d = app.add_option("--d", d, "generator degree (simon)");
  auto* o_mode = app.add_option("--mode", mode, "squarefree | monomial (simon)");
  auto* o_k = app.add_option("--k", k, "power horizon K");
  app.add_option("--budget", cfg.budget, "search node budget per backtracking search");
  app.add_option("--seed", cfg.seed, "seed for generated corpora");
  auto* o_samples = app.add_option("--samples", samples, "corpus size for sampled suites");
  auto* o_max = app.add_option("--max-size", max_size, "vertex or element cap for suites");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--csv", csv_path, "also write per-prime v-tables as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  copy_if_set(o_ideal, ideal, cfg.ideal_path);
  copy_if_set(o_graph, graph, cfg.graph_path);
  copy_if_set(o_poset, poset, cfg.poset_path);
  copy_if_set(o_mode, mode, cfg.mode);
  copy_if_set(o_n, n, cfg.n);
  copy_if_set(o_d, d, cfg.d);
  copy_if_set(o_k, k, cfg.horizon);
  copy_if_set(o_samples, samples, cfg.samples);
  copy_if_set(o_max, max_size, cfg.max_size);

  vnum::RunReport report;
  try {
    report = vnum::run(cfg);
  } catch (const vnum::Error& e) {
    std::cerr << "vnum: " << e.what() << "\n";
    return 2;
  }
  try {
    const auto text = report.json.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
    if (!csv_path.empty()) write_file(csv_path, vnum::v_tables_csv(report.json));
  } catch (const vnum::Error& e) {
    std::cerr << "vnum: " << e.what() << "\n";
    return 2;
  }
  std::cerr << cfg.task << ": " << vnum::to_string(report.verdict) << "\n";
  for (const auto& ev : report.json["events"]) std::cerr << "  " << ev.get<std::string>() << "\n";
  const bool ok = report.verdict == vnum::Verdict::kPass ||
                  report.verdict == vnum::Verdict::kPartialBudget;
  return ok ? 0 : 1;
}
