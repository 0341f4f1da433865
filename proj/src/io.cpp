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

#include "vnum/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace vnum {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in, bool star_separates) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (star_separates) {
      for (auto& c : raw) {
        if (c == '*') c = ' ';
      }
    }
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  return value;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  const auto v = parse_count(tok, line, "index");
  if (v == 0) throw ParseError(line, "indices are 1-based, got 0");
  return v - 1;
}

// Reads an optional "<key>: N" header and returns N, or 0 when absent.
std::size_t header_count(std::vector<Line>& lines, const std::string& key) {
  if (lines.empty() || lines.front().tokens.front() != key + ":") return 0;
  const auto& h = lines.front();
  if (h.tokens.size() != 2) throw ParseError(h.number, "expected '" + key + ": N'");
  const auto n = parse_count(h.tokens[1], h.number, "count");
  lines.erase(lines.begin());
  return n;
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in) {
  auto lines = tokenize(in, true);
  if (lines.empty() || lines.front().tokens.front() != "vars:") {
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "expected a 'vars:' header line");
  }
  std::vector<std::string> names(lines.front().tokens.begin() + 1, lines.front().tokens.end());
  if (names.empty()) throw ParseError(lines.front().number, "no variables declared");
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) {
    throw ParseError(lines.front().number, "duplicate variable label");
  }
  const VarContext ctx(names);
  std::vector<Exponents> gens;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    Exponents e(ctx.size(), 0);
    if (line.tokens.size() == 1 && line.tokens.front() == "1") {
      gens.push_back(std::move(e));
      continue;
    }
    for (const auto& tok : line.tokens) {
      const auto caret = tok.find('^');
      const std::string label = tok.substr(0, caret);
      const auto idx = ctx.index_of(label);
      if (!idx) throw ParseError(line.number, "unknown variable '" + label + "'");
      std::size_t power = 1;
      if (caret != std::string::npos) {
        power = parse_count(tok.substr(caret + 1), line.number, "exponent");
      }
      if (power > 1'000'000) throw ParseError(line.number, "exponent too large");
      e[*idx] += static_cast<Exponent>(power);
    }
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

Graph parse_graph(std::istream& in) {
  auto lines = tokenize(in, false);
  std::size_t n = header_count(lines, "vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& line : lines) {
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected an edge 'i j'");
    const auto i = parse_index(line.tokens[0], line.number);
    const auto j = parse_index(line.tokens[1], line.number);
    if (i == j) throw ParseError(line.number, "loop at vertex " + line.tokens[0]);
    for (const auto& [a, b] : edges) {
      if ((a == i && b == j) || (a == j && b == i)) {
        throw ParseError(line.number, "duplicate edge");
      }
    }
    edges.emplace_back(i, j);
    n = std::max(n, std::max(i, j) + 1);
  }
  if (n > 64) throw Error("graphs are limited to 64 vertices");
  return Graph(n, edges);
}

Poset parse_poset(std::istream& in) {
  auto lines = tokenize(in, false);
  std::size_t n = header_count(lines, "elements");
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& line : lines) {
    if (line.tokens.size() != 3 || line.tokens[1] != "<") {
      throw ParseError(line.number, "expected a cover relation 'i < j'");
    }
    const auto i = parse_index(line.tokens[0], line.number);
    const auto j = parse_index(line.tokens[2], line.number);
    if (i == j) throw ParseError(line.number, "element below itself");
    covers.emplace_back(i, j);
    n = std::max(n, std::max(i, j) + 1);
  }
  if (n > 64) throw Error("posets are limited to 64 elements");
  try {
    return Poset(n, covers);
  } catch (const Error& e) {
    // A cycle is only visible once every relation is read.
    throw ParseError(lines.empty() ? 0 : lines.back().number, e.what());
  }
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

MonomialIdeal read_ideal_file(const std::string& path) {
  auto in = open_input(path);
  return parse_ideal(in);
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

Poset read_poset_file(const std::string& path) {
  auto in = open_input(path);
  return parse_poset(in);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& name : ideal.context().names()) out += " " + name;
  out += "\n";
  for (const auto& g : ideal.gens()) {
    std::string line;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!line.empty()) line += " ";
      line += ideal.context().name(i);
      if (g[i] > 1) line += "^" + std::to_string(g[i]);
    }
    out += (line.empty() ? "1" : line) + "\n";
  }
  return out;
}

}  // namespace vnum
