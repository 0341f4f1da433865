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

// Text formats.
//
//   ideal:  "vars: a b c" on the first content line, then one generator per
//           line as whitespace- or '*'-separated factors "label" or
//           "label^e"; a line "1" is the unit monomial.
//   graph:  optional "vertices: N", then edges "i j" (1-based).
//   poset:  optional "elements: N", then cover relations "i < j" (1-based).
//
// '#' starts a comment. Blank lines are ignored.

#ifndef VNUM_IO_HPP_
#define VNUM_IO_HPP_

#include <istream>
#include <string>

#include "vnum/core.hpp"
#include "vnum/graph.hpp"
#include "vnum/hibi.hpp"

namespace vnum {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

MonomialIdeal parse_ideal(std::istream& in);
Graph parse_graph(std::istream& in);
Poset parse_poset(std::istream& in);

MonomialIdeal parse_ideal(const std::string& text);
Graph parse_graph(const std::string& text);
Poset parse_poset(const std::string& text);

// Throw Error when the file cannot be opened; ParseError on bad content.
MonomialIdeal read_ideal_file(const std::string& path);
Graph read_graph_file(const std::string& path);
Poset read_poset_file(const std::string& path);

// Inverse of parse_ideal.
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace vnum

#endif  // VNUM_IO_HPP_
