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

#ifndef VNUM_TESTS_HELPERS_HPP_
#define VNUM_TESTS_HELPERS_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "vnum/core.hpp"

namespace th {

// "x^2*y" or "1" over ctx.
inline vnum::Monomial mono(const vnum::VarContext& ctx, const std::string& text) {
  vnum::Exponents e(ctx.size(), 0);
  if (text == "1") return vnum::Monomial(ctx, e);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    const auto caret = factor.find('^');
    const auto label = factor.substr(0, caret);
    const auto idx = ctx.index_of(label);
    if (!idx) throw vnum::Error("unknown label " + label);
    e[*idx] += caret == std::string::npos ? 1 : std::stoul(factor.substr(caret + 1));
  }
  return vnum::Monomial(ctx, e);
}

inline vnum::MonomialIdeal ideal(const vnum::VarContext& ctx,
                                 const std::vector<std::string>& gens) {
  std::vector<vnum::Exponents> out;
  for (const auto& g : gens) out.push_back(mono(ctx, g).exponents());
  return vnum::MonomialIdeal(ctx, std::move(out));
}

inline vnum::MonomialPrime prime(const vnum::VarContext& ctx,
                                 const std::vector<std::string>& labels) {
  std::vector<std::size_t> support;
  for (const auto& l : labels) support.push_back(*ctx.index_of(l));
  return vnum::MonomialPrime(ctx, support);
}

inline vnum::VarContext xyz() { return vnum::VarContext({"x", "y", "z"}); }

// a..f with the ten generators of the 6-vertex example ideal.
inline vnum::MonomialIdeal terai() {
  const vnum::VarContext ctx({"a", "b", "c", "d", "e", "f"});
  return ideal(ctx, {"a*b*d", "a*b*f", "a*c*e", "a*c*d", "a*e*f", "b*d*e", "b*c*f", "b*c*e",
                     "c*d*f", "d*e*f"});
}

}  // namespace th

#endif  // VNUM_TESTS_HELPERS_HPP_
