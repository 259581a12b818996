// Copyright 2026 The plp Authors
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

#include "plp/coeff_chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plp {

Rat LinearForm::operator()(std::span<const Rat> h) const {
  Rat v = constant;
  for (const auto& [j, a] : terms) v += a * h[j];
  return v;
}

std::vector<CoeffChain> build_coeff_chains(const PlpInstance& inst, const CoeffSpace& space) {
  inst.validate();
  if (space.c < 0 || space.deg_p < 0 || space.deg_q1 < 0) {
    throw std::invalid_argument("coefficient space caps must be nonnegative");
  }
  if (space.n_vars != inst.n()) throw std::invalid_argument("coefficient space width differs from n");

  std::vector<CoeffChain> chains;
  chains.reserve(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    // Accumulate per power of d: index -> coefficient, plus constants.
    std::map<int, std::map<std::size_t, Rat>> lin;
    std::map<int, Rat> cst;
    for (std::size_t j = 0; j < inst.n(); ++j) {
      const auto& a = inst.A.at(i, j).coeffs();
      for (std::size_t t = 0; t < a.size(); ++t) {
        if (sgn(a[t]) == 0) continue;
        for (int k = 0; k <= space.deg_p; ++k) {
          lin[static_cast<int>(t) + k][space.p_index(j, k)] += a[t];
        }
      }
    }
    const auto& b = inst.b[i].coeffs();
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (sgn(b[t]) == 0) continue;
      cst[static_cast<int>(t) + space.c] -= b[t];
      for (int k = 0; k <= space.deg_q1; ++k) {
        lin[static_cast<int>(t) + space.c + 1 + k][space.q1_index(k)] -= b[t];
      }
    }

    int top = -1;
    for (const auto& [power, row] : lin) {
      for (const auto& [idx, a] : row) {
        if (sgn(a) != 0) top = std::max(top, power);
      }
    }
    for (const auto& [power, v] : cst) {
      if (sgn(v) != 0) top = std::max(top, power);
    }

    CoeffChain chain;
    chain.constraint_index = i;
    chain.forms.resize(static_cast<std::size_t>(top + 1));
    for (const auto& [power, row] : lin) {
      if (power > top) continue;
      auto& form = chain.forms[static_cast<std::size_t>(power)];
      for (const auto& [idx, a] : row) {
        if (sgn(a) != 0) form.terms.emplace_back(idx, a);
      }
    }
    for (const auto& [power, v] : cst) {
      if (power <= top) chain.forms[static_cast<std::size_t>(power)].constant = v;
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

PolySolution decode_point(const CoeffSpace& space, std::span<const Rat> h) {
  if (h.size() != space.total_dim()) throw std::invalid_argument("point length differs from space");
  PolySolution out;
  for (std::size_t j = 0; j < space.n_vars; ++j) {
    std::vector<Rat> c(static_cast<std::size_t>(space.deg_p + 1));
    for (int k = 0; k <= space.deg_p; ++k) c[static_cast<std::size_t>(k)] = h[space.p_index(j, k)];
    out.p.emplace_back(std::move(c));
  }
  std::vector<Rat> q1(static_cast<std::size_t>(space.deg_q1 + 1));
  for (int k = 0; k <= space.deg_q1; ++k) q1[static_cast<std::size_t>(k)] = h[space.q1_index(k)];
  out.q = (Poly({1}) + Poly(std::move(q1)).shift_up(1)).shift_up(space.c);
  return out;
}

}  // namespace plp
