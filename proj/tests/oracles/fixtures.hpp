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

#pragma once

#include <random>
#include <vector>

#include "plp/instance.hpp"

namespace plp::fixtures {

inline PlpInstance make_instance(const std::vector<std::vector<Poly>>& rows,
                                 const std::vector<Poly>& rhs) {
  PlpInstance inst{PolyMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()), rhs};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) inst.A.at(i, j) = rows[i][j];
  }
  return inst;
}

/// Toy two-variable system with eps = 1/10 over (x, y):
/// y - x >= 0, y + x >= 0, y <= 1 - eps, y <= d^2 - eps d, y >= d - 1.
inline PlpInstance toy_instance() {
  const Rat eps(1, 10);
  return make_instance({{Poly({-1}), Poly({1})},
                        {Poly({1}), Poly({1})},
                        {Poly(), Poly({-1})},
                        {Poly(), Poly({-1})},
                        {Poly(), Poly({1})}},
                       {Poly(), Poly(), Poly({eps - 1}), Poly({0, eps, -1}), Poly({-1, 1})});
}

/// Random instance with n, m, degree and integer coefficients drawn uniformly
/// from the given ranges.
inline PlpInstance random_instance(std::mt19937& rng, int max_n, int max_m, int max_deg,
                                   int max_abs) {
  std::uniform_int_distribution<int> nd(1, max_n), md(1, max_m), dd(0, max_deg),
      cd(-max_abs, max_abs);
  auto poly = [&] {
    std::vector<Rat> c(static_cast<std::size_t>(dd(rng) + 1));
    for (auto& v : c) v = cd(rng);
    return Poly(std::move(c));
  };
  const int n = nd(rng);
  const int m = md(rng);
  PlpInstance inst{PolyMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n)), {}};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) inst.A.at(i, j) = poly();
    inst.b.push_back(poly());
  }
  return inst;
}

}  // namespace plp::fixtures
