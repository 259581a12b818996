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

#include <cstddef>
#include <span>
#include <vector>

#include "plp/instance.hpp"
#include "plp/simplex.hpp"

namespace plp {

/// Unknown coefficients of a polynomial solution x = p / (d^c (1 + d q1)).
/// Index j*(deg_p+1)+k is the d^k coefficient of p_j; index
/// n_vars*(deg_p+1)+k is the d^k coefficient of q1.
struct CoeffSpace {
  std::size_t n_vars = 0;
  int c = 0;
  int deg_p = 0;
  int deg_q1 = 0;

  std::size_t total_dim() const {
    return n_vars * static_cast<std::size_t>(deg_p + 1) + static_cast<std::size_t>(deg_q1 + 1);
  }
  std::size_t p_index(std::size_t var, int power) const {
    return var * static_cast<std::size_t>(deg_p + 1) + static_cast<std::size_t>(power);
  }
  std::size_t q1_index(int power) const {
    return n_vars * static_cast<std::size_t>(deg_p + 1) + static_cast<std::size_t>(power);
  }
};

/// Affine functional terms . h + constant. Terms are sorted by index and
/// carry no zero coefficients.
struct LinearForm {
  SparseTerms terms;
  Rat constant;

  bool is_zero() const { return terms.empty() && sgn(constant) == 0; }
  bool is_constant() const { return terms.empty(); }
  Rat operator()(std::span<const Rat> h) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// forms[j] is the d^j coefficient of f_i; trailing identically-zero forms
/// are trimmed, so an identically zero f_i has no forms.
struct CoeffChain {
  std::size_t constraint_index = 0;
  std::vector<LinearForm> forms;

  bool identically_zero() const { return forms.empty(); }
};

/// f_i = A_i p - d^(c+1) q1 b_i - d^c b_i, expanded exactly in d.
std::vector<CoeffChain> build_coeff_chains(const PlpInstance& inst, const CoeffSpace& space);

/// p_j(d) and q(d) = d^c (1 + d q1(d)) read off a coefficient point.
struct PolySolution {
  std::vector<Poly> p;
  Poly q;
};
PolySolution decode_point(const CoeffSpace& space, std::span<const Rat> h);

}  // namespace plp
