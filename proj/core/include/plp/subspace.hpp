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
#include <optional>
#include <span>
#include <vector>

#include "plp/coeff_chain.hpp"

namespace plp {

/// {h : every equality form is 0, strict form < 0}.
struct HalfAffineSubspace {
  std::vector<LinearForm> equalities;
  LinearForm strict;

  /// Whether the set has at least one point (decided by LP).
  bool is_nonempty(std::size_t ambient_dim) const;
};

struct EliminationStats {
  std::size_t lp_calls = 0;
  std::size_t promotions = 0;
  std::size_t rounds = 0;
  LpStats lp;
};

/// Whether R^N minus the union of spaces is nonempty.
bool subspace_elimination_generic(std::span<const HalfAffineSubspace> spaces,
                                  std::size_t ambient_dim, EliminationStats* stats = nullptr);

/// Point h where, for every chain, the first coefficient not identically zero
/// is strictly positive (or every coefficient vanishes). nullopt when none
/// exists in this coefficient space.
std::optional<std::vector<Rat>> subspace_elimination_plp(std::span<const CoeffChain> chains,
                                                         const CoeffSpace& space,
                                                         EliminationStats* stats = nullptr);

/// The half affine subspaces B_{i,j} = {[f_i]_0 = ... = [f_i]_{j-1} = 0,
/// [f_i]_j < 0} whose union is the infeasible part of the coefficient space.
std::vector<HalfAffineSubspace> chain_subspaces(std::span<const CoeffChain> chains);

}  // namespace plp
