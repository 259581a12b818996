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
#include <utility>
#include <vector>

#include "plp/rational.hpp"

namespace plp {

enum class Sense { kGE, kLE, kEQ };

using SparseTerms = std::vector<std::pair<std::size_t, Rat>>;

/// Sparse LP in the solver's native form: maximize objective . x over free
/// variables subject to rows. Sign constraints are ordinary rows.
struct LpProblem {
  struct Row {
    SparseTerms terms;
    Sense sense = Sense::kGE;
    Rat rhs;
  };

  std::size_t num_vars = 0;
  std::vector<Row> rows;
  SparseTerms objective;  // empty means pure feasibility
};

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

struct LpStats {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t pivots = 0;
  std::size_t degenerate_pivots = 0;
  std::size_t bland_pivots = 0;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rat> x;    // feasible point (optimal for kOptimal)
  Rat value;             // objective at x
  std::vector<Rat> ray;  // improving direction for kUnbounded
  LpStats stats;
};

/// Exact two-phase simplex. Free variables are eliminated by Gaussian pivots
/// before phase 1; pricing is Dantzig's rule, switching to Bland's rule after
/// a degenerate pivot until the objective strictly improves again. Identical
/// input always yields an identical solution.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace plp
