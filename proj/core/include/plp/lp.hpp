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
#include <stdexcept>
#include <vector>

#include "plp/rational.hpp"
#include "plp/simplex.hpp"

namespace plp {

struct LinConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
  Sense sense = Sense::kGE;

  /// coeffs . x - rhs.
  Rat slack(std::span<const Rat> x) const;
  bool holds(std::span<const Rat> x) const;
};

struct LinProgram {
  std::size_t dim = 0;
  std::vector<LinConstraint> constraints;

  /// Throws std::invalid_argument when some constraint has the wrong length.
  void validate() const;
};

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<std::vector<Rat>> witness;
  std::optional<Rat> value;
  /// Improving direction when Unbounded.
  std::vector<Rat> ray;
  /// Multipliers y proving infeasibility when requested: y >= 0 on GE rows,
  /// y <= 0 on LE rows, free on EQ rows, y^T A = 0 and y^T b = 1.
  std::optional<std::vector<Rat>> farkas;
  LpStats stats;
};

enum class Direction { kMax, kMin };

/// Feasibility only. An Infeasible outcome carries a Farkas certificate.
LpOutcome lp_feasible(const LinProgram& prog);

LpOutcome lp_optimize(const LinProgram& prog, std::span<const Rat> objective, Direction dir);

/// Exact re-check of a Farkas certificate against prog.
bool check_farkas(const LinProgram& prog, std::span<const Rat> y);

/// True iff functional . x == offset for every feasible x.
/// Throws std::domain_error("forced-zero undefined on empty set") when prog is
/// infeasible.
bool is_forced_zero(const LinProgram& prog, std::span<const Rat> functional, const Rat& offset);

/// For each listed GE constraint of prog, whether it holds with equality on
/// all of prog's feasible set. Same error as is_forced_zero.
std::vector<bool> forced_inequalities(const LinProgram& prog,
                                      std::span<const std::size_t> candidates);

class ForcedInequalityError : public std::logic_error {
 public:
  ForcedInequalityError() : std::logic_error("caller must promote to equality") {}
};

/// Point satisfying every equality exactly and every inequality strictly.
/// Returns nullopt when the set is empty; throws ForcedInequalityError when
/// some inequality cannot be strict. Inequalities may be GE or LE.
std::optional<std::vector<Rat>> relative_interior_point(
    std::span<const LinConstraint> equalities, std::span<const LinConstraint> inequalities);

/// Sparse conversion used by every entry point above.
LpProblem to_problem(const LinProgram& prog);

/// Sparse forms of the two relative-interior primitives. ge_rows index GE
/// rows of lp; nullopt means lp is infeasible.
std::optional<std::vector<bool>> forced_rows(const LpProblem& lp,
                                             std::span<const std::size_t> ge_rows,
                                             LpStats* stats = nullptr);

/// Point of lp with every listed GE row strict. nullopt when lp is
/// infeasible; throws ForcedInequalityError when no such point exists.
std::optional<std::vector<Rat>> strict_point(const LpProblem& lp,
                                             std::span<const std::size_t> ge_rows,
                                             LpStats* stats = nullptr);

}  // namespace plp
