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

#include <optional>
#include <vector>

#include "plp/instance.hpp"
#include "plp/ratfunc.hpp"
#include "plp/solver.hpp"

namespace plp {

/// maximize c . x subject to A x <= b, x >= 0, all in delta.
struct ParamLp {
  std::vector<Poly> c;
  PolyMatrix A;
  std::vector<Poly> b;

  void validate() const;
  /// The primal system {A x <= b, x >= 0} in A x >= b form.
  PlpInstance primal() const;
  /// {A^T y >= c, y >= 0}.
  PlpInstance dual() const;
  /// Primal and dual over (x, y) together with c . x >= b . y.
  PlpInstance combined() const;
  /// Evaluated LP plus objective, for point audits.
  LinProgram at(const Rat& delta) const;
  std::vector<Rat> objective_at(const Rat& delta) const;
};

enum class OptStatus { kLocallyInfeasible, kLocallyUnbounded, kLocallyOptimal, kUnknownAtCap };
const char* to_string(OptStatus status);

struct OptOutcome {
  OptStatus status = OptStatus::kUnknownAtCap;
  std::optional<std::vector<RatFunc>> x;
  /// Dual block of the combined solution.
  std::optional<std::vector<RatFunc>> y;
  std::optional<RatFunc> value;
  std::optional<RootBound> radius;
  /// The sub-solves actually run, in order.
  std::vector<SideCertificate> stages;
};

OptOutcome solve_local_opt(const ParamLp& lp, const SolveOptions& opts = {});

}  // namespace plp
