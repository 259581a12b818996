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
#include <span>
#include <string_view>
#include <vector>

#include "plp/pattern.hpp"
#include "plp/ratfunc.hpp"
#include "plp/solver.hpp"
#include "plp/transition.hpp"

namespace plp {

enum class AutomatonKind { kPca, kBroadcast };

/// Cap on c, deg p and deg q1 used by the searches below when the options
/// leave it unset. The complete bound for these instances runs to hundreds.
inline constexpr int kDefaultAutomataDegreeCap = 1;
const char* to_string(AutomatonKind kind);

/// w = sum_s (coeffs[s] / shared_den) {s} over patterns s of one length.
struct Potential {
  int length = 1;
  std::vector<Poly> coeffs;
  Poly shared_den = Poly({1});

  static Potential zero(int length);
  /// Throws std::invalid_argument on a size mismatch and std::domain_error
  /// when shared_den is not positive just right of 0.
  void validate() const;
  RatFunc value(std::size_t index) const { return RatFunc(coeffs[index], shared_den); }
  /// Evaluates every coefficient at a point.
  std::vector<Rat> at(const Rat& delta) const;

  friend bool operator==(const Potential&, const Potential&) = default;
};

/// M applied to the coefficient vector; the result has length `length`.
Potential apply(const PolyMatrix& M, const Potential& w, int length);

/// The same potential rewritten over longer patterns.
Potential extend(const Potential& w, int length);

/// sum_s c_s * (cyclic occurrences of s in y).
RatFunc cycle_value(const Potential& w, std::string_view y);

/// Variables (w, z) and, for each edge e of length ell+1,
/// z_prefix(e) - z_suffix(e) <= [P(w) - C w - P({?s0})]_e.
PlpInstance assemble_pca_plp(const TransitionTable& table, int ell, const Pattern& s0);

/// Variables (w, z, z'): the blocks P(w) - C w with z and P(w) - P({?}) with
/// z', plus w_s = 0 for every ?-free s as two opposite inequalities.
PlpInstance assemble_broadcast_plp(const TransitionTable& table, int ell);

PlpInstance assemble(AutomatonKind kind, const TransitionTable& table, int ell,
                     const std::optional<Pattern>& s0);

/// Edge weights of each cycle block once w is fixed: one block for a PCA,
/// two for broadcasting.
std::vector<std::vector<RatFunc>> potential_edge_weights(AutomatonKind kind,
                                                         const TransitionTable& table,
                                                         const std::optional<Pattern>& s0,
                                                         const Potential& w);

/// The assembled instance with w substituted and the shared denominator
/// cleared; only the z blocks remain as unknowns.
PlpInstance reduce_with_potential(AutomatonKind kind, const TransitionTable& table,
                                  const std::optional<Pattern>& s0, const Potential& w);

SideCertificate verify_potential(AutomatonKind kind, const TransitionTable& table,
                                 const std::optional<Pattern>& s0, const Potential& w,
                                 const SolveOptions& opts = {});

/// Turns the w block of a solution into a potential over a common
/// denominator.
Potential decode_potential(std::span<const RatFunc> solution, int ell);

struct PotentialCandidate {
  int ell = 0;
  std::optional<Pattern> s0;
  Verdict verdict = Verdict::kInfeasible;
};

struct PotentialSearch {
  bool found = false;
  int ell = 0;
  std::optional<Pattern> s0;
  PlpInstance instance;
  SideCertificate certificate;
  Potential potential;
  std::vector<PotentialCandidate> tried;
};

/// 0/1 patterns of length 1..ell ordered by length, then index.
std::vector<Pattern> default_s0_candidates(int ell);

/// Tries ells in order and, for a PCA, each s0 in order (all defaults when
/// s0s is empty); stops at the first positive-side Feasible verdict.
PotentialSearch find_potential(AutomatonKind kind, const TransitionTable& table,
                               std::span<const int> ells, std::span<const Pattern> s0s,
                               const SolveOptions& opts = {});

}  // namespace plp
