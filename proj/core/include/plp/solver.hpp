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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plp/instance.hpp"
#include "plp/ratfunc.hpp"
#include "plp/sturm.hpp"
#include "plp/subspace.hpp"

namespace plp {

enum class Side { kPositive, kNegative };
enum class Verdict { kFeasible, kInfeasible, kUnknownAtCap };

const char* to_string(Side side);
const char* to_string(Verdict verdict);

struct SideCertificate {
  Side side = Side::kPositive;
  Verdict verdict = Verdict::kInfeasible;
  /// x(delta) in the caller's parameter, one entry per variable.
  std::vector<RatFunc> solution;
  /// Radius r with certifying polynomials positive on (0, r]. For the
  /// negative side they are expressed in -delta, so the solution holds on
  /// [-r, 0).
  std::optional<RootBound> radius;
  std::optional<int> c_used;
  std::optional<int> deg_p_used;
  std::optional<int> deg_q1_used;
  /// Degree bound 2nD under which the search is complete.
  int degree_bound = 0;
  /// Cap actually searched; below degree_bound only for kUnknownAtCap.
  int searched_cap = 0;
};

struct CandidateEvent {
  Side side;
  int c;
  int deg_p;
  int deg_q1;
  bool feasible;
  EliminationStats stats;
  double seconds;
};

struct SolveOptions {
  /// Upper limit on c, deg p and deg q1; the search is only complete when
  /// this reaches the degree bound.
  std::optional<int> degree_cap;
  std::function<void(const CandidateEvent&)> observer;
};

/// 2 n D, with D the largest degree in A and b.
int degree_bound(const PlpInstance& inst);

SideCertificate solve_side(const PlpInstance& inst, Side side, const SolveOptions& opts = {});

enum class Summary { kLocallyFeasible, kLocallyInfeasible, kMixed, kUnknown };
const char* to_string(Summary summary);

struct LocalClassification {
  SideCertificate negative;
  LpOutcome origin;
  SideCertificate positive;
  Summary summary = Summary::kMixed;
};

LocalClassification classify_local(const PlpInstance& inst, const SolveOptions& opts = {});

/// Exact LP feasibility of the instance at a fixed delta.
bool feasibility_at_point(const PlpInstance& inst, const Rat& delta);

/// Nonzero A_i P - b_i Q for every constraint, followed by Q, where Q is the
/// least common denominator of solution (positive near 0) and P = x Q.
std::vector<Poly> certifying_polynomials(const PlpInstance& inst,
                                         std::span<const RatFunc> solution);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Independent audit of a Feasible certificate.
CertificateCheck check_certificate(const PlpInstance& inst, const SideCertificate& cert);

}  // namespace plp
