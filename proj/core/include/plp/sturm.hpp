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

#include <span>
#include <vector>

#include "plp/poly.hpp"

namespace plp {

/// Number of distinct real roots of p in the open interval (a, b).
///
/// Requires a < b and p(a), p(b) nonzero; throws std::invalid_argument
/// otherwise. Throws std::domain_error("zero-polynomial has no root
/// structure") for the zero polynomial.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

/// Distinct roots of p in (0, r] for r > 0. Roots at 0 itself are ignored.
int positive_root_count_upto(const Poly& p, const Rat& r);

/// Whether p has any root in (0, infinity).
bool has_positive_root(const Poly& p);

/// Cauchy bound: every complex root z of p has |z| < cauchy_root_bound(p).
Rat cauchy_root_bound(const Poly& p);

/// True when p is strictly positive on some interval (0, t): its
/// lowest-order nonzero coefficient is positive.
bool positive_near_zero(const Poly& p);

enum class RootWitness {
  kNoPositiveRoot,     // no certifying polynomial has a root in (0, inf)
  kIsolatedBelowRoot,  // no certifying polynomial has a root in (0, value]
};

struct RootBound {
  Rat value;
  RootWitness witness = RootWitness::kNoPositiveRoot;
  std::vector<Poly> certifying_polys;
};

/// Radius r such that every p in ps is strictly positive on (0, r].
///
/// When some p has a positive root, r is refined by exact bisection until
/// r > rho/2, rho being the smallest positive root across ps. When none has
/// a positive root the witness is kNoPositiveRoot and value is 1.
/// Zero polynomials are rejected as "not positive near zero".
RootBound smallest_positive_root_bound(std::span<const Poly> ps);

/// Independent re-check of a RootBound: Sturm counts on (0, value] (or on
/// (0, inf) for kNoPositiveRoot) plus positivity near 0.
bool root_bound_holds(const RootBound& bound);

}  // namespace plp
