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

#include "plp/sturm.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace plp {

namespace {

// Scaling by a positive constant keeps every sign variation intact and stops
// coefficient growth along the remainder sequence.
Poly normalize_magnitude(const Poly& p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / abs(p.leading());
  return p * inv;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  seq.push_back(normalize_magnitude(p));
  Poly d = normalize_magnitude(p.derivative());
  if (d.is_zero()) return seq;
  seq.push_back(std::move(d));
  while (true) {
    const Poly& a = seq[seq.size() - 2];
    const Poly& b = seq.back();
    Poly r = -divmod(a, b).remainder;
    if (r.is_zero()) break;
    seq.push_back(normalize_magnitude(r));
  }
  return seq;
}

int sign_variations(const std::vector<Poly>& seq, const Rat& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Sign variations at +infinity are read off the leading coefficients.
int sign_variations_at_infinity(const std::vector<Poly>& seq) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.leading());
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

Poly strip_zero_roots(const Poly& p) { return p.shift_down(p.valuation()); }

Poly squarefree_part(const Poly& p) {
  Poly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).quotient;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::domain_error("zero-polynomial has no root structure");
  if (!(a < b)) throw std::invalid_argument("sturm_count requires a < b");
  if (sgn(p(a)) == 0 || sgn(p(b)) == 0) {
    throw std::invalid_argument("sturm_count endpoints must not be roots");
  }
  const auto seq = sturm_sequence(p);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

int positive_root_count_upto(const Poly& p, const Rat& r) {
  if (p.is_zero()) throw std::domain_error("zero-polynomial has no root structure");
  if (sgn(r) <= 0) throw std::invalid_argument("positive_root_count_upto requires r > 0");
  Poly q = strip_zero_roots(p);
  if (q.degree() == 0) return 0;
  // On a squarefree polynomial V(a) - V(b) counts the roots in (a, b] even
  // when b itself is a root, so the right end needs no perturbation.
  const auto seq = sturm_sequence(squarefree_part(q));
  return sign_variations(seq, Rat(0)) - sign_variations(seq, r);
}

bool has_positive_root(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("zero-polynomial has no root structure");
  Poly q = strip_zero_roots(p);
  if (q.degree() == 0) return false;
  const auto seq = sturm_sequence(q);
  return sign_variations(seq, Rat(0)) - sign_variations_at_infinity(seq) > 0;
}

Rat cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("zero-polynomial has no root structure");
  Rat best(0);
  const Rat& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rat ratio = abs(p.coeff(k) / lead);
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

bool positive_near_zero(const Poly& p) { return !p.is_zero() && sgn(p.lowest()) > 0; }

RootBound smallest_positive_root_bound(std::span<const Poly> ps) {
  RootBound out;
  out.certifying_polys.assign(ps.begin(), ps.end());
  for (const auto& p : ps) {
    if (!positive_near_zero(p)) throw std::domain_error("not positive near zero");
  }

  std::optional<Rat> hi;
  for (const auto& p : ps) {
    if (!has_positive_root(p)) continue;
    Rat bound = cauchy_root_bound(p) + 1;
    if (!hi || bound < *hi) hi = bound;
  }
  if (!hi) {
    out.value = Rat(1);
    out.witness = RootWitness::kNoPositiveRoot;
    return out;
  }

  // Invariant: (0, lo] is root-free for every p, (0, hi] holds a root of some p.
  Rat lo(0);
  Rat upper = *hi;
  while (sgn(lo) == 0 || 2 * lo <= upper) {
    Rat mid = (lo + upper) / 2;
    bool root_found = std::any_of(ps.begin(), ps.end(), [&](const Poly& p) {
      return positive_root_count_upto(p, mid) > 0;
    });
    if (root_found) {
      upper = mid;
    } else {
      lo = mid;
    }
  }
  out.value = lo;
  out.witness = RootWitness::kIsolatedBelowRoot;
  return out;
}

bool root_bound_holds(const RootBound& bound) {
  if (sgn(bound.value) <= 0) return false;
  for (const auto& p : bound.certifying_polys) {
    if (!positive_near_zero(p)) return false;
    if (bound.witness == RootWitness::kNoPositiveRoot) {
      if (has_positive_root(p)) return false;
    } else if (positive_root_count_upto(p, bound.value) != 0) {
      return false;
    }
    if (sgn(p(bound.value)) <= 0 || sgn(p(bound.value / 2)) <= 0) return false;
  }
  return true;
}

}  // namespace plp
