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

#include "plp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <tuple>

namespace plp {

namespace {

struct Attempt {
  CoeffSpace space;
  std::optional<std::vector<Rat>> point;
};

Attempt attempt(const PlpInstance& inst, Side side, CoeffSpace space, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  EliminationStats stats;
  auto chains = build_coeff_chains(inst, space);
  Attempt out{space, subspace_elimination_plp(chains, space, &stats)};
  if (opts.observer) {
    std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    opts.observer({side, space.c, space.deg_p, space.deg_q1, out.point.has_value(), stats,
                   secs.count()});
  }
  return out;
}

std::vector<RatFunc> negate_all(std::span<const RatFunc> xs) {
  std::vector<RatFunc> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.negate_argument());
  return out;
}

SideCertificate certify(const PlpInstance& frame, Side side, const Attempt& found) {
  const CoeffSpace& space = found.space;
  PolySolution ps = decode_point(space, *found.point);
  std::vector<RatFunc> sol;
  for (auto& p : ps.p) sol.emplace_back(std::move(p), ps.q);

  SideCertificate cert;
  cert.side = side;
  cert.verdict = Verdict::kFeasible;
  cert.radius = smallest_positive_root_bound(certifying_polynomials(frame, sol));
  cert.solution = side == Side::kNegative ? negate_all(sol) : std::move(sol);
  cert.c_used = space.c;
  cert.deg_p_used = space.deg_p;
  cert.deg_q1_used = space.deg_q1;
  return cert;
}

}  // namespace

const char* to_string(Side side) { return side == Side::kPositive ? "positive" : "negative"; }

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kFeasible: return "feasible";
    case Verdict::kInfeasible: return "infeasible";
    case Verdict::kUnknownAtCap: return "unknown-at-cap";
  }
  return "?";
}

const char* to_string(Summary summary) {
  switch (summary) {
    case Summary::kLocallyFeasible: return "locally-feasible";
    case Summary::kLocallyInfeasible: return "locally-infeasible";
    case Summary::kMixed: return "mixed";
    case Summary::kUnknown: return "unknown";
  }
  return "?";
}

int degree_bound(const PlpInstance& inst) {
  return 2 * static_cast<int>(inst.n()) * inst.max_degree();
}

SideCertificate solve_side(const PlpInstance& inst, Side side, const SolveOptions& opts) {
  inst.validate();
  if (opts.degree_cap && *opts.degree_cap < 0) throw std::invalid_argument("degree cap must be >= 0");
  const PlpInstance frame = side == Side::kNegative ? inst.negate_argument() : inst;
  const int bound = degree_bound(frame);
  const int cap = opts.degree_cap ? std::min(*opts.degree_cap, bound) : bound;

  auto space_for = [&](int c, int dp, int dq) {
    return CoeffSpace{frame.n(), c, dp, dq};
  };

  // A candidate with smaller degrees is a subset of the one with the same c
  // and maximal degrees, so the maximal candidates decide feasibility.
  std::vector<int> live_c;
  for (int c = 0; c <= cap; ++c) {
    if (attempt(frame, side, space_for(c, cap, cap), opts).point) live_c.push_back(c);
  }
  if (live_c.empty()) {
    SideCertificate cert;
    cert.side = side;
    cert.verdict = cap >= bound ? Verdict::kInfeasible : Verdict::kUnknownAtCap;
    cert.degree_bound = bound;
    cert.searched_cap = cap;
    return cert;
  }

  // Deepen by total size, then lexicographically, for the smallest solution.
  std::vector<std::tuple<int, int, int, int>> order;
  for (int c : live_c) {
    for (int dp = 0; dp <= cap; ++dp) {
      for (int dq = 0; dq <= cap; ++dq) order.emplace_back(c + dp + dq, c, dp, dq);
    }
  }
  std::sort(order.begin(), order.end());
  for (const auto& [total, c, dp, dq] : order) {
    Attempt a = attempt(frame, side, space_for(c, dp, dq), opts);
    if (!a.point) continue;
    SideCertificate cert = certify(frame, side, a);
    cert.degree_bound = bound;
    cert.searched_cap = cap;
    return cert;
  }
  throw std::logic_error("maximal candidate feasible but no candidate succeeded");
}

LocalClassification classify_local(const PlpInstance& inst, const SolveOptions& opts) {
  LocalClassification out;
  out.negative = solve_side(inst, Side::kNegative, opts);
  out.origin = lp_feasible(inst.at(Rat(0)));
  out.positive = solve_side(inst, Side::kPositive, opts);

  const bool origin_ok = out.origin.status != LpStatus::kInfeasible;
  const Verdict n = out.negative.verdict;
  const Verdict p = out.positive.verdict;
  if (n == Verdict::kUnknownAtCap || p == Verdict::kUnknownAtCap) {
    out.summary = Summary::kUnknown;
  } else if (n == Verdict::kFeasible && p == Verdict::kFeasible && origin_ok) {
    out.summary = Summary::kLocallyFeasible;
  } else if (n == Verdict::kInfeasible && p == Verdict::kInfeasible && !origin_ok) {
    out.summary = Summary::kLocallyInfeasible;
  } else {
    out.summary = Summary::kMixed;
  }
  return out;
}

bool feasibility_at_point(const PlpInstance& inst, const Rat& delta) {
  return solve_lp(to_problem(inst.at(delta))).status != LpStatus::kInfeasible;
}

std::vector<Poly> certifying_polynomials(const PlpInstance& inst,
                                         std::span<const RatFunc> solution) {
  if (solution.size() != inst.n()) throw std::invalid_argument("solution length differs from n");
  Poly Q({1});
  for (const auto& x : solution) Q = lcm(Q, x.den());
  if (sgn(Q.lowest()) < 0) Q = -Q;
  std::vector<Poly> P;
  for (const auto& x : solution) P.push_back(x.num() * divmod(Q, x.den()).quotient);

  std::vector<Poly> out;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    Poly g = -(inst.b[i] * Q);
    for (std::size_t j = 0; j < inst.n(); ++j) g += inst.A.at(i, j) * P[j];
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  out.push_back(std::move(Q));
  return out;
}

CertificateCheck check_certificate(const PlpInstance& inst, const SideCertificate& cert) {
  auto fail = [](std::string reason) { return CertificateCheck{false, std::move(reason)}; };
  if (cert.verdict != Verdict::kFeasible) return fail("certificate does not claim feasibility");
  if (cert.solution.size() != inst.n()) return fail("solution length differs from instance");
  if (!cert.radius) return fail("certificate has no radius");
  const RootBound& rb = *cert.radius;
  if (sgn(rb.value) <= 0) return fail("radius is not positive");

  const bool neg = cert.side == Side::kNegative;
  const PlpInstance frame = neg ? inst.negate_argument() : inst;
  const std::vector<RatFunc> sol = neg ? negate_all(cert.solution) : cert.solution;
  std::vector<Poly> polys;
  try {
    polys = certifying_polynomials(frame, sol);
  } catch (const std::exception& e) {
    return fail(std::string("cannot rebuild certifying polynomials: ") + e.what());
  }

  const Rat half = rb.value / 2;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const Poly& p = polys[k];
    const std::string what = k + 1 == polys.size() ? "denominator" : "constraint polynomial";
    if (!positive_near_zero(p)) return fail(what + " is not positive near 0");
    if (rb.witness == RootWitness::kNoPositiveRoot) {
      if (has_positive_root(p)) return fail(what + " has a positive root");
    } else if (positive_root_count_upto(p, rb.value) != 0) {
      return fail(what + " has a root inside the radius");
    }
    if (sgn(p(half)) <= 0) return fail(what + " is not positive at radius/2");
  }
  if (!root_bound_holds(rb)) return fail("stored root bound fails its re-check");
  return {true, ""};
}

}  // namespace plp
