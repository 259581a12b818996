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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "plp/solver.hpp"

namespace plp {
namespace {

using fixtures::make_instance;

LinearForm form(SparseTerms terms, Rat constant) { return {std::move(terms), std::move(constant)}; }

TEST(CoeffChains, ShiftedSingleVariable) {
  auto inst = make_instance({{Poly({0, 1})}}, {Poly({1})});
  CoeffSpace space{1, 1, 0, 0};
  auto chains = build_coeff_chains(inst, space);
  ASSERT_EQ(chains.size(), 1u);
  ASSERT_EQ(chains[0].forms.size(), 3u);
  EXPECT_TRUE(chains[0].forms[0].is_zero());
  EXPECT_EQ(chains[0].forms[1], form({{0, Rat(1)}}, Rat(-1)));
  EXPECT_EQ(chains[0].forms[2], form({{1, Rat(-1)}}, Rat(0)));
}

TEST(CoeffChains, RhsWithoutConstantTerm) {
  auto inst = make_instance({{Poly({1})}}, {Poly({0, 1})});
  CoeffSpace space{1, 0, 1, 0};
  auto chains = build_coeff_chains(inst, space);
  ASSERT_EQ(chains[0].forms.size(), 3u);
  EXPECT_EQ(chains[0].forms[0], form({{0, Rat(1)}}, Rat(0)));
  EXPECT_EQ(chains[0].forms[1], form({{1, Rat(1)}}, Rat(-1)));
  EXPECT_EQ(chains[0].forms[2], form({{2, Rat(-1)}}, Rat(0)));
}

TEST(CoeffChains, ZeroInstance) {
  auto inst = make_instance({{Poly(), Poly()}, {Poly(), Poly()}}, {Poly(), Poly()});
  auto chains = build_coeff_chains(inst, CoeffSpace{2, 1, 1, 1});
  for (const auto& ch : chains) EXPECT_TRUE(ch.identically_zero());
}

TEST(CoeffChainsProperty, ReproduceSymbolicExpansion) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> cap(0, 2), val(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = fixtures::random_instance(rng, 3, 4, 2, 2);
    CoeffSpace space{inst.n(), cap(rng), cap(rng), cap(rng)};
    std::vector<Rat> h(space.total_dim());
    for (auto& v : h) v = Rat(val(rng), 3);
    for (auto& v : h) v.canonicalize();
    auto sol = decode_point(space, h);
    Poly q1;
    {
      std::vector<Rat> c;
      for (int k = 0; k <= space.deg_q1; ++k) c.push_back(h[space.q1_index(k)]);
      q1 = Poly(c);
    }
    auto chains = build_coeff_chains(inst, space);
    for (std::size_t i = 0; i < inst.m(); ++i) {
      Poly f = -(q1 * inst.b[i]).shift_up(space.c + 1) - inst.b[i].shift_up(space.c);
      for (std::size_t j = 0; j < inst.n(); ++j) f += inst.A.at(i, j) * sol.p[j];
      std::vector<Rat> coeffs;
      for (const auto& fm : chains[i].forms) coeffs.push_back(fm(h));
      EXPECT_EQ(Poly(coeffs), f);
      EXPECT_EQ(static_cast<int>(chains[i].forms.size()) - 1 >= f.degree(), true);
    }
    // q = d^c (1 + d q1)
    EXPECT_EQ(sol.q, (Poly({1}) + q1.shift_up(1)).shift_up(space.c));
  }
}

TEST(SubspaceElimination, GenericExamples) {
  EXPECT_TRUE(subspace_elimination_generic({}, 2));
  std::vector<HalfAffineSubspace> cover{{{}, form({{0, Rat(1)}}, Rat(-1))},
                                        {{}, form({{0, Rat(-1)}}, Rat(0))}};
  EXPECT_FALSE(subspace_elimination_generic(cover, 1));
  std::vector<HalfAffineSubspace> half{{{}, form({{0, Rat(1)}}, Rat(0))}};
  EXPECT_TRUE(subspace_elimination_generic(half, 2));
}

TEST(SubspaceElimination, ChainExamples) {
  CoeffSpace one{1, 0, 0, 0};  // total_dim 2: h at 0, g at 1
  std::vector<CoeffChain> a{{0, {form({{0, Rat(1)}}, Rat(-1))}}};
  auto pa = subspace_elimination_plp(a, one);
  ASSERT_TRUE(pa.has_value());
  EXPECT_GT((*pa)[0], 1);

  std::vector<CoeffChain> b{{0, {form({}, Rat(0)), form({{0, Rat(1)}}, Rat(0))}}};
  auto pb = subspace_elimination_plp(b, one);
  ASSERT_TRUE(pb.has_value());
  EXPECT_GT((*pb)[0], 0);

  std::vector<CoeffChain> c{{0, {form({{0, Rat(1)}}, Rat(0)), form({}, Rat(-1))}},
                            {1, {form({{0, Rat(-1)}}, Rat(0))}}};
  EXPECT_FALSE(subspace_elimination_plp(c, one).has_value());
}

// The first coefficient not vanishing at h must be positive.
bool chains_hold(std::span<const CoeffChain> chains, std::span<const Rat> h) {
  for (const auto& ch : chains) {
    for (const auto& f : ch.forms) {
      int s = sgn(f(h));
      if (s < 0) return false;
      if (s > 0) break;
    }
  }
  return true;
}

TEST(SubspaceEliminationProperty, PlpVariantMatchesGeneric) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-1, 1), len(1, 3), nch(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    CoeffSpace space{1, 0, 0, 0};  // two unknowns
    std::vector<CoeffChain> chains;
    int k = nch(rng);
    for (int i = 0; i < k; ++i) {
      CoeffChain ch{static_cast<std::size_t>(i), {}};
      int l = len(rng);
      for (int j = 0; j < l; ++j) {
        LinearForm f;
        for (std::size_t v = 0; v < 2; ++v) {
          int a = coef(rng);
          if (a != 0) f.terms.emplace_back(v, Rat(a));
        }
        f.constant = coef(rng);
        ch.forms.push_back(std::move(f));
      }
      while (!ch.forms.empty() && ch.forms.back().is_zero()) ch.forms.pop_back();
      chains.push_back(std::move(ch));
    }
    auto point = subspace_elimination_plp(chains, space);
    auto spaces = chain_subspaces(chains);
    EXPECT_EQ(point.has_value(), subspace_elimination_generic(spaces, 2)) << "trial " << trial;
    if (point) EXPECT_TRUE(chains_hold(chains, *point));
  }
}

TEST(SolveSide, ReciprocalSolution) {
  auto inst = make_instance({{Poly({0, 1})}}, {Poly({1})});
  auto cert = solve_side(inst, Side::kPositive);
  ASSERT_EQ(cert.verdict, Verdict::kFeasible);
  EXPECT_TRUE(check_certificate(inst, cert));
  EXPECT_EQ(cert.radius->witness, RootWitness::kNoPositiveRoot);
  EXPECT_EQ(cert.c_used, 1);
  for (Rat d : {Rat(1, 2), Rat(1, 1000), Rat(7)}) {
    EXPECT_GE(d * cert.solution[0](d), 1);
  }
}

TEST(SolveSide, SqueezedBetweenDeltaAndZero) {
  auto inst = make_instance({{Poly({1})}, {Poly({-1})}}, {Poly({0, 1}), Poly()});
  EXPECT_EQ(solve_side(inst, Side::kPositive).verdict, Verdict::kInfeasible);
  EXPECT_EQ(solve_side(inst, Side::kNegative).verdict, Verdict::kFeasible);
}

TEST(SolveSide, QuadraticCoefficient) {
  auto inst = make_instance({{Poly({0, 0, 1})}}, {Poly({0, 1})});
  auto cert = solve_side(inst, Side::kPositive);
  ASSERT_EQ(cert.verdict, Verdict::kFeasible);
  EXPECT_TRUE(check_certificate(inst, cert));
  Rat d(1, 3);
  EXPECT_GE(d * d * cert.solution[0](d), d);
}

TEST(SolveSide, CapBelowBoundGivesUnknown) {
  // x >= 1/d needs c = 1; with cap 0 the search cannot decide.
  auto inst = make_instance({{Poly({0, 1})}}, {Poly({1})});
  SolveOptions opts;
  opts.degree_cap = 0;
  EXPECT_EQ(solve_side(inst, Side::kPositive, opts).verdict, Verdict::kUnknownAtCap);
}

TEST(SolveSide, ObserverSeesEveryCandidate) {
  auto inst = make_instance({{Poly({0, 1})}}, {Poly({1})});
  int seen = 0;
  SolveOptions opts;
  int feasible = 0;
  opts.observer = [&](const CandidateEvent& e) {
    ++seen;
    feasible += e.feasible ? 1 : 0;
  };
  solve_side(inst, Side::kPositive, opts);
  EXPECT_GE(seen, 3);
  EXPECT_GE(feasible, 2);  // maximal candidate for c = 1, then the smallest
}

TEST(ClassifyLocal, ToyExample) {
  auto inst = fixtures::toy_instance();
  auto cls = classify_local(inst);
  EXPECT_EQ(cls.negative.verdict, Verdict::kFeasible);
  EXPECT_EQ(cls.positive.verdict, Verdict::kInfeasible);
  ASSERT_EQ(cls.origin.status, LpStatus::kOptimal);
  EXPECT_EQ(*cls.origin.witness, (std::vector<Rat>{0, 0}));
  EXPECT_EQ(cls.summary, Summary::kMixed);
  EXPECT_TRUE(check_certificate(inst, cls.negative));
}

TEST(ClassifyLocal, EverywhereAndNowhere) {
  auto easy = make_instance({{Poly({1})}}, {Poly({0, 0, 1})});
  EXPECT_EQ(classify_local(easy).summary, Summary::kLocallyFeasible);
  auto hopeless = make_instance({{Poly()}}, {Poly({1})});
  EXPECT_EQ(classify_local(hopeless).summary, Summary::kLocallyInfeasible);
}

TEST(FeasibilityAtPoint, ToyExample) {
  auto inst = fixtures::toy_instance();
  EXPECT_TRUE(feasibility_at_point(inst, Rat(1, 2)));
  EXPECT_FALSE(feasibility_at_point(inst, Rat(1, 20)));
  EXPECT_TRUE(feasibility_at_point(inst, Rat(0)));
}

TEST(CheckCertificate, RejectsOverextendedRadius) {
  // 1 <= x <= 2 - d with x = 3/2 holds until d = 1/2.
  auto inst = make_instance({{Poly({1})}, {Poly({-1})}}, {Poly({1}), Poly({-2, 1})});
  SideCertificate cert;
  cert.verdict = Verdict::kFeasible;
  cert.solution = {RatFunc(Poly({Rat(3, 2)}))};
  cert.radius = smallest_positive_root_bound(certifying_polynomials(inst, cert.solution));
  EXPECT_TRUE(check_certificate(inst, cert));
  cert.radius->value *= 2;
  auto res = check_certificate(inst, cert);
  EXPECT_FALSE(res);
  EXPECT_FALSE(res.reason.empty());
}

TEST(CheckCertificate, RejectsWrongSign) {
  auto inst = make_instance({{Poly({0, 1})}}, {Poly({1})});
  SideCertificate cert;
  cert.verdict = Verdict::kFeasible;
  cert.solution = {RatFunc(Poly({1}), Poly({0, -1}))};
  cert.radius = RootBound{Rat(1), RootWitness::kNoPositiveRoot, {Poly({0, 1})}};
  EXPECT_FALSE(check_certificate(inst, cert));
  cert.verdict = Verdict::kInfeasible;
  EXPECT_FALSE(check_certificate(inst, cert));
}

TEST(SolverProperty, SideSymmetry) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto inst = fixtures::random_instance(rng, 2, 3, 2, 2);
    auto neg = solve_side(inst, Side::kNegative);
    auto pos = solve_side(inst.negate_argument(), Side::kPositive);
    ASSERT_EQ(neg.verdict, pos.verdict);
    if (neg.verdict != Verdict::kFeasible) continue;
    for (std::size_t j = 0; j < inst.n(); ++j) {
      EXPECT_EQ(neg.solution[j], pos.solution[j].negate_argument());
    }
    EXPECT_TRUE(check_certificate(inst, neg));
  }
}

TEST(SolverProperty, Reparametrization) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = fixtures::random_instance(rng, 2, 3, 2, 2);
    EXPECT_EQ(classify_local(inst).summary,
              classify_local(inst.scale_argument(Rat(1, 2))).summary);
  }
}

TEST(SolverProperty, AgreesWithPointOracle) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = fixtures::random_instance(rng, 3, 4, 2, 2);
    auto cert = solve_side(inst, Side::kPositive);
    ASSERT_NE(cert.verdict, Verdict::kUnknownAtCap);
    if (cert.verdict == Verdict::kFeasible) {
      ASSERT_TRUE(check_certificate(inst, cert)) << check_certificate(inst, cert).reason;
      for (int k : {2, 4, 8}) {
        Rat d = cert.radius->value / k;
        std::vector<Rat> x;
        for (const auto& f : cert.solution) x.push_back(f(d));
        for (const auto& con : inst.at(d).constraints) EXPECT_TRUE(con.holds(x));
      }
    } else {
      for (unsigned e : {3u, 6u, 9u}) EXPECT_FALSE(feasibility_at_point(inst, pow10_neg(e)));
    }
  }
}

}  // namespace
}  // namespace plp
