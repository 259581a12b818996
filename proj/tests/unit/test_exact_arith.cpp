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

#include <algorithm>
#include <random>

#include "plp/poly.hpp"
#include "plp/ratfunc.hpp"
#include "plp/sturm.hpp"

namespace plp {
namespace {

Rat q(const char* s) { return parse_rat(s); }

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(format_rat(q("6/4")), "3/2");
  EXPECT_EQ(format_rat(q("-5")), "-5");
  EXPECT_EQ(format_rat(q("0/7")), "0");
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/-2"), std::invalid_argument);
}

TEST(Poly, Evaluation) {
  EXPECT_EQ(Poly({2, -3, 1})(Rat(1)), 0);
  EXPECT_EQ(Poly()(q("7/3")), 0);
  EXPECT_EQ(Poly({Rat(1), q("509/216")})(Rat(0)), 1);
}

TEST(Poly, ZeroDegreeIsSentinel) {
  EXPECT_EQ(Poly().degree(), kZeroPolyDegree);
  EXPECT_EQ(Poly({0, 0}).degree(), kZeroPolyDegree);
  EXPECT_EQ(Poly({5}).degree(), 0);
}

TEST(Poly, Arithmetic) {
  EXPECT_EQ(gcd(Poly({-1, 0, 1}), Poly({-1, 1})), Poly({-1, 1}));
  EXPECT_EQ(Poly({0, 1, 1}).negate_argument(), Poly({0, -1, 1}));
  EXPECT_EQ(Poly({0, 0, 3}).derivative(), Poly({0, 6}));
  EXPECT_EQ(Poly({1, 1}) * Poly({-1, 1}), Poly({-1, 0, 1}));
  EXPECT_EQ(Poly({1, 2}).scale_argument(Rat(3)), Poly({1, 6}));
  auto d = divmod(Poly({1, 0, 1}), Poly({1, 1}));
  EXPECT_EQ(d.quotient, Poly({-1, 1}));
  EXPECT_EQ(d.remainder, Poly({2}));
  EXPECT_THROW(divmod(Poly({1}), Poly()), std::domain_error);
}

TEST(RatFunc, CanonicalForm) {
  RatFunc a(Poly({0, 2}), Poly({0, 0, 4}));  // 2d / 4d^2 = 1/(2d)
  EXPECT_EQ(a.num(), Poly({q("1/2")}));
  EXPECT_EQ(a.den(), Poly({0, 1}));
  RatFunc b(Poly({0, 6}), Poly({0, 0, 12}));
  EXPECT_EQ(a, b);
  EXPECT_THROW(RatFunc(Poly({1}), Poly()), std::domain_error);
  EXPECT_THROW(a(Rat(0)), std::domain_error);
  EXPECT_EQ(a(Rat(2)), q("1/4"));
}

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(Poly({-2, 0, 1}), Rat(0), Rat(2)), 1);
  EXPECT_EQ(sturm_count(Poly({1, 0, 1}), Rat(-10), Rat(10)), 0);
  Poly cubic = Poly({0, 1}) * Poly({-1, 1}) * Poly({-2, 1});
  EXPECT_EQ(sturm_count(cubic, q("1/2"), q("5/2")), 2);
}

TEST(Sturm, Errors) {
  try {
    sturm_count(Poly(), Rat(0), Rat(1));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "zero-polynomial has no root structure");
  }
  EXPECT_THROW(sturm_count(Poly({1, 1}), Rat(1), Rat(0)), std::invalid_argument);
  EXPECT_THROW(sturm_count(Poly({-1, 1}), Rat(1), Rat(2)), std::invalid_argument);
}

TEST(Sturm, CountUptoIncludesRightEndpoint) {
  Poly p = Poly({-1, 1}) * Poly({-1, 1}) * Poly({-3, 1});
  EXPECT_EQ(positive_root_count_upto(p, Rat(1)), 1);
  EXPECT_EQ(positive_root_count_upto(p, q("1/2")), 0);
  EXPECT_EQ(positive_root_count_upto(p, Rat(3)), 2);
  EXPECT_EQ(positive_root_count_upto(Poly({0, 0, 1}), Rat(5)), 0);
}

TEST(RootBound, Examples) {
  std::vector<Poly> one{Poly({q("1/2"), -1})};
  auto r = smallest_positive_root_bound(one);
  EXPECT_EQ(r.witness, RootWitness::kIsolatedBelowRoot);
  EXPECT_GE(r.value, q("1/4"));
  EXPECT_LT(r.value, q("1/2"));
  EXPECT_TRUE(root_bound_holds(r));

  std::vector<Poly> none{Poly({1, 0, 1})};
  auto s = smallest_positive_root_bound(none);
  EXPECT_EQ(s.witness, RootWitness::kNoPositiveRoot);
  EXPECT_TRUE(root_bound_holds(s));

  std::vector<Poly> two{Poly({2, -1}), Poly({3, -1})};
  auto t = smallest_positive_root_bound(two);
  EXPECT_EQ(t.witness, RootWitness::kIsolatedBelowRoot);
  EXPECT_GT(t.value, Rat(1));
  EXPECT_LT(t.value, Rat(2));
}

TEST(RootBound, RejectsNonPositive) {
  std::vector<Poly> bad{Poly({-1, 1})};
  try {
    smallest_positive_root_bound(bad);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "not positive near zero");
  }
  std::vector<Poly> zero{Poly()};
  EXPECT_THROW(smallest_positive_root_bound(zero), std::domain_error);
}

TEST(RootBound, HighValuationPolynomial) {
  // d^3 (1 - 4d): positive on (0, 1/4), vanishing at 0.
  std::vector<Poly> ps{Poly({0, 0, 0, 1, -4})};
  auto r = smallest_positive_root_bound(ps);
  EXPECT_GT(r.value, q("1/8"));
  EXPECT_LT(r.value, q("1/4"));
  EXPECT_TRUE(root_bound_holds(r));
}

// Random products of distinct rational linear factors have known roots.
struct RootedPoly {
  Poly p;
  std::vector<Rat> roots;
};

RootedPoly random_rooted(std::mt19937& rng, int max_factors) {
  std::uniform_int_distribution<int> count(1, max_factors);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);
  RootedPoly out{Poly({1}), {}};
  int k = count(rng);
  while (static_cast<int>(out.roots.size()) < k) {
    Rat root = frac(num(rng), den(rng));
    if (std::find(out.roots.begin(), out.roots.end(), root) != out.roots.end()) continue;
    out.roots.push_back(root);
    out.p = out.p * Poly({-root, Rat(1)});
  }
  return out;
}

TEST(SturmProperty, MatchesFactorCount) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    auto rp = random_rooted(rng, 6);
    Rat a(static_cast<int>(rng() % 81) - 40, 3);
    Rat b = a + frac(static_cast<int>(rng() % 40) + 1, 3);
    a += frac(1, 1009);  // keeps endpoints off the factor roots
    b += frac(1, 1013);
    auto expected = std::count_if(rp.roots.begin(), rp.roots.end(),
                                  [&](const Rat& r) { return a < r && r < b; });
    EXPECT_EQ(sturm_count(rp.p, a, b), expected);
  }
}

TEST(RootBoundProperty, SoundAndWithinHalfOfSmallestRoot) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto rp = random_rooted(rng, 4);
    // Keep only polynomials positive just right of 0.
    Poly p = rp.p;
    if (std::any_of(rp.roots.begin(), rp.roots.end(), [](const Rat& r) { return sgn(r) == 0; })) {
      continue;
    }
    if (sgn(p.lowest()) < 0) p = -p;
    std::vector<Poly> ps{p};
    auto rb = smallest_positive_root_bound(ps);
    EXPECT_GT(sgn(p(rb.value)), 0);
    EXPECT_GT(sgn(p(rb.value / 2)), 0);
    EXPECT_TRUE(root_bound_holds(rb));
    std::optional<Rat> smallest;
    for (const auto& r : rp.roots) {
      if (sgn(r) > 0 && (!smallest || r < *smallest)) smallest = r;
    }
    if (smallest) {
      EXPECT_EQ(rb.witness, RootWitness::kIsolatedBelowRoot);
      EXPECT_GT(rb.value, *smallest / 2);
      EXPECT_LT(rb.value, *smallest);
    } else {
      EXPECT_EQ(rb.witness, RootWitness::kNoPositiveRoot);
    }
  }
}

TEST(PolyProperty, NegationIsInvolution) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> c(rng() % 6);
    for (auto& v : c) v = frac(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
    Poly p(c);
    EXPECT_EQ(p.negate_argument().negate_argument(), p);
    RatFunc f(p, Poly({1, 1}));
    EXPECT_EQ(f.negate_argument().negate_argument(), f);
  }
}

TEST(PolyProperty, RenormalizingIsIdentity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> n(rng() % 5 + 1), d(rng() % 4 + 1);
    for (auto& v : n) v = frac(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
    for (auto& v : d) v = frac(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
    if (Poly(d).is_zero()) continue;
    RatFunc f{Poly(n), Poly(d)};
    RatFunc g(f.num(), f.den());
    EXPECT_EQ(f, g);
    Rat k = frac(static_cast<int>(rng() % 9) + 1, 7);
    EXPECT_EQ(RatFunc(f.num() * k, f.den() * k), f);
  }
}

}  // namespace
}  // namespace plp
