// Copyright 2026 The rootcover Authors.
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

#include "oracles.hpp"
#include "rootcover/errors.hpp"
#include "rootcover/factor.hpp"
#include "rootcover/intpoly.hpp"
#include "rootcover/modpoly.hpp"

namespace rootcover {
namespace {

const IntPoly kCubeRootTwo{-2, 0, 0, 1};  // x^3 - 2
const IntPoly kPhi3{1, 1, 1};             // x^2 + x + 1

TEST(Parse, ExpressionAndListFormsAgree) {
  EXPECT_EQ(parse_poly("x^5 - 5*x + 12"), (IntPoly{12, -5, 0, 0, 0, 1}));
  EXPECT_EQ(parse_poly("[12, -5, 0, 0, 0, 1]"), (IntPoly{12, -5, 0, 0, 0, 1}));
  EXPECT_EQ(parse_poly("(x^3-2)(x^2+x+1)"), kCubeRootTwo * kPhi3);
  EXPECT_EQ(parse_poly("-x^2 + 3x - 2"), (IntPoly{-2, 3, -1}));
  EXPECT_EQ(parse_poly("(x^3−2)"), kCubeRootTwo);
  EXPECT_EQ(parse_poly("2(x+1)^2"), (IntPoly{2, 4, 2}));
  EXPECT_EQ(parse_poly("[]"), IntPoly{});
}

TEST(Parse, FactorStructureIsKept) {
  auto fs = parse_factors("(x^2-2)(x^2-17)(x^2-34)");
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[1], (IntPoly{-17, 0, 1}));
  EXPECT_EQ(parse_factors("(x^2+1)^2").size(), 2u);
  EXPECT_EQ(parse_factors("x^2 + 1").size(), 1u);
  EXPECT_EQ(parse_factors("[1, 0, 1]").size(), 1u);
}

TEST(Parse, RejectsGarbage) {
  EXPECT_THROW(parse_poly("x^"), InvalidInput);
  EXPECT_THROW(parse_poly("y + 1"), InvalidInput);
  EXPECT_THROW(parse_poly("1.5*x"), InvalidInput);
  EXPECT_THROW(parse_poly("[1, 2"), InvalidInput);
}

TEST(IntPoly, PrintsCanonically) {
  EXPECT_EQ((kCubeRootTwo * kPhi3).to_string(), "x^5 + x^4 + x^3 - 2*x^2 - 2*x - 2");
  EXPECT_EQ(IntPoly({0, -1}).to_string(), "-x");
  EXPECT_EQ(IntPoly{}.to_string(), "0");
  EXPECT_EQ(kCubeRootTwo.to_list_string(), "[-2, 0, 0, 1]");
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{1, 1}), 2);
  EXPECT_EQ(oracle::sylvester_resultant(IntPoly{-1, 1}, IntPoly{1, 1}), 2);
  EXPECT_EQ(resultant(kCubeRootTwo, kPhi3), 1);
  EXPECT_EQ(oracle::sylvester_resultant(kCubeRootTwo, kPhi3), 1);
  EXPECT_EQ(resultant(kPhi3, kPhi3), 0);
  EXPECT_THROW(resultant(IntPoly{}, kPhi3), InvalidInput);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly f = oracle::random_poly(rng, 1 + trial % 6, 9, false);
    IntPoly g = oracle::random_poly(rng, (trial / 6) % 5, 9, false);
    ASSERT_EQ(resultant(f, g), oracle::sylvester_resultant(f, g)) << f.to_string() << " | " << g.to_string();
  }
}

TEST(Resultant, IsMultiplicative) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly f = oracle::random_poly(rng, 1 + trial % 3, 6, false);
    IntPoly g = oracle::random_poly(rng, 1 + trial % 4, 6, false);
    IntPoly h = oracle::random_poly(rng, 1 + trial % 5, 6, false);
    ASSERT_EQ(resultant(f * g, h), resultant(f, h) * resultant(g, h));
  }
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(IntPoly{1, 0, 1}), -4);
  EXPECT_EQ(discriminant(kCubeRootTwo), -108);
  EXPECT_EQ(discriminant(kCubeRootTwo * kPhi3), 324);
  // independent route: disc(g1) disc(g2) Res(g1, g2)^2
  EXPECT_EQ(mpz_class(-108) * mpz_class(-3) * oracle::sylvester_resultant(kCubeRootTwo, kPhi3) *
                oracle::sylvester_resultant(kCubeRootTwo, kPhi3),
            324);
  EXPECT_THROW(discriminant(IntPoly{5}), InvalidInput);
}

TEST(Discriminant, ProductFormula) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 150; ++trial) {
    IntPoly f = oracle::random_poly(rng, 1 + trial % 4, 7, true);
    IntPoly g = oracle::random_poly(rng, 1 + (trial / 4) % 4, 7, true);
    mpz_class r = resultant(f, g);
    if (r == 0) continue;
    ++checked;
    ASSERT_EQ(discriminant(f * g), discriminant(f) * discriminant(g) * r * r);
  }
  EXPECT_GE(checked, 100);
}

TEST(RealRoots, SturmCounts) {
  EXPECT_EQ(count_real_roots(IntPoly{-2, 0, 1}), 2);
  EXPECT_EQ(count_real_roots(IntPoly{1, 0, 1}), 0);
  EXPECT_EQ(count_real_roots(kCubeRootTwo), 1);
  EXPECT_EQ(count_real_roots(IntPoly{-6, 11, -6, 1}), 3);
  EXPECT_EQ(count_real_roots(IntPoly{1, 0, 0, 0, 1}), 0);
  EXPECT_EQ(count_real_roots(IntPoly{1, 0, -10, 0, 1}), 4);
  EXPECT_EQ(count_real_roots(IntPoly{12, -5, 0, 0, 0, 1}), 1);
}

TEST(Squarefree, Decomposition) {
  IntPoly f = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{0, 1};
  auto parts = squarefree_decomposition(f * mpz_class(3));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].poly, IntPoly({0, 1}));
  EXPECT_EQ(parts[0].multiplicity, 1);
  EXPECT_EQ(parts[1].poly, IntPoly({1, 1}));
  EXPECT_EQ(parts[2].poly, IntPoly({-2, 1}));
  EXPECT_EQ(parts[2].multiplicity, 3);
}

TEST(Integers, PrimeDivisorsAndValuation) {
  EXPECT_EQ(prime_divisors(324), (std::vector<mpz_class>{2, 3}));
  mpz_class big("1000000007");
  big *= mpz_class("998244353");
  EXPECT_EQ(prime_divisors(-big * 8), (std::vector<mpz_class>{2, mpz_class("998244353"), mpz_class("1000000007")}));
  EXPECT_EQ(valuation(324, 3), 4);
  EXPECT_EQ(valuation(-96, 2), 5);
}

TEST(FactorModP, Examples) {
  auto f = factor_mod_p(ModPoly(5, IntPoly{1, 0, 1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].poly, ModPoly(5, {2, 1}));  // x + 2 = x - 3
  EXPECT_EQ(f[1].poly, ModPoly(5, {3, 1}));  // x + 3 = x - 2
  // brute force: 2^2 = 4 = -1 mod 5
  EXPECT_EQ(oracle::roots_by_scan(IntPoly{1, 0, 1}, 5), (std::vector<std::uint64_t>{2, 3}));

  auto g = factor_mod_p(ModPoly(2, kPhi3));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].poly.degree(), 2);
  EXPECT_TRUE(oracle::irreducible_mod_p_brute({1, 1, 1}, 2));

  auto h = factor_mod_p(ModPoly(7, kCubeRootTwo));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].poly.degree(), 3);
  EXPECT_TRUE(oracle::irreducible_mod_p_brute({5, 0, 0, 1}, 7));
}

TEST(FactorModP, Multiplicities) {
  // (x+1)^3 (x^2+1) over F_3 and x^4 + x^2 = x^2 (x^2 + 1) over F_2
  IntPoly f = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 0, 1};
  auto fs = factor_mod_p(ModPoly(3, f));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].poly, ModPoly(3, {1, 1}));
  EXPECT_EQ(fs[0].multiplicity, 3);
  EXPECT_EQ(fs[1].multiplicity, 1);
  auto gs = factor_mod_p(ModPoly(2, IntPoly{0, 0, 1, 0, 1}));
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0].poly, ModPoly(2, {0, 1}));
  EXPECT_EQ(gs[0].multiplicity, 2);
  EXPECT_EQ(gs[1].poly, ModPoly(2, {1, 1}));
  EXPECT_EQ(gs[1].multiplicity, 2);
}

TEST(FactorModP, ProductIrreducibilityAndSeedIndependence) {
  std::mt19937_64 rng(21);
  const std::vector<ModPoly::Residue> primes{2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 240; ++trial) {
    const auto p = primes[static_cast<size_t>(trial) % primes.size()];
    IntPoly f = oracle::random_poly(rng, 1 + trial % 8, 50, true);
    ModPoly fp(p, f);
    auto fs = factor_mod_p(fp, 1);
    ModPoly prod = ModPoly::constant(p, 1);
    for (const auto& mf : fs) {
      for (int i = 0; i < mf.multiplicity; ++i) prod = prod * mf.poly;
      std::vector<std::uint64_t> c(mf.poly.coeffs().begin(), mf.poly.coeffs().end());
      if (mf.poly.degree() <= 4) ASSERT_TRUE(oracle::irreducible_mod_p_brute(c, p)) << mf.poly.to_string();
    }
    ASSERT_EQ(prod, fp.monic());
    ASSERT_EQ(fs, factor_mod_p(fp, 987654321));
  }
}

TEST(FactorModP, LargeEqualDegreeSplitAtTwo) {
  // x^(2^4) - x over F_2 is the product of all irreducibles of degree 1, 2, 4.
  IntPoly f = IntPoly::monomial(1, 16) - IntPoly::x();
  auto fs = factor_mod_p(ModPoly(2, f));
  std::vector<int> count(5, 0);
  for (const auto& mf : fs) ++count[static_cast<size_t>(mf.poly.degree())];
  EXPECT_EQ(count[1], 2);
  EXPECT_EQ(count[2], 1);
  EXPECT_EQ(count[4], 3);
}

TEST(RootsModP, Examples) {
  EXPECT_EQ(roots_mod_p(ModPoly(2, kCubeRootTwo)), (std::vector<ModPoly::Residue>{0}));
  EXPECT_EQ(roots_mod_p(ModPoly(3, kCubeRootTwo)), (std::vector<ModPoly::Residue>{2}));
  EXPECT_EQ(oracle::roots_by_scan(kCubeRootTwo, 3), (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(roots_mod_p(ModPoly(2, kPhi3)).empty());
}

TEST(RootsModP, AgreesWithExhaustiveScan) {
  std::mt19937_64 rng(31);
  for (unsigned long p : first_primes(25)) {  // all primes <= 97
    for (int trial = 0; trial < 12; ++trial) {
      IntPoly f = oracle::random_poly(rng, 1 + trial % 6, 1000, false);
      ModPoly fp(p, f);
      if (fp.is_zero()) continue;
      auto got = roots_mod_p(fp);
      auto want = oracle::roots_by_scan(f, p);
      ASSERT_EQ(got, std::vector<ModPoly::Residue>(want.begin(), want.end())) << f.to_string() << " mod " << p;
    }
  }
}

TEST(FactorOverRationals, Examples) {
  auto a = factor_over_rationals(IntPoly{-1, 0, 1});
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].poly, IntPoly({-1, 1}));
  EXPECT_EQ(a.factors[1].poly, IntPoly({1, 1}));

  auto b = factor_over_rationals(kCubeRootTwo * kPhi3);
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0].poly, kPhi3);
  EXPECT_EQ(b.factors[1].poly, kCubeRootTwo);
  EXPECT_EQ(b.expand(), kCubeRootTwo * kPhi3);

  auto c = factor_over_rationals(IntPoly{1, 0, 0, 0, 1});
  ASSERT_EQ(c.factors.size(), 1u);
  // x^4 + 1: no rational root (only candidates +-1), and no split into monic
  // integer quadratics (x^2+ax+b)(x^2+cx+d) with bd = 1, |a|, |c| <= 4.
  bool split = false;
  for (int bb : {-1, 1})
    for (int aa = -4; aa <= 4; ++aa)
      for (int cc = -4; cc <= 4; ++cc)
        if (IntPoly({bb, aa, 1}) * IntPoly({bb, cc, 1}) == IntPoly({1, 0, 0, 0, 1})) split = true;
  EXPECT_FALSE(split);
  EXPECT_NE(IntPoly({1, 0, 0, 0, 1}).eval(1), 0);
  EXPECT_NE(IntPoly({1, 0, 0, 0, 1}).eval(-1), 0);
}

TEST(FactorOverRationals, ContentSignsAndMultiplicity) {
  IntPoly f = IntPoly{-6, 0, 3} * IntPoly{1, 0, 1} * IntPoly{1, 0, 1};  // 3 (x^2-2) (x^2+1)^2
  auto q = factor_over_rationals(-f);
  EXPECT_EQ(q.constant, -3);
  ASSERT_EQ(q.factors.size(), 2u);
  EXPECT_EQ(q.factors[0].poly, IntPoly({-2, 0, 1}));
  EXPECT_EQ(q.factors[1].poly, IntPoly({1, 0, 1}));
  EXPECT_EQ(q.factors[1].multiplicity, 2);
  EXPECT_EQ(q.expand(), -f);
}

TEST(FactorOverRationals, SwinnertonDyerPolynomialsAreIrreducible) {
  // Reducible modulo every prime, so recombination has to reject every subset.
  EXPECT_TRUE(is_irreducible(IntPoly{1, 0, -10, 0, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{576, 0, -960, 0, 352, 0, -40, 0, 1}));
}

TEST(FactorOverRationals, RoundTripsRandomProducts) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly f = IntPoly::constant(1);
    const int parts = 1 + trial % 4;
    for (int i = 0; i < parts && f.degree() < 18; ++i) f = f * oracle::random_poly(rng, 1 + (trial + i) % 5, 12, false);
    auto q = factor_over_rationals(f);
    ASSERT_EQ(q.expand(), f);
    // every returned factor keeps passing the modular irreducibility test
    for (const auto& fac : q.factors) ASSERT_TRUE(is_irreducible(fac.poly)) << fac.poly.to_string();
  }
}

TEST(FactorOverRationals, FactorsStayIrreducibleUnderCycleTypeCertificates) {
  // An irreducible reduction of full degree certifies irreducibility.
  const IntPoly f{12, -5, 0, 0, 0, 1};
  auto q = factor_over_rationals(f);
  ASSERT_EQ(q.factors.size(), 1u);
  int sampled = 0;
  for (unsigned long p : first_primes(60)) {
    ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    if (++sampled > 5) break;
    auto ct = cycle_type(f, p);
    // a quintic with group D5 has cycle types 1^5, 1 2^2 or 5 only
    EXPECT_TRUE(ct == std::vector<int>({1, 1, 1, 1, 1}) || ct == std::vector<int>({1, 2, 2}) ||
                ct == std::vector<int>({5}))
        << p;
  }
}

TEST(FactorOverRationals, DegreeCap) {
  IntPoly f = IntPoly::monomial(1, 25) - IntPoly::constant(2);
  EXPECT_THROW(factor_over_rationals(f), ResourceError);
  EXPECT_NO_THROW(factor_over_rationals(f, 30));
  EXPECT_THROW(factor_over_rationals(IntPoly{}), InvalidInput);
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(IntPoly{1, 0, 1}, 5), (std::vector<int>{1, 1}));
  EXPECT_EQ(cycle_type(IntPoly{1, 0, 1}, 3), (std::vector<int>{2}));
  const IntPoly f = kCubeRootTwo * kPhi3;
  auto ct = cycle_type(f, 5);
  // x^3 - 2 has the single root 3 mod 5 (cubing is bijective), and x^2+x+1
  // has discriminant -3 = 2, a non-residue mod 5.
  EXPECT_EQ(oracle::roots_by_scan(kCubeRootTwo, 5), (std::vector<std::uint64_t>{3}));
  EXPECT_TRUE(oracle::roots_by_scan(kPhi3, 5).empty());
  EXPECT_EQ(ct, (std::vector<int>{1, 2, 2}));
  EXPECT_THROW(cycle_type(f, 2), InvalidInput);
  EXPECT_THROW(cycle_type(f, 3), InvalidInput);
}

}  // namespace
}  // namespace rootcover
