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
#include "rootcover/decide.hpp"
#include "rootcover/errors.hpp"
#include "rootcover/factor.hpp"
#include "rootcover/groups.hpp"
#include "rootcover/modpoly.hpp"

namespace rootcover {
namespace {

std::vector<mpz_class> mpzs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::string rejection(std::string_view text) {
  try {
    verify_instance(text);
  } catch (const InstanceRejected& e) {
    return e.reason();
  }
  return "accepted";
}

// Independent check of a NO-witness prime: no root mod p by scan.
bool witness_holds(const IntPoly& f, const mpz_class& p) {
  return oracle::roots_by_scan(f, p.get_ui()).empty();
}

TEST(VerifyInstance, Examples) {
  auto a = verify_instance("(x^3-2)(x^2+x+1)");
  EXPECT_EQ(a.m(), 2u);
  EXPECT_EQ(a.disc, 324);
  EXPECT_EQ(a.exceptional, mpzs({2, 3}));
  EXPECT_EQ(a.factors[0], (IntPoly{1, 1, 1}));  // canonical order

  EXPECT_EQ(rejection("(x^2-1)"), "rational root");

  // Res(x^2 - a, x^2 - b) = (a - b)^2, so 3 and 5 enter through 17 - 2 = 15.
  auto t = verify_instance("(x^2-2)(x^2-17)(x^2-34)");
  EXPECT_EQ(t.m(), 3u);
  EXPECT_EQ(t.disc, discriminant(t.product));
  EXPECT_EQ(t.exceptional, mpzs({2, 3, 5, 17}));
}

TEST(VerifyInstance, DiscMatchesExpandedProduct) {
  for (const char* s : {"(x^3-2)(x^2+x+1)", "(x^4+1)(x^2-3)", "(x^5-x-1)(x^2+1)(x^3-3)"}) {
    auto inst = verify_instance(s);
    EXPECT_EQ(inst.disc, discriminant(inst.product)) << s;
    EXPECT_EQ(inst.exceptional, prime_divisors(discriminant(inst.product))) << s;
  }
}

TEST(VerifyInstance, Rejections) {
  EXPECT_EQ(rejection("(x^2+1)^2"), "repeated factor");
  EXPECT_EQ(rejection("(x^2+1)(x^2+1)"), "repeated factor");
  EXPECT_EQ(rejection("(x^4+4)(x^2+3)"), "reducible factor");
  EXPECT_EQ(rejection("(x^2+1)(x^3-x)"), "rational root");
  EXPECT_EQ(rejection("2x^2+1"), "non-monic");
  EXPECT_EQ(rejection("2(x^2+1)"), "non-monic");
  EXPECT_EQ(rejection("x^4-1"), "rational root");
  EXPECT_EQ(rejection("(x^2+1)^2*(x^2+2)"), "repeated factor");
  // An expanded product is split over Q first.
  auto e = verify_instance("x^5 + x^4 + x^3 - 2*x^2 - 2*x - 2");
  EXPECT_EQ(e.m(), 2u);
  EXPECT_THROW(verify_instance("7"), InvalidInput);
  try {
    verify_instance("(x^4+4)(x^2+3)");
  } catch (const InstanceRejected& r) {
    EXPECT_EQ(r.factor(), "x^4 + 4");
  }
}

TEST(SampleNoWitness, Examples) {
  EXPECT_EQ(sample_no_witness(IntPoly{1, 0, 1}, 200), 3ul);
  EXPECT_EQ(sample_no_witness(IntPoly{1, 0, 0, 0, 1}, 200), 3ul);
  EXPECT_EQ(sample_no_witness(verify_instance("(x^3-2)(x^2+x+1)").product, 1000), std::nullopt);
  for (const IntPoly& f : {IntPoly{1, 0, 1}, IntPoly{1, 0, 0, 0, 1}, IntPoly{2, 0, 1}})
    EXPECT_EQ(sample_no_witness(f, 200), oracle::first_rootless_prime(f, 1229)) << f.to_string();
}

TEST(WeakCheck, Brandl3) {
  auto r = weak_check(verify_instance("(x^3-2)(x^2+x+1)"));
  EXPECT_EQ(r.weak.verdict, Verdict::yes);
  EXPECT_EQ(r.mode, GroupSource::computed);
  EXPECT_EQ(r.group_order, 6u);
  EXPECT_TRUE(r.covering->covered);
  EXPECT_TRUE(*r.joint_core_trivial);
  EXPECT_TRUE(r.real_root_sanity);
  EXPECT_FALSE(r.witness_prime);
  ASSERT_EQ(r.exceptional.size(), 2u);
  EXPECT_EQ(*r.exceptional[0].mod_p_roots[0], std::vector<mpz_class>{});   // x^2+x+1 mod 2
  EXPECT_EQ(*r.exceptional[0].mod_p_roots[1], mpzs({0}));                // x^3-2 mod 2
  EXPECT_EQ(*r.exceptional[1].mod_p_roots[0], mpzs({1}));                // x^2+x+1 mod 3
}

TEST(WeakCheck, SingleFactorFails) {
  auto r = weak_check(verify_instance("x^2+1"));
  EXPECT_EQ(r.weak.verdict, Verdict::no);
  ASSERT_TRUE(r.uncovered_witness);
  EXPECT_EQ(r.uncovered_witness->to_string(), "(1 2)");
  EXPECT_EQ(r.witness_prime, 3);
  EXPECT_TRUE(witness_holds(IntPoly{1, 0, 1}, *r.witness_prime));

  auto q = weak_check(verify_instance("x^4+1"));
  EXPECT_EQ(q.weak.verdict, Verdict::no);
  EXPECT_EQ(q.witness_prime, 3);
}

TEST(WeakCheck, Brandl5ComputedAndSupplied) {
  auto inst = gen_brandl(5);
  auto computed = weak_check(inst);
  EXPECT_EQ(computed.mode, GroupSource::computed);
  EXPECT_EQ(computed.weak.verdict, Verdict::yes);
  EXPECT_EQ(computed.group_order, 20u);
  auto supplied = weak_check(inst, {}, GroupMode::supplied);
  EXPECT_EQ(supplied.mode, GroupSource::supplied);
  EXPECT_EQ(supplied.weak.verdict, Verdict::yes);
  EXPECT_EQ(supplied.covering->per_subgroup, computed.covering->per_subgroup);
}

TEST(StrongCheck, Brandl3FailsAtTwo) {
  auto inst = verify_instance("(x^3-2)(x^2+x+1)");
  auto r = strong_check(inst);
  EXPECT_EQ(r.weak.verdict, Verdict::yes);
  EXPECT_EQ(r.strong->verdict, Verdict::no);
  EXPECT_EQ(r.witness_prime, 2);
  const auto& e2 = r.exceptional[0];
  ASSERT_EQ(e2.padic.size(), 2u);
  EXPECT_FALSE(e2.padic[0]->has_root);
  EXPECT_EQ(std::get<Exhausted>(e2.padic[0]->certificate).level, 1);  // x^2+x+1
  EXPECT_FALSE(e2.padic[1]->has_root);
  EXPECT_EQ(std::get<Exhausted>(e2.padic[1]->certificate).level, 2);  // x^3-2
  // Independent: no root mod 4 at all.
  EXPECT_EQ(oracle::first_rootless_modulus(inst.product, 100000), 4u);
}

TEST(StrongCheck, QuadraticTriple217) {
  auto inst = verify_instance("(x^2-2)(x^2-17)(x^2-34)");
  auto r = strong_check(inst);
  EXPECT_EQ(r.strong->verdict, Verdict::yes);
  EXPECT_EQ(r.weak.verdict, Verdict::yes);
  EXPECT_EQ(r.group_order, 4u);
  EXPECT_TRUE(r.covering->covered);
  // p = 2 certified by x^2 - 17, p = 17 by x^2 - 2.
  for (const auto& ep : r.exceptional) {
    bool certified = false;
    for (std::size_t i = 0; i < ep.padic.size(); ++i)
      if (ep.padic[i]->has_root) {
        certified = true;
        EXPECT_TRUE(verify_certificate(inst.factors[i], ep.p, std::get<HenselCertificate>(ep.padic[i]->certificate)));
      }
    EXPECT_TRUE(certified) << ep.p;
  }
  EXPECT_TRUE(r.exceptional[0].padic[1]->has_root);  // x^2 - 17 at 2
  EXPECT_EQ(oracle::first_rootless_modulus(inst.product, 100000), std::nullopt);
}

TEST(StrongCheck, TwoThreeSixLockedByOracle) {
  auto inst = verify_instance("(x^2-2)(x^2-3)(x^2-6)");
  auto rootless = oracle::first_rootless_modulus(inst.product, 100000);
  auto rootless_prime = oracle::first_rootless_prime(inst.product, 10000);
  ASSERT_EQ(rootless, 8u);  // squares mod 8 are 0, 1, 4
  ASSERT_EQ(rootless_prime, std::nullopt);
  auto r = strong_check(inst);
  EXPECT_EQ(r.weak.verdict, Verdict::yes);
  EXPECT_EQ(r.strong->verdict, Verdict::no);
  EXPECT_EQ(r.witness_prime, 2);
  // Supplied C2 x C2 agrees with the computed group.
  auto fam = gen_quadratic_triple(2, 3);
  auto s = strong_check(fam, {}, GroupMode::supplied);
  EXPECT_EQ(s.strong->verdict, Verdict::no);
  EXPECT_EQ(s.weak.verdict, Verdict::yes);
}

TEST(Families, Brandl) {
  for (unsigned r : {3u, 5u, 7u}) {
    auto inst = gen_brandl(r);
    ASSERT_TRUE(inst.supplied);
    EXPECT_EQ(inst.supplied->group.order(), r * (r - 1));
    ASSERT_TRUE(inst.evidence);
    EXPECT_TRUE(inst.evidence->consistent()) << inst.evidence->mismatch;
    EXPECT_EQ(inst.evidence->primes.size(), 25u);
    auto stab0 = inst.supplied->group.stabilizer(inst.supplied->blocks[0].front());
    auto stab1 = inst.supplied->group.stabilizer(inst.supplied->blocks[1].front());
    EXPECT_EQ(inst.supplied->group.order() / stab0.order(), r);
    EXPECT_EQ(inst.supplied->group.order() / stab1.order(), r - 1);
  }
  auto five = gen_brandl(5);
  auto fs = frobenius_structure(five.supplied->group.restrict_to(five.supplied->blocks[0]));
  ASSERT_TRUE(fs);
  EXPECT_EQ(fs->kernel.order(), 5u);
  EXPECT_THROW(gen_brandl(4), InvalidInput);
  EXPECT_THROW(gen_brandl(9), InvalidInput);
}

TEST(Families, Brandl7FallsBackToSupplied) {
  auto r = weak_check(gen_brandl(7));
  EXPECT_EQ(r.mode, GroupSource::supplied);
  EXPECT_EQ(r.weak.verdict, Verdict::yes);
  EXPECT_EQ(r.group_order, 42u);
  EXPECT_EQ(oracle::first_rootless_prime(gen_brandl(7).product, 10000), std::nullopt);
}

TEST(Families, QuadraticTriple) {
  auto t = gen_quadratic_triple(2, 17);
  EXPECT_EQ(strong_check(t, {}, GroupMode::supplied).strong->verdict, Verdict::yes);
  EXPECT_EQ(strong_check(t).strong->verdict, Verdict::yes);
  EXPECT_THROW(gen_quadratic_triple(4, 3), InvalidInput);
  EXPECT_THROW(gen_quadratic_triple(2, 8), InvalidInput);  // 16 is a square
  EXPECT_THROW(gen_quadratic_triple(3, 3), InvalidInput);
  EXPECT_NO_THROW(gen_quadratic_triple(-1, 2));
}

TEST(SuppliedGroup, InconsistentIsUndecided) {
  // Claim C3 acting on x^3 - 2, whose group is S3: transpositions show up.
  auto inst = verify_instance("x^3-2");
  SuppliedGroup sg{PermGroup::closure({Perm::parse("(1 2 3)", 3)}, 3), {inst.factors[0]}, {{0, 1, 2}}};
  inst.evidence = check_supplied(inst, sg);
  inst.supplied = sg;
  EXPECT_FALSE(inst.evidence->consistent());
  auto r = weak_check(inst, {}, GroupMode::supplied);
  // The sampled witness prime still settles it.
  EXPECT_EQ(r.weak.verdict, Verdict::no);
  EXPECT_TRUE(witness_holds(inst.product, *r.witness_prime));

  // Orbits that do not match the blocks.
  auto b3 = verify_instance("(x^3-2)(x^2+x+1)");
  SuppliedGroup bad{PermGroup::symmetric(5), {IntPoly{-2, 0, 0, 1}, IntPoly{1, 1, 1}}, {{0, 1, 2}, {3, 4}}};
  EXPECT_FALSE(check_supplied(b3, bad).orbits_match);
  b3.supplied = bad;
  b3.evidence.reset();
  auto u = weak_check(b3, {}, GroupMode::supplied);
  EXPECT_EQ(u.weak.verdict, Verdict::undecided);
  EXPECT_NE(u.weak.reason.find("inconsistent"), std::string::npos);
  EXPECT_THROW(weak_check(verify_instance("x^2+1"), {}, GroupMode::supplied), InvalidInput);
}

TEST(SampleOnly, NeverYes) {
  auto r = weak_check(verify_instance("(x^3-2)(x^2+x+1)"), {}, GroupMode::sample_only);
  EXPECT_EQ(r.weak.verdict, Verdict::undecided);
  EXPECT_EQ(r.mode, GroupSource::sampled_only);
  auto n = weak_check(verify_instance("x^2+1"), {}, GroupMode::sample_only);
  EXPECT_EQ(n.weak.verdict, Verdict::no);
  EXPECT_EQ(n.witness_prime, 3);
}

TEST(CapsBecomeUndecided, SplittingAndPadic) {
  Config tight;
  tight.splitting_degree_cap = 4;
  auto r = weak_check(verify_instance("(x^3-2)(x^2+x+1)"), tight);
  EXPECT_EQ(r.weak.verdict, Verdict::undecided);
  EXPECT_NE(r.weak.reason.find("partial degree"), std::string::npos);

  Config tiny;
  tiny.padic_node_cap = 1;
  auto s = strong_check(verify_instance("(x^2-2)(x^2-17)(x^2-34)"), tiny);
  EXPECT_EQ(s.strong->verdict, Verdict::undecided);
  EXPECT_EQ(s.weak.verdict, Verdict::yes);
}

TEST(Search, Examples) {
  auto one = search({IntPoly{-2, 0, 0, 1}, IntPoly{1, 1, 1}}, 2, Predicate::weak, 100);
  EXPECT_EQ(one.hits.size(), 1u);
  EXPECT_EQ(one.subsets_tried, 1u);
  auto tri = search({IntPoly{-2, 0, 1}, IntPoly{-17, 0, 1}, IntPoly{-34, 0, 1}}, 3, Predicate::strong, 100);
  EXPECT_EQ(tri.hits.size(), 1u);
  // x^2+1 and x^2+2 both lack roots mod 7.
  ASSERT_EQ(oracle::first_rootless_prime(IntPoly{1, 0, 1} * IntPoly{2, 0, 1}, 1000), 7u);
  auto none = search({IntPoly{1, 0, 1}, IntPoly{2, 0, 1}}, 2, Predicate::weak, 100);
  EXPECT_EQ(none.hits.size(), 0u);
  EXPECT_THROW(search({}, 2, Predicate::weak, 10), InvalidInput);

  // Pool with invalid subsets, ordered deterministically, budget honoured.
  std::vector<IntPoly> pool{IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}, IntPoly{-6, 0, 1}, IntPoly{-2, 0, 1}, IntPoly{-17, 0, 1},
                            IntPoly{-34, 0, 1}};
  auto all = search(pool, 3, Predicate::weak, 1000);
  EXPECT_EQ(all.subsets_total, 20u);
  EXPECT_EQ(all.subsets_tried, 20u);
  EXPECT_FALSE(all.budget_exhausted);
  for (const auto& h : all.hits)
    EXPECT_EQ(oracle::first_rootless_prime(verify_instance(h.factors).product, 10000), std::nullopt);
  auto part = search(pool, 3, Predicate::weak, 5);
  EXPECT_TRUE(part.budget_exhausted);
  EXPECT_EQ(part.subsets_tried, 5u);
}

// Random irreducible monic polynomial of degree 2 or 3 with small coefficients.
IntPoly random_irreducible(std::mt19937_64& rng) {
  for (;;) {
    auto f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 2), 6, true);
    if (is_irreducible(f)) return f;
  }
}

TEST(Property, WeakAgreesWithRootModPScan) {
  std::mt19937_64 rng(11);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntPoly> fs;
    std::size_t m = 1 + rng() % 3;
    while (fs.size() < m) {
      auto g = random_irreducible(rng);
      if (std::find(fs.begin(), fs.end(), g) == fs.end()) fs.push_back(g);
    }
    auto inst = verify_instance(fs);
    auto r = strong_check(inst);
    if (r.mode != GroupSource::computed) continue;
    auto scan = oracle::first_rootless_prime(inst.product, 10000);
    if (r.weak.verdict == Verdict::yes) {
      ++yes;
      EXPECT_EQ(scan, std::nullopt) << inst.product.to_string();
      EXPECT_TRUE(r.real_root_sanity);
    } else {
      ++no;
      EXPECT_EQ(r.weak.verdict, Verdict::no);
      EXPECT_NE(scan, std::nullopt) << inst.product.to_string();
      if (r.weak_witness_prime) EXPECT_TRUE(witness_holds(inst.product, *r.weak_witness_prime));
    }
    if (r.strong->verdict == Verdict::yes) {
      EXPECT_EQ(r.weak.verdict, Verdict::yes);
      EXPECT_EQ(oracle::first_rootless_modulus(inst.product, 10000), std::nullopt) << inst.product.to_string();
    }
    if (r.strong->verdict == Verdict::no && r.witness_prime)
      EXPECT_TRUE(witness_holds(inst.product, *r.witness_prime) || inst.disc % *r.witness_prime == 0);
  }
  EXPECT_GT(no, 10);
  RecordProperty("weak_yes", yes);
}

TEST(Property, CoveringWitnessIsUncovered) {
  for (const char* s : {"x^2+1", "x^3-2", "(x^2+1)(x^2+2)", "x^4+1", "(x^2-2)(x^2-3)"}) {
    auto r = weak_check(verify_instance(s));
    ASSERT_EQ(r.weak.verdict, Verdict::no) << s;
    ASSERT_TRUE(r.uncovered_witness) << s;
    EXPECT_FALSE(r.covering->covered);
  }
}

}  // namespace
}  // namespace rootcover
