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


#include "rootcover/padic.hpp"

#include <algorithm>
#include <string>

#include "rootcover/errors.hpp"
#include "rootcover/modpoly.hpp"

namespace rootcover {
namespace {

constexpr unsigned long kMaxWordPrime = 1UL << 31;

void check_input(const IntPoly& g, const mpz_class& p) {
  if (g.degree() < 1) throw InvalidInput("padic: polynomial must have positive degree");
  if (!g.is_monic()) throw InvalidInput("padic: polynomial must be monic: " + g.to_string());
  if (!is_prime(p)) throw InvalidInput("padic: " + p.get_str() + " is not prime");
}

std::vector<mpz_class> roots_level_one(const IntPoly& g, const mpz_class& p) {
  if (p >= kMaxWordPrime) throw ResourceError("padic: prime " + p.get_str() + " exceeds 2^31");
  std::vector<mpz_class> out;
  for (auto r : roots_mod_p(ModPoly(p.get_ui(), g))) out.emplace_back(static_cast<unsigned long>(r));
  return out;
}


// One level-by-level lifting run. `visit` sees every root residue at each
// level and may stop the search by returning true.
class Lifter {
 public:
  Lifter(const IntPoly& g, const mpz_class& p, const PadicLimits& limits)
      : g_(g), dg_(g.derivative()), p_(p), limits_(limits) {}

  template <class Visit>
  std::vector<mpz_class> run(int depth, Visit&& visit) {
    check_modulus(depth);
    std::vector<mpz_class> level = roots_level_one(g_, p_);
    mpz_class pk = p_;  // p^j for the current level j
    count(level.size(), 1);
    for (int j = 1;; ++j) {
      reached_ = j;
      for (const auto& a : level)
        if (visit(a, j)) return level;
      if (level.empty() || j == depth) return level;
      std::vector<mpz_class> next;
      mpz_class pk1 = pk * p_;
      for (const auto& a : level) {
        // g(a + t p^j) = g(a) + t p^j g'(a) mod p^(j+1) since 2j >= j+1
        mpz_class ga = g_.eval(a);
        mpz_class c = ga / pk;  // exact: a is a root mod p^j
        mpz_class d = dg_.eval(a);
        mpz_class dm = d % p_;
        if (dm < 0) dm += p_;
        mpz_class cm = c % p_;
        if (cm < 0) cm += p_;
        if (dm != 0) {
          // t = -c / d mod p
          mpz_class inv;
          mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), p_.get_mpz_t());
          mpz_class t = (-cm * inv) % p_;
          if (t < 0) t += p_;
          next.push_back(a + t * pk);
          count(1, j + 1);
        } else if (cm == 0) {
          if (p_ > limits_.node_cap) fail(j + 1);
          count(p_.get_ui(), j + 1);
          for (unsigned long t = 0; t < p_.get_ui(); ++t) next.push_back(a + t * pk);
        }
      }
      std::sort(next.begin(), next.end());
      level = std::move(next);
      pk = pk1;
    }
  }

  int reached() const { return reached_; }

 private:
  void check_modulus(int depth) const {
    const auto bits = mpz_sizeinbase(p_.get_mpz_t(), 2) * static_cast<std::size_t>(depth);
    if (bits > limits_.modulus_bits_cap)
      throw ResourceError("padic: modulus " + p_.get_str() + "^" + std::to_string(depth) + " exceeds " +
                          std::to_string(limits_.modulus_bits_cap) + " bits");
  }
  void count(std::uint64_t n, int level) {
    nodes_ += n;
    if (nodes_ > limits_.node_cap) fail(level);
  }
  [[noreturn]] void fail(int level) const {
    throw ResourceError("padic: node cap " + std::to_string(limits_.node_cap) + " exceeded at level " +
                        std::to_string(level) + " for p = " + p_.get_str() + " (completed depth " +
                        std::to_string(level - 1) + ")");
  }

  const IntPoly& g_;
  IntPoly dg_;
  mpz_class p_;
  PadicLimits limits_;
  std::uint64_t nodes_ = 0;
  int reached_ = 0;
};

}  // namespace

std::vector<mpz_class> zp_roots_to_depth(const IntPoly& g, const mpz_class& p, int k, const PadicLimits& limits) {
  check_input(g, p);
  if (k < 1) throw InvalidInput("padic: depth must be positive");
  if (discriminant(g) == 0) throw InvalidInput("padic: polynomial is not squarefree: " + g.to_string());
  Lifter lifter(g, p, limits);
  return lifter.run(k, [](const mpz_class&, int) { return false; });
}

PadicReport has_qp_root(const IntPoly& g, const mpz_class& p, const PadicLimits& limits) {
  check_input(g, p);
  const mpz_class disc = discriminant(g);
  if (disc == 0) throw InvalidInput("padic: polynomial is not squarefree: " + g.to_string());
  const int horizon = 2 * valuation(disc, p) + 1;
  const IntPoly dg = g.derivative();

  std::optional<HenselCertificate> cert;
  Lifter lifter(g, p, limits);
  auto last = lifter.run(horizon, [&](const mpz_class& a, int level) {
    const mpz_class ga = g.eval(a);
    const mpz_class da = dg.eval(a);
    if (da == 0) return false;
    const int vd = valuation(da, p);
    std::optional<int> vg;
    if (ga != 0) {
      vg = valuation(ga, p);
      if (*vg <= 2 * vd) return false;
    }
    cert = HenselCertificate{a, level, vg, vd};
    return true;
  });

  PadicReport r{p, lifter.reached(), horizon, false, Exhausted{lifter.reached()}};
  if (cert) {
    r.has_root = true;
    r.certificate = *cert;
  } else if (!last.empty()) {
    // a root mod p^horizon has v_p(g'(a)) <= v_p(disc), so the Hensel test
    // above cannot have failed on it
    throw InternalError("padic: root mod p^" + std::to_string(horizon) + " without Hensel certificate for " +
                        g.to_string());
  }
  return r;
}

bool verify_certificate(const IntPoly& g, const mpz_class& p, const HenselCertificate& c) {
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(c.modulus_exponent));
  const mpz_class ga = g.eval(c.residue);
  const mpz_class da = g.derivative().eval(c.residue);
  if (da == 0 || ga % pk != 0) return false;
  const int vd = valuation(da, p);
  if (vd != c.val_gprime) return false;
  if (ga == 0) return !c.val_g.has_value();
  const int vg = valuation(ga, p);
  return c.val_g == vg && vg > 2 * vd;
}

}  // namespace rootcover
