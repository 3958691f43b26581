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

// Zassenhaus factorisation over Z: modular factorisation, multifactor Hensel
// lifting along a balanced split tree, and subset recombination.

#include "rootcover/factor.hpp"

#include <algorithm>
#include <span>
#include <vector>

#include "rootcover/errors.hpp"
#include "rootcover/modpoly.hpp"

namespace rootcover {

namespace {

IntPoly reduce(const IntPoly& f, const mpz_class& m) {
  std::vector<mpz_class> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly reduce_symmetric(const IntPoly& f, const mpz_class& m, const mpz_class& half) {
  std::vector<mpz_class> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const mpz_class& m) { return reduce(a * b, m); }

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m) with
// h monic, produce the same relations modulo m^2.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const mpz_class& m2) {
  IntPoly e = reduce(f - g * h, m2);
  IntPoly q, r;
  divmod_monic(mulmod(s, e, m2), h, q, r);
  IntPoly g2 = reduce(g + t * e + q * g, m2);
  IntPoly h2 = reduce(h + r, m2);
  IntPoly b = reduce(s * g2 + t * h2 - IntPoly::constant(1), m2);
  IntPoly c, d;
  divmod_monic(mulmod(s, b, m2), h2, c, d);
  s = reduce(s - d, m2);
  t = reduce(t - t * b - c * g2, m2);
  g = std::move(g2);
  h = std::move(h2);
}

ModPoly product_mod(std::span<const ModPoly> fs, ModPoly::Residue p) {
  ModPoly acc = ModPoly::constant(p, 1);
  for (const auto& f : fs) acc = acc * f;
  return acc;
}

// f = lc(f) * prod(factors) mod p; appends monic lifts modulo P = p^a.
void lift_tree(const IntPoly& f, std::span<const ModPoly> factors, unsigned long p, const mpz_class& P,
               std::vector<IntPoly>& out) {
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), P.get_mpz_t());
    out.push_back(reduce(f * inv, P));
    return;
  }
  const size_t k = factors.size() / 2;
  ModPoly g0 = product_mod(factors.first(k), p) * ModPoly(p, IntPoly::constant(f.leading()));
  ModPoly h0 = product_mod(factors.subspan(k), p);
  ModPoly s0(p), t0(p);
  ModPoly one = ext_gcd(g0, h0, s0, t0);
  if (!one.is_one()) throw InternalError("Hensel lifting: modular factors are not coprime");
  IntPoly g = g0.lift(), h = h0.lift(), s = s0.lift(), t = t0.lift();
  mpz_class m = p;
  while (m < P) {
    mpz_class m2 = m * m;
    hensel_step(f, g, h, s, t, m2);
    m = m2;
  }
  g = reduce(g, P);
  h = reduce(h, P);
  lift_tree(g, factors.first(k), p, P, out);
  lift_tree(h, factors.subspan(k), p, P, out);
}

// Bitmask of degrees reachable as subset sums of `degrees`.
std::vector<bool> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> reach(static_cast<size_t>(n) + 1, false);
  reach[0] = true;
  for (int d : degrees)
    for (int s = n; s >= d; --s)
      if (reach[static_cast<size_t>(s - d)]) reach[static_cast<size_t>(s)] = true;
  return reach;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  const size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct PrimeChoice {
  unsigned long p = 0;
  std::vector<ModPoly> factors;
};

std::vector<IntPoly> zassenhaus(const IntPoly& f, std::uint64_t seed) {
  const int n = f.degree();
  if (n <= 1) return {f};

  // Modular factorisations at several good primes: keep the one with the
  // fewest factors and intersect the achievable factor degrees.
  std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
  PrimeChoice best;
  int good = 0;
  const int min_trials = 5, max_trials = 24;
  for (unsigned long p = 2; good < max_trials; ++p) {
    if (!is_prime(mpz_class(p))) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    ModPoly fp(p, f);
    if (!is_squarefree(fp)) continue;
    ++good;
    std::vector<ModPoly> fs;
    std::vector<int> degs;
    for (auto& mf : factor_mod_p(fp, seed)) {
      degs.push_back(mf.poly.degree());
      fs.push_back(std::move(mf.poly));
    }
    if (fs.size() == 1) return {f};
    auto reach = subset_sums(degs, n);
    bool any = false;
    for (int d = 1; d < n; ++d) {
      allowed[static_cast<size_t>(d)] = allowed[static_cast<size_t>(d)] && reach[static_cast<size_t>(d)];
      any = any || allowed[static_cast<size_t>(d)];
    }
    if (!any) return {f};
    if (best.p == 0 || fs.size() < best.factors.size()) best = {p, std::move(fs)};
    if (good >= min_trials && best.factors.size() <= 12) break;
  }

  // Coefficient bound for any factor: 2^n * ||f||_2; lift past 2*|lc|*bound.
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm * abs(f.leading()) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  mpz_class P = best.p;
  while (P <= bound) P *= best.p;
  const mpz_class half = P / 2;

  std::vector<IntPoly> lifted;
  lift_tree(f, best.factors, best.p, P, lifted);

  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<size_t> active(lifted.size());
  for (size_t i = 0; i < active.size(); ++i) active[i] = i;
  for (size_t s = 1; 2 * s <= active.size();) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    const mpz_class lc = rest.leading();
    const mpz_class lc_const = lc * rest.coeff(0);
    do {
      int deg = 0;
      for (size_t i : idx) deg += lifted[active[i]].degree();
      if (!allowed[static_cast<size_t>(deg)]) continue;
      mpz_class ct = lc;
      for (size_t i : idx) ct = ct * lifted[active[i]].coeff(0) % P;
      mpz_fdiv_r(ct.get_mpz_t(), ct.get_mpz_t(), P.get_mpz_t());
      if (ct > half) ct -= P;
      if (ct == 0 || !mpz_divisible_p(lc_const.get_mpz_t(), ct.get_mpz_t())) continue;
      IntPoly cand = IntPoly::constant(lc);
      for (size_t i : idx) cand = mulmod(cand, lifted[active[i]], P);
      cand = reduce_symmetric(cand, P, half).primitive_part();
      auto q = divide_exact(rest, cand);
      if (!q) continue;
      result.push_back(cand);
      rest = *q;
      std::vector<size_t> keep;
      for (size_t i = 0, j = 0; i < active.size(); ++i) {
        if (j < idx.size() && idx[j] == i) {
          ++j;
          continue;
        }
        keep.push_back(active[i]);
      }
      active = std::move(keep);
      found = true;
      break;
    } while (next_combination(idx, active.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest.primitive_part());
  return result;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f, std::uint64_t seed) {
  if (f.degree() < 1) throw InvalidInput("factor_squarefree: constant polynomial");
  IntPoly g = f.primitive_part();
  std::vector<IntPoly> out;
  if (g.coeff(0) == 0) {
    out.push_back(IntPoly::x());
    g = *divide_exact(g, IntPoly::x());
  }
  if (g.degree() >= 1) {
    auto fs = zassenhaus(g, seed);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

IntPoly QFactorization::expand() const {
  if (constant.get_den() != 1) throw InvalidInput("QFactorization::expand: non-integral constant");
  IntPoly r = IntPoly::constant(constant.get_num());
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

QFactorization factor_over_rationals(const IntPoly& f, int degree_cap, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidInput("factor_over_rationals: zero polynomial");
  if (f.degree() > degree_cap)
    throw ResourceError("factor_over_rationals: degree " + std::to_string(f.degree()) + " exceeds cap " +
                        std::to_string(degree_cap));
  QFactorization out;
  if (f.degree() == 0) {
    out.constant = f.leading();
    return out;
  }
  for (const auto& part : squarefree_decomposition(f))
    for (auto& g : factor_squarefree(part.poly, seed)) out.factors.push_back({std::move(g), part.multiplicity});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const QFactor& a, const QFactor& b) { return canonical_less(a.poly, b.poly); });
  IntPoly prod = IntPoly::constant(1);
  for (const auto& q : out.factors)
    for (int i = 0; i < q.multiplicity; ++i) prod = prod * q.poly;
  out.constant = mpq_class(f.leading(), prod.leading());
  out.constant.canonicalize();
  if (prod * out.constant.get_num() != f || out.constant.get_den() != 1)
    throw InternalError("factor_over_rationals: product check failed for " + f.to_string());
  return out;
}

bool is_irreducible(const IntPoly& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_rationals(f, std::max(f.degree(), kDefaultFactorDegreeCap), seed);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<int> cycle_type(const IntPoly& f, unsigned long p, std::uint64_t seed) {
  if (f.degree() < 1) throw InvalidInput("cycle_type: constant polynomial");
  ModPoly fp(p, f);
  if (fp.degree() != f.degree() || !is_squarefree(fp))
    throw InvalidInput("cycle_type: p = " + std::to_string(p) + " divides the discriminant");
  std::vector<int> degs;
  for (const auto& mf : factor_mod_p(fp, seed)) degs.push_back(mf.poly.degree());
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<unsigned long> first_primes(std::size_t count) {
  std::vector<unsigned long> primes;
  for (unsigned long n = 2; primes.size() < count; ++n) {
    bool prime = true;
    for (unsigned long q : primes) {
      if (q * q > n) break;
      if (n % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

}  // namespace rootcover
