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

#include "rootcover/modpoly.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "rootcover/errors.hpp"

namespace rootcover {

using Residue = ModPoly::Residue;
using u128 = unsigned __int128;

namespace {

void check_prime(Residue p) {
  if (p < 2 || p >= (Residue{1} << 31)) throw InvalidInput("ModPoly: modulus must be a prime below 2^31");
}

}  // namespace

Residue mod_pow(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Residue mod_inverse(Residue a, Residue p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw InvalidInput("mod_inverse: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<Residue>(t);
}

ModPoly::ModPoly(Residue p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_prime(p);
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly::ModPoly(Residue p, const IntPoly& f) : p_(p) {
  check_prime(p);
  c_.reserve(f.coeffs().size());
  mpz_class r;
  for (const auto& c : f.coeffs()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    c_.push_back(r.get_ui());
  }
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scaled(mod_inverse(leading(), p_));
}

ModPoly ModPoly::scaled(Residue c) const {
  ModPoly r(p_);
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * c % p_;
  r.trim();
  return r;
}

ModPoly ModPoly::derivative() const {
  ModPoly r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) r.c_[k - 1] = c_[k] * (k % p_) % p_;
  r.trim();
  return r;
}

Residue ModPoly::eval(Residue v) const {
  Residue acc = 0;
  v %= p_;
  for (size_t k = c_.size(); k-- > 0;) acc = (acc * v + c_[k]) % p_;
  return acc;
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p_) c_[i] -= p_;
  }
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  const size_t n = a.c_.size() + b.c_.size() - 1;
  std::vector<u128> acc(n, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    const Residue ai = a.c_[i];
    if (!ai) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<u128>(ai) * b.c_[j];
  }
  r.c_.resize(n);
  for (size_t k = 0; k < n; ++k) r.c_[k] = static_cast<Residue>(acc[k] % a.p_);
  r.trim();
  return r;
}

bool operator<(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

IntPoly ModPoly::lift() const {
  std::vector<mpz_class> v;
  v.reserve(c_.size());
  for (auto c : c_) v.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(v));
}

std::string ModPoly::to_string() const { return lift().to_string() + " mod " + std::to_string(p_); }

void divmod(const ModPoly& a, const ModPoly& b, ModPoly& quot, ModPoly& rem) {
  if (b.is_zero()) throw InvalidInput("ModPoly division by zero");
  const Residue p = a.prime();
  const int db = b.degree();
  if (a.degree() < db) {
    quot = ModPoly(p);
    rem = a;
    return;
  }
  std::vector<Residue> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Residue> q(static_cast<size_t>(a.degree() - db) + 1, 0);
  const Residue inv = mod_inverse(b.leading(), p);
  auto bc = b.coeffs();
  for (int k = a.degree() - db; k >= 0; --k) {
    Residue t = r[static_cast<size_t>(k + db)] * inv % p;
    q[static_cast<size_t>(k)] = t;
    if (!t) continue;
    const Residue neg = p - t;
    for (int j = 0; j <= db; ++j) {
      Residue& x = r[static_cast<size_t>(k + j)];
      x = (x + neg * bc[static_cast<size_t>(j)]) % p;
    }
  }
  r.resize(static_cast<size_t>(db));
  quot = ModPoly(p, std::move(q));
  rem = ModPoly(p, std::move(r));
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) {
  ModPoly q(a.prime()), r(a.prime());
  divmod(a, b, q, r);
  return r;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly u = a, v = b;
  while (!v.is_zero()) {
    ModPoly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  const Residue p = a.prime();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(p, 1), s1(p), t0(p), t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    ModPoly q(p), r(p);
    divmod(r0, r1, q, r);
    ModPoly s2 = s0 - q * s1;
    ModPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  const Residue inv = mod_inverse(r0.leading(), p);
  s = s0.scaled(inv);
  t = t0.scaled(inv);
  return r0.scaled(inv);
}

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& mod) {
  const Residue p = mod.prime();
  ModPoly result = ModPoly::constant(p, 1) % mod;
  ModPoly b = base % mod;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

bool is_squarefree(const ModPoly& f) {
  if (f.degree() <= 0) return true;
  ModPoly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

namespace {

// p-th root of a polynomial whose derivative vanishes (coefficients only at
// multiples of p; a^p = a in F_p).
ModPoly pth_root(const ModPoly& f) {
  const Residue p = f.prime();
  std::vector<Residue> c;
  for (int k = 0; k <= f.degree(); k += static_cast<int>(p)) c.push_back(f.coeff(k));
  return ModPoly(p, std::move(c));
}

void squarefree_factors(const ModPoly& f, int scale, std::vector<ModFactor>& out) {
  const Residue p = f.prime();
  if (f.degree() <= 0) return;
  ModPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_factors(pth_root(f), scale * static_cast<int>(p), out);
    return;
  }
  ModPoly c = gcd(f, d);
  ModPoly w(p), rem(p);
  divmod(f, c, w, rem);
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly fac(p);
    divmod(w, y, fac, rem);
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    ++i;
    w = y;
    ModPoly cq(p);
    divmod(c, y, cq, rem);
    c = cq;
  }
  if (c.degree() > 0) squarefree_factors(pth_root(c), scale * static_cast<int>(p), out);
}

struct DegreeBlock {
  ModPoly poly;
  int degree;
};

std::vector<DegreeBlock> distinct_degree(const ModPoly& f) {
  const Residue p = f.prime();
  std::vector<DegreeBlock> out;
  ModPoly rest = f.monic();
  ModPoly h = ModPoly::x(p) % rest;
  const mpz_class pe(static_cast<unsigned long>(p));
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = powmod(h, pe, rest);
    ModPoly g = gcd(rest, h - ModPoly::x(p));
    if (g.degree() > 0) {
      out.push_back({g, i});
      ModPoly q(p), r(p);
      divmod(rest, g, q, r);
      rest = q.monic();
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, rest.degree()});
  return out;
}

ModPoly random_poly(Residue p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> dist(0, p - 1);
  std::vector<Residue> c(static_cast<size_t>(below_degree));
  for (auto& x : c) x = dist(rng);
  return ModPoly(p, std::move(c));
}

void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const Residue p = f.prime();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  mpz_class half;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, static_cast<unsigned long>(d));
    half = (half - 1) / 2;
  }
  while (true) {
    ModPoly a = random_poly(p, f.degree(), rng);
    if (a.degree() <= 0) continue;
    ModPoly b(p);
    if (p == 2) {
      // Absolute trace F_{2^d} -> F_2 applied componentwise.
      ModPoly term = a % f;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        b += term;
      }
    } else {
      b = powmod(a, half, f) - ModPoly::constant(p, 1);
    }
    ModPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      ModPoly q(p), r(p);
      divmod(f, g, q, r);
      equal_degree(g, d, rng, out);
      equal_degree(q.monic(), d, rng, out);
      return;
    }
  }
}

std::uint64_t mix_seed(std::uint64_t seed, const ModPoly& f) {
  std::uint64_t h = seed ^ (f.prime() * 0x9e3779b97f4a7c15ull) ^ (static_cast<std::uint64_t>(f.degree()) << 32);
  for (auto c : f.coeffs()) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const ModPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidInput("factor_mod_p: zero polynomial");
  std::vector<ModFactor> sqf;
  squarefree_factors(f.monic(), 1, sqf);
  std::mt19937_64 rng(mix_seed(seed, f));
  std::vector<ModFactor> out;
  for (const auto& part : sqf) {
    for (const auto& block : distinct_degree(part.poly)) {
      std::vector<ModPoly> irr;
      equal_degree(block.poly, block.degree, rng, irr);
      for (auto& g : irr) out.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return a.poly < b.poly;
  });
  return out;
}

std::vector<Residue> roots_mod_p(const ModPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidInput("roots_mod_p: zero polynomial");
  const Residue p = f.prime();
  std::vector<Residue> roots;
  if (f.degree() <= 0) return roots;
  if (p <= 64) {
    for (Residue a = 0; a < p; ++a)
      if (f.eval(a) == 0) roots.push_back(a);
    return roots;
  }
  ModPoly m = f.monic();
  ModPoly xp = powmod(ModPoly::x(p), mpz_class(static_cast<unsigned long>(p)), m);
  ModPoly g = gcd(m, xp - ModPoly::x(p));
  if (g.degree() <= 0) return roots;
  std::mt19937_64 rng(mix_seed(seed, f));
  std::vector<ModPoly> lin;
  equal_degree(g, 1, rng, lin);
  for (const auto& l : lin) roots.push_back((p - l.coeff(0)) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace rootcover
