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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <initializer_list>
#include <vector>

#include "rootcover/intpoly.hpp"

namespace rootcover {

/// Polynomial over F_p for a prime p < 2^31, ascending residues in [0, p).
class ModPoly {
 public:
  using Residue = std::uint64_t;

  explicit ModPoly(Residue p) : p_(p) {}
  ModPoly(Residue p, std::vector<Residue> coeffs);
  ModPoly(Residue p, std::initializer_list<Residue> coeffs) : ModPoly(p, std::vector<Residue>(coeffs)) {}
  /// Reduction of an integer polynomial.
  ModPoly(Residue p, const IntPoly& f);

  static ModPoly x(Residue p) { return ModPoly(p, {0, 1}); }
  static ModPoly constant(Residue p, Residue c) { return ModPoly(p, {c}); }

  Residue prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::span<const Residue> coeffs() const { return c_; }
  Residue coeff(int k) const { return k < 0 || k > degree() ? 0 : c_[static_cast<size_t>(k)]; }
  Residue leading() const { return c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;
  Residue eval(Residue v) const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(Residue c) const;
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const ModPoly& a, const ModPoly& b);

  /// Symmetric-free lift to Z with coefficients in [0, p).
  IntPoly lift() const;
  std::string to_string() const;

 private:
  void trim();
  Residue p_;
  std::vector<Residue> c_;
};

ModPoly::Residue mod_inverse(ModPoly::Residue a, ModPoly::Residue p);
ModPoly::Residue mod_pow(ModPoly::Residue a, std::uint64_t e, ModPoly::Residue p);

void divmod(const ModPoly& a, const ModPoly& b, ModPoly& quot, ModPoly& rem);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// s*a + t*b = g with g monic gcd.
ModPoly ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t);
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& mod);
bool is_squarefree(const ModPoly& f);

struct ModFactor {
  ModPoly poly;
  int multiplicity;
  friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

/// Monic irreducible factorisation over F_p with multiplicities: squarefree
/// split, distinct-degree split, then equal-degree splitting seeded by
/// `seed`. Output is sorted by (degree, coefficients) and independent of the
/// seed.
std::vector<ModFactor> factor_mod_p(const ModPoly& f, std::uint64_t seed = 0x5eed);

/// Distinct residues a in [0, p) with f(a) = 0, ascending.
std::vector<ModPoly::Residue> roots_mod_p(const ModPoly& f, std::uint64_t seed = 0x5eed);

}  // namespace rootcover
