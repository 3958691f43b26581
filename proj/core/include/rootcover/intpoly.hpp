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

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rootcover {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order (coeffs()[k] multiplies x^k)
/// and are kept canonical: the zero polynomial is the empty sequence and a
/// nonzero polynomial never has a zero leading coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int k);
  static IntPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  std::span<const mpz_class> coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  mpz_class coeff(int k) const;
  const mpz_class& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& v) const;
  /// Sign of f(a/b) for b > 0 (homogenised evaluation, exact).
  int sign_at(const mpz_class& a, const mpz_class& b) const;
  /// f(x + shift).
  IntPoly taylor_shift(const mpz_class& shift) const;

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// f / content with positive leading coefficient.
  IntPoly primitive_part() const;
  IntPoly exact_div(const mpz_class& c) const;

  friend bool canonical_less(const IntPoly& a, const IntPoly& b);

  /// Expression form, e.g. "x^3 - 2".
  std::string to_string() const;
  /// Ascending list form, e.g. "[-2, 0, 0, 1]".
  std::string to_list_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Degree first, then ascending coefficients lexicographically.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// Exact division over Z; nullopt if b does not divide a in Z[x].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// Division by a monic divisor; both quotient and remainder are integral.
void divmod_monic(const IntPoly& a, const IntPoly& monic, IntPoly& quot, IntPoly& rem);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[x], normalised with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Res(f, g) with the Sylvester-determinant sign convention.
mpz_class resultant(const IntPoly& f, const IntPoly& g);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
mpz_class discriminant(const IntPoly& f);

/// Number of distinct real roots (Sturm sequence).
int count_real_roots(const IntPoly& f);

/// Squarefree decomposition: f = c * prod_i part_i^i with part_i squarefree,
/// primitive and pairwise coprime. Entries with part_i = 1 are omitted.
struct SquarefreePart {
  IntPoly poly;
  int multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& f);
/// Product of the distinct primitive irreducible factors (up to sign).
IntPoly squarefree_part(const IntPoly& f);

/// v_p(n); n must be nonzero.
int valuation(const mpz_class& n, const mpz_class& p);
/// Prime divisors of |n| in increasing order (trial division then Pollard rho).
std::vector<mpz_class> prime_divisors(const mpz_class& n);
bool is_prime(const mpz_class& n);

/// Polynomial text format: either "[c0, c1, ..., cn]" or an expression over x
/// with + - * ^ and integer literals. Parsing is exact.
IntPoly parse_poly(std::string_view text);

/// Like parse_poly, but keeps the top-level multiplicative structure:
/// "(x^3-2)(x^2+x+1)" yields two factors and "(x^2+1)^2" two copies.
/// Integer multiplicands are returned as constant polynomials. A single
/// expanded polynomial yields one entry.
std::vector<IntPoly> parse_factors(std::string_view text);

}  // namespace rootcover
