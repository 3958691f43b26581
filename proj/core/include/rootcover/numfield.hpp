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

#include <memory>
#include <string>
#include <vector>

#include "rootcover/intpoly.hpp"

namespace rootcover {

class FieldElement;

/// Q(a) for a root a of a monic irreducible integer polynomial. Q itself is
/// represented by the minimal polynomial x (generator 0).
class NumberField {
 public:
  /// Certifies irreducibility of `minpoly` unless `trusted`.
  explicit NumberField(IntPoly minpoly, bool trusted = false);
  static NumberField rationals() { return NumberField(IntPoly::x(), true); }

  const IntPoly& minpoly() const { return *minpoly_; }
  int degree() const { return minpoly_->degree(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const mpq_class& q) const;
  /// num(a) / den, reduced mod the minimal polynomial.
  FieldElement element(const IntPoly& num, const mpz_class& den = 1) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.minpoly_ == b.minpoly_ || *a.minpoly_ == *b.minpoly_;
  }

 private:
  friend class FieldElement;
  std::shared_ptr<const IntPoly> minpoly_;
};

/// num(a) / den with deg num < [K:Q], den > 0 and gcd(content(num), den) = 1.
class FieldElement {
 public:
  const NumberField& field() const { return field_; }
  const IntPoly& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.degree() <= 0; }
  mpq_class to_rational() const;  // requires is_rational()

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const mpq_class& q);
  FieldElement inverse() const;
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Norm down to Q: Res(minpoly, num) / den^n.
  mpq_class norm() const;
  /// Total order used for canonical root labelling.
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);
  /// e.g. "(3*a^2 - a)/2" in the generator named `var`.
  std::string to_string(const std::string& var = "a") const;

 private:
  friend class NumberField;
  FieldElement(NumberField f, IntPoly num, mpz_class den);
  void normalize();

  NumberField field_;
  IntPoly num_;
  mpz_class den_;
};

/// Polynomial in x over a number field, ascending coefficients, trimmed.
class FieldPoly {
 public:
  FieldPoly(NumberField field, std::vector<FieldElement> coeffs);
  static FieldPoly from_int(const NumberField& field, const IntPoly& f);
  static FieldPoly x_minus(const FieldElement& c);

  const NumberField& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  const FieldElement& leading() const { return c_.back(); }

  FieldPoly monic() const;
  FieldElement eval(const FieldElement& v) const;
  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }
  std::string to_string(const std::string& var = "a") const;

 private:
  void trim();
  NumberField field_;
  std::vector<FieldElement> c_;
};

void divmod(const FieldPoly& a, const FieldPoly& b, FieldPoly& quot, FieldPoly& rem);
FieldPoly operator%(const FieldPoly& a, const FieldPoly& b);
/// Monic gcd (zero if both are zero).
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);

/// Norm_K(h(y - k a)) as a polynomial in y over Q, scaled to a primitive
/// integer polynomial with positive leading coefficient.
IntPoly shifted_norm(const FieldPoly& h, long k);

/// Monic irreducible factors of a squarefree polynomial over its field
/// (Trager: squarefree shifted norm, factor over Q, gcd pull-back). Sorted
/// by degree, then canonically by coefficients.
std::vector<FieldPoly> factor_over_field(const FieldPoly& f);

/// L = K(b) for a root b of h, h irreducible over K, as Q(g) with
/// g = b + k a for the least k >= 0 whose shifted norm is squarefree.
struct Extension {
  NumberField field;
  long k;
  FieldElement generator_image;  // a in L
  FieldElement root;             // b in L
};
Extension primitive_element(const FieldPoly& h, int degree_cap);

/// Image of x under K -> L given the image of K's generator.
FieldElement embed(const FieldElement& x, const FieldElement& generator_image);
FieldPoly embed(const FieldPoly& f, const FieldElement& generator_image);

}  // namespace rootcover
