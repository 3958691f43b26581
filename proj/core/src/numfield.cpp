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


#include "rootcover/numfield.hpp"

#include <algorithm>

#include "rootcover/errors.hpp"
#include "rootcover/factor.hpp"
#include "rootcover/modpoly.hpp"

namespace rootcover {
namespace {

// Dense polynomial over Q, used for inverses and interpolation.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& f) { return QPoly(f.coeffs().begin(), f.coeffs().end()); }

// a = q b + r
void divmod_q(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const mpq_class inv = 1 / b.back();
  for (std::size_t d = r.size(); d-- >= b.size();) {
    if (r[d] == 0) continue;
    mpq_class c = r[d] * inv;
    q[d - (b.size() - 1)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[d - (b.size() - 1) + i] -= c * b[i];
    if (d == 0) break;
  }
  trim(r);
}

QPoly mul_q(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Scale a rational polynomial to a primitive integer polynomial with positive
// leading coefficient.
IntPoly to_primitive_int(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p) z.push_back(mpz_class(c * l));
  return IntPoly(std::move(z)).primitive_part();
}

// Certified squarefree when some large prime keeps the degree and leaves the
// reduction squarefree. A false negative only costs another shift.
bool squarefree_by_primes(const IntPoly& f) {
  int tried = 0;
  for (unsigned long p = 1000000007UL; tried < 20; p += 2) {
    if (!is_prime(mpz_class(p))) continue;
    ModPoly fp(p, f);
    if (fp.degree() != f.degree()) continue;
    ++tried;
    if (is_squarefree(fp)) return true;
  }
  return false;
}

std::string with_var(std::string s, const std::string& var) {
  std::string out;
  for (char c : s) {
    if (c == 'x') out += var;
    else out += c;
  }
  return out;
}

bool canonical_less(const FieldPoly& a, const FieldPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (canonical_less(a.coeffs()[i], b.coeffs()[i])) return true;
    if (canonical_less(b.coeffs()[i], a.coeffs()[i])) return false;
  }
  return false;
}

}  // namespace

NumberField::NumberField(IntPoly minpoly, bool trusted) {
  if (minpoly.degree() < 1 || !minpoly.is_monic())
    throw InvalidInput("number field needs a monic polynomial of positive degree: " + minpoly.to_string());
  if (!trusted && !is_irreducible(minpoly))
    throw InvalidInput("number field polynomial is reducible: " + minpoly.to_string());
  minpoly_ = std::make_shared<const IntPoly>(std::move(minpoly));
}

FieldElement NumberField::zero() const { return FieldElement(*this, IntPoly{}, 1); }
FieldElement NumberField::one() const { return FieldElement(*this, IntPoly{1}, 1); }
FieldElement NumberField::generator() const { return FieldElement(*this, IntPoly::x(), 1); }
FieldElement NumberField::from_rational(const mpq_class& q) const {
  return FieldElement(*this, IntPoly::constant(q.get_num()), q.get_den());
}
FieldElement NumberField::element(const IntPoly& num, const mpz_class& den) const {
  if (den == 0) throw InvalidInput("zero denominator");
  return FieldElement(*this, num, den);
}

FieldElement::FieldElement(NumberField f, IntPoly num, mpz_class den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.degree() >= field_.degree()) {
    IntPoly q, r;
    divmod_monic(num_, field_.minpoly(), q, r);
    num_ = std::move(r);
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = gcd(num_.content(), den_);
  if (g != 1) {
    num_ = num_.exact_div(g);
    den_ /= g;
  }
}

mpq_class FieldElement::to_rational() const {
  if (!is_rational()) throw InvalidInput("field element is not rational");
  mpq_class q(num_.coeff(0), den_);
  q.canonicalize();
  return q;
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -num_, den_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.den_ == b.den_) return FieldElement(a.field_, a.num_ + b.num_, a.den_);
  return FieldElement(a.field_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.num_ * b.num_, a.den_ * b.den_);
}

FieldElement operator*(const FieldElement& a, const mpq_class& q) {
  return FieldElement(a.field_, a.num_ * q.get_num(), a.den_ * q.get_den());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero field element");
  // extended Euclid on (minpoly, num) over Q, tracking the cofactor of num
  QPoly r0 = to_q(field_.minpoly()), r1 = to_q(num_);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod_q(r0, r1, q, r);
    QPoly qs = mul_q(q, s1);
    QPoly s = s0;
    s.resize(std::max(s.size(), qs.size()), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InternalError("minimal polynomial shares a factor with a nonzero element");
  // num * s1 = r1[0] mod minpoly, so (num/den)^-1 = den * s1 / r1[0]
  const mpq_class scale = mpq_class(den_) / r1[0];
  for (auto& c : s1) c *= scale;
  mpz_class l = 1;
  for (const auto& c : s1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : s1) z.push_back(mpz_class(c * l));
  return FieldElement(field_, IntPoly(std::move(z)), l);
}

mpq_class FieldElement::norm() const {
  if (is_zero()) return 0;
  mpz_class dn;
  mpz_pow_ui(dn.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(field_.degree()));
  mpq_class q(resultant(field_.minpoly(), num_), dn);
  q.canonicalize();
  return q;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  if (canonical_less(a.num_, b.num_)) return true;
  if (canonical_less(b.num_, a.num_)) return false;
  return a.den_ < b.den_;
}

std::string FieldElement::to_string(const std::string& var) const {
  std::string s = with_var(num_.to_string(), var);
  if (den_ == 1) return s;
  return "(" + s + ")/" + den_.get_str();
}

FieldElement embed(const FieldElement& x, const FieldElement& generator_image) {
  const auto& L = generator_image.field();
  FieldElement r = L.zero();
  const auto c = x.num().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * generator_image + L.from_rational(mpq_class(c[i]));
  return r * mpq_class(1, x.den());
}

FieldPoly::FieldPoly(NumberField field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

FieldPoly FieldPoly::from_int(const NumberField& field, const IntPoly& f) {
  std::vector<FieldElement> c;
  for (const auto& a : f.coeffs()) c.push_back(field.from_rational(mpq_class(a)));
  return FieldPoly(field, std::move(c));
}

FieldPoly FieldPoly::x_minus(const FieldElement& c) { return FieldPoly(c.field(), {-c, c.field().one()}); }

void FieldPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  const FieldElement inv = leading().inverse();
  std::vector<FieldElement> c;
  for (const auto& a : c_) c.push_back(a * inv);
  return FieldPoly(field_, std::move(c));
}

FieldElement FieldPoly::eval(const FieldElement& v) const {
  FieldElement r = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
  return r;
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  std::vector<FieldElement> c;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.c_.size()) c.push_back(b.c_[i]);
    else if (i >= b.c_.size()) c.push_back(a.c_[i]);
    else c.push_back(a.c_[i] + b.c_[i]);
  }
  return FieldPoly(a.field_, std::move(c));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  std::vector<FieldElement> neg;
  for (const auto& x : b.c_) neg.push_back(-x);
  return a + FieldPoly(b.field_, std::move(neg));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return FieldPoly(a.field_, {});
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return FieldPoly(a.field_, std::move(c));
}

std::string FieldPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string c = c_[i].to_string(var);
    const bool unit = c == "1" && i > 0;
    if (!unit) s += (c_[i].num().coeffs().size() > 1 && c.front() != '(') ? "(" + c + ")" : c;
    if (i > 0) s += (unit ? "" : "*") + std::string(i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return s;
}

void divmod(const FieldPoly& a, const FieldPoly& b, FieldPoly& quot, FieldPoly& rem) {
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  const auto& K = a.field();
  std::vector<FieldElement> r = a.coeffs();
  const int db = b.degree();
  std::vector<FieldElement> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), K.zero());
  const FieldElement inv = b.leading().inverse();
  const bool monic = b.leading() == K.one();
  for (int d = a.degree(); d >= db; --d) {
    const auto& top = r[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    FieldElement c = monic ? top : top * inv;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = r[static_cast<std::size_t>(d - db + i)];
      slot = slot - c * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)), K.zero());
  quot = FieldPoly(K, std::move(q));
  rem = FieldPoly(K, std::move(r));
}

FieldPoly operator%(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly q(a.field(), {}), r(a.field(), {});
  divmod(a, b, q, r);
  return r;
}

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly x = a, y = b;
  while (!y.is_zero()) {
    FieldPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

FieldPoly embed(const FieldPoly& f, const FieldElement& generator_image) {
  std::vector<FieldElement> c;
  for (const auto& a : f.coeffs()) c.push_back(embed(a, generator_image));
  return FieldPoly(generator_image.field(), std::move(c));
}

IntPoly shifted_norm(const FieldPoly& h, long k) {
  const auto& K = h.field();
  const int D = K.degree() * h.degree();
  const FieldElement a = K.generator();
  // values at y = 0..D, then Newton interpolation
  std::vector<mpq_class> v;
  for (int y = 0; y <= D; ++y) v.push_back(h.eval(K.from_rational(y) - a * mpq_class(k)).norm());
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) v[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i - 1)]) / j;
  QPoly p{v[static_cast<std::size_t>(D)]};
  for (int j = D - 1; j >= 0; --j) {
    QPoly next(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * j;
    }
    next[0] += v[static_cast<std::size_t>(j)];
    p = std::move(next);
  }
  trim(p);
  return to_primitive_int(p);
}

namespace {

// Least k >= 0 with a squarefree shifted norm.
std::pair<long, IntPoly> squarefree_shift(const FieldPoly& h) {
  const long limit = static_cast<long>(h.degree()) * h.field().degree() + 1;
  for (long k = 0; k <= limit; ++k) {
    IntPoly n = shifted_norm(h, k);
    if (squarefree_by_primes(n)) return {k, std::move(n)};
  }
  throw InternalError("no squarefree norm after " + std::to_string(limit + 1) + " shifts for " + h.to_string());
}

}  // namespace

std::vector<FieldPoly> factor_over_field(const FieldPoly& f) {
  if (f.degree() < 1) throw InvalidInput("factor_over_field: constant polynomial");
  const FieldPoly h = f.monic();
  if (h.degree() == 1) return {h};
  const auto& K = h.field();
  auto [k, norm] = squarefree_shift(h);
  auto qf = factor_squarefree(norm);
  if (qf.size() == 1) return {h};

  // x + k a, for pulling each norm factor back
  const FieldPoly shift(K, {K.generator() * mpq_class(k), K.one()});
  std::vector<FieldPoly> out;
  for (const auto& nj : qf) {
    FieldPoly r(K, {});
    const auto c = nj.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
      r = (r * shift + FieldPoly(K, {K.from_rational(mpq_class(c[i]))})) % h;
    FieldPoly u = gcd(h, r);
    if (u.degree() < 1) throw InternalError("trivial pull-back of norm factor " + nj.to_string());
    out.push_back(std::move(u));
  }
  FieldPoly prod(K, {K.one()});
  for (const auto& u : out) prod = prod * u;
  if (!(prod == h)) throw InternalError("factor_over_field: product check failed for " + h.to_string());
  std::sort(out.begin(), out.end(), [](const FieldPoly& a, const FieldPoly& b) { return canonical_less(a, b); });
  return out;
}

Extension primitive_element(const FieldPoly& h0, int degree_cap) {
  const FieldPoly h = h0.monic();
  const auto& K = h.field();
  if (h.degree() < 1) throw InvalidInput("primitive_element: constant polynomial");
  const long total = static_cast<long>(K.degree()) * h.degree();
  if (total > degree_cap)
    throw ResourceError("extension degree " + std::to_string(total) + " exceeds cap " + std::to_string(degree_cap) +
                        " (partial degree " + std::to_string(K.degree()) + ")");
  if (h.degree() == 1) return {K, 0, K.generator(), -h.coeffs()[0]};

  auto [k, norm] = squarefree_shift(h);
  NumberField L(norm);
  const FieldElement g = L.generator();

  // a is the common root of minpoly_K(t) and h(g - k t) over L
  FieldElement a = L.zero();
  if (K.degree() > 1) {
    const FieldPoly mt = FieldPoly::from_int(L, K.minpoly());
    const FieldPoly lin(L, {g, L.from_rational(-k)});
    FieldPoly H(L, {});
    for (std::size_t j = h.coeffs().size(); j-- > 0;) {
      const auto& cj = h.coeffs()[j];
      FieldPoly cpoly = FieldPoly::from_int(L, cj.num());
      std::vector<FieldElement> scaled;
      for (const auto& e : cpoly.coeffs()) scaled.push_back(e * mpq_class(1, cj.den()));
      H = (H * lin + FieldPoly(L, std::move(scaled))) % mt;
    }
    FieldPoly common = gcd(mt, H);
    if (common.degree() != 1) throw InternalError("primitive_element: generator image not unique");
    a = -common.coeffs()[0];
  }
  FieldElement b = g - a * mpq_class(k);
  if (!FieldPoly::from_int(L, K.minpoly()).eval(a).is_zero() || !embed(h, a).eval(b).is_zero())
    throw InternalError("primitive_element: embedding check failed");
  return {L, k, a, b};
}

}  // namespace rootcover
