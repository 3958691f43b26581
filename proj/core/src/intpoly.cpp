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

#include "rootcover/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "rootcover/errors.hpp"

namespace rootcover {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int k) {
  std::vector<mpz_class> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

const mpz_class& IntPoly::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<mpz_class> r(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) r[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& v) const {
  mpz_class acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    acc *= v;
    acc += coeffs_[k];
  }
  return acc;
}

int IntPoly::sign_at(const mpz_class& a, const mpz_class& b) const {
  // sum_k c_k a^k b^(n-k)
  mpz_class acc = 0;
  mpz_class bpow = 1;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * a + coeffs_[k] * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

IntPoly IntPoly::taylor_shift(const mpz_class& shift) const {
  std::vector<mpz_class> c = coeffs_;
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) mpz_addmul(c[j - 1].get_mpz_t(), c[j].get_mpz_t(), shift.get_mpz_t());
  return IntPoly(std::move(c));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  return exact_div(g);
}

IntPoly IntPoly::exact_div(const mpz_class& c) const {
  IntPoly r = *this;
  if (c == 1) return r;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::string IntPoly::to_list_string() const {
  std::string s = "[";
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ", ";
    s += coeffs_[k].get_str();
  }
  return s + "]";
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - db) + 1);
  mpz_class rem;
  for (int k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = r[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    mpz_tdiv_qr(q[static_cast<size_t>(k)].get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (rem != 0) return std::nullopt;
    const mpz_class& qk = q[static_cast<size_t>(k)];
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<size_t>(k + j)].get_mpz_t(), qk.get_mpz_t(), b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
  }
  for (int k = 0; k < db; ++k)
    if (r[static_cast<size_t>(k)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

void divmod_monic(const IntPoly& a, const IntPoly& monic, IntPoly& quot, IntPoly& rem) {
  if (!monic.is_monic()) throw InvalidInput("divmod_monic: divisor is not monic");
  const int db = monic.degree();
  if (a.degree() < db) {
    quot = {};
    rem = a;
    return;
  }
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<mpz_class> q(static_cast<size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    const mpz_class qk = r[static_cast<size_t>(k + db)];
    q[static_cast<size_t>(k)] = qk;
    if (qk == 0) continue;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<size_t>(k + j)].get_mpz_t(), qk.get_mpz_t(), monic.coeffs()[static_cast<size_t>(j)].get_mpz_t());
  }
  r.resize(static_cast<size_t>(db));
  quot = IntPoly(std::move(q));
  rem = IntPoly(std::move(r));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-remainder by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) {
    // lc(b)^(delta+1) with delta < 0 is taken as 1
    return a;
  }
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  const mpz_class& lb = b.leading();
  int steps = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    const mpz_class top = r[static_cast<size_t>(k)];
    for (int j = 0; j < k; ++j) r[static_cast<size_t>(j)] *= lb;
    r[static_cast<size_t>(k)] = 0;
    if (top != 0) {
      for (int j = 0; j < db; ++j)
        mpz_submul(r[static_cast<size_t>(k - db + j)].get_mpz_t(), top.get_mpz_t(), b.coeffs()[static_cast<size_t>(j)].get_mpz_t());
    }
    --steps;
  }
  (void)steps;
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class c;
  const mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return IntPoly::constant(c);
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u * c;
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidInput("resultant of the zero polynomial");
  // Subresultant PRS over Z.
  IntPoly A = f, B = g;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
  }
  if (B.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(A.degree()));
    return r * s;
  }
  const mpz_class a = A.content(), b = B.content();
  mpz_class t, tb;
  mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(B.degree()));
  mpz_pow_ui(tb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(A.degree()));
  t *= tb;
  A = A.exact_div(a);
  B = B.exact_div(b);
  mpz_class gg = 1, h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) return 0;
    A = std::move(B);
    mpz_class div;
    mpz_pow_ui(div.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    div *= gg;
    B = R.exact_div(div);
    gg = A.leading();
    // h = g^delta / h^(delta-1)
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta >= 1) {
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
      h = num * h;  // delta == 0: h^1 * g^0
    }
    if (B.degree() <= 0) break;
  }
  // B is a nonzero constant.
  const int da = A.degree();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(da));
  mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(da - 1));
  mpz_class hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return hh * t * s;
}

mpz_class discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of a constant polynomial");
  mpz_class r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

int count_real_roots(const IntPoly& f) {
  if (f.degree() < 1) return 0;
  IntPoly sf = squarefree_part(f);
  std::vector<IntPoly> seq{sf.primitive_part(), sf.derivative().primitive_part()};
  while (seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    // prem scales by lc(b)^(delta+1); undo its sign so the sequence stays Sturm.
    const int delta = a.degree() - b.degree();
    const bool flip = (b.leading() < 0) && ((delta + 1) % 2 == 1);
    if (!flip) r = -r;
    if (r.is_zero()) break;
    mpz_class c = r.content();
    seq.push_back(r.exact_div(c));
  }
  auto changes = [&](bool at_minus_inf) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      int s = sgn(p.leading());
      if (at_minus_inf && p.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return changes(true) - changes(false);
}

std::vector<SquarefreePart> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreePart> out;
  IntPoly p = f.primitive_part();
  if (p.degree() == 0) return out;
  IntPoly a = gcd(p, p.derivative()).primitive_part();
  IntPoly b = *divide_exact(p, a);
  IntPoly c = *divide_exact(p.derivative(), a);
  IntPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    IntPoly ai = gcd(b, d).primitive_part();
    IntPoly bn = *divide_exact(b, ai);
    IntPoly cn = *divide_exact(d, ai);
    if (ai.degree() > 0) out.push_back({ai, i});
    b = std::move(bn);
    d = cn - b.derivative();
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& f) {
  IntPoly r = IntPoly::constant(1);
  for (const auto& part : squarefree_decomposition(f)) r = r * part.poly;
  return r;
}

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  int v = 0;
  mpz_class m = n, q, r;
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    m = q;
    ++v;
  }
}

bool is_prime(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64; ++c) {
    mpz_class x = 2, y = 2, d = 1, q = 1, ys;
    const unsigned long batch = 128;
    unsigned long r = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      }
      r *= 2;
      if (r > (1ul << 26)) throw ResourceError("integer factorisation: Pollard rho gave up on " + n.get_str());
    }
    if (d == n) {
      do {
        ys = (ys * ys + c) % n;
        mpz_class t = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
  throw ResourceError("integer factorisation: Pollard rho failed on " + n.get_str());
}

void split_prime_factors(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_rho(n);
  split_prime_factors(d, out);
  split_prime_factors(n / d, out);
}

}  // namespace

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class m = abs(n);
  if (m == 0) throw InvalidInput("prime divisors of zero");
  for (unsigned long p = 2; p < 100000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0 && m > 1) {
      out.push_back(m);
      m = 1;
    }
  }
  if (m > 1) split_prime_factors(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(normalise(text)) {}

  std::vector<IntPoly> top_level() {
    skip_ws();
    if (peek() == '[') {
      std::vector<IntPoly> out{list()};
      expect_end();
      return out;
    }
    // Try to read a pure product; if a + or - follows at top level, fall back
    // to a full expression.
    const size_t start = pos_;
    std::vector<IntPoly> factors;
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    product(factors);
    skip_ws();
    if (pos_ == s_.size()) {
      if (negate) factors.insert(factors.begin(), IntPoly::constant(-1));
      return factors;
    }
    pos_ = start;
    IntPoly e = expr();
    expect_end();
    return {e};
  }

  IntPoly whole() {
    skip_ws();
    IntPoly r = peek() == '[' ? list() : expr();
    expect_end();
    return r;
  }

 private:
  static std::string normalise(std::string_view t) {
    std::string out;
    for (size_t i = 0; i < t.size(); ++i) {
      // U+2212 MINUS SIGN, U+00B7 and U+22C5 dots
      if (i + 2 < t.size() && static_cast<unsigned char>(t[i]) == 0xE2 && static_cast<unsigned char>(t[i + 1]) == 0x88 &&
          static_cast<unsigned char>(t[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += t[i];
      }
    }
    return out;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
  }

  mpz_class integer() {
    skip_ws();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(b, pos_ - b)));
  }

  IntPoly list() {
    expect('[');
    std::vector<mpz_class> c;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return {};
    }
    while (true) {
      skip_ws();
      bool neg = false;
      if (peek() == '-' || peek() == '+') {
        neg = peek() == '-';
        ++pos_;
      }
      mpz_class v = integer();
      c.push_back(neg ? mpz_class(-v) : v);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    return IntPoly(std::move(c));
  }

  IntPoly expr() {
    skip_ws();
    IntPoly acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      std::vector<IntPoly> fs;
      product(fs);
      IntPoly t = IntPoly::constant(sign);
      for (const auto& f : fs) t = t * f;
      acc += t;
      first = false;
    }
    return acc;
  }

  bool starts_atom() {
    skip_ws();
    char c = peek();
    return c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c));
  }

  void product(std::vector<IntPoly>& out) {
    power(out);
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        power(out);
      } else if (starts_atom()) {
        power(out);  // implicit multiplication: (..)(..), 2x, 3(x+1)
      } else {
        break;
      }
    }
  }

  void power(std::vector<IntPoly>& out) {
    IntPoly b = atom();
    skip_ws();
    long e = 1;
    if (peek() == '^') {
      ++pos_;
      mpz_class v = integer();
      if (v > 4096) fail("exponent too large");
      e = v.get_si();
    }
    for (long i = 0; i < e; ++i) out.push_back(b);
    if (e == 0) out.push_back(IntPoly::constant(1));
  }

  IntPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      IntPoly e = expr();
      expect(')');
      return e;
    }
    if (c == 'x') {
      ++pos_;
      return IntPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(integer());
    fail("expected '(', 'x' or an integer");
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).whole(); }

std::vector<IntPoly> parse_factors(std::string_view text) { return Parser(text).top_level(); }

}  // namespace rootcover
