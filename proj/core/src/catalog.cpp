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


#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "rootcover/errors.hpp"
#include "rootcover/groups.hpp"
#include "rootcover/modpoly.hpp"

namespace rootcover {
namespace {

// GF(p^k) with elements encoded as base-p digit strings c0 + c1 p + ...
class SmallField {
 public:
  SmallField(unsigned p, unsigned k) : p_(p), k_(k), q_(1) {
    for (unsigned i = 0; i < k; ++i) q_ *= p;
    modulus_ = find_irreducible();
  }

  unsigned size() const { return q_; }

  unsigned add(unsigned a, unsigned b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }

  unsigned mul(unsigned a, unsigned b) const {
    auto x = digits(a), y = digits(b);
    std::vector<unsigned> z(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
    // reduce by the monic modulus of degree k
    for (unsigned d = 2 * k_ - 1; d >= k_ && d < 2 * k_; --d) {
      const unsigned c = z[d];
      if (!c) continue;
      for (unsigned i = 0; i <= k_; ++i) z[d - k_ + i] = (z[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    z.resize(k_);
    return encode(z);
  }

  unsigned primitive_element() const {
    for (unsigned a = 1; a < q_; ++a) {
      unsigned x = a, ord = 1;
      while (x != 1) {
        x = mul(x, a);
        ++ord;
      }
      if (ord == q_ - 1) return a;
    }
    throw InternalError("no primitive element");
  }

  unsigned power(unsigned a, unsigned e) const {
    unsigned r = 1;
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

 private:
  std::vector<unsigned> digits(unsigned a) const {
    std::vector<unsigned> d(k_);
    for (unsigned i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  unsigned encode(const std::vector<unsigned>& d) const {
    unsigned a = 0;
    for (unsigned i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }
  // Least monic irreducible of degree k, coefficients c0..c_{k-1} counted
  // as a base-p number. Degree 1 uses x itself.
  std::vector<unsigned> find_irreducible() const {
    if (k_ == 1) return {0, 1};
    for (unsigned code = 0; code < q_; ++code) {
      auto c = digits(code);
      std::vector<ModPoly::Residue> coeffs(c.begin(), c.end());
      coeffs.push_back(1);
      auto fs = factor_mod_p(ModPoly(p_, coeffs));
      if (fs.size() == 1 && fs[0].multiplicity == 1 && fs[0].poly.degree() == static_cast<int>(k_)) {
        c.push_back(1);
        return c;
      }
    }
    throw InternalError("no irreducible polynomial found");
  }

  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;
};

Perm map_perm(unsigned q, const std::function<unsigned(unsigned)>& f) {
  std::vector<int> img(q);
  for (unsigned x = 0; x < q; ++x) img[x] = static_cast<int>(f(x)) + 1;
  return Perm::from_images(img);
}

bool prime_power(unsigned q, unsigned& p, unsigned& k) {
  if (q < 2) return false;
  p = 2;
  while (q % p) ++p;
  k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1;
}

PermGroup affine_group(const SmallField& f, unsigned p, unsigned k, unsigned d) {
  const unsigned q = f.size();
  std::vector<Perm> gens;
  unsigned e = 1;
  for (unsigned i = 0; i < k; ++i, e *= p) gens.push_back(map_perm(q, [&](unsigned x) { return f.add(x, e); }));
  const unsigned c = f.power(f.primitive_element(), (q - 1) / d);
  gens.push_back(map_perm(q, [&](unsigned x) { return f.mul(c, x); }));
  return PermGroup::closure(gens, q, static_cast<std::size_t>(q) * d);
}

// C_3^2 : Q_8 on the vectors of F_3^2, Q_8 = <[[0,-1],[1,0]], [[1,1],[1,-1]]>.
PermGroup q8_group() {
  auto enc = [](int a, int b) { return static_cast<unsigned>(((a % 3 + 3) % 3) + 3 * ((b % 3 + 3) % 3)); };
  auto matrix = [&](int m00, int m01, int m10, int m11) {
    return map_perm(9, [=](unsigned x) {
      const int a = static_cast<int>(x % 3), b = static_cast<int>(x / 3);
      return enc(m00 * a + m01 * b, m10 * a + m11 * b);
    });
  };
  std::vector<Perm> gens{map_perm(9, [&](unsigned x) { return enc(static_cast<int>(x % 3) + 1, static_cast<int>(x / 3)); }),
                         map_perm(9, [&](unsigned x) { return enc(static_cast<int>(x % 3), static_cast<int>(x / 3) + 1); }),
                         matrix(0, -1, 1, 0), matrix(1, 1, 1, -1)};
  return PermGroup::closure(gens, 9, 72);
}

}  // namespace

std::vector<CatalogGroup> frobenius_catalog(std::size_t max_order, std::size_t enum_cap) {
  if (max_order > enum_cap)
    throw ResourceError("catalog order " + std::to_string(max_order) + " exceeds enumeration cap " +
                        std::to_string(enum_cap));
  std::vector<CatalogGroup> out;
  // (order, degree, kernel order, complement cyclic); the last entry keeps
  // F9:C8 and F9:Q8 apart.
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, bool>> keys;
  auto admit = [&](std::string name, PermGroup g) {
    auto fs = frobenius_structure(g);
    if (!fs || !fs->all_checks()) throw InternalError(name + " is not a Frobenius group");
    const bool cyc = fs->complement.is_cyclic();
    if (!keys.emplace(g.order(), g.degree(), fs->kernel.order(), cyc).second) return;
    out.push_back({std::move(name), std::move(g), fs->kernel.order(), cyc});
  };
  for (unsigned q = 3; 2UL * q <= max_order; ++q) {
    unsigned p, k;
    if (!prime_power(q, p, k)) continue;
    SmallField f(p, k);
    for (unsigned d = 2; d < q; ++d) {
      if ((q - 1) % d || static_cast<std::size_t>(q) * d > max_order) continue;
      admit("F" + std::to_string(q) + ":C" + std::to_string(d), affine_group(f, p, k, d));
    }
  }
  if (max_order >= 72) admit("F9:Q8", q8_group());
  std::sort(out.begin(), out.end(), [](const CatalogGroup& a, const CatalogGroup& b) {
    return std::make_tuple(a.group.order(), a.group.degree(), a.name) < std::make_tuple(b.group.order(), b.group.degree(), b.name);
  });
  return out;
}

}  // namespace rootcover
