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


#include "crosscheck.hpp"

#include <vector>

namespace rootcover::cli {

namespace {

std::vector<std::uint64_t> sieve(std::uint64_t bound) {
  std::vector<bool> comp(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
  }
  return out;
}

// f reduced mod q, evaluated by Horner with 128-bit products.
class Reduced {
 public:
  Reduced(const IntPoly& f, std::uint64_t q) : q_(q) {
    mpz_class r;
    for (const auto& c : f.coeffs()) {
      mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), q);
      c_.push_back(r.get_ui());
    }
  }
  std::uint64_t operator()(std::uint64_t a) const {
    unsigned __int128 acc = 0;
    for (auto k = c_.size(); k-- > 0;) acc = (acc * a + c_[k]) % q_;
    return static_cast<std::uint64_t>(acc);
  }

 private:
  std::uint64_t q_;
  std::vector<std::uint64_t> c_;
};

bool has_root(const IntPoly& f, std::uint64_t q) {
  Reduced r(f, q);
  for (std::uint64_t a = 0; a < q; ++a)
    if (r(a) == 0) return true;
  return false;
}

}  // namespace

std::optional<std::uint64_t> scan_rootless_prime(const IntPoly& f, std::uint64_t bound) {
  for (auto p : sieve(bound))
    if (!has_root(f, p)) return p;
  return std::nullopt;
}

std::optional<std::uint64_t> scan_rootless_modulus(const IntPoly& f, std::uint64_t bound) {
  std::optional<std::uint64_t> best;
  for (auto p : sieve(bound)) {
    if (best && p >= *best) break;
    // Roots mod p^(k+1) reduce to roots mod p^k, so lift the full set.
    std::vector<std::uint64_t> roots;
    Reduced fp(f, p);
    for (std::uint64_t a = 0; a < p; ++a)
      if (fp(a) == 0) {
        roots.push_back(a);
        if (p * p > bound) break;
      }
    std::uint64_t q = p;
    while (!roots.empty() && q * p <= bound) {
      Reduced fq(f, q * p);
      std::vector<std::uint64_t> next;
      for (auto r : roots)
        for (std::uint64_t t = 0; t < p; ++t)
          if (fq(r + t * q) == 0) next.push_back(r + t * q);
      roots = std::move(next);
      q *= p;
    }
    if (roots.empty() && (!best || q < *best)) best = q;
  }
  return best;
}

}  // namespace rootcover::cli
