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

#include <cstdint>
#include <vector>

#include "rootcover/intpoly.hpp"

namespace rootcover {

struct QFactor {
  IntPoly poly;  // primitive, positive leading coefficient, irreducible over Q
  int multiplicity;
  friend bool operator==(const QFactor&, const QFactor&) = default;
};

/// f = constant * prod factor^multiplicity, factors in canonical order.
struct QFactorization {
  mpq_class constant;
  std::vector<QFactor> factors;

  IntPoly expand() const;  // requires an integral constant
};

inline constexpr int kDefaultFactorDegreeCap = 24;

/// Complete factorisation over Q: squarefree decomposition, then per part a
/// good prime, Hensel lifting to a Mignotte-type bound and subset
/// recombination. Throws ResourceError beyond `degree_cap`.
QFactorization factor_over_rationals(const IntPoly& f, int degree_cap = kDefaultFactorDegreeCap,
                                     std::uint64_t seed = 0x5eed);

/// Irreducible factors of a squarefree primitive polynomial, no degree cap.
/// Used internally for norms of field extensions.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, std::uint64_t seed = 0x5eed);

bool is_irreducible(const IntPoly& f, std::uint64_t seed = 0x5eed);

/// Sorted degrees of the irreducible factors of f mod p. Requires p not
/// dividing disc(f) (checked via the reduction being squarefree of full
/// degree); throws InvalidInput otherwise.
std::vector<int> cycle_type(const IntPoly& f, unsigned long p, std::uint64_t seed = 0x5eed);

/// Primes in increasing order starting at 2, as many as requested.
std::vector<unsigned long> first_primes(std::size_t count);

}  // namespace rootcover
