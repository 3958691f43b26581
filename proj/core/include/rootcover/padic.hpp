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
#include <optional>
#include <variant>
#include <vector>

#include "rootcover/intpoly.hpp"

namespace rootcover {

struct PadicLimits {
  std::uint64_t node_cap = 1'000'000;  // residues kept across all levels
  unsigned modulus_bits_cap = 4096;    // bound on log2(p^k)
};

/// Hensel witness: g(a) has valuation val_g (nullopt when g(a) = 0) and
/// val_g > 2 * val_gprime, so a lifts to a root in Z_p.
struct HenselCertificate {
  mpz_class residue;
  int modulus_exponent;  // a is a root mod p^modulus_exponent
  std::optional<int> val_g;
  int val_gprime;
  friend bool operator==(const HenselCertificate&, const HenselCertificate&) = default;
};

/// No residue mod p^level is a root.
struct Exhausted {
  int level;
  friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

struct PadicReport {
  mpz_class prime;
  int depth_used;  // deepest level reached by the lifting
  int horizon;     // 2 v_p(disc g) + 1
  bool has_root;
  std::variant<HenselCertificate, Exhausted> certificate;
};

/// All a in [0, p^k) with g(a) = 0 mod p^k, ascending. g monic with nonzero
/// discriminant. Throws ResourceError when p^k or the node count exceeds the
/// limits; the message names the deepest completed level.
std::vector<mpz_class> zp_roots_to_depth(const IntPoly& g, const mpz_class& p, int k,
                                         const PadicLimits& limits = {});

/// Whether g has a root in Z_p, decided by lifting to depth 2 v_p(disc g) + 1
/// with early exit on the first residue meeting the Hensel inequality.
PadicReport has_qp_root(const IntPoly& g, const mpz_class& p, const PadicLimits& limits = {});

/// Re-derives the certificate inequality from scratch.
bool verify_certificate(const IntPoly& g, const mpz_class& p, const HenselCertificate& c);

}  // namespace rootcover
