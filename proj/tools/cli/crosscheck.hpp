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
#include <optional>

#include "rootcover/intpoly.hpp"

namespace rootcover::cli {

// Direct scans used by --cross-check. They evaluate f at every residue and
// share nothing with the decision procedure.

/// Least prime p <= bound with no root of f mod p.
std::optional<std::uint64_t> scan_rootless_prime(const IntPoly& f, std::uint64_t bound);

/// Least prime power q <= bound with no root of f mod q. None means f has a
/// root mod every n <= bound (CRT).
std::optional<std::uint64_t> scan_rootless_modulus(const IntPoly& f, std::uint64_t bound);

}  // namespace rootcover::cli
