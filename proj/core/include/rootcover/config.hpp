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

#include <cstddef>
#include <cstdint>

namespace rootcover {

/// Resource caps and the PRNG seed shared by every command.
struct Config {
  std::size_t group_order_cap = 10080;
  int splitting_degree_cap = 24;
  std::size_t subgroup_enum_cap = 1000;
  std::uint64_t padic_node_cap = 1'000'000;
  std::size_t prime_sample_count = 200;
  std::uint64_t oracle_scan_bound = 100'000;
  std::uint64_t prng_seed = 0x5eed;
};

}  // namespace rootcover
