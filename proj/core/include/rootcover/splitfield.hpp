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
#include <vector>

#include "rootcover/intpoly.hpp"
#include "rootcover/numfield.hpp"
#include "rootcover/perm.hpp"

namespace rootcover {

inline constexpr int kDefaultSplittingDegreeCap = 24;

struct RootBlock {
  IntPoly factor;
  std::vector<FieldElement> roots;  // canonical order; labels consecutive
  std::size_t first_label;          // 0-based label of roots[0]
};

struct SplittingData {
  NumberField field;
  std::vector<RootBlock> blocks;  // factors in canonical order
  PermGroup group;                // on root labels
  std::vector<PermGroup> stabilizers;  // A_i = stabiliser of blocks[i].first_label
  std::vector<FieldElement> automorphisms;  // images of the field generator
};

/// Splitting field of a product of distinct monic irreducible factors, its
/// Galois group on the labelled roots and the stabilisers of each factor's
/// first root. ResourceError names the partial degree once `degree_cap`
/// would be exceeded.
SplittingData splitting_data(const std::vector<IntPoly>& factors, int degree_cap = kDefaultSplittingDegreeCap);

}  // namespace rootcover
