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
#include <optional>
#include <string>
#include <vector>

#include "rootcover/perm.hpp"

namespace rootcover {

inline constexpr std::size_t kDefaultSubgroupEnumCap = 1000;

struct CoverReport {
  bool covered = false;
  std::optional<Perm> witness;          // least element outside every conjugate
  std::vector<std::size_t> per_subgroup;  // |union of conjugates of A_i|
  bool has_conjugate_pair = false;      // some A_i, A_j (i != j) are conjugate in G
};

/// Whether G is the union of the conjugates of the given proper subgroups.
CoverReport covers(const PermGroup& g, const std::vector<PermGroup>& subs);

/// Whether the intersection of all conjugates of all subgroups is trivial.
bool joint_core_trivial(const PermGroup& g, const std::vector<PermGroup>& subs);

/// Normal core of one subgroup.
PermGroup core(const PermGroup& g, const PermGroup& a);

bool are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b);

struct SubgroupClass {
  PermGroup representative;
  std::size_t conjugates;  // [G : N_G(rep)]
};

/// One representative per conjugacy class of subgroups with order >=
/// min_order, sorted by order then element list. ResourceError if |G| > cap.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, std::size_t min_order = 1,
                                            std::size_t enum_cap = kDefaultSubgroupEnumCap);

/// The classes of maximal subgroups.
std::vector<SubgroupClass> maximal_subgroup_classes(const PermGroup& g,
                                                    std::size_t enum_cap = kDefaultSubgroupEnumCap);

struct MinCover {
  int m;
  std::vector<PermGroup> subgroups;
};

/// Smallest m <= max_m such that m maximal subgroup classes cover G by
/// conjugates with trivial joint core.
std::optional<MinCover> min_cover_m(const PermGroup& g, int max_m,
                                    std::size_t enum_cap = kDefaultSubgroupEnumCap);

struct FrobeniusStructure {
  PermGroup kernel;
  PermGroup complement;  // stabiliser of point 1
  bool kernel_normal;
  bool order_product;  // |G| = |Q| |H|
  bool malnormal;      // H meets H^x trivially for every x outside H
  bool kernel_nilpotent;
  bool kernel_abelian;

  bool all_checks() const { return kernel_normal && order_product && malnormal && kernel_nilpotent; }
};

/// nullopt unless G is a Frobenius group on its points. InvalidInput when G
/// is intransitive.
std::optional<FrobeniusStructure> frobenius_structure(const PermGroup& g);

struct Lemma24Report {
  std::size_t classes_checked = 0;  // subgroup classes D with D meeting Q trivially
  std::vector<PermGroup> violations;
  bool passed() const { return violations.empty(); }
};

/// Every subgroup D with D and the kernel meeting trivially lies in a
/// conjugate of the complement.
Lemma24Report lemma24_check(const PermGroup& g, const FrobeniusStructure& fs,
                            std::size_t enum_cap = kDefaultSubgroupEnumCap);

struct CatalogGroup {
  std::string name;  // "F5:C4", "F9:Q8", ...
  PermGroup group;
  std::size_t kernel_order;
  bool complement_cyclic;
};

/// Affine Frobenius groups F_q : C_d (d | q-1, d > 1) on q points and
/// F_3^2 : Q_8, all with order <= max_order, sorted by (order, degree, name).
std::vector<CatalogGroup> frobenius_catalog(std::size_t max_order, std::size_t enum_cap = kDefaultSubgroupEnumCap);

}  // namespace rootcover
