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


#include "rootcover/groups.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "rootcover/errors.hpp"

namespace rootcover {
namespace {

void check_proper_subgroups(const PermGroup& g, const std::vector<PermGroup>& subs) {
  for (const auto& a : subs) {
    if (a.degree() != g.degree()) throw InvalidInput("subgroup degree differs from group degree");
    for (const auto& s : a.generators())
      if (!g.contains(s)) throw InvalidInput("not a subgroup: generator " + s.to_string() + " lies outside G");
    if (a.order() >= g.order()) throw InvalidInput("subgroup of order " + std::to_string(a.order()) + " is not proper");
  }
}

// Per-class masks of G: which conjugacy classes a subgroup meets, and which
// it contains entirely (the latter make up its normal core).
struct ClassMasks {
  std::vector<char> meets;
  std::vector<char> contains;
};

ClassMasks class_masks(const PermGroup& g, const std::vector<std::size_t>& ids,
                       const std::vector<std::vector<std::size_t>>& classes, const PermGroup& a) {
  ClassMasks m{std::vector<char>(classes.size(), 0), std::vector<char>(classes.size(), 0)};
  std::vector<std::size_t> hits(classes.size(), 0);
  for (const auto& e : a.elements()) ++hits[ids[*g.index_of(e)]];
  for (std::size_t c = 0; c < classes.size(); ++c) {
    m.meets[c] = hits[c] > 0;
    m.contains[c] = hits[c] == classes[c].size();
  }
  return m;
}

// --- subgroup enumeration over a multiplication table ---

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

class Table {
 public:
  explicit Table(const PermGroup& g) : n_(g.order()), mul_(n_ * n_), inv_(n_) {
    const auto& el = g.elements();
    for (std::size_t i = 0; i < n_; ++i) {
      inv_[i] = static_cast<std::uint32_t>(*g.index_of(el[i].inverse()));
      for (std::size_t j = 0; j < n_; ++j) mul_[i * n_ + j] = static_cast<std::uint32_t>(*g.index_of(el[i] * el[j]));
    }
  }
  std::size_t size() const { return n_; }
  std::size_t words() const { return (n_ + 63) / 64; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t conj(std::size_t e, std::size_t x) const { return mul(mul(inv_[x], e), x); }

  Bits closure(const std::vector<std::size_t>& gens, std::size_t* order = nullptr) const {
    Bits b(words(), 0);
    std::vector<std::size_t> list{0};
    set(b, 0);
    for (std::size_t h = 0; h < list.size(); ++h)
      for (auto s : gens) {
        auto k = mul(list[h], s);
        if (!test(b, k)) {
          set(b, k);
          list.push_back(k);
        }
      }
    if (order) *order = list.size();
    return b;
  }
  Bits conjugate(const Bits& a, std::size_t x) const {
    Bits b(words(), 0);
    for (std::size_t i = 0; i < n_; ++i)
      if (test(a, i)) set(b, conj(i, x));
    return b;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

struct EnumClass {
  Bits bits;
  std::vector<std::size_t> gens;
  std::size_t order;
  std::vector<Bits> conjugates;
};

// All conjugacy classes of subgroups, by repeatedly joining known class
// representatives with cyclic subgroups of prime-power order. Every subgroup
// is generated by its prime-power elements, so each class is reached.
std::vector<EnumClass> enumerate(const PermGroup& g, const Table& t) {
  std::vector<std::size_t> cyclic_gens;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t i = 1; i < t.size(); ++i) {
      long o = g.elements()[i].order();
      long q = o;
      long p = 2;
      while (q % p) ++p;
      while (q % p == 0) q /= p;
      if (q != 1) continue;
      if (seen.insert(t.closure({i})).second) cyclic_gens.push_back(i);
    }
  }

  std::vector<EnumClass> classes;
  std::unordered_map<Bits, std::size_t, BitsHash> known;
  auto add = [&](Bits bits, std::vector<std::size_t> gens, std::size_t order) {
    EnumClass c{std::move(bits), std::move(gens), order, {}};
    std::unordered_set<Bits, BitsHash> conj;
    for (std::size_t x = 0; x < t.size(); ++x) {
      Bits b = t.conjugate(c.bits, x);
      if (conj.insert(b).second) {
        known.emplace(b, classes.size());
        c.conjugates.push_back(std::move(b));
      }
    }
    classes.push_back(std::move(c));
  };
  add(t.closure({}), {}, 1);
  for (std::size_t w = 0; w < classes.size(); ++w) {
    for (auto c : cyclic_gens) {
      if (test(classes[w].bits, c)) continue;
      auto gens = classes[w].gens;
      gens.push_back(c);
      std::size_t order = 0;
      Bits b = t.closure(gens, &order);
      if (known.count(b)) continue;
      add(std::move(b), std::move(gens), order);
    }
  }
  return classes;
}

std::vector<std::size_t> members(const Bits& b, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (test(b, i)) out.push_back(i);
  return out;
}

std::vector<SubgroupClass> to_classes(const PermGroup& g, const Table& t, const std::vector<EnumClass>& cls,
                                      const std::vector<std::size_t>& pick) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sorted;
  for (auto i : pick) sorted.emplace_back(members(cls[i].bits, t.size()), i);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<SubgroupClass> out;
  for (const auto& [mem, i] : sorted) {
    std::vector<Perm> el;
    for (auto k : mem) el.push_back(g.elements()[k]);
    out.push_back({PermGroup::from_elements(g.degree(), std::move(el)), cls[i].conjugates.size()});
  }
  return out;
}

void check_enum_cap(const PermGroup& g, std::size_t cap) {
  if (g.order() > cap)
    throw ResourceError("subgroup enumeration cap " + std::to_string(cap) + " below group order " +
                        std::to_string(g.order()));
}

std::vector<std::size_t> maximal_indices(const std::vector<EnumClass>& cls, std::size_t group_order) {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < cls.size(); ++h) {
    if (cls[h].order == group_order) continue;
    bool maximal = true;
    for (std::size_t k = 0; k < cls.size() && maximal; ++k) {
      if (cls[k].order == group_order || cls[k].order <= cls[h].order || cls[k].order % cls[h].order) continue;
      for (const auto& c : cls[h].conjugates)
        if (subset(c, cls[k].bits)) {
          maximal = false;
          break;
        }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

CoverReport covers(const PermGroup& g, const std::vector<PermGroup>& subs) {
  check_proper_subgroups(g, subs);
  const auto ids = g.class_ids();
  const auto classes = g.conjugacy_classes();
  CoverReport r;
  std::vector<char> hit(classes.size(), 0);
  for (const auto& a : subs) {
    auto m = class_masks(g, ids, classes, a);
    std::size_t n = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (m.meets[c]) {
        n += classes[c].size();
        hit[c] = 1;
      }
    r.per_subgroup.push_back(n);
  }
  r.covered = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  if (!r.covered) {
    for (std::size_t i = 0; i < g.order(); ++i)
      if (!hit[ids[i]]) {
        r.witness = g.elements()[i];
        break;
      }
  }
  for (std::size_t i = 0; i < subs.size() && !r.has_conjugate_pair; ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (are_conjugate(g, subs[i], subs[j])) {
        r.has_conjugate_pair = true;
        break;
      }
  return r;
}

bool joint_core_trivial(const PermGroup& g, const std::vector<PermGroup>& subs) {
  check_proper_subgroups(g, subs);
  const auto ids = g.class_ids();
  const auto classes = g.conjugacy_classes();
  std::vector<char> in_all(classes.size(), 1);
  for (const auto& a : subs) {
    auto m = class_masks(g, ids, classes, a);
    for (std::size_t c = 0; c < classes.size(); ++c) in_all[c] = in_all[c] && m.contains[c];
  }
  // class 0 is the identity
  return std::count(in_all.begin(), in_all.end(), 1) == 1;
}

PermGroup core(const PermGroup& g, const PermGroup& a) {
  const auto ids = g.class_ids();
  const auto classes = g.conjugacy_classes();
  auto m = class_masks(g, ids, classes, a);
  std::vector<Perm> el;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (m.contains[c])
      for (auto i : classes[c]) el.push_back(g.elements()[i]);
  return PermGroup::from_elements(g.degree(), std::move(el));
}

bool are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order() || a.degree() != b.degree()) return false;
  for (const auto& x : g.elements()) {
    bool inside = true;
    for (const auto& s : a.generators())
      if (!b.contains(s.conjugated_by(x))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, std::size_t min_order, std::size_t enum_cap) {
  check_enum_cap(g, enum_cap);
  Table t(g);
  auto cls = enumerate(g, t);
  std::vector<std::size_t> pick;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i].order >= min_order) pick.push_back(i);
  return to_classes(g, t, cls, pick);
}

std::vector<SubgroupClass> maximal_subgroup_classes(const PermGroup& g, std::size_t enum_cap) {
  check_enum_cap(g, enum_cap);
  Table t(g);
  auto cls = enumerate(g, t);
  return to_classes(g, t, cls, maximal_indices(cls, g.order()));
}

std::optional<MinCover> min_cover_m(const PermGroup& g, int max_m, std::size_t enum_cap) {
  if (g.is_cyclic()) return std::nullopt;
  // Any cover by conjugates extends to one by maximal overgroups, so only
  // maximal classes are searched.
  auto maxes = maximal_subgroup_classes(g, enum_cap);
  const auto ids = g.class_ids();
  const auto classes = g.conjugacy_classes();
  std::vector<ClassMasks> masks;
  for (const auto& c : maxes) masks.push_back(class_masks(g, ids, classes, c.representative));

  const std::size_t k = maxes.size();
  for (std::size_t m = 1; m <= std::min<std::size_t>(static_cast<std::size_t>(std::max(max_m, 0)), k); ++m) {
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    do {
      // Conjugates of A cover at most |G| - [G:A] + 1 elements, so two
      // classes can only cover when [G:A1] + [G:A2] <= |G| + 1.
      if (m == 2 && g.order() / maxes[pick[0]].representative.order() +
                            g.order() / maxes[pick[1]].representative.order() >
                        g.order() + 1)
        continue;
      bool all = true;
      for (std::size_t c = 0; c < classes.size() && all; ++c)
        all = std::any_of(pick.begin(), pick.end(), [&](std::size_t i) { return masks[i].meets[c] != 0; });
      if (!all) continue;
      bool trivial = true;
      for (std::size_t c = 1; c < classes.size() && trivial; ++c)
        trivial = !std::all_of(pick.begin(), pick.end(), [&](std::size_t i) { return masks[i].contains[c] != 0; });
      if (!trivial) continue;
      MinCover out{static_cast<int>(m), {}};
      for (auto i : pick) out.subgroups.push_back(maxes[i].representative);
      return out;
    } while (next_combination(pick, k));
  }
  return std::nullopt;
}

std::optional<FrobeniusStructure> frobenius_structure(const PermGroup& g) {
  if (!g.is_transitive()) throw InvalidInput("frobenius_structure needs a transitive group");
  bool point_stabilised = false;
  std::vector<Perm> kernel;
  for (const auto& e : g.elements()) {
    if (e.is_identity()) {
      kernel.push_back(e);
      continue;
    }
    const auto f = e.fixed_points();
    if (f >= 2) return std::nullopt;
    if (f == 1) point_stabilised = true;
    else kernel.push_back(e);
  }
  if (!point_stabilised) return std::nullopt;

  PermGroup q = PermGroup::from_elements(g.degree(), kernel);
  for (const auto& s : q.generators())
    for (const auto& e : q.elements())
      if (!q.contains(s * e)) throw InternalError("fixed-point-free elements do not form a subgroup");
  PermGroup h = g.stabilizer(0);

  FrobeniusStructure fs{q, h, true, g.order() == q.order() * h.order(), true, true, q.is_abelian()};
  for (const auto& s : g.generators())
    for (const auto& k : q.generators())
      if (!q.contains(k.conjugated_by(s))) fs.kernel_normal = false;

  for (const auto& x : g.elements()) {
    if (h.contains(x)) continue;
    for (const auto& e : h.elements())
      if (!e.is_identity() && h.contains(e.conjugated_by(x))) {
        fs.malnormal = false;
        break;
      }
    if (!fs.malnormal) break;
  }

  // nilpotent iff every Sylow subgroup is normal iff, for each prime p, the
  // p-elements number exactly the p-part of the order
  std::size_t rest = q.order();
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    std::size_t part = 1;
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
    std::size_t count = 0;
    for (const auto& e : q.elements()) {
      long o = e.order();
      while (o % static_cast<long>(p) == 0) o /= static_cast<long>(p);
      count += o == 1;
    }
    if (count != part) fs.kernel_nilpotent = false;
  }
  return fs;
}

Lemma24Report lemma24_check(const PermGroup& g, const FrobeniusStructure& fs, std::size_t enum_cap) {
  Lemma24Report r;
  for (const auto& cls : subgroup_classes(g, 1, enum_cap)) {
    const auto& d = cls.representative;
    bool meets_kernel = std::any_of(d.elements().begin(), d.elements().end(),
                                    [&](const Perm& e) { return !e.is_identity() && fs.kernel.contains(e); });
    if (meets_kernel) continue;
    ++r.classes_checked;
    bool inside = std::any_of(g.elements().begin(), g.elements().end(), [&](const Perm& x) {
      return std::all_of(d.generators().begin(), d.generators().end(),
                         [&](const Perm& s) { return fs.complement.contains(s.conjugated_by(x)); });
    });
    if (!inside) r.violations.push_back(d);
  }
  return r;
}

}  // namespace rootcover
