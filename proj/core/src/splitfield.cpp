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


#include "rootcover/splitfield.hpp"

#include <algorithm>
#include <functional>

#include "rootcover/errors.hpp"
#include "rootcover/factor.hpp"
#include "rootcover/groups.hpp"

namespace rootcover {
namespace {

struct Tracked {
  IntPoly factor;
  std::vector<FieldElement> roots;
  std::vector<FieldPoly> pending;  // nonlinear, irreducible over the current field
};

// Split every pending factor over the current field, moving linear parts to
// the root lists.
void refine(std::vector<Tracked>& ts) {
  for (auto& t : ts) {
    std::vector<FieldPoly> still;
    for (const auto& p : t.pending)
      for (auto& u : factor_over_field(p)) {
        if (u.degree() == 1) t.roots.push_back(-u.coeffs()[0]);
        else still.push_back(std::move(u));
      }
    t.pending = std::move(still);
  }
}

}  // namespace

SplittingData splitting_data(const std::vector<IntPoly>& factors, int degree_cap) {
  if (factors.empty()) throw InvalidInput("splitting_data: no factors");
  std::vector<IntPoly> fs = factors;
  std::sort(fs.begin(), fs.end(), [](const IntPoly& a, const IntPoly& b) { return canonical_less(a, b); });
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].degree() < 1 || !fs[i].is_monic()) throw InvalidInput("splitting_data: factor not monic: " + fs[i].to_string());
    if (i > 0 && fs[i] == fs[i - 1]) throw InvalidInput("splitting_data: repeated factor " + fs[i].to_string());
    if (!is_irreducible(fs[i])) throw InvalidInput("splitting_data: factor is reducible: " + fs[i].to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (gcd(fs[i], fs[j]).degree() > 0)
        throw InvalidInput("splitting_data: factors " + fs[j].to_string() + " and " + fs[i].to_string() +
                           " share a root");
  }

  NumberField K = NumberField::rationals();
  std::vector<Tracked> ts;
  for (const auto& f : fs) ts.push_back({f, {}, {FieldPoly::from_int(K, f)}});
  // adjoined roots as (factor index, element); the generator of K is an
  // integer combination of them with these coefficients
  std::vector<std::size_t> adjoined_factor;
  std::vector<long> gen_coeffs;

  while (true) {
    refine(ts);
    const Tracked* pick_t = nullptr;
    const FieldPoly* pick = nullptr;
    for (const auto& t : ts)
      for (const auto& p : t.pending)
        if (!pick || p.degree() < pick->degree()) {
          pick = &p;
          pick_t = &t;
        }
    if (!pick) break;
    const std::size_t which = static_cast<std::size_t>(pick_t - ts.data());
    const FieldPoly h = *pick;
    Extension ext = primitive_element(h, degree_cap);

    // new generator = root + k * old generator
    for (auto& c : gen_coeffs) c *= ext.k;
    gen_coeffs.push_back(1);
    adjoined_factor.push_back(which);

    for (auto& t : ts) {
      for (auto& r : t.roots) r = embed(r, ext.generator_image);
      std::vector<FieldPoly> moved;
      for (const auto& p : t.pending) {
        if (&t == pick_t && p == h) continue;
        moved.push_back(embed(p, ext.generator_image));
      }
      t.pending = std::move(moved);
    }
    FieldPoly q(ext.field, {}), rem(ext.field, {});
    divmod(embed(h, ext.generator_image), FieldPoly::x_minus(ext.root), q, rem);
    if (!rem.is_zero()) throw InternalError("splitting_data: adjoined root does not divide its factor");
    ts[which].roots.push_back(ext.root);
    if (q.degree() >= 1) ts[which].pending.push_back(q);
    K = ext.field;
  }

  SplittingData out{K, {}, PermGroup::closure({}, 1), {}, {}};
  std::size_t label = 0;
  for (auto& t : ts) {
    if (static_cast<int>(t.roots.size()) != t.factor.degree())
      throw InternalError("splitting_data: wrong root count for " + t.factor.to_string());
    std::sort(t.roots.begin(), t.roots.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_less(a, b); });
    out.blocks.push_back({t.factor, t.roots, label});
    label += t.roots.size();
  }
  const std::size_t n = label;

  // Automorphisms: the generator is sum_t c_t r_t over adjoined roots r_t,
  // and any automorphism maps r_t to a root of the same factor. Candidates
  // that are roots of the minimal polynomial are exactly the automorphisms.
  const FieldElement gamma = K.generator();
  const FieldPoly minpoly = FieldPoly::from_int(K, K.minpoly());
  std::vector<FieldElement> images;
  std::vector<std::size_t> pick(adjoined_factor.size(), 0);
  std::function<void(std::size_t, FieldElement)> search = [&](std::size_t t, FieldElement acc) {
    if (t == adjoined_factor.size()) {
      if (minpoly.eval(acc).is_zero()) images.push_back(acc);
      return;
    }
    const auto f = adjoined_factor[t];
    for (std::size_t i = 0; i < out.blocks[f].roots.size(); ++i) {
      bool used = false;
      for (std::size_t s = 0; s < t; ++s) used = used || (adjoined_factor[s] == f && pick[s] == i);
      if (used) continue;
      pick[t] = i;
      search(t + 1, acc + out.blocks[f].roots[i] * mpq_class(gen_coeffs[t]));
    }
  };
  search(0, K.zero());
  std::sort(images.begin(), images.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_less(a, b); });
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (static_cast<int>(images.size()) != K.degree())
    throw InternalError("splitting_data: found " + std::to_string(images.size()) + " automorphisms for degree " +
                        std::to_string(K.degree()));

  std::vector<Perm> perms;
  for (const auto& s : images) {
    std::vector<FieldElement> powers{K.one()};
    for (int i = 1; i < K.degree(); ++i) powers.push_back(powers.back() * s);
    std::vector<int> img(n);
    for (const auto& b : out.blocks)
      for (std::size_t i = 0; i < b.roots.size(); ++i) {
        const auto& r = b.roots[i];
        FieldElement v = K.zero();
        const auto c = r.num().coeffs();
        for (std::size_t e = 0; e < c.size(); ++e) v = v + powers[e] * mpq_class(c[e]);
        v = v * mpq_class(1, r.den());
        auto it = std::find(b.roots.begin(), b.roots.end(), v);
        if (it == b.roots.end()) throw InternalError("splitting_data: automorphism leaves a root block");
        img[b.first_label + i] = static_cast<int>(b.first_label + static_cast<std::size_t>(it - b.roots.begin())) + 1;
      }
    perms.push_back(Perm::from_images(img));
  }
  out.group = PermGroup::closure(perms, n, perms.size());
  if (out.group.order() != perms.size()) throw InternalError("splitting_data: automorphisms do not form a group");
  for (const auto& b : out.blocks) out.stabilizers.push_back(out.group.stabilizer(static_cast<Perm::Point>(b.first_label)));
  out.automorphisms = std::move(images);
  return out;
}

}  // namespace rootcover
