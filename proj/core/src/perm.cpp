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


#include "rootcover/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rootcover/errors.hpp"

namespace rootcover {

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  return Perm(std::move(img));
}

Perm Perm::from_images(const std::vector<int>& images) {
  const auto n = images.size();
  std::vector<Point> img(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
      throw InvalidInput("permutation images are not a bijection of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v - 1)] = true;
    img[i] = static_cast<Point>(v - 1);
  }
  return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text, std::size_t n) {
  if (n > 0xFFFF) throw InvalidInput("permutation degree too large");
  Perm p = identity(n);
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("expected '(' in permutation: " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw InvalidInput("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidInput("bad character in permutation: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > n) throw InvalidInput("point " + std::to_string(v) + " exceeds degree " + std::to_string(n));
        ++i;
      }
      if (v == 0) throw InvalidInput("points are numbered from 1");
      if (used[v - 1]) throw InvalidInput("point " + std::to_string(v) + " repeated in " + std::string(text));
      used[v - 1] = true;
      cycle.push_back(static_cast<Point>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p.img_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<Point>(i);
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw InvalidInput("permutation degrees differ");
  std::vector<Perm::Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.img_[a.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& x) const {
  // x^-1 p x maps x(i) to x(p(i))
  std::vector<Point> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[x.img_[i]] = x.img_[img_[i]];
  return Perm(std::move(img));
}

Perm Perm::pow(long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Perm r = identity(degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::size_t Perm::fixed_points() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) c += img_[i] == i;
  return c;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long Perm::order() const {
  long o = 1;
  for (int c : cycle_type()) o = std::lcm(o, static_cast<long>(c));
  return o;
}

std::string Perm::to_string() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) s += ' ';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : p.images()) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

PermGroup PermGroup::closure(const std::vector<Perm>& generators, std::size_t degree, std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw InvalidInput("generator degree differs from group degree");
  std::vector<Perm> gens;
  for (const auto& g : generators)
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);

  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> order;
  seen.insert(Perm::identity(degree));
  order.push_back(Perm::identity(degree));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& s : gens) {
      Perm q = order[head] * s;
      if (seen.insert(q).second) {
        if (order.size() >= cap)
          throw ResourceError("group order exceeds cap " + std::to_string(cap));
        order.push_back(std::move(q));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return PermGroup(degree, std::move(gens), std::move(order));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity()) throw InvalidInput("element list lacks the identity");
  auto gens = greedy_generators(degree, elements);
  return PermGroup(degree, std::move(gens), std::move(elements));
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n <= 1) return closure({}, n);
  std::vector<int> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<int>((i + 1) % n) + 1;
  std::vector<int> tr(n);
  std::iota(tr.begin(), tr.end(), 1);
  std::swap(tr[0], tr[1]);
  return closure({Perm::from_images(cyc), Perm::from_images(tr)}, n, 1UL << 40);
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n <= 1) return closure({}, std::max<std::size_t>(n, 1));
  std::vector<int> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<int>((i + 1) % n) + 1;
  return closure({Perm::from_images(cyc)}, n, n);
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(), [&](const Perm& s) { return g.contains(s); });
}

std::vector<std::vector<Perm::Point>> PermGroup::orbits() const {
  std::vector<std::vector<Perm::Point>> out;
  std::vector<bool> seen(degree_, false);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    std::vector<Perm::Point> orb{static_cast<Perm::Point>(i)};
    seen[i] = true;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& s : generators_) {
        auto j = s[orb[h]];
        if (!seen[j]) {
          seen[j] = true;
          orb.push_back(j);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() <= 1; }

PermGroup PermGroup::stabilizer(Perm::Point point) const {
  std::vector<Perm> el;
  for (const auto& e : elements_)
    if (e[point] == point) el.push_back(e);
  return from_elements(degree_, std::move(el));
}

PermGroup PermGroup::restrict_to(const std::vector<Perm::Point>& points) const {
  std::vector<int> label(degree_, 0);
  for (std::size_t k = 0; k < points.size(); ++k) label[points[k]] = static_cast<int>(k) + 1;
  std::vector<Perm> gens;
  for (const auto& s : generators_) {
    std::vector<int> img(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int l = label[s[points[k]]];
      if (l == 0) throw InvalidInput("point set is not invariant under the group");
      img[k] = l;
    }
    gens.push_back(Perm::from_images(img));
  }
  return closure(gens, points.size(), std::max<std::size_t>(order(), 1));
}

PermGroup PermGroup::conjugated_by(const Perm& x) const {
  std::vector<Perm> el;
  el.reserve(elements_.size());
  for (const auto& e : elements_) el.push_back(e.conjugated_by(x));
  std::vector<Perm> gens;
  for (const auto& s : generators_) gens.push_back(s.conjugated_by(x));
  std::sort(el.begin(), el.end());
  return PermGroup(degree_, std::move(gens), std::move(el));
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  if (!is_abelian()) return false;
  const auto n = static_cast<long>(order());
  return std::any_of(elements_.begin(), elements_.end(), [&](const Perm& e) { return e.order() == n; });
}

std::vector<std::size_t> PermGroup::class_ids() const {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(elements_.size(), kNone);
  std::size_t next = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (id[i] != kNone) continue;
    std::vector<std::size_t> orb{i};
    id[i] = next;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& s : generators_) {
        auto j = *index_of(elements_[orb[h]].conjugated_by(s));
        if (id[j] == kNone) {
          id[j] = next;
          orb.push_back(j);
        }
      }
    ++next;
  }
  return id;
}

std::vector<std::vector<std::size_t>> PermGroup::conjugacy_classes() const {
  auto id = class_ids();
  std::size_t count = 0;
  for (auto c : id) count = std::max(count, c + 1);
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t i = 0; i < id.size(); ++i) out[id[i]].push_back(i);
  return out;
}

std::vector<Perm> greedy_generators(std::size_t degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span{Perm::identity(degree)};
  for (const auto& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    auto g = PermGroup::closure(gens, degree, elements.size());
    span = std::unordered_set<Perm, PermHash>(g.elements().begin(), g.elements().end());
    if (span.size() == elements.size()) break;
  }
  return gens;
}

std::vector<Perm> parse_generator_list(std::string_view text, std::size_t* degree_out) {
  std::vector<std::string> lines;
  std::size_t degree = 0;
  bool declared = false;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line.rfind("degree", 0) == 0) {
      try {
        degree = std::stoul(line.substr(6));
      } catch (const std::exception&) {
        throw InvalidInput("bad degree line: " + line);
      }
      declared = true;
      continue;
    }
    lines.push_back(line);
  }
  if (!declared) {
    for (const auto& l : lines) {
      std::size_t v = 0;
      for (char c : l) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          v = v * 10 + static_cast<std::size_t>(c - '0');
          degree = std::max(degree, v);
        } else {
          v = 0;
        }
      }
    }
  }
  std::vector<Perm> out;
  for (const auto& l : lines) out.push_back(Perm::parse(l, degree));
  if (degree_out) *degree_out = degree;
  return out;
}

}  // namespace rootcover
