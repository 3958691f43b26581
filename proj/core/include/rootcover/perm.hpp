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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rootcover {

/// Permutation of {1..n}, stored 0-based. Products compose left to right:
/// (a * b)(i) = b(a(i)).
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  static Perm identity(std::size_t n);
  /// images[i-1] = image of point i, 1-based; must be a bijection.
  static Perm from_images(const std::vector<int>& images);
  /// Cycle notation such as "(1 2 3)(4 5)" or "()" on points 1..n.
  static Perm parse(std::string_view text, std::size_t n);

  std::size_t degree() const { return img_.size(); }
  /// 0-based image.
  Point operator[](std::size_t i) const { return img_[i]; }
  std::span<const Point> images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  /// x^-1 * this * x
  Perm conjugated_by(const Perm& x) const;
  Perm pow(long e) const;

  std::size_t fixed_points() const;
  /// Sorted cycle lengths including fixed points.
  std::vector<int> cycle_type() const;
  long order() const;
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<Point> img) : img_(std::move(img)) {}
  std::vector<Point> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

inline constexpr std::size_t kDefaultGroupOrderCap = 10080;

/// A permutation group with its complete sorted element list.
class PermGroup {
 public:
  /// Breadth-first closure; ResourceError once the order would pass `cap`.
  static PermGroup closure(const std::vector<Perm>& generators, std::size_t degree,
                           std::size_t cap = kDefaultGroupOrderCap);
  /// Subgroup cut out of `elements`, which must already be a group.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);
  static PermGroup symmetric(std::size_t n);
  static PermGroup cyclic(std::size_t n);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& identity() const { return elements_.front(); }

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  bool is_subgroup_of(const PermGroup& g) const;

  std::vector<std::vector<Perm::Point>> orbits() const;
  bool is_transitive() const;
  PermGroup stabilizer(Perm::Point point) const;  // 0-based point
  /// Action on an invariant set of 0-based points, relabelled 1..k in the
  /// given order.
  PermGroup restrict_to(const std::vector<Perm::Point>& points) const;
  PermGroup conjugated_by(const Perm& x) const;

  bool is_abelian() const;
  bool is_cyclic() const;
  /// Conjugacy classes as element indices, each class ascending, classes
  /// ordered by their least element.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  /// Class id for every element index, consistent with conjugacy_classes().
  std::vector<std::size_t> class_ids() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(std::size_t degree, std::vector<Perm> gens, std::vector<Perm> elements)
      : degree_(degree), generators_(std::move(gens)), elements_(std::move(elements)) {}

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

/// Greedy generating set: scan `elements` in order, keep each one not yet in
/// the span of those kept.
std::vector<Perm> greedy_generators(std::size_t degree, const std::vector<Perm>& elements);

/// One generator per line (cycle notation); an optional first line
/// `degree N` fixes the degree, otherwise the largest point mentioned.
std::vector<Perm> parse_generator_list(std::string_view text, std::size_t* degree_out = nullptr);

}  // namespace rootcover
