// Copyright 2026 The cherednik-verify Authors
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

#ifndef CHEREDNIK_REFLGROUP_HPP
#define CHEREDNIK_REFLGROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/exact/cyclotomic.hpp"
#include "cherednik/exact/linalg.hpp"

namespace cherednik::refl {

using exact::Cyclotomic;
using CycMatrix = exact::Matrix<Cyclotomic>;
using CycVector = std::vector<Cyclotomic>;

enum class GroupKind { trivial, cyclic, symmetric, dihedral, typeB };

/// Catalog entry. Keys: "Z4", "S3", "I2(5)", "B2", "trivial" (rank 1).
struct GroupSpec {
  GroupKind kind = GroupKind::trivial;
  int n = 1;

  std::string key() const;
};

/// Throws InvalidInput on an unknown or malformed key.
GroupSpec parse_group_key(std::string_view key);

struct GroupElement {
  CycMatrix matrix;  // action on h, columns are images of y_1..y_l
  CycMatrix dual;    // inverse matrix; row i holds the coordinates of g.x_i
  int order = 1;
};

/// A complex reflection s with its normalized root data.
struct Reflection {
  int element = 0;      // index into the group's element list
  int class_label = 0;  // reflection class kappa
  Cyclotomic lambda;    // eigenvalue of s on h* other than 1
  CycVector root;       // alpha_s in h*, coordinates in x_1..x_l
  CycVector coroot;     // alpha_s^vee in h, coordinates in y_1..y_l
};

struct ReflectionClass {
  int label = 0;
  int representative = 0;  // element index
  Cyclotomic lambda;
  CycVector root;
  CycVector coroot;
  std::vector<int> members;  // reflection indices
};

/// A finite complex reflection group given by matrices on h.
class ReflectionGroup {
 public:
  static ReflectionGroup build(const GroupSpec& spec);

  const std::string& name() const noexcept { return name_; }
  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const GroupElement& element(int g) const { return elements_.at(static_cast<std::size_t>(g)); }
  int multiply(int g, int h) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  static constexpr int identity() { return 0; }
  /// Index of the element with this matrix, if it belongs to the group.
  std::optional<int> find(const CycMatrix& m) const;

  const std::vector<std::vector<int>>& conjugacy_classes() const noexcept { return conjugacy_classes_; }
  const std::vector<Reflection>& reflections() const noexcept { return reflections_; }
  const std::vector<ReflectionClass>& classes() const noexcept { return classes_; }
  /// Reflection index of element g, if g is a reflection.
  std::optional<int> reflection_index(int g) const;

  /// Copy with (alpha_s, alpha_s^vee) replaced by (mu alpha_s, mu^{-1} alpha_s^vee)
  /// for reflection r. Used to check that nothing downstream depends on the
  /// root normalization beyond the pairing.
  ReflectionGroup with_rescaled_root(int r, const Cyclotomic& mu) const;

 private:
  void close_under(const std::vector<CycMatrix>& generators);
  void compute_classes();
  void compute_reflections();

  std::string name_;
  GroupSpec spec_;
  std::size_t rank_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> conjugacy_classes_;
  std::vector<Reflection> reflections_;
  std::vector<ReflectionClass> classes_;
};

/// Reflection classes with class representative data.
const std::vector<ReflectionClass>& reflection_classes(const ReflectionGroup& group);

/// Dimension of the space of parameters c for a linear action: the number of
/// conjugacy classes of reflections.
int param_count(const ReflectionGroup& group);

/// Pairing (x, y) between h* and h in dual coordinates.
Cyclotomic pairing(const CycVector& x, const CycVector& y);

}  // namespace cherednik::refl

#endif  // CHEREDNIK_REFLGROUP_HPP
