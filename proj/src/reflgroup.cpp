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

#include "cherednik/reflgroup.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>

#include "cherednik/errors.hpp"

namespace cherednik::refl {

namespace {

constexpr int kMaxGroupOrder = 5000;

std::string matrix_key(const CycMatrix& m) {
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      key += m(i, j).to_string();
      key += ';';
    }
  }
  return key;
}

CycMatrix permutation_matrix(const std::vector<int>& images) {
  const std::size_t n = images.size();
  CycMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(static_cast<std::size_t>(images[j]), j) = Cyclotomic(1);
  return m;
}

CycMatrix transpose(const CycMatrix& m) {
  CycMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

CycMatrix minus_identity(const CycMatrix& m) {
  CycMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= Cyclotomic(1);
  return out;
}

std::optional<CycVector> first_nonzero_column(const CycMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    CycVector col(m.rows());
    bool nonzero = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      col[i] = m(i, j);
      nonzero = nonzero || !col[i].is_zero();
    }
    if (nonzero) return col;
  }
  return std::nullopt;
}

Cyclotomic determinant(CycMatrix m) {
  const std::size_t n = m.rows();
  Cyclotomic det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Cyclotomic(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Cyclotomic inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Cyclotomic f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InvalidInput("bad integer '" + std::string(text) + "' in group key");
  return value;
}

}  // namespace

std::string GroupSpec::key() const {
  switch (kind) {
    case GroupKind::trivial:
      return "trivial";
    case GroupKind::cyclic:
      return "Z" + std::to_string(n);
    case GroupKind::symmetric:
      return "S" + std::to_string(n);
    case GroupKind::dihedral:
      return "I2(" + std::to_string(n) + ")";
    case GroupKind::typeB:
      return "B" + std::to_string(n);
  }
  return "?";
}

GroupSpec parse_group_key(std::string_view key) {
  if (key == "trivial" || key == "Z1") return {GroupKind::trivial, 1};
  if (key.size() >= 2 && key[0] == 'Z') return {GroupKind::cyclic, parse_int(key.substr(1))};
  if (key.size() >= 2 && key[0] == 'S') return {GroupKind::symmetric, parse_int(key.substr(1))};
  if (key.size() >= 2 && key[0] == 'B') return {GroupKind::typeB, parse_int(key.substr(1))};
  if (key.size() >= 5 && key.substr(0, 3) == "I2(" && key.back() == ')') {
    return {GroupKind::dihedral, parse_int(key.substr(3, key.size() - 4))};
  }
  throw InvalidInput("unknown group key '" + std::string(key) + "'");
}

ReflectionGroup ReflectionGroup::build(const GroupSpec& spec) {
  ReflectionGroup g;
  g.spec_ = spec;
  g.name_ = spec.key();
  std::vector<CycMatrix> generators;
  switch (spec.kind) {
    case GroupKind::trivial:
      g.rank_ = 1;
      break;
    case GroupKind::cyclic: {
      if (spec.n < 2) throw InvalidInput("cyclic group needs n >= 2");
      g.rank_ = 1;
      CycMatrix m(1, 1);
      m(0, 0) = Cyclotomic::root_of_unity(spec.n);
      generators.push_back(m);
      break;
    }
    case GroupKind::symmetric: {
      if (spec.n < 2) throw InvalidInput("symmetric group needs n >= 2");
      g.rank_ = static_cast<std::size_t>(spec.n);
      for (int i = 0; i + 1 < spec.n; ++i) {
        std::vector<int> images(static_cast<std::size_t>(spec.n));
        for (int k = 0; k < spec.n; ++k) images[static_cast<std::size_t>(k)] = k;
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i) + 1]);
        generators.push_back(permutation_matrix(images));
      }
      break;
    }
    case GroupKind::dihedral: {
      if (spec.n < 2) throw InvalidInput("dihedral group needs m >= 2");
      // Complex realization: rotation diag(z, z^-1), reflection swaps axes.
      g.rank_ = 2;
      CycMatrix rotation(2, 2);
      rotation(0, 0) = Cyclotomic::root_of_unity(spec.n);
      rotation(1, 1) = Cyclotomic::root_of_unity(spec.n, -1);
      generators.push_back(rotation);
      generators.push_back(permutation_matrix({1, 0}));
      break;
    }
    case GroupKind::typeB: {
      if (spec.n < 2) throw InvalidInput("type B needs n >= 2");
      g.rank_ = static_cast<std::size_t>(spec.n);
      for (int i = 0; i + 1 < spec.n; ++i) {
        std::vector<int> images(static_cast<std::size_t>(spec.n));
        for (int k = 0; k < spec.n; ++k) images[static_cast<std::size_t>(k)] = k;
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(i) + 1]);
        generators.push_back(permutation_matrix(images));
      }
      CycMatrix flip = CycMatrix::identity(g.rank_);
      flip(0, 0) = Cyclotomic(-1);
      generators.push_back(flip);
      break;
    }
  }
  g.close_under(generators);
  g.compute_classes();
  g.compute_reflections();
  return g;
}

void ReflectionGroup::close_under(const std::vector<CycMatrix>& generators) {
  std::map<std::string, int> index;
  auto add = [&](const CycMatrix& m) {
    const std::string key = matrix_key(m);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(elements_.size());
    if (id >= kMaxGroupOrder) throw InvalidInput("group is too large for the catalog");
    index.emplace(key, id);
    elements_.push_back(GroupElement{m, CycMatrix(), 1});
    return id;
  };
  add(CycMatrix::identity(rank_));
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      const std::size_t before = elements_.size();
      const int h = add(gen * elements_[static_cast<std::size_t>(g)].matrix);
      if (elements_.size() > before) queue.push_back(h);
    }
  }
  const std::size_t n = elements_.size();
  table_.assign(n, std::vector<int>(n, 0));
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(matrix_key(elements_[a].matrix * elements_[b].matrix));
      if (it == index.end()) throw InternalInconsistency("group is not closed under multiplication");
      table_[a][b] = it->second;
      if (it->second == 0) inverse_[a] = static_cast<int>(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    elements_[a].dual = elements_[static_cast<std::size_t>(inverse_[a])].matrix;
    int order = 1;
    int power = static_cast<int>(a);
    while (power != 0) {
      power = table_[static_cast<std::size_t>(power)][a];
      ++order;
    }
    elements_[a].order = order;
  }
}

std::optional<int> ReflectionGroup::find(const CycMatrix& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].matrix == m) return static_cast<int>(i);
  }
  return std::nullopt;
}

void ReflectionGroup::compute_classes() {
  const int n = static_cast<int>(elements_.size());
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    if (class_of[static_cast<std::size_t>(g)] >= 0) continue;
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int conj = multiply(multiply(h, g), inverse(h));
      if (class_of[static_cast<std::size_t>(conj)] < 0) {
        class_of[static_cast<std::size_t>(conj)] = static_cast<int>(conjugacy_classes_.size());
        members.push_back(conj);
      }
    }
    std::sort(members.begin(), members.end());
    conjugacy_classes_.push_back(std::move(members));
  }
}

void ReflectionGroup::compute_reflections() {
  const std::size_t n = elements_.size();
  std::vector<int> reflection_of(n, -1);
  for (std::size_t g = 1; g < n; ++g) {
    const CycMatrix& m = elements_[g].matrix;
    const CycMatrix shifted = minus_identity(m);
    if (exact::rank(shifted) != 1) continue;
    // Action on h*: the coefficient vector of a linear form transforms by
    // the transpose of the inverse matrix.
    const CycMatrix on_dual = transpose(elements_[g].dual);
    const auto root = first_nonzero_column(minus_identity(on_dual));
    const auto coroot = first_nonzero_column(shifted);
    if (!root || !coroot) throw InternalInconsistency("reflection without a root");
    // Eigenvalue on h*, read off the root, must agree with det(s)^{-1}.
    const CycVector image = on_dual.apply(*root);
    std::size_t k = 0;
    while ((*root)[k].is_zero()) ++k;
    const Cyclotomic lambda = image[k] / (*root)[k];
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] != lambda * (*root)[i]) {
        throw InvalidInput("reflection " + std::to_string(g) + " is not diagonalizable");
      }
    }
    if (lambda != determinant(m).inverse()) {
      throw InternalInconsistency("conormal eigenvalue disagrees with the determinant");
    }
    const Cyclotomic pair = pairing(*root, *coroot);
    if (pair.is_zero()) throw InvalidInput("reflection " + std::to_string(g) + " is not diagonalizable");
    Reflection r;
    r.element = static_cast<int>(g);
    r.lambda = lambda;
    r.root = *root;
    r.coroot = *coroot;
    const Cyclotomic scale = Cyclotomic(2) / pair;
    for (auto& v : r.coroot) v *= scale;
    reflection_of[g] = static_cast<int>(reflections_.size());
    reflections_.push_back(std::move(r));
  }
  // Reflection classes are the conjugacy classes made of reflections.
  for (const auto& cls : conjugacy_classes_) {
    if (reflection_of[static_cast<std::size_t>(cls.front())] < 0) continue;
    ReflectionClass rc;
    rc.label = static_cast<int>(classes_.size());
    rc.representative = cls.front();
    for (int g : cls) {
      const int r = reflection_of[static_cast<std::size_t>(g)];
      if (r < 0) throw InternalInconsistency("conjugacy class mixes reflections and non-reflections");
      reflections_[static_cast<std::size_t>(r)].class_label = rc.label;
      rc.members.push_back(r);
    }
    const Reflection& rep = reflections_[static_cast<std::size_t>(reflection_of[static_cast<std::size_t>(cls.front())])];
    rc.lambda = rep.lambda;
    rc.root = rep.root;
    rc.coroot = rep.coroot;
    classes_.push_back(std::move(rc));
  }
}

std::optional<int> ReflectionGroup::reflection_index(int g) const {
  for (std::size_t r = 0; r < reflections_.size(); ++r) {
    if (reflections_[r].element == g) return static_cast<int>(r);
  }
  return std::nullopt;
}

ReflectionGroup ReflectionGroup::with_rescaled_root(int r, const Cyclotomic& mu) const {
  if (mu.is_zero()) throw InvalidInput("root rescaling needs a nonzero factor");
  ReflectionGroup out = *this;
  Reflection& refl = out.reflections_.at(static_cast<std::size_t>(r));
  const Cyclotomic inv = mu.inverse();
  for (auto& v : refl.root) v *= mu;
  for (auto& v : refl.coroot) v *= inv;
  return out;
}

const std::vector<ReflectionClass>& reflection_classes(const ReflectionGroup& group) { return group.classes(); }

int param_count(const ReflectionGroup& group) { return static_cast<int>(group.classes().size()); }

Cyclotomic pairing(const CycVector& x, const CycVector& y) {
  Cyclotomic sum;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) sum += x[i] * y[i];
  return sum;
}

}  // namespace cherednik::refl
