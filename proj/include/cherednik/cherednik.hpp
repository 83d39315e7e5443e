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

#ifndef CHEREDNIK_CHEREDNIK_HPP
#define CHEREDNIK_CHEREDNIK_HPP

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/exact/multipoly.hpp"
#include "cherednik/reflgroup.hpp"
#include "cherednik/report.hpp"

namespace cherednik::pbw {

using dunkl::Parameters;
using exact::Monomial;
using exact::MultiPoly;
using exact::ParamScalar;
using refl::ReflectionGroup;

/// Normal-form word x^a g y^b. Ordered by total degree first so that the
/// largest key of an element is one of its top-degree terms.
struct PBWKey {
  Monomial x;
  int g = 0;
  Monomial y;

  int total_degree() const { return exact::mono_degree(x) + exact::mono_degree(y); }
  friend bool operator==(const PBWKey&, const PBWKey&) = default;
  friend bool operator<(const PBWKey& a, const PBWKey& b) {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db;
    if (a.x != b.x) return a.x < b.x;
    if (a.g != b.g) return a.g < b.g;
    return a.y < b.y;
  }
};

/// Finite combination of normal-form words with parameter coefficients.
class PBWElement {
 public:
  using TermMap = std::map<PBWKey, ParamScalar>;

  PBWElement() = default;
  explicit PBWElement(const ParamScalar& scalar);
  static PBWElement word(PBWKey key, const ParamScalar& coeff = ParamScalar(1L));
  static PBWElement x(std::size_t i);
  static PBWElement y(std::size_t i);
  static PBWElement group(int g);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ParamScalar coefficient(const PBWKey& key) const;
  void add_term(const PBWKey& key, const ParamScalar& coeff);

  /// Largest y-degree of a term (the filtration degree); -1 for zero.
  int y_degree() const;
  int total_degree() const;
  /// Terms of y-degree exactly d.
  PBWElement y_part(int d) const;
  PBWElement scaled(const ParamScalar& s) const;
  /// Applies a map to every coefficient, e.g. a parameter specialization.
  PBWElement substitute(const std::map<std::size_t, ParamScalar>& values) const;

  PBWElement operator-() const { return scaled(ParamScalar(-1L)); }
  PBWElement& operator+=(const PBWElement& rhs);
  PBWElement& operator-=(const PBWElement& rhs);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend bool operator==(const PBWElement& a, const PBWElement& b);
  friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

 private:
  TermMap terms_;
};

/// One letter of a generator word.
struct Letter {
  enum class Kind { x, y, g } kind = Kind::x;
  int index = 0;
};
using Word = std::vector<Letter>;

/// H_{t,c}(h, G) for a fixed group and parameter assignment.
///
/// Multiplication caches intermediate normal forms; the caches are guarded
/// so one algebra may be shared between threads.
class CherednikAlgebra {
 public:
  CherednikAlgebra(std::shared_ptr<const ReflectionGroup> group, Parameters params);
  /// Formal t and c.
  explicit CherednikAlgebra(std::shared_ptr<const ReflectionGroup> group);
  ~CherednikAlgebra();
  CherednikAlgebra(CherednikAlgebra&&) noexcept;
  CherednikAlgebra& operator=(CherednikAlgebra&&) noexcept;

  const ReflectionGroup& group() const noexcept { return *group_; }
  const Parameters& params() const noexcept { return params_; }

  PBWElement multiply(const PBWElement& a, const PBWElement& b) const;
  PBWElement commutator(const PBWElement& a, const PBWElement& b) const;
  PBWElement power(const PBWElement& a, int e) const;
  PBWElement from_word(const Word& w) const;
  PBWElement letter(const Letter& l) const;

  /// Polynomial representation: x acts by multiplication, g by the group
  /// action and y by Dunkl operators.
  MultiPoly act(const PBWElement& a, const MultiPoly& p) const;
  MultiPoly act(const Letter& l, const MultiPoly& p) const;
  /// Applies the letters right to left, as the word acts on p.
  MultiPoly act(const Word& w, const MultiPoly& p) const;

  /// e = |G|^{-1} sum_g g.
  PBWElement symmetrizer() const;
  /// h = sum_i x_i y_i + l t / 2 - sum_s (2 c_s / (1 - lambda_s)) s.
  PBWElement euler_element() const;

  /// Normal forms x^a g y^b with |a| + |b| <= d.
  std::vector<PBWKey> basis_up_to(int d) const;
  /// Generators x_i, y_i and the nonidentity group elements.
  std::vector<PBWElement> generators() const;

 private:
  struct Cache;

  const PBWElement& y_times_x(const Monomial& b, const Monomial& c) const;
  const PBWElement& bracket(std::size_t i, const Monomial& a) const;
  const MultiPoly& x_image(int g, const Monomial& a) const;
  const MultiPoly& y_image(int g, const Monomial& b) const;
  PBWElement left_y(std::size_t i, const PBWElement& r) const;

  std::shared_ptr<const ReflectionGroup> group_;
  Parameters params_;
  std::vector<dunkl::DunklOperator> dunkl_;
  // w[s][i] = 2 c_s (y_i, alpha_s) / (1 - lambda_s)
  std::vector<std::vector<ParamScalar>> weights_;
  std::vector<MultiPoly> roots_;
  std::vector<std::vector<refl::CycVector>> x_rows_;
  std::vector<std::vector<refl::CycVector>> y_rows_;
  std::unique_ptr<Cache> cache_;
};

/// Canonical text form: terms in increasing key order, exact coefficients.
std::string to_string(const PBWElement& a);

/// Checks that the normal form of a acts on p like the letters of w.
CheckResult dunkl_consistency(const CherednikAlgebra& alg, const Word& w, const MultiPoly& p);

/// Checks rho(ab) p = rho(a) rho(b) p, with ab multiplied in normal form.
CheckResult homomorphism_check(const CherednikAlgebra& alg, const Word& a, const Word& b, const MultiPoly& p);

struct PBWDimension {
  std::size_t rank = 0;
  std::size_t expected = 0;
  std::size_t words = 0;
  bool degree_bound_ok = true;
};

/// Rank of the span of all words with at most d letters from h + h*,
/// times group elements, against |G| * dim C[h + h*]_{<= d}.
PBWDimension pbw_dimension(const CherednikAlgebra& alg, int d);
CheckResult pbw_dimension_check(const CherednikAlgebra& alg, int d);

/// [h, x_i] = t x_i, [h, y_i] = -t y_i and [h, g] = 0 for every generator.
CheckResult euler_check(const CherednikAlgebra& alg);

/// Basis of the centralizer of all generators inside the total-degree <= d
/// part. Intended for t = 0.
std::vector<PBWElement> center_basis_t0(const CherednikAlgebra& alg, int d);

/// z -> z e is injective on the truncated center with image e H_{<=d} e,
/// e^2 = e, and e H_{<=d} e is commutative. Builds its own algebra at t = 0.
CheckResult satake_check_t0(std::shared_ptr<const ReflectionGroup> group, int d);

/// Random words of length <= max_length (seeded), for the consistency suite.
Word random_word(const ReflectionGroup& group, int max_length, std::mt19937& rng);

}  // namespace cherednik::pbw

#endif  // CHEREDNIK_CHEREDNIK_HPP
