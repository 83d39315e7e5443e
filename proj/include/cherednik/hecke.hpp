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

#ifndef CHEREDNIK_HECKE_HPP
#define CHEREDNIK_HECKE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cherednik/exact/cyclotomic.hpp"
#include "cherednik/exact/truncated_series.hpp"
#include "cherednik/report.hpp"

namespace cherednik::hecke {

using exact::Cyclotomic;
using exact::Rational;
using exact::TruncatedSeries;

enum class Geometry { spherical, euclidean, hyperbolic };
const char* to_string(Geometry g);

/// Closed orbifold surface: genus and cone orders.
struct OrbifoldSignature {
  int genus = 0;
  std::vector<int> cones;

  /// chi = 2 - 2g - sum_j (1 - 1/n_j).
  Rational chi_orb() const;
  Geometry geometry() const;
  /// "g=0;2,3,5".
  std::string to_string() const;
};

/// Parses "g=0;2,3,5", "g=1" or "g=1;". Throws InvalidInput.
OrbifoldSignature parse_signature(std::string_view text);

/// Letters are 2k for generator k and 2k+1 for its inverse.
using Relator = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  std::string to_string() const;
};

Relator freely_reduce(Relator w);
Relator invert(const Relator& w);

/// Generators a_l, b_l, c_j; relators c_j^{n_j} and the surface relation
/// c_1...c_m = prod_l [a_l, b_l].
GroupPresentation orbifold_presentation(const OrbifoldSignature& sig);

struct PermutationRep {
  int degree = 0;
  std::vector<std::vector<int>> images;  // images[generator][point]
  std::vector<std::vector<int>> inverse_images;

  /// Image of a point under a word, letters applied left to right.
  int apply(const Relator& w, int point) const;
  bool relators_trivial(const GroupPresentation& p) const;
  /// Sign of the permutation of a word.
  int sign(const Relator& w) const;
};

/// HLT coset enumeration over the trivial subgroup. Returns the regular
/// permutation representation, or nullopt when more than max_cosets cosets
/// would be defined.
std::optional<PermutationRep> todd_coxeter(const GroupPresentation& p, int max_cosets);

/// Local polynomial relation prod_k (T - omega^k exp(tau_k)) for one loop
/// class, coefficients in increasing degree.
struct LocalRelation {
  int generator = 0;
  int order = 2;
  std::vector<TruncatedSeries> coefficients;
};

struct HeckeAlgebraPresentation {
  GroupPresentation braid;  // without the c_j^{n_j} relators
  std::vector<LocalRelation> local;
  int tau_count = 0;
};

/// prod_{k=1}^{n} (T - omega_n^k exp(tau_{first + k - 1})) with tau indices
/// starting at first.
std::vector<TruncatedSeries> local_polynomial(int n, std::size_t first, int order);

HeckeAlgebraPresentation hecke_presentation(const OrbifoldSignature& sig, int order = TruncatedSeries::kDefaultOrder);
/// Cyclic catalog entry <T | prod_{k=1}^n (T - omega^k e^{tau_k})>.
HeckeAlgebraPresentation cyclic_hecke_presentation(int n, int order = TruncatedSeries::kDefaultOrder);

/// At tau = 0 every local relation must be T^n - 1, and restoring them as
/// relators T^n must give back orbifold_presentation.
CheckResult specialize_tau_zero(const HeckeAlgebraPresentation& h, const OrbifoldSignature& sig);
/// The cyclic variant: T^n - 1.
CheckResult specialize_tau_zero(const HeckeAlgebraPresentation& h);

struct Obstruction {
  int group_order = 0;
  std::vector<Rational> coefficients;  // tau_{1,1}, ..., tau_{n_1,1}, tau_{1,2}, ...
  Cyclotomic epsilon;
  std::vector<int> cone_signs;         // sign of c_j in the regular representation
  std::vector<Cyclotomic> cone_epsilon;  // tau = 0 part of each cone's determinant
  std::string linear_form;
  std::string verdict;
};

/// Determinant of c_1...c_m in the deformed regular representation, with
/// the eigenvalue multiplicities |Gamma| / n_j. Throws InvalidInput unless
/// the signature is spherical of genus 0 with nontrivial group.
Obstruction sphere_obstruction(const OrbifoldSignature& sig, int max_cosets = 10000);

struct HeckeRank {
  std::string name;
  std::size_t rank = 0;
  std::size_t rank_next = 0;   // with one more letter allowed
  std::size_t rank_at_zero = 0;
  std::size_t expected = 0;
  int length = 0;
  bool relations_hold = false;
  bool free = false;           // no non-unit residue left in the span
  bool stabilized() const { return rank == rank_next; }
};

/// Rank of words of length <= length applied to 1 in the finite model of
/// the cyclic Hecke algebra.
HeckeRank hecke_dimension_cyclic(int n, int length, int order = TruncatedSeries::kDefaultOrder);
/// Type A2: braid relation and (T + e^{tau_1})(T - e^{tau_2}) = 0.
HeckeRank hecke_dimension_a2(int length, int order = TruncatedSeries::kDefaultOrder);
CheckResult hecke_rank_check(const HeckeRank& r);

/// expected-flat or expected-not-flat.
std::string signature_verdict(const OrbifoldSignature& sig, int max_cosets = 10000);

/// {signature, chi_orb, group_order | "infinite", obstruction_form, verdict}.
nlohmann::json verdict_report(const OrbifoldSignature& sig, int max_cosets = 10000);

}  // namespace cherednik::hecke

#endif  // CHEREDNIK_HECKE_HPP
