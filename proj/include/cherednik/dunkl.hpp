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

#ifndef CHEREDNIK_DUNKL_HPP
#define CHEREDNIK_DUNKL_HPP

#include <map>
#include <string>
#include <vector>

#include "cherednik/exact/multipoly.hpp"
#include "cherednik/reflgroup.hpp"
#include "cherednik/report.hpp"

namespace cherednik::dunkl {

using exact::MultiPoly;
using exact::ParamScalar;
using refl::CycVector;
using refl::ReflectionGroup;

/// Values of t and of c per reflection class. Entries may be formal
/// parameters or numbers.
struct Parameters {
  ParamScalar t;
  std::vector<ParamScalar> c;

  /// t and every c_kappa left as formal parameters.
  static Parameters formal(const ReflectionGroup& group);
};

/// Substitution rows for g acting on C[h]: g.x_i = sum_k rows[i][k] x_k.
std::vector<CycVector> substitution_rows(const ReflectionGroup& group, int g);

/// g.p for the action of G on polynomial functions on h.
MultiPoly group_act(const ReflectionGroup& group, int g, const MultiPoly& p);

/// D_y = t d_y + sum_s (2 c_s / (1 - lambda_s)) ((alpha_s, y) / alpha_s) (s - 1).
class DunklOperator {
 public:
  DunklOperator(const ReflectionGroup& group, CycVector direction, Parameters params);

  /// Throws InternalInconsistency when a reflection term is not polynomial.
  MultiPoly apply(const MultiPoly& p) const;

  const CycVector& direction() const noexcept { return direction_; }

 private:
  struct Term {
    ParamScalar weight;  // 2 c_s (alpha_s, y) / (1 - lambda_s)
    std::vector<CycVector> rows;
    MultiPoly root;
  };

  CycVector direction_;
  ParamScalar t_;
  std::vector<Term> terms_;
};

inline MultiPoly dunkl_apply(const DunklOperator& d, const MultiPoly& p) { return d.apply(p); }

/// Checks [D_y, D_y'] p = 0 on every monomial of degree <= max_degree with
/// formal t and c.
CheckResult dunkl_commute_check(const ReflectionGroup& group, const CycVector& y, const CycVector& y_prime,
                                int max_degree);

/// Same check over all pairs of coordinate directions.
CheckResult dunkl_commute_check(const ReflectionGroup& group, int max_degree);

// Rank one, G = Z_2.

/// Laurent polynomial in x: exponent -> coefficient.
using LaurentPoly = std::map<int, ParamScalar>;

/// L_c = d^2 - (2c/x) d, the restriction of D^2 (t = 1) to even functions,
/// extended to all Laurent polynomials.
class RadialOperator {
 public:
  explicit RadialOperator(ParamScalar c) : c_(std::move(c)) {}

  const ParamScalar& c() const noexcept { return c_; }
  /// L_c x^k = k (k - 1 - 2c) x^{k-2}.
  LaurentPoly apply_monomial(int k) const;
  LaurentPoly apply(const LaurentPoly& p) const;
  std::string describe() const;

 private:
  ParamScalar c_;
};

RadialOperator radial_restriction(const ParamScalar& c);

struct QuasiInvariantSpec {
  int m = 0;
  int degree = 0;
};

/// Exponents of the monomial basis of Q_m up to the given degree: all even
/// exponents and the odd ones >= 2m + 1.
std::vector<int> quasi_basis(const QuasiInvariantSpec& spec);

/// True when every term of p is a monomial of Q_m of degree <= max_degree.
bool in_quasi_span(const LaurentPoly& p, int m, int max_degree);

/// Checks L_m Q_m(<= d) in Q_m(<= d-2) at c = m, and that for c != m the
/// image of x^{2m+1} leaves Q_m.
CheckResult quasi_invariance_check(const QuasiInvariantSpec& spec);
/// Invariance check with an explicit c; fails with a witness when c != m.
CheckResult quasi_invariance_check(const QuasiInvariantSpec& spec, const ParamScalar& c);

/// Hilbert series of Q_m written as numerator / (1 - q^2).
struct HilbertSeries {
  std::vector<long> numerator;     // coefficient of q^k at index k
  std::vector<long> dimensions;    // graded dimensions used to derive it
  bool stabilized = false;
  bool palindromic = false;
  std::string to_string() const;
};

/// Derived from graded dimensions of quasi_basis up to spec.degree, which
/// must be at least 2m + 3 for the numerator to stabilize.
HilbertSeries quasi_hilbert_series(const QuasiInvariantSpec& spec);

std::string to_string(const LaurentPoly& p);

}  // namespace cherednik::dunkl

#endif  // CHEREDNIK_DUNKL_HPP
