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

#ifndef CHEREDNIK_KZ_HPP
#define CHEREDNIK_KZ_HPP

#include <complex>
#include <string>
#include <vector>

#include "cherednik/exact/linalg.hpp"
#include "cherednik/exact/param_scalar.hpp"
#include "cherednik/report.hpp"

namespace cherednik::kz {

using exact::Cyclotomic;
using exact::ParamScalar;

/// Rank-one model near a reflection hypersurface with stabilizer Z_n:
/// D = d/dz + (1/z)(sum_m (2 c_m / (1 - lambda^m)) (1 - g^m) + eta),
/// where g has eigenvalue omega = exp(2 pi i / n) on h and lambda =
/// omega^{-1} on the conormal line.
struct LocalModel {
  int n = 2;
  std::vector<ParamScalar> c;  // c_1 .. c_{n-1}
  ParamScalar eta;
  ParamScalar t = ParamScalar(1L);

  /// c_m = c(m-1) and eta formal.
  static LocalModel formal(int n);
  /// Parses decimal or fractional strings exactly. A single c value is
  /// used for every m.
  static LocalModel numeric(int n, const std::vector<std::string>& c, const std::string& eta);

  void validate() const;
};

/// Matrix of the residue sum_m (2 c_m / (1 - lambda^m)) (1 - g^m) + eta on
/// the regular representation, basis g^0 .. g^{n-1}.
exact::Matrix<ParamScalar> residue_matrix(const LocalModel& model);

/// Exponent beta_j read off the residue eigenvector v_j = sum_k omega^{jk} g^k,
/// on which g acts by omega^{-j}. Throws InternalInconsistency if v_j is
/// not an eigenvector.
ParamScalar flat_exponent(const LocalModel& model, int j);

/// 2 sum_m c_m (1 - omega^{-jm}) / (1 - omega^{-m}) + eta.
ParamScalar flat_exponent_closed_form(const LocalModel& model, int j);

/// zeta_j = exp(2 pi i E_j) with E_j = (j - beta_j) / n.
struct Character {
  int j = 0;
  ParamScalar exponent;  // E_j, in units of 2 pi i
  std::complex<double> value() const;
};

Character zeta_character(const LocalModel& model, int j);

/// tau_j = 2 pi i * coefficient[j-1], j = 1..n, with
/// tau_j = -2 pi i (2 sum_m c_m (1 - omega^{-jm}) / (1 - omega^{-m}) + eta) / n.
struct TauParameters {
  int n = 2;
  std::vector<ParamScalar> over_2pi_i;
  std::vector<std::complex<double>> numeric() const;
};

TauParameters tau_from_c_eta(const LocalModel& model);

/// The linear map (c_1..c_{n-1}, eta) -> (tau_1..tau_n)/(2 pi i).
exact::Matrix<Cyclotomic> tau_matrix(int n);

/// Inverse of tau_from_c_eta. Throws InternalInconsistency when the
/// matrix is singular.
LocalModel c_eta_from_tau(const TauParameters& tau);

struct MonodromyResult {
  int n = 2;
  std::string method;                          // "exact-exponent" or "ode-numeric"
  std::vector<std::complex<double>> eigenvalues;  // eigenvalues[j] matched to zeta_j
  std::vector<Character> zeta;                 // exact characters
  double max_deviation = 0.0;                  // vs the exact characters
  bool resonant = false;
  double hecke_residual = 0.0;                 // |prod_j (T - root_j)| for numeric T
  int steps = 0;
};

/// Diagonal monodromy g^{-1} o (z -> omega z) on the flat sections
/// z^{-beta_j} v_j, compared with the closed-form characters.
MonodromyResult monodromy_exact(const LocalModel& model);

/// Integrates f' = -(A/z) f along z = exp(i theta), theta in [0, 2 pi / n],
/// with classical RK4, composes with g^{-1} and diagonalizes.
MonodromyResult monodromy_numeric(const LocalModel& model, int steps);

/// Multiset {zeta_j} equals {omega^j exp(tau_j) : j = 1..n}, compared as
/// exponents modulo integers.
CheckResult hecke_root_check(const LocalModel& model);

/// Errors of monodromy_numeric at steps and 2 steps, with their ratio
/// (about 16 for a fourth-order method).
CheckResult convergence_check(const LocalModel& model, int steps);

nlohmann::json to_json(const LocalModel& model, const MonodromyResult& r);

}  // namespace cherednik::kz

#endif  // CHEREDNIK_KZ_HPP
