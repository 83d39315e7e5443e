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

#ifndef CHEREDNIK_EXACT_CYCLOTOMIC_HPP
#define CHEREDNIK_EXACT_CYCLOTOMIC_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cherednik::exact {

using Rational = mpq_class;

/// Parses "3", "-2/7", "0.125" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Euler totient.
int totient(int n);

/// An element of the cyclotomic field Q(zeta_N).
///
/// Stored in the power basis 1, z, ..., z^{phi(N)-1} of Q(zeta_N), reduced
/// modulo the N-th cyclotomic polynomial. Two elements with different
/// conductors are combined in Q(zeta_lcm). An element whose only nonzero
/// coordinate is the constant term is always stored with conductor 1, so
/// rational arithmetic never pays for the field structure.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic root_of_unity(int n, long k = 1);

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept { return conductor_ == 1; }
  /// Throws InvalidInput when the element is not rational.
  const Rational& rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  /// Throws DivisionByZero.
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

  /// Throws DivisionByZero on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long exponent) const;
  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyclotomic conj() const;
  /// Image of the element in Q(zeta_target); target must be a multiple of
  /// the conductor.
  std::vector<Rational> coordinates_in(int target) const;

  /// Embedding into C with zeta_N -> exp(2 pi i / N).
  std::complex<double> embed() const;

  std::string to_string() const;

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);
  void normalize();

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

}  // namespace cherednik::exact

#endif  // CHEREDNIK_EXACT_CYCLOTOMIC_HPP
