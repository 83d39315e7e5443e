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

#ifndef CHEREDNIK_EXACT_PARAM_SCALAR_HPP
#define CHEREDNIK_EXACT_PARAM_SCALAR_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "cherednik/exact/cyclotomic.hpp"
#include "cherednik/exact/sparse_poly.hpp"

namespace cherednik::exact {

/// Indices of the formal parameters. One c per reflection class, numbered
/// from zero.
struct ParamVar {
  static constexpr std::size_t t = 0;
  static constexpr std::size_t eta = 1;
  static constexpr std::size_t c(std::size_t kappa) { return 2 + kappa; }
};

/// "t", "eta", "c1", "c2", ... (classes are printed one-based).
std::string param_name(std::size_t var);

using ParamPoly = SparsePoly<Cyclotomic>;

std::string to_string(const ParamPoly& p, const std::function<std::string(std::size_t)>& name = param_name);

/// A rational function in the formal parameters t, eta, c_kappa with
/// cyclotomic coefficients.
///
/// The denominator is kept with leading coefficient one and is folded away
/// whenever it is constant or divides the numerator exactly. Common factors
/// are otherwise not cancelled; equality is decided by cross-multiplication.
class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(long value) : num_(Cyclotomic(value)) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(const Rational& value) : num_(Cyclotomic(value)) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(const Cyclotomic& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ParamScalar(ParamPoly numerator) : num_(std::move(numerator)) {}
  /// Throws DivisionByZero on a zero denominator.
  ParamScalar(ParamPoly numerator, ParamPoly denominator);

  static ParamScalar variable(std::size_t var) { return ParamScalar(ParamPoly::variable(var)); }

  const ParamPoly& numerator() const noexcept { return num_; }
  /// True when the denominator is one.
  bool is_polynomial() const noexcept { return den_.is_zero(); }
  ParamPoly denominator() const { return den_.is_zero() ? ParamPoly(Cyclotomic(1)) : den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return den_.is_zero() && num_.is_constant(); }
  /// Throws InvalidInput when not constant.
  Cyclotomic constant_value() const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& rhs);
  ParamScalar& operator-=(const ParamScalar& rhs);
  ParamScalar& operator*=(const ParamScalar& rhs);
  ParamScalar& operator/=(const ParamScalar& rhs);

  friend ParamScalar operator+(ParamScalar lhs, const ParamScalar& rhs) { return lhs += rhs; }
  friend ParamScalar operator-(ParamScalar lhs, const ParamScalar& rhs) { return lhs -= rhs; }
  friend ParamScalar operator*(ParamScalar lhs, const ParamScalar& rhs) { return lhs *= rhs; }
  friend ParamScalar operator/(ParamScalar lhs, const ParamScalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const ParamScalar& lhs, const ParamScalar& rhs);
  friend bool operator!=(const ParamScalar& lhs, const ParamScalar& rhs) { return !(lhs == rhs); }

  ParamScalar inverse() const;

  /// Replaces the formal parameter var by value.
  ParamScalar substitute(std::size_t var, const ParamScalar& value) const;
  ParamScalar substitute(const std::map<std::size_t, ParamScalar>& values) const;

  /// Numeric evaluation; unassigned parameters are an error.
  std::complex<double> evaluate(const std::map<std::size_t, std::complex<double>>& values) const;

  std::string to_string() const;

 private:
  void reduce();

  ParamPoly num_;
  ParamPoly den_;  // zero polynomial encodes denominator one
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& value);

}  // namespace cherednik::exact

#endif  // CHEREDNIK_EXACT_PARAM_SCALAR_HPP
