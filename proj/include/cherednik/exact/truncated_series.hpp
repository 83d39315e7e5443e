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

#ifndef CHEREDNIK_EXACT_TRUNCATED_SERIES_HPP
#define CHEREDNIK_EXACT_TRUNCATED_SERIES_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "cherednik/exact/cyclotomic.hpp"
#include "cherednik/exact/sparse_poly.hpp"

namespace cherednik::exact {

/// Element of C[tau_0, tau_1, ...] / (total degree >= order), with
/// cyclotomic coefficients. The default order 2 keeps first-order
/// deformations only.
class TruncatedSeries {
 public:
  static constexpr int kDefaultOrder = 2;

  explicit TruncatedSeries(int order = kDefaultOrder);
  TruncatedSeries(const Cyclotomic& constant, int order);

  static TruncatedSeries variable(std::size_t var, int order);

  int order() const noexcept { return order_; }
  const SparsePoly<Cyclotomic>& poly() const noexcept { return poly_; }

  bool is_zero() const noexcept { return poly_.is_zero(); }
  Cyclotomic constant_term() const { return poly_.constant_term(); }
  /// Units are exactly the elements with nonzero constant term.
  bool is_unit() const { return !constant_term().is_zero(); }
  Cyclotomic coefficient(const Monomial& m) const { return poly_.coefficient(m); }

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  /// Division by a unit; throws DivisionByZero otherwise.
  TruncatedSeries& operator/=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs *= rhs; }
  friend TruncatedSeries operator/(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs /= rhs; }
  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return lhs.order_ == rhs.order_ && lhs.poly_ == rhs.poly_;
  }
  friend bool operator!=(const TruncatedSeries& lhs, const TruncatedSeries& rhs) { return !(lhs == rhs); }

  TruncatedSeries inverse() const;
  TruncatedSeries pow(long exponent) const;
  /// Part of total degree exactly `degree`.
  TruncatedSeries homogeneous_part(int degree) const;
  /// Sets every tau to zero.
  Cyclotomic at_zero() const { return constant_term(); }

  std::string to_string(const std::function<std::string(std::size_t)>& name = default_name) const;
  static std::string default_name(std::size_t var) { return "tau" + std::to_string(var + 1); }

 private:
  void truncate();

  int order_;
  SparsePoly<Cyclotomic> poly_;
};

/// Truncated exponential sum_{k < order} s^k / k!. Throws InvalidInput when
/// s has a nonzero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);

}  // namespace cherednik::exact

#endif  // CHEREDNIK_EXACT_TRUNCATED_SERIES_HPP
