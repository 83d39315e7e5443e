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

#include "cherednik/exact/truncated_series.hpp"

#include "cherednik/errors.hpp"
#include "cherednik/exact/param_scalar.hpp"

namespace cherednik::exact {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 1) throw InvalidInput("truncation order must be at least 1");
}

TruncatedSeries::TruncatedSeries(const Cyclotomic& constant, int order) : TruncatedSeries(order) {
  poly_ = SparsePoly<Cyclotomic>(constant);
}

TruncatedSeries TruncatedSeries::variable(std::size_t var, int order) {
  TruncatedSeries s(order);
  s.poly_ = SparsePoly<Cyclotomic>::variable(var);
  s.truncate();
  return s;
}

void TruncatedSeries::truncate() {
  SparsePoly<Cyclotomic> kept;
  bool dropped = false;
  for (const auto& [m, c] : poly_.terms()) {
    if (mono_degree(m) < order_) {
      kept.add_term(m, c);
    } else {
      dropped = true;
    }
  }
  if (dropped) poly_ = std::move(kept);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  out.poly_ = -out.poly_;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (order_ != rhs.order_) throw InvalidInput("mixing truncation orders");
  poly_ += rhs.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (order_ != rhs.order_) throw InvalidInput("mixing truncation orders");
  poly_ -= rhs.poly_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  if (order_ != rhs.order_) throw InvalidInput("mixing truncation orders");
  SparsePoly<Cyclotomic> out;
  for (const auto& [ma, ca] : poly_.terms()) {
    const int da = mono_degree(ma);
    for (const auto& [mb, cb] : rhs.poly_.terms()) {
      if (da + mono_degree(mb) >= order_) continue;
      out.add_term(mono_mul(ma, mb), ca * cb);
    }
  }
  poly_ = std::move(out);
  return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Cyclotomic c0 = constant_term();
  if (c0.is_zero()) throw DivisionByZero("truncated series without constant term is not invertible");
  // (c0 (1 + n))^{-1} = c0^{-1} sum_k (-n)^k; n is nilpotent of index order.
  const Cyclotomic inv0 = c0.inverse();
  TruncatedSeries nil = *this;
  nil.poly_ = nil.poly_.scaled(inv0);
  nil -= TruncatedSeries(Cyclotomic(1), order_);
  TruncatedSeries neg = -nil;
  TruncatedSeries sum(Cyclotomic(1), order_);
  TruncatedSeries power(Cyclotomic(1), order_);
  for (int k = 1; k < order_; ++k) {
    power *= neg;
    sum += power;
  }
  sum.poly_ = sum.poly_.scaled(inv0);
  return sum;
}

TruncatedSeries& TruncatedSeries::operator/=(const TruncatedSeries& rhs) { return *this *= rhs.inverse(); }

TruncatedSeries TruncatedSeries::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  TruncatedSeries result(Cyclotomic(1), order_);
  TruncatedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int degree) const {
  TruncatedSeries out(order_);
  for (const auto& [m, c] : poly_.terms()) {
    if (mono_degree(m) == degree) out.poly_.add_term(m, c);
  }
  return out;
}

std::string TruncatedSeries::to_string(const std::function<std::string(std::size_t)>& name) const {
  std::string body = exact::to_string(poly_, name);
  return body + " + O(tau^" + std::to_string(order_) + ")";
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s.constant_term().is_zero()) throw InvalidInput("series_exp needs a series without constant term");
  const int order = s.order();
  TruncatedSeries sum(Cyclotomic(1), order);
  TruncatedSeries term(Cyclotomic(1), order);
  for (int k = 1; k < order; ++k) {
    term *= s;
    term = term * TruncatedSeries(Cyclotomic(Rational(Rational(1) / k)), order);
    sum += term;
  }
  return sum;
}

}  // namespace cherednik::exact
