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

#include "cherednik/exact/param_scalar.hpp"

#include <ostream>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik::exact {

std::string param_name(std::size_t var) {
  if (var == ParamVar::t) return "t";
  if (var == ParamVar::eta) return "eta";
  return "c" + std::to_string(var - 1);
}

std::string to_string(const ParamPoly& p, const std::function<std::string(std::size_t)>& name) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    std::string c = coeff.to_string();
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    bool negative = false;
    if (!compound && c[0] == '-') {
      negative = true;
      c.erase(0, 1);
    }
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream vars;
    bool any = false;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (any) vars << '*';
      vars << name(v);
      if (mono[v] > 1) vars << '^' << mono[v];
      any = true;
    }
    if (!any) {
      out << (compound ? "(" + c + ")" : c);
    } else if (c == "1") {
      out << vars.str();
    } else {
      out << (compound ? "(" + c + ")" : c) << '*' << vars.str();
    }
  }
  return out.str();
}

ParamScalar::ParamScalar(ParamPoly numerator, ParamPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator in parameter fraction");
  reduce();
}

void ParamScalar::reduce() {
  if (den_.is_zero()) return;
  if (num_.is_zero()) {
    den_ = ParamPoly();
    return;
  }
  const Cyclotomic lead = den_.leading_term().second;
  if (!lead.is_one()) {
    const Cyclotomic inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (den_.is_constant()) {
    den_ = ParamPoly();
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = ParamPoly();
  }
}

Cyclotomic ParamScalar::constant_value() const {
  if (!is_constant()) throw InvalidInput("parameter expression " + to_string() + " is not constant");
  return num_.constant_term();
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_.is_zero() && rhs.den_.is_zero()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    reduce();
    return *this;
  }
  num_ = num_ * rhs.denominator() + rhs.num_ * denominator();
  den_ = denominator() * rhs.denominator();
  reduce();
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& rhs) { return *this += -rhs; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = ParamScalar();
  if (rhs.is_constant()) {
    num_ = num_.scaled(rhs.num_.constant_term());
    return *this;
  }
  if (is_constant()) {
    const Cyclotomic c = num_.constant_term();
    *this = rhs;
    num_ = num_.scaled(c);
    return *this;
  }
  num_ = num_ * rhs.num_;
  if (!rhs.den_.is_zero()) den_ = den_.is_zero() ? rhs.den_ : den_ * rhs.den_;
  reduce();
  return *this;
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero parameter expression");
  if (is_constant()) return ParamScalar(num_.constant_term().inverse());
  return ParamScalar(denominator(), num_);
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const ParamScalar& lhs, const ParamScalar& rhs) {
  if (lhs.den_ == rhs.den_) return lhs.num_ == rhs.num_;
  return lhs.num_ * rhs.denominator() == rhs.num_ * lhs.denominator();
}

namespace {

ParamScalar substitute_poly(const ParamPoly& p, const std::map<std::size_t, ParamScalar>& values) {
  ParamScalar out;
  for (const auto& [mono, coeff] : p.terms()) {
    ParamScalar term(coeff);
    Monomial kept;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      auto it = values.find(v);
      if (it == values.end()) {
        if (kept.size() <= v) kept.resize(v + 1, 0);
        kept[v] = mono[v];
        continue;
      }
      ParamScalar power(1L);
      for (int e = 0; e < mono[v]; ++e) power *= it->second;
      term *= power;
    }
    if (!kept.empty()) term *= ParamScalar(ParamPoly::monomial(kept, Cyclotomic(1)));
    out += term;
  }
  return out;
}

std::complex<double> evaluate_poly(const ParamPoly& p, const std::map<std::size_t, std::complex<double>>& values) {
  std::complex<double> sum = 0.0;
  for (const auto& [mono, coeff] : p.terms()) {
    std::complex<double> term = coeff.embed();
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      auto it = values.find(v);
      if (it == values.end()) throw InvalidInput("no numeric value for parameter " + param_name(v));
      term *= std::pow(it->second, mono[v]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

ParamScalar ParamScalar::substitute(const std::map<std::size_t, ParamScalar>& values) const {
  ParamScalar num = substitute_poly(num_, values);
  if (den_.is_zero()) return num;
  return num / substitute_poly(den_, values);
}

ParamScalar ParamScalar::substitute(std::size_t var, const ParamScalar& value) const {
  return substitute(std::map<std::size_t, ParamScalar>{{var, value}});
}

std::complex<double> ParamScalar::evaluate(const std::map<std::size_t, std::complex<double>>& values) const {
  const auto n = evaluate_poly(num_, values);
  if (den_.is_zero()) return n;
  return n / evaluate_poly(den_, values);
}

std::string ParamScalar::to_string() const {
  if (den_.is_zero()) return exact::to_string(num_);
  return "(" + exact::to_string(num_) + ")/(" + exact::to_string(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& value) { return os << value.to_string(); }

}  // namespace cherednik::exact
