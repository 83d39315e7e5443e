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

#include "cherednik/exact/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik::exact {

namespace {

// x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
std::vector<long> compute_cyclotomic(int n) {
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    // Long division by a monic integer polynomial.
    const std::size_t dd = divisor.size() - 1;
    std::vector<long> quotient(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const long q = poly[i];
      quotient[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t k = 0; k <= dd; ++k) poly[i - dd + k] -= q * divisor[k];
    }
    poly = std::move(quotient);
  }
  return poly;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

// Reduces a coefficient vector in powers of zeta_n (any length) to the
// power basis of Q(zeta_n).
std::vector<Rational> reduce_mod(std::vector<Rational> poly, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  // zeta^n = 1 first, to bound the degree below n.
  if (poly.size() > static_cast<std::size_t>(n)) {
    for (std::size_t i = static_cast<std::size_t>(n); i < poly.size(); ++i) {
      if (sgn(poly[i]) != 0) poly[i % static_cast<std::size_t>(n)] += poly[i];
    }
    poly.resize(static_cast<std::size_t>(n));
  }
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational q = poly[i];
    for (std::size_t k = 0; k <= deg; ++k) {
      if (phi[k] != 0) poly[i - deg + k] -= q * phi[k];
    }
  }
  poly.resize(deg, Rational(0));
  return poly;
}

// Raw powers-of-zeta_target representation of an element with the given
// conductor (not reduced).
std::vector<Rational> spread(const std::vector<Rational>& coeffs, int conductor, int target) {
  const int step = target / conductor;
  std::vector<Rational> out(static_cast<std::size_t>(target), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(target)] += coeffs[k];
  }
  return out;
}

// Solves the square system a * x = b over Q; returns false if singular.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                    std::vector<Rational>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  x = std::move(b);
  return true;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidInput("cyclotomic polynomial needs n >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<long>>(std::move(poly)));
  return *it->second;
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw InvalidInput("empty number");
  if (s.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) {
      throw InvalidInput("malformed rational '" + s + "'");
    }
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  mpz_class mantissa = 0;
  long scale = 0;
  bool digits = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_point) --scale;
      digits = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!digits) throw InvalidInput("malformed number '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(s.substr(i), &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed exponent in '" + s + "'");
    }
    i += used;
    scale += exponent;
  }
  if (i != s.size()) throw InvalidInput("trailing characters in '" + s + "'");
  Rational r(mantissa);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    r /= ten_pow;
  } else {
    r *= ten_pow;
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Cyclotomic::Cyclotomic() : coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long value) : coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n < 1) throw InvalidInput("root of unity needs n >= 1");
  long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
  raw[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(n, reduce_mod(std::move(raw), n));
}

void Cyclotomic::normalize() {
  bool rational = true;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) {
      rational = false;
      break;
    }
  }
  if (rational) {
    Rational c = coeffs_.empty() ? Rational(0) : coeffs_[0];
    conductor_ = 1;
    coeffs_.assign(1, c);
  }
}

bool Cyclotomic::is_zero() const noexcept { return conductor_ == 1 && sgn(coeffs_[0]) == 0; }

bool Cyclotomic::is_one() const noexcept { return conductor_ == 1 && coeffs_[0] == 1; }

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvalidInput("cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

std::vector<Rational> Cyclotomic::coordinates_in(int target) const {
  if (target % conductor_ != 0) throw InvalidInput("target conductor is not a multiple");
  if (target == conductor_) {
    std::vector<Rational> out = coeffs_;
    out.resize(static_cast<std::size_t>(totient(target)), Rational(0));
    return out;
  }
  return reduce_mod(spread(coeffs_, conductor_, target), target);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (conductor_ == rhs.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
  }
  const int l = lcm_int(conductor_, rhs.conductor_);
  std::vector<Rational> a = coordinates_in(l);
  const std::vector<Rational> b = rhs.coordinates_in(l);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  conductor_ = l;
  coeffs_ = std::move(a);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.is_rational()) {
    if (lhs.is_zero()) return Cyclotomic();
    Cyclotomic out = rhs;
    for (auto& c : out.coeffs_) c *= lhs.coeffs_[0];
    out.normalize();
    return out;
  }
  if (rhs.is_rational()) return rhs * lhs;
  const int l = lcm_int(lhs.conductor_, rhs.conductor_);
  const std::vector<Rational> a = lhs.coordinates_in(l);
  const std::vector<Rational> b = rhs.coordinates_in(l);
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
    }
  }
  return Cyclotomic(l, reduce_mod(std::move(prod), l));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this * rhs.inverse(); }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.conductor_ == rhs.conductor_) return lhs.coeffs_ == rhs.coeffs_;
  if (lhs.is_rational() != rhs.is_rational()) return false;
  const int l = lcm_int(lhs.conductor_, rhs.conductor_);
  return lhs.coordinates_in(l) == rhs.coordinates_in(l);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in cyclotomic field");
  if (is_rational()) return Cyclotomic(Rational(1 / coeffs_[0]));
  // Solve (multiplication by this) * x = 1 in the power basis.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<Rational> shifted(col + d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) shifted[col + k] = coeffs_[k];
    const auto reduced = reduce_mod(std::move(shifted), conductor_);
    for (std::size_t row = 0; row < d; ++row) m[row][col] = reduced[row];
  }
  std::vector<Rational> rhs(d, Rational(0));
  rhs[0] = 1;
  std::vector<Rational> x;
  if (!solve_rational(std::move(m), std::move(rhs), x)) {
    throw InternalInconsistency("multiplication matrix of a nonzero field element is singular");
  }
  return Cyclotomic(conductor_, std::move(x));
}

Cyclotomic Cyclotomic::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  const auto n = static_cast<std::size_t>(conductor_);
  std::vector<Rational> raw(n, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[(n - k) % n] += coeffs_[k];
  return Cyclotomic(conductor_, reduce_mod(std::move(raw), conductor_));
}

std::complex<double> Cyclotomic::embed() const {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
    sum += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  // Print in the smallest field containing the element so equal values
  // always print identically.
  int conductor = conductor_;
  std::vector<Rational> coords = coeffs_;
  for (int d = 3; d < conductor_; ++d) {
    if (conductor_ % d != 0) continue;
    const std::size_t pd = static_cast<std::size_t>(totient(d));
    const std::size_t pn = coeffs_.size();
    // Columns: images of zeta_d^k in Q(zeta_N); keep a pd x pd subsystem by
    // row selection, then confirm the full system.
    std::vector<std::vector<Rational>> columns;
    for (std::size_t k = 0; k < pd; ++k) {
      columns.push_back(Cyclotomic::root_of_unity(d, static_cast<long>(k)).coordinates_in(conductor_));
    }
    // Gaussian elimination on the augmented pn x (pd + 1) system.
    std::vector<std::vector<Rational>> aug(pn, std::vector<Rational>(pd + 1));
    for (std::size_t r = 0; r < pn; ++r) {
      for (std::size_t k = 0; k < pd; ++k) aug[r][k] = columns[k][r];
      aug[r][pd] = coeffs_[r];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < pd && row < pn; ++col) {
      std::size_t p = row;
      while (p < pn && sgn(aug[p][col]) == 0) ++p;
      if (p == pn) continue;
      std::swap(aug[p], aug[row]);
      const Rational inv = 1 / aug[row][col];
      for (auto& v : aug[row]) v *= inv;
      for (std::size_t r = 0; r < pn; ++r) {
        if (r == row || sgn(aug[r][col]) == 0) continue;
        const Rational f = aug[r][col];
        for (std::size_t k = 0; k <= pd; ++k) aug[r][k] -= f * aug[row][k];
      }
      pivots.push_back(col);
      ++row;
    }
    bool consistent = true;
    for (std::size_t r = row; r < pn; ++r) {
      if (sgn(aug[r][pd]) != 0) consistent = false;
    }
    if (!consistent) continue;
    std::vector<Rational> sol(pd, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = aug[i][pd];
    conductor = d;
    coords = std::move(sol);
    break;
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Rational& c = coords[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << "E(" << conductor << ')';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) { return os << value.to_string(); }

}  // namespace cherednik::exact
