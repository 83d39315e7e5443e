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

#ifndef CHEREDNIK_EXACT_SPARSE_POLY_HPP
#define CHEREDNIK_EXACT_SPARSE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace cherednik::exact {

/// Exponent vector with trailing zeros removed, so monomials over different
/// numbers of variables compare consistently. std::vector's lexicographic
/// order on trimmed vectors is the lex order on padded ones.
using Monomial = std::vector<int>;

inline void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

inline Monomial unit_monomial(std::size_t var, int power = 1) {
  Monomial m(var + 1, 0);
  m[var] = power;
  trim(m);
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

inline bool mono_divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

inline Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial out = m;
  for (std::size_t i = 0; i < d.size(); ++i) out[i] -= d[i];
  trim(out);
  return out;
}

inline int mono_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline int mono_exponent(const Monomial& m, std::size_t var) { return var < m.size() ? m[var] : 0; }

/// Sparse multivariate polynomial with coefficients in a ring C. No zero
/// coefficient is ever stored. C needs +, -, *, unary -, == and is_zero().
template <class C>
class SparsePoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C>;

  SparsePoly() = default;
  explicit SparsePoly(const C& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
  }

  static SparsePoly variable(std::size_t var) {
    SparsePoly p;
    p.terms_.emplace(unit_monomial(var), C(1));
    return p;
  }

  static SparsePoly monomial(Monomial m, const C& coeff) {
    trim(m);
    SparsePoly p;
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), coeff);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  C constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? C() : it->second;
  }
  C coefficient(const Monomial& m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? C() : it->second;
  }

  /// Largest monomial in lex order. Precondition: nonzero.
  const std::pair<const Monomial, C>& leading_term() const { return *terms_.rbegin(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }

  void add_term(Monomial m, const C& coeff) {
    if (coeff.is_zero()) return;
    trim(m);
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    SparsePoly out;
    for (const auto& [ma, ca] : lhs.terms_) {
      for (const auto& [mb, cb] : rhs.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    }
    return out;
  }
  friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    auto a = lhs.terms_.begin();
    auto b = rhs.terms_.begin();
    for (; a != lhs.terms_.end(); ++a, ++b) {
      if (a->first != b->first || !(a->second == b->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const SparsePoly& lhs, const SparsePoly& rhs) { return !(lhs == rhs); }

  /// Multiplies every coefficient by a scalar.
  template <class S>
  SparsePoly scaled(const S& s) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      C v = c * s;
      if (!v.is_zero()) out.terms_.emplace_hint(out.terms_.end(), m, std::move(v));
    }
    return out;
  }

  SparsePoly shifted(const Monomial& m) const {
    SparsePoly out;
    for (const auto& [mm, c] : terms_) out.terms_.emplace(mono_mul(mm, m), c);
    return out;
  }

  SparsePoly pow(int e) const {
    SparsePoly result(C(1));
    SparsePoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Exact division over a field of coefficients: returns r with
  /// *this == divisor * r, or nullopt when divisor does not divide. The
  /// coefficient type must provide operator/. Division by zero returns
  /// nullopt only for a nonzero dividend.
  std::optional<SparsePoly> divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) return is_zero() ? std::optional<SparsePoly>(SparsePoly()) : std::nullopt;
    SparsePoly rest = *this;
    SparsePoly quotient;
    const auto& [lead_m, lead_c] = divisor.leading_term();
    while (!rest.is_zero()) {
      const auto& [m, c] = rest.leading_term();
      if (!mono_divides(lead_m, m)) return std::nullopt;
      SparsePoly term = monomial(mono_div(m, lead_m), c / lead_c);
      rest -= divisor * term;
      quotient += term;
    }
    return quotient;
  }

 private:
  TermMap terms_;
};

}  // namespace cherednik::exact

#endif  // CHEREDNIK_EXACT_SPARSE_POLY_HPP
