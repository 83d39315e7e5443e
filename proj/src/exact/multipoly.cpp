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

#include "cherednik/exact/multipoly.hpp"

#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik::exact {

MultiPoly poly_divide_exact(const MultiPoly& p, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  auto q = p.divide_exact(divisor);
  if (!q) {
    throw InternalInconsistency("polynomial " + to_string(p) + " is not divisible by " + to_string(divisor));
  }
  return *std::move(q);
}

MultiPoly derivative(const MultiPoly& p, std::size_t var) {
  MultiPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    const int e = mono_exponent(mono, var);
    if (e == 0) continue;
    Monomial m = mono;
    --m[var];
    out.add_term(std::move(m), coeff * ParamScalar(static_cast<long>(e)));
  }
  return out;
}

MultiPoly directional_derivative(const MultiPoly& p, const std::vector<Cyclotomic>& direction) {
  MultiPoly out;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (direction[i].is_zero()) continue;
    out += derivative(p, i).scaled(ParamScalar(direction[i]));
  }
  return out;
}

MultiPoly linear_form(const std::vector<Cyclotomic>& coeffs) {
  MultiPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_term(unit_monomial(i), ParamScalar(coeffs[i]));
  return out;
}

MultiPoly linear_substitution(const MultiPoly& p, const std::vector<std::vector<Cyclotomic>>& images) {
  // Monomial matrices (one nonzero per row) send monomials to monomials.
  bool monomial_matrix = true;
  std::vector<std::size_t> target(images.size(), 0);
  std::vector<Cyclotomic> scale(images.size());
  for (std::size_t i = 0; i < images.size() && monomial_matrix; ++i) {
    int nonzero = 0;
    for (std::size_t k = 0; k < images[i].size(); ++k) {
      if (images[i][k].is_zero()) continue;
      ++nonzero;
      target[i] = k;
      scale[i] = images[i][k];
    }
    monomial_matrix = nonzero == 1;
  }
  MultiPoly out;
  if (monomial_matrix) {
    for (const auto& [mono, coeff] : p.terms()) {
      if (mono.size() > images.size()) throw InvalidInput("substitution has too few rows");
      Monomial m(images.size(), 0);
      Cyclotomic factor(1);
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        m[target[i]] += mono[i];
        factor *= scale[i].pow(mono[i]);
      }
      out.add_term(std::move(m), coeff * ParamScalar(factor));
    }
    return out;
  }
  std::vector<MultiPoly> forms;
  forms.reserve(images.size());
  for (const auto& row : images) forms.push_back(linear_form(row));
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.size() > images.size()) throw InvalidInput("substitution has too few rows");
    MultiPoly term(coeff);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] > 0) term = term * forms[i].pow(mono[i]);
    }
    out += term;
  }
  return out;
}

namespace {

void compositions(std::size_t pos, int remaining, std::vector<int>& e, std::vector<Monomial>& out) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    Monomial m = e;
    trim(m);
    out.push_back(std::move(m));
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[pos] = k;
    compositions(pos + 1, remaining - k, e, out);
  }
  e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t vars, int max_degree) {
  std::vector<Monomial> out;
  if (vars == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> e(vars, 0);
  for (int degree = 0; degree <= max_degree; ++degree) compositions(0, degree, e, out);
  return out;
}

std::vector<int> padded(const Monomial& m, std::size_t vars) {
  std::vector<int> out(vars, 0);
  for (std::size_t i = 0; i < m.size() && i < vars; ++i) out[i] = m[i];
  return out;
}

std::string to_string(const MultiPoly& p, const std::string& prefix) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    if (!first) out << " + ";
    first = false;
    std::ostringstream vars;
    bool any = false;
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (any) vars << '*';
      vars << prefix << (v + 1);
      if (mono[v] > 1) vars << '^' << mono[v];
      any = true;
    }
    const std::string c = coeff.to_string();
    if (!any) {
      out << "(" << c << ")";
    } else if (c == "1") {
      out << vars.str();
    } else {
      out << "(" << c << ")*" << vars.str();
    }
  }
  return out.str();
}

}  // namespace cherednik::exact
