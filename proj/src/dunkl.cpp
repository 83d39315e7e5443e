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

#include "cherednik/dunkl.hpp"

#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik::dunkl {

using exact::Cyclotomic;
using exact::Monomial;
using exact::ParamVar;

Parameters Parameters::formal(const ReflectionGroup& group) {
  Parameters p;
  p.t = ParamScalar::variable(ParamVar::t);
  for (std::size_t k = 0; k < group.classes().size(); ++k) p.c.push_back(ParamScalar::variable(ParamVar::c(k)));
  return p;
}

std::vector<CycVector> substitution_rows(const ReflectionGroup& group, int g) {
  const auto& dual = group.element(g).dual;
  std::vector<CycVector> rows;
  rows.reserve(dual.rows());
  for (std::size_t i = 0; i < dual.rows(); ++i) rows.push_back(dual.row(i));
  return rows;
}

MultiPoly group_act(const ReflectionGroup& group, int g, const MultiPoly& p) {
  if (g == ReflectionGroup::identity()) return p;
  return exact::linear_substitution(p, substitution_rows(group, g));
}

DunklOperator::DunklOperator(const ReflectionGroup& group, CycVector direction, Parameters params)
    : direction_(std::move(direction)), t_(std::move(params.t)) {
  if (direction_.size() != group.rank()) throw InvalidInput("Dunkl direction has the wrong dimension");
  if (params.c.size() != group.classes().size()) throw InvalidInput("one c per reflection class is required");
  for (const auto& s : group.reflections()) {
    const Cyclotomic pair = refl::pairing(s.root, direction_);
    if (pair.is_zero()) continue;
    const ParamScalar weight =
        params.c[static_cast<std::size_t>(s.class_label)] * ParamScalar(Cyclotomic(2) * pair / (Cyclotomic(1) - s.lambda));
    if (weight.is_zero()) continue;
    terms_.push_back(Term{weight, substitution_rows(group, s.element), exact::linear_form(s.root)});
  }
}

MultiPoly DunklOperator::apply(const MultiPoly& p) const {
  MultiPoly out = exact::directional_derivative(p, direction_).scaled(t_);
  for (const auto& term : terms_) {
    const MultiPoly diff = exact::linear_substitution(p, term.rows) - p;
    if (diff.is_zero()) continue;
    out += exact::poly_divide_exact(diff, term.root).scaled(term.weight);
  }
  return out;
}

namespace {

std::string vector_string(const CycVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + "]";
}

}  // namespace

CheckResult dunkl_commute_check(const ReflectionGroup& group, const CycVector& y, const CycVector& y_prime,
                                int max_degree) {
  const Parameters params = Parameters::formal(group);
  const DunklOperator d1(group, y, params);
  const DunklOperator d2(group, y_prime, params);
  std::size_t checked = 0;
  for (const Monomial& m : exact::monomials_up_to(group.rank(), max_degree)) {
    const MultiPoly p = MultiPoly::monomial(m, ParamScalar(1L));
    const MultiPoly bracket = d1.apply(d2.apply(p)) - d2.apply(d1.apply(p));
    ++checked;
    if (!bracket.is_zero()) {
      return CheckResult::fail({{"y", vector_string(y)},
                                {"y_prime", vector_string(y_prime)},
                                {"monomial", exact::to_string(p)},
                                {"bracket", exact::to_string(bracket)}});
    }
  }
  return {Status::pass, {{"monomials", checked}}};
}

CheckResult dunkl_commute_check(const ReflectionGroup& group, int max_degree) {
  const std::size_t l = group.rank();
  std::size_t pairs = 0;
  std::size_t monomials = 0;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      CycVector a(l), b(l);
      a[i] = Cyclotomic(1);
      b[j] = Cyclotomic(1);
      CheckResult r = dunkl_commute_check(group, a, b, max_degree);
      if (!r.ok()) return r;
      ++pairs;
      monomials += r.witness["monomials"].get<std::size_t>();
    }
  }
  return {Status::pass, {{"group", group.name()}, {"pairs", pairs}, {"max_degree", max_degree}, {"evaluations", monomials}}};
}

LaurentPoly RadialOperator::apply_monomial(int k) const {
  LaurentPoly out;
  const ParamScalar coeff = ParamScalar(static_cast<long>(k)) * (ParamScalar(static_cast<long>(k - 1)) - ParamScalar(2L) * c_);
  if (!coeff.is_zero()) out.emplace(k - 2, coeff);
  return out;
}

LaurentPoly RadialOperator::apply(const LaurentPoly& p) const {
  LaurentPoly out;
  for (const auto& [k, a] : p) {
    for (const auto& [e, b] : apply_monomial(k)) {
      auto [it, inserted] = out.try_emplace(e, ParamScalar());
      it->second += a * b;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

std::string RadialOperator::describe() const { return "d^2 - (2*(" + c_.to_string() + ")/x)*d"; }

RadialOperator radial_restriction(const ParamScalar& c) { return RadialOperator(c); }

std::vector<int> quasi_basis(const QuasiInvariantSpec& spec) {
  if (spec.m < 0) throw InvalidInput("quasi-invariant multiplicity must be nonnegative");
  std::vector<int> out;
  for (int k = 0; k <= spec.degree; ++k) {
    if (k % 2 == 0 || k >= 2 * spec.m + 1) out.push_back(k);
  }
  return out;
}

bool in_quasi_span(const LaurentPoly& p, int m, int max_degree) {
  for (const auto& [k, a] : p) {
    if (a.is_zero()) continue;
    if (k < 0 || k > max_degree) return false;
    if (k % 2 != 0 && k < 2 * m + 1) return false;
  }
  return true;
}

CheckResult quasi_invariance_check(const QuasiInvariantSpec& spec, const ParamScalar& c) {
  const RadialOperator op(c);
  for (int k : quasi_basis(spec)) {
    const LaurentPoly image = op.apply_monomial(k);
    if (!in_quasi_span(image, spec.m, spec.degree - 2)) {
      return CheckResult::fail({{"m", spec.m}, {"c", c.to_string()}, {"input", "x^" + std::to_string(k)}, {"image", to_string(image)}});
    }
  }
  return {Status::pass, {{"m", spec.m}, {"c", c.to_string()}, {"degree", spec.degree}}};
}

CheckResult quasi_invariance_check(const QuasiInvariantSpec& spec) {
  CheckResult r = quasi_invariance_check(spec, ParamScalar(static_cast<long>(spec.m)));
  if (!r.ok()) return r;
  // With c generic the odd generator x^{2m+1} must be pushed out of Q_m.
  const ParamScalar generic = ParamScalar::variable(ParamVar::c(0));
  const LaurentPoly image = RadialOperator(generic).apply_monomial(2 * spec.m + 1);
  const bool leaves = !in_quasi_span(image, spec.m, 2 * spec.m + 1);
  r.witness["generic_c_image"] = {{"input", "x^" + std::to_string(2 * spec.m + 1)}, {"image", to_string(image)}};
  if (!leaves) {
    r.status = Status::fail;
    r.witness["reason"] = "generic c preserves Q_m";
  }
  return r;
}

HilbertSeries quasi_hilbert_series(const QuasiInvariantSpec& spec) {
  HilbertSeries h;
  h.dimensions.assign(static_cast<std::size_t>(spec.degree) + 1, 0);
  for (int k : quasi_basis(spec)) ++h.dimensions[static_cast<std::size_t>(k)];
  // Multiply by 1 - q^2.
  std::vector<long> num(h.dimensions.size(), 0);
  for (std::size_t k = 0; k < num.size(); ++k) num[k] = h.dimensions[k] - (k >= 2 ? h.dimensions[k - 2] : 0);
  const std::size_t top = static_cast<std::size_t>(2 * spec.m + 1);
  h.stabilized = num.size() > top + 2;
  while (!num.empty() && num.back() == 0) num.pop_back();
  h.numerator = num;
  h.palindromic = !num.empty() && std::equal(num.begin(), num.end(), num.rbegin());
  return h;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    if (numerator[k] == 0) continue;
    if (!first) out << (numerator[k] > 0 ? "+" : "");
    first = false;
    if (k == 0) {
      out << numerator[k];
    } else {
      if (numerator[k] != 1) out << numerator[k] << "*";
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  out << ")/(1-q^2)";
  return out.str();
}

std::string to_string(const LaurentPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")*x^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace cherednik::dunkl
