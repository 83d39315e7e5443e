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

#include <cmath>
#include <numbers>
#include <random>

#include "cherednik/errors.hpp"
#include "cherednik/exact/cyclotomic.hpp"
#include "cherednik/exact/linalg.hpp"
#include "cherednik/exact/multipoly.hpp"
#include "cherednik/exact/param_scalar.hpp"
#include "cherednik/exact/truncated_series.hpp"
#include "doctest.h"

using namespace cherednik;
using namespace cherednik::exact;

namespace {

Cyclotomic zeta(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_cyclotomic(std::mt19937& rng) {
  static const int conductors[] = {1, 3, 4, 5, 8, 12};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const int n = conductors[pick(rng)];
  Cyclotomic out;
  for (int k = 0; k < n; ++k) out += Cyclotomic(Rational(num(rng), den(rng))) * zeta(n, k);
  return out;
}

ParamPoly random_param_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> expo(0, 2);
  ParamPoly p;
  for (int i = 0; i < 3; ++i) {
    p.add_term(Monomial{expo(rng), expo(rng), expo(rng)}, Cyclotomic(coef(rng)) * zeta(3, i));
  }
  if (p.is_zero()) p = ParamPoly(Cyclotomic(1));
  return p;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic examples") {
  CHECK(zeta(4) * zeta(4) == Cyclotomic(-1));
  CHECK(zeta(3) + zeta(3, 2) == Cyclotomic(-1));
  const Cyclotomic a = Cyclotomic(1) - zeta(5);
  CHECK(a / a == Cyclotomic(1));
  CHECK_THROWS_AS(a / Cyclotomic(0), DivisionByZero);
  CHECK(zeta(8, 2) == zeta(4));
  CHECK(zeta(6, 3) == Cyclotomic(-1));
  CHECK((zeta(6, 3)).is_rational());
  CHECK(zeta(12).pow(12) == Cyclotomic(1));
  CHECK(zeta(5).conj() == zeta(5, 4));
}

TEST_CASE("cyclotomic printing uses the smallest field") {
  CHECK(zeta(4).to_string() == "E(4)");
  CHECK(zeta(8, 2).to_string() == "E(4)");
  CHECK((Cyclotomic(Rational(1, 2)) + zeta(3)).to_string() == "1/2+E(3)");
  CHECK(Cyclotomic(Rational(-3, 4)).to_string() == "-3/4");
}

TEST_CASE("complex embedding examples") {
  CHECK(std::abs(zeta(4).embed() - std::complex<double>(0, 1)) < 1e-15);
  // cos and sin of 2 pi / 3
  const std::complex<double> expected(std::cos(2 * std::numbers::pi / 3), std::sin(2 * std::numbers::pi / 3));
  CHECK(std::abs(zeta(3).embed() - expected) < 1e-15);
  CHECK(std::abs(zeta(3).embed() - std::complex<double>(-0.5, 0.8660254037844386)) < 1e-15);
  CHECK(Cyclotomic(1).embed() == std::complex<double>(1, 0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const Cyclotomic a = random_cyclotomic(rng);
    const Cyclotomic b = random_cyclotomic(rng);
    const Cyclotomic c = random_cyclotomic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Cyclotomic(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
  }
}

TEST_CASE("complex embedding is a ring homomorphism") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    // Random expressions of degree <= 8 in unit-scale inputs.
    Cyclotomic exact(1);
    std::complex<double> numeric = 1.0;
    std::uniform_int_distribution<int> depth(1, 8);
    const int d = depth(rng);
    for (int i = 0; i < d; ++i) {
      const Cyclotomic f = random_cyclotomic(rng);
      const double scale = std::max(1.0, std::abs(f.embed()));
      const Cyclotomic unit = f * Cyclotomic(Rational(1, static_cast<unsigned long>(std::ceil(scale))));
      exact = exact * unit + zeta(8, i);
      numeric = numeric * unit.embed() + zeta(8, i).embed();
    }
    CHECK(std::abs(exact.embed() - numeric) <= 1e-12 * std::max(1.0, std::abs(numeric)));
  }
}

TEST_CASE("parse_rational is exact") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("3") == Rational(3));
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1.2.3"), InvalidInput);
}

TEST_CASE("parameter scalars have decidable equality") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const ParamPoly p = random_param_poly(rng);
    const ParamPoly q = random_param_poly(rng);
    const ParamScalar a(p, q);
    CHECK((a - a).is_zero());
    const ParamScalar inv(q, p);
    CHECK(a * inv == ParamScalar(1L));
    CHECK(a + a == a * ParamScalar(2L));
  }
  const ParamScalar t = ParamScalar::variable(ParamVar::t);
  const ParamScalar c = ParamScalar::variable(ParamVar::c(0));
  const ParamScalar f = (t * t - c * c) / (t - c);
  CHECK(f.is_polynomial());
  CHECK(f == t + c);
  CHECK(f.substitute(ParamVar::t, ParamScalar(1L)) == ParamScalar(1L) + c);
  CHECK_THROWS_AS(t / ParamScalar(), DivisionByZero);
}

TEST_CASE("poly_divide_exact examples") {
  const MultiPoly x = MultiPoly::variable(0);
  const MultiPoly minus_x = -x;
  CHECK(poly_divide_exact(x * x - x * minus_x, x) == x.scaled(ParamScalar(2L)));
  CHECK(poly_divide_exact(MultiPoly(), x).is_zero());
  // x^3 - (-x)^3 = 2 x^3, divided by x.
  CHECK(poly_divide_exact(x.pow(3) - minus_x.pow(3), x) == (x * x).scaled(ParamScalar(2L)));
  CHECK_THROWS_AS(poly_divide_exact(x + MultiPoly(ParamScalar(1L)), x), InternalInconsistency);
  const MultiPoly y = MultiPoly::variable(1);
  CHECK(poly_divide_exact(x * x - y * y, x - y) == x + y);
}

TEST_CASE("series_exp examples") {
  const TruncatedSeries tau1 = TruncatedSeries::variable(0, 3);
  const TruncatedSeries expected = TruncatedSeries(Cyclotomic(1), 3) + tau1 +
                                   tau1 * tau1 * TruncatedSeries(Cyclotomic(Rational(1, 2)), 3);
  CHECK(series_exp(tau1) == expected);
  CHECK(series_exp(TruncatedSeries(2)) == TruncatedSeries(Cyclotomic(1), 2));
  const TruncatedSeries a = TruncatedSeries::variable(0, 2);
  const TruncatedSeries b = TruncatedSeries::variable(1, 2);
  CHECK(series_exp(a + b) == TruncatedSeries(Cyclotomic(1), 2) + a + b);
  CHECK_THROWS_AS(series_exp(TruncatedSeries(Cyclotomic(1), 2)), InvalidInput);
}

TEST_CASE("series_exp(s) * series_exp(-s) == 1") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int order = 1; order <= 4; ++order) {
    for (int trial = 0; trial < 5; ++trial) {
      TruncatedSeries s(order);
      for (std::size_t v = 0; v < 3; ++v) {
        s += TruncatedSeries::variable(v, order) * TruncatedSeries(Cyclotomic(coef(rng)) * zeta(4, trial), order);
      }
      s += TruncatedSeries::variable(0, order) * TruncatedSeries::variable(1, order);
      CHECK(series_exp(s) * series_exp(-s) == TruncatedSeries(Cyclotomic(1), order));
      const TruncatedSeries u = TruncatedSeries(Cyclotomic(3), order) + s;
      CHECK(u * u.inverse() == TruncatedSeries(Cyclotomic(1), order));
    }
  }
}

TEST_CASE("dense linear algebra over the cyclotomic field") {
  Matrix<Cyclotomic> m(2, 2);
  m(0, 0) = zeta(3);
  m(0, 1) = Cyclotomic(1);
  m(1, 0) = Cyclotomic(2);
  m(1, 1) = zeta(3, 2);
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix<Cyclotomic>::identity(2));
  Matrix<Cyclotomic> singular(2, 2);
  singular(0, 0) = Cyclotomic(1);
  singular(0, 1) = zeta(4);
  singular(1, 0) = zeta(4);
  singular(1, 1) = Cyclotomic(-1);
  CHECK_FALSE(inverse(singular).has_value());
  const auto null = nullspace(singular);
  REQUIRE(null.size() == 1);
  CHECK(singular.apply(null[0]) == std::vector<Cyclotomic>{Cyclotomic(0), Cyclotomic(0)});
}
