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
#include "cherednik/kz.hpp"
#include "doctest.h"

using namespace cherednik;
using namespace cherednik::kz;
using exact::ParamVar;
using exact::Rational;

namespace {

const ParamScalar c1 = ParamScalar::variable(ParamVar::c(0));
const ParamScalar eta = ParamScalar::variable(ParamVar::eta);

std::complex<double> expi(double x) { return std::exp(std::complex<double>(0, x)); }

LocalModel numeric(int n, double c, double e) { return LocalModel::numeric(n, {std::to_string(c)}, std::to_string(e)); }

}  // namespace

TEST_CASE("flat exponents") {
  const LocalModel two = LocalModel::formal(2);
  CHECK(flat_exponent(two, 0) == eta);
  CHECK(flat_exponent(two, 1) == ParamScalar(2L) * c1 + eta);
  for (int n : {2, 3, 4, 6}) {
    const LocalModel zero = LocalModel::numeric(n, {"0"}, "0");
    for (int j = 0; j < n; ++j) {
      CHECK(flat_exponent(zero, j).is_zero());
      CHECK(std::abs(zeta_character(zero, j).value() - expi(2 * std::numbers::pi * j / n)) < 1e-14);
    }
    const LocalModel formal = LocalModel::formal(n);
    for (int j = 0; j < n; ++j) CHECK(flat_exponent(formal, j) == flat_exponent_closed_form(formal, j));
    CHECK(flat_exponent_closed_form(formal, n) == eta);
  }
}

TEST_CASE("KZ characters") {
  const LocalModel m = LocalModel::numeric(2, {"0.1"}, "0");
  CHECK(std::abs(zeta_character(m, 1).value() - expi(0.8 * std::numbers::pi)) < 1e-14);
  CHECK(std::abs(zeta_character(m, 0).value() - 1.0) < 1e-14);
  const LocalModel undeformed = LocalModel::numeric(2, {"0"}, "0");
  CHECK(std::abs(zeta_character(undeformed, 1).value() + 1.0) < 1e-14);
  const LocalModel three = LocalModel::numeric(3, {"0", "0"}, "0.3");
  CHECK(std::abs(zeta_character(three, 0).value() - expi(-0.2 * std::numbers::pi)) < 1e-14);
  CHECK_THROWS_AS(zeta_character(three, 3), InvalidInput);
}

TEST_CASE("tau map") {
  const TauParameters tau = tau_from_c_eta(LocalModel::formal(2));
  CHECK(tau.over_2pi_i[0] == -(ParamScalar(2L) * c1 + eta) * ParamScalar(Rational(1, 2)));
  CHECK(tau.over_2pi_i[1] == -eta * ParamScalar(Rational(1, 2)));
  for (const auto& v : tau_from_c_eta(LocalModel::numeric(4, {"0"}, "0")).over_2pi_i) CHECK(v.is_zero());
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const LocalModel formal = LocalModel::formal(n);
    const LocalModel back = c_eta_from_tau(tau_from_c_eta(formal));
    CHECK(back.c == formal.c);
    CHECK(back.eta == formal.eta);
  }
  LocalModel equal = LocalModel::formal(3);
  equal.c[1] = equal.c[0];
  const LocalModel back = c_eta_from_tau(tau_from_c_eta(equal));
  CHECK(back.c == equal.c);
  CHECK(back.eta == equal.eta);
}

TEST_CASE("tau map is linear") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int n : {2, 3, 5}) {
    LocalModel a = LocalModel::numeric(n, {"0"}, "0");
    LocalModel b = a;
    LocalModel sum = a;
    for (int m = 0; m < n - 1; ++m) {
      a.c[static_cast<std::size_t>(m)] = ParamScalar(Rational(v(rng), 7));
      b.c[static_cast<std::size_t>(m)] = ParamScalar(Rational(v(rng), 5));
      sum.c[static_cast<std::size_t>(m)] = a.c[static_cast<std::size_t>(m)] + b.c[static_cast<std::size_t>(m)];
    }
    a.eta = ParamScalar(Rational(1, 3));
    b.eta = ParamScalar(Rational(-2, 9));
    sum.eta = a.eta + b.eta;
    const auto ta = tau_from_c_eta(a).over_2pi_i;
    const auto tb = tau_from_c_eta(b).over_2pi_i;
    const auto ts = tau_from_c_eta(sum).over_2pi_i;
    for (std::size_t j = 0; j < ts.size(); ++j) CHECK(ts[j] == ta[j] + tb[j]);
  }
}

TEST_CASE("exact monodromy") {
  const MonodromyResult r = monodromy_exact(LocalModel::numeric(2, {"0.1"}, "0"));
  REQUIRE(r.eigenvalues.size() == 2);
  CHECK(std::abs(r.eigenvalues[0] - 1.0) < 1e-14);
  CHECK(std::abs(r.eigenvalues[1] - expi(0.8 * std::numbers::pi)) < 1e-14);
  const MonodromyResult zero = monodromy_exact(LocalModel::numeric(5, {"0"}, "0"));
  for (const auto& ev : zero.eigenvalues) CHECK(std::abs(std::pow(ev, 5) - 1.0) < 1e-12);
  CHECK(zero.resonant == false);
  const MonodromyResult formal = monodromy_exact(LocalModel::formal(3));
  CHECK(formal.eigenvalues.empty());
  CHECK_FALSE(formal.resonant);
  // c = 1/2, eta = 0 for n = 2 makes both exponents integers.
  CHECK(monodromy_exact(LocalModel::numeric(2, {"0.5"}, "0")).resonant);
}

TEST_CASE("numeric monodromy") {
  const MonodromyResult r = monodromy_numeric(numeric(2, 0.1, 0.0), 4096);
  CHECK(r.max_deviation < 1e-8);
  CHECK(r.hecke_residual < 1e-8);
  CHECK(monodromy_numeric(numeric(3, 0.0, 0.0), 4096).max_deviation < 1e-10);
  const MonodromyResult four = monodromy_numeric(LocalModel::numeric(4, {"0.11", "-0.07", "0.23"}, "0.05"), 4096);
  CHECK(four.eigenvalues.size() == 4);
  CHECK(four.max_deviation < 1e-8);
  CHECK_THROWS_AS(monodromy_numeric(LocalModel::formal(2), 100), InvalidInput);
  CHECK_THROWS_AS(monodromy_numeric(numeric(2, 0.1, 0.0), 0), InvalidInput);
  // Too few steps is reported as a large deviation, not hidden.
  CHECK(monodromy_numeric(numeric(2, 0.4, 0.3), 1).max_deviation > 1e-3);
}

TEST_CASE("fourth-order convergence") {
  CHECK(convergence_check(LocalModel::numeric(2, {"0.3"}, "0.2"), 16).ok());
  CHECK(convergence_check(LocalModel::numeric(3, {"0.2", "-0.3"}, "0.1"), 16).ok());
}

TEST_CASE("Hecke roots match KZ characters") {
  for (int n : {2, 3, 4, 6}) {
    CAPTURE(n);
    CHECK(hecke_root_check(LocalModel::formal(n)).ok());
    CHECK(hecke_root_check(LocalModel::numeric(n, {"0"}, "0")).ok());
  }
  // A wrong sign in the exponent breaks the correspondence.
  LocalModel m = LocalModel::formal(3);
  const auto zeta = zeta_character(m, 1);
  const auto tau = tau_from_c_eta(m);
  CHECK(zeta.exponent != ParamScalar(Rational(1, 3)) - tau.over_2pi_i[0]);
}

TEST_CASE("JSON report shape") {
  const LocalModel m = numeric(2, 0.1, 0.0);
  const auto j = to_json(m, monodromy_numeric(m, 64));
  for (const char* key : {"n", "c", "eta", "method", "eigenvalues", "zeta_exact", "max_deviation"}) CHECK(j.contains(key));
  CHECK(j["eigenvalues"].size() == 2);
  CHECK(j["method"] == "ode-numeric");
}
