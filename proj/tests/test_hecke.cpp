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

#include <algorithm>

#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"
#include "doctest.h"

using namespace cherednik;
using namespace cherednik::hecke;
using exact::Rational;

namespace {

int order_of(const std::string& sig, int max_cosets = 10000) {
  const auto rep = todd_coxeter(orbifold_presentation(parse_signature(sig)), max_cosets);
  return rep ? rep->degree : -1;
}

std::vector<Rational> rationals(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("signature parsing and geometry") {
  const OrbifoldSignature s = parse_signature("g=0;2,3,5");
  CHECK(s.genus == 0);
  CHECK(s.cones == std::vector<int>{2, 3, 5});
  CHECK(s.to_string() == "g=0;2,3,5");
  CHECK(s.chi_orb() == Rational(1, 30));
  CHECK(s.geometry() == Geometry::spherical);
  CHECK(parse_signature("g=0;2,3,6").geometry() == Geometry::euclidean);
  CHECK(parse_signature("g=0;2,2,2,2").geometry() == Geometry::euclidean);
  CHECK(parse_signature("g=0;2,3,7").geometry() == Geometry::hyperbolic);
  CHECK(parse_signature("g=1").geometry() == Geometry::euclidean);
  CHECK(parse_signature("g=2").geometry() == Geometry::hyperbolic);
  CHECK(parse_signature(" g=1; ").cones.empty());
  for (const char* bad : {"", "0;2,3", "g=x", "g=0;1", "g=0;2,", "g=0;2,,3", "g=-1"}) {
    CHECK_THROWS_AS(parse_signature(bad), InvalidInput);
  }
}

TEST_CASE("orbifold presentations") {
  CHECK(orbifold_presentation(parse_signature("g=0;2,3,3")).to_string() ==
        "<c1,c2,c3 | c1*c1, c2*c2*c2, c3*c3*c3, c1*c2*c3>");
  CHECK(orbifold_presentation(parse_signature("g=1")).to_string() == "<a1,b1 | a1*b1*a1^-1*b1^-1>");
  CHECK(orbifold_presentation(parse_signature("g=0;4")).to_string() == "<c1 | c1*c1*c1*c1, c1>");
  const GroupPresentation p = orbifold_presentation(parse_signature("g=2;3"));
  CHECK(p.generators.size() == 5);
  CHECK(p.relators.size() == 2);
  CHECK(p.relators[1] == Relator{8, 6, 4, 7, 5, 2, 0, 3, 1});
  CHECK(freely_reduce({0, 1, 2, 4, 5, 3}).empty());
  CHECK(invert({0, 3}) == Relator{2, 1});
}

TEST_CASE("coset enumeration") {
  CHECK(order_of("g=0;2,3,3") == 12);
  CHECK(order_of("g=0;2,3,4") == 24);
  CHECK(order_of("g=0;2,3,5") == 60);
  for (int n = 2; n <= 12; ++n) CHECK(order_of("g=0;2,2," + std::to_string(n)) == 2 * n);
  CHECK(order_of("g=0;5") == 1);
  CHECK(order_of("g=0;3,3") == 3);
  CHECK(order_of("g=0") == 1);
  CHECK(order_of("g=0;2,3,7") == -1);
  CHECK(order_of("g=1") == -1);
  CHECK(order_of("g=0;2,3,5", 59) == -1);
  for (const char* sig : {"g=0;2,3,3", "g=0;2,3,4", "g=0;2,3,5", "g=0;2,2,7"}) {
    const GroupPresentation p = orbifold_presentation(parse_signature(sig));
    const auto rep = todd_coxeter(p, 10000);
    REQUIRE(rep);
    CHECK(rep->relators_trivial(p));
    // Regular representation: only the identity fixes a point.
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      for (int pt = 0; pt < rep->degree; ++pt) CHECK(rep->apply(Relator{static_cast<int>(2 * g)}, pt) != pt);
    }
  }
  // Symmetric group S3 as a Coxeter presentation.
  GroupPresentation s3{{"s", "t"}, {{0, 0}, {2, 2}, {0, 2, 0, 2, 0, 2}}};
  const auto rep = todd_coxeter(s3, 100);
  REQUIRE(rep);
  CHECK(rep->degree == 6);
  CHECK(rep->sign(Relator{0}) == -1);  // a transposition acting regularly is 3 transpositions
  CHECK(rep->sign(Relator{0, 2}) == 1);
}

TEST_CASE("sphere obstruction") {
  const Obstruction a4 = sphere_obstruction(parse_signature("g=0;2,3,3"));
  CHECK(a4.group_order == 12);
  CHECK(a4.coefficients == rationals({6, 6, 4, 4, 4, 4, 4, 4}));
  CHECK(a4.epsilon == Cyclotomic(1));
  CHECK(a4.verdict == "not flat for generic tau");
  for (std::size_t j = 0; j < a4.cone_signs.size(); ++j) CHECK(a4.cone_epsilon[j] == Cyclotomic(a4.cone_signs[j]));

  const Obstruction a5 = sphere_obstruction(parse_signature("g=0;2,3,5"));
  CHECK(a5.coefficients == rationals({30, 30, 20, 20, 20, 12, 12, 12, 12, 12}));
  CHECK(a5.epsilon == Cyclotomic(1));

  const Obstruction v4 = sphere_obstruction(parse_signature("g=0;2,2,2"));
  CHECK(v4.group_order == 4);
  CHECK(v4.coefficients == rationals({2, 2, 2, 2, 2, 2}));
  CHECK(v4.epsilon == Cyclotomic(1));
  CHECK(v4.linear_form.find("2*tau_1_1") == 0);

  for (const char* sig : {"g=0;2,3,4", "g=0;2,2,5", "g=0;2,2,6", "g=0;3,3", "g=0;4,4"}) {
    const Obstruction ob = sphere_obstruction(parse_signature(sig));
    CHECK(ob.epsilon == Cyclotomic(1));
    CHECK(std::all_of(ob.coefficients.begin(), ob.coefficients.end(), [](const Rational& c) { return c > 0; }));
  }
  CHECK_THROWS_AS(sphere_obstruction(parse_signature("g=0;2,3,7")), InvalidInput);
  CHECK_THROWS_AS(sphere_obstruction(parse_signature("g=0;2,4,4")), InvalidInput);
  CHECK_THROWS_AS(sphere_obstruction(parse_signature("g=0;3")), InvalidInput);
}

TEST_CASE("local polynomials and tau = 0") {
  for (int n : {1, 2, 3, 4, 6}) {
    const auto poly = local_polynomial(n, 0, 2);
    REQUIRE(poly.size() == static_cast<std::size_t>(n + 1));
    CHECK(poly[0].at_zero() == Cyclotomic(-1));
    for (int k = 1; k < n; ++k) CHECK(poly[static_cast<std::size_t>(k)].at_zero().is_zero());
    CHECK(poly[static_cast<std::size_t>(n)] == TruncatedSeries(Cyclotomic(1), 2));
    CHECK(poly[0] != TruncatedSeries(Cyclotomic(-1), 2));
  }
  const CheckResult cyc = specialize_tau_zero(cyclic_hecke_presentation(3));
  CHECK(cyc.ok());
  CHECK(cyc.witness["relations_at_zero"][0] == "T^3 - 1");

  const OrbifoldSignature a4 = parse_signature("g=0;2,3,3");
  const HeckeAlgebraPresentation h = hecke_presentation(a4);
  CHECK(h.tau_count == 8);
  CHECK(h.braid.relators.size() == 1);
  const CheckResult r = specialize_tau_zero(h, a4);
  CHECK(r.ok());
  CHECK(r.witness["presentation"] == orbifold_presentation(a4).to_string());
  CHECK(todd_coxeter(orbifold_presentation(a4), 1000)->degree == 12);

  const OrbifoldSignature torus = parse_signature("g=1");
  const HeckeAlgebraPresentation ht = hecke_presentation(torus);
  CHECK(ht.local.empty());
  CHECK(specialize_tau_zero(ht, torus).ok());
}

TEST_CASE("Hecke ranks") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    const HeckeRank r = hecke_dimension_cyclic(n, n - 1);
    CHECK(r.relations_hold);
    CHECK(r.rank == static_cast<std::size_t>(n));
    CHECK(r.rank_at_zero == static_cast<std::size_t>(n));
    CHECK(r.free);
    CHECK(hecke_rank_check(r).ok());
  }
  const HeckeRank short_words = hecke_dimension_cyclic(4, 2);
  CHECK(short_words.rank == 3);
  CHECK(hecke_rank_check(short_words).status == Status::inconclusive);

  const HeckeRank a2 = hecke_dimension_a2(3);
  CHECK(a2.relations_hold);
  CHECK(a2.rank == 6);
  CHECK(a2.rank_next == 6);
  CHECK(a2.rank_at_zero == 6);
  CHECK(hecke_rank_check(a2).ok());
  CHECK(hecke_dimension_a2(2).rank == 5);
  CHECK(hecke_dimension_a2(4, 3).rank == 6);
}

TEST_CASE("verdicts") {
  CHECK(signature_verdict(parse_signature("g=0;2,3,5")) == "expected-not-flat");
  CHECK(signature_verdict(parse_signature("g=0;2,3,3")) == "expected-not-flat");
  CHECK(signature_verdict(parse_signature("g=0;2,3,7")) == "expected-flat");
  CHECK(signature_verdict(parse_signature("g=0;2,2,2,2")) == "expected-flat");
  CHECK(signature_verdict(parse_signature("g=2")) == "expected-flat");
  CHECK(signature_verdict(parse_signature("g=0")) == "expected-flat");
  CHECK(signature_verdict(parse_signature("g=0;5")) == "expected-not-flat");

  const nlohmann::json a5 = verdict_report(parse_signature("g=0;2,3,5"));
  CHECK(a5["group_order"] == 60);
  CHECK(a5["verdict"] == "expected-not-flat");
  CHECK(a5["chi_orb_exact"] == "1/30");
  CHECK(a5["obstruction_form"].is_string());
  const nlohmann::json hyp = verdict_report(parse_signature("g=0;2,3,7"));
  CHECK(hyp["group_order"] == "infinite");
  CHECK(hyp["obstruction_form"].is_null());
  CHECK(hyp["verdict"] == "expected-flat");
}
