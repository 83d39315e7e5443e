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

#include "cherednik/errors.hpp"
#include "cherednik/reflgroup.hpp"
#include "doctest.h"

using namespace cherednik;
using namespace cherednik::refl;

namespace {

Cyclotomic zeta(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

ReflectionGroup group(const char* key) { return ReflectionGroup::build(parse_group_key(key)); }

}  // namespace

TEST_CASE("catalog keys round trip") {
  for (const char* key : {"Z4", "S3", "I2(5)", "B2", "trivial"}) CHECK(parse_group_key(key).key() == key);
  CHECK_THROWS_AS(parse_group_key("Q8"), InvalidInput);
  CHECK_THROWS_AS(parse_group_key("Zx"), InvalidInput);
  CHECK_THROWS_AS(parse_group_key("I2(5"), InvalidInput);
}

TEST_CASE("group orders and reflection counts") {
  struct Row {
    const char* key;
    std::size_t order, reflections;
    int classes;
  };
  for (const Row& row : {Row{"trivial", 1, 0, 0}, Row{"Z2", 2, 1, 1}, Row{"Z4", 4, 3, 3}, Row{"S3", 6, 3, 1},
                         Row{"I2(3)", 6, 3, 1}, Row{"I2(4)", 8, 4, 2}, Row{"I2(5)", 10, 5, 1}, Row{"B2", 8, 4, 2},
                         Row{"B3", 48, 9, 2}, Row{"S4", 24, 6, 1}}) {
    CAPTURE(row.key);
    const ReflectionGroup g = group(row.key);
    CHECK(g.order() == row.order);
    CHECK(g.reflections().size() == row.reflections);
    CHECK(param_count(g) == row.classes);
  }
}

TEST_CASE("rank one root data") {
  const ReflectionGroup z2 = group("Z2");
  REQUIRE(z2.reflections().size() == 1);
  const Reflection& s = z2.reflections()[0];
  CHECK(s.lambda == Cyclotomic(-1));
  CHECK(s.root == CycVector{Cyclotomic(-2)});
  CHECK(pairing(s.root, s.coroot) == Cyclotomic(2));

  const ReflectionGroup z3 = group("Z3");
  REQUIRE(z3.classes().size() == 2);
  std::vector<Cyclotomic> lambdas;
  for (const auto& cls : z3.classes()) lambdas.push_back(cls.lambda);
  CHECK(((lambdas[0] == zeta(3) && lambdas[1] == zeta(3, 2)) || (lambdas[0] == zeta(3, 2) && lambdas[1] == zeta(3))));
}

TEST_CASE("reflection data is consistent") {
  for (const char* key : {"Z4", "S3", "I2(5)", "B2", "B3", "I2(6)"}) {
    CAPTURE(key);
    const ReflectionGroup g = group(key);
    for (const Reflection& s : g.reflections()) {
      CHECK(pairing(s.root, s.coroot) == Cyclotomic(2));
      // s acts on alpha^vee by the inverse of lambda, as det(s) = lambda^{-1}.
      const CycVector image = g.element(s.element).matrix.apply(s.coroot);
      for (std::size_t i = 0; i < image.size(); ++i) CHECK(image[i] == s.lambda.inverse() * s.coroot[i]);
      CHECK(g.element(s.element).order >= 2);
    }
    for (int a = 0; a < static_cast<int>(g.order()); ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == ReflectionGroup::identity());
      CHECK(g.find(g.element(a).matrix) == a);
    }
  }
}

TEST_CASE("rescaling a root keeps the pairing") {
  const ReflectionGroup g = group("S3");
  const ReflectionGroup h = g.with_rescaled_root(0, zeta(5) * Cyclotomic(3));
  CHECK(pairing(h.reflections()[0].root, h.reflections()[0].coroot) == Cyclotomic(2));
  CHECK_FALSE(h.reflections()[0].root == g.reflections()[0].root);
  CHECK_THROWS_AS(g.with_rescaled_root(0, Cyclotomic(0)), InvalidInput);
}
