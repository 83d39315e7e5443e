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

#include <string>
#include <thread>
#include <vector>

#include "cherednik/cherednik.h"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

json take_json(char* text) {
  json j = json::parse(text);
  cv_string_free(text);
  return j;
}

}  // namespace

TEST_CASE("group handles") {
  cv_group* g = nullptr;
  REQUIRE(cv_group_open("B3", &g) == CV_OK);
  long order = 0;
  long rank = 0;
  CHECK(cv_group_order(g, &order) == CV_OK);
  CHECK(cv_group_rank(g, &rank) == CV_OK);
  CHECK(order == 48);
  CHECK(rank == 3);
  char* text = nullptr;
  REQUIRE(cv_group_describe(g, &text) == CV_OK);
  const json d = take_json(text);
  CHECK(d["reflections"] == 9);
  CHECK(d["reflection_classes"] == 2);
  cv_group_free(g);

  g = reinterpret_cast<cv_group*>(0x1);
  CHECK(cv_group_open("Q8", &g) == CV_USAGE);
  CHECK(g == nullptr);
  CHECK(std::string(cv_last_error()).find("Q8") != std::string::npos);
  CHECK(cv_group_open(nullptr, &g) == CV_USAGE);
  CHECK(cv_group_order(nullptr, &order) == CV_USAGE);
  cv_group_free(nullptr);
}

TEST_CASE("signature handles") {
  cv_signature* s = nullptr;
  REQUIRE(cv_signature_parse("g=0;2,3,5", &s) == CV_OK);
  char* text = nullptr;
  REQUIRE(cv_signature_describe(s, &text) == CV_OK);
  const json d = take_json(text);
  CHECK(d["chi_orb_exact"] == "1/30");
  CHECK(d["geometry"] == "spherical");
  cv_signature_free(s);
  CHECK(cv_signature_parse("g=0;1", &s) == CV_USAGE);
  CHECK(s == nullptr);
}

TEST_CASE("running checks") {
  cv_report* r = nullptr;
  REQUIRE(cv_run("hecke.obstruction", R"({"signature": "g=0;2,3,3"})", &r) == CV_OK);
  CHECK(std::string(cv_report_status(r)) == "pass");
  const json rep = json::parse(cv_report_json(r));
  for (const char* key : {"check", "id", "inputs", "status", "witness", "wall_time_ms"}) CHECK(rep.contains(key));
  CHECK(rep["witness"]["coefficients"] == json({6, 6, 4, 4, 4, 4, 4, 4}));
  CHECK(std::string(cv_report_id(r)) == rep["id"].get<std::string>());
  cv_report_free(r);

  REQUIRE(cv_run("quasi", R"({"m": 2, "c": "1"})", &r) == CV_CHECK_FAILED);
  CHECK(std::string(cv_report_status(r)) == "fail");
  CHECK(!json::parse(cv_report_json(r))["witness"].empty());
  cv_report_free(r);

  REQUIRE(cv_run("hecke.group", R"({"signature": "g=0;2,3,7"})", &r) == CV_CHECK_FAILED);
  CHECK(std::string(cv_report_status(r)) == "inconclusive");
  cv_report_free(r);

  REQUIRE(cv_run("dunkl", nullptr, &r) == CV_OK);
  CHECK(json::parse(cv_report_json(r))["inputs"]["group"] == "S3");
  cv_report_free(r);

  CHECK(cv_run("dunkl", R"({"group": "S3", "colour": 1})", &r) == CV_USAGE);
  CHECK(r == nullptr);
  CHECK(cv_run("dunkl", R"({"group": 3})", &r) == CV_USAGE);
  CHECK(cv_run("dunkl", "{not json", &r) == CV_USAGE);
  CHECK(cv_run("nonsense", "", &r) == CV_USAGE);
  CHECK(cv_run("kz.monodromy", R"({"n": 2, "c": "abc"})", &r) == CV_USAGE);
  CHECK(cv_run("hecke.obstruction", R"({"signature": "g=0;2,3,7"})", &r) == CV_USAGE);
  CHECK(std::string(cv_report_status(nullptr)).empty());
}

TEST_CASE("catalog listings") {
  char* text = nullptr;
  REQUIRE(cv_check_names(&text) == CV_OK);
  const json names = take_json(text);
  CHECK(names.size() == 13);
  REQUIRE(cv_suite_plan(1, &text) == CV_OK);
  const json plan = take_json(text);
  CHECK(plan.size() > 40);
  for (const auto& item : plan) {
    bool known = false;
    for (const auto& n : names) known = known || n == item["check"];
    CHECK(known);
  }
}

TEST_CASE("concurrent use") {
  std::vector<int> codes(8, -1);
  std::vector<std::string> errors(8);
  std::vector<std::thread> threads;
  for (int k = 0; k < 8; ++k) {
    threads.emplace_back([&, k] {
      cv_report* r = nullptr;
      if (k % 2 == 0) {
        codes[static_cast<std::size_t>(k)] = cv_run("pbw", R"({"group": "S3", "deg": 2})", &r);
      } else {
        codes[static_cast<std::size_t>(k)] = cv_run("pbw", R"({"group": "nope"})", &r);
        errors[static_cast<std::size_t>(k)] = cv_last_error();
      }
      cv_report_free(r);
    });
  }
  for (auto& t : threads) t.join();
  for (int k = 0; k < 8; ++k) {
    CHECK(codes[static_cast<std::size_t>(k)] == (k % 2 == 0 ? CV_OK : CV_USAGE));
    if (k % 2) CHECK(errors[static_cast<std::size_t>(k)].find("nope") != std::string::npos);
  }
}
