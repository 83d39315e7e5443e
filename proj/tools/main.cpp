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
#include <atomic>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cherednik/cherednik.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Job {
  std::string check;
  json inputs;
};

struct Outcome {
  int code = CV_OK;
  std::string id;
  std::string status;
  std::string report;  // JSON line, empty on error
  std::string error;
  double ms = 0.0;
};

Outcome run_job(const Job& job) {
  Outcome out;
  cv_report* rep = nullptr;
  out.code = cv_run(job.check.c_str(), job.inputs.dump().c_str(), &rep);
  if (rep != nullptr) {
    out.id = cv_report_id(rep);
    out.status = cv_report_status(rep);
    out.report = cv_report_json(rep);
    out.ms = json::parse(out.report).value("wall_time_ms", 0.0);
    cv_report_free(rep);
  } else {
    out.id = job.check + " " + job.inputs.dump();
    out.error = cv_last_error();
  }
  return out;
}

// Runs jobs on a fixed pool and prints each report as it completes.
int run_all(const std::vector<Job>& jobs, unsigned workers, bool as_json) {
  std::atomic<std::size_t> next{0};
  std::mutex print;
  int worst = CV_OK;
  std::size_t passed = 0;
  auto rank = [](int code) { return code == CV_INTERNAL ? 3 : code == CV_USAGE ? 2 : code == CV_CHECK_FAILED ? 1 : 0; };
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Outcome o = run_job(jobs[i]);
      std::lock_guard<std::mutex> lock(print);
      if (rank(o.code) > rank(worst)) worst = o.code;
      if (o.code == CV_OK) ++passed;
      if (!o.error.empty()) {
        std::cerr << "error: " << o.id << ": " << o.error << "\n";
        if (as_json) std::cout << json{{"id", o.id}, {"status", "error"}, {"error", o.error}}.dump() << "\n";
      } else if (as_json) {
        std::cout << o.report << "\n";
      } else {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f ms", o.ms);
        std::cout << (o.status == "pass" ? "PASS " : o.status == "fail" ? "FAIL " : "INCONCLUSIVE ") << o.id << "  (" << ms
                  << ")\n";
        if (o.status != "pass") std::cout << "  witness: " << json::parse(o.report)["witness"].dump() << "\n";
      }
      std::cout.flush();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < workers; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!as_json) std::cout << passed << "/" << jobs.size() << " checks passed\n";
  return worst;
}

// Cartesian expansion over list-valued flags; other flags are copied as given.
std::vector<Job> expand(const std::string& check, const json& base, const std::string& list_key,
                        const std::vector<json>& values) {
  std::vector<Job> jobs;
  if (values.empty()) {
    jobs.push_back({check, base});
    return jobs;
  }
  for (const auto& v : values) {
    json in = base;
    in[list_key] = v;
    jobs.push_back({check, in});
  }
  return jobs;
}

template <class T>
std::vector<json> as_json_list(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of rational Cherednik algebra, KZ and orbifold Hecke claims"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  unsigned jobs_flag = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", as_json, "Emit one JSON report per line");
  app.add_option("--jobs,-j", jobs_flag, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag_callback("--version", [] {
    std::cout << cv_version() << "\n";
    throw CLI::Success();
  }, "Print the library version");

  std::vector<Job> jobs;
  std::vector<std::string> groups;
  std::vector<int> ns;
  std::vector<int> ms;
  std::vector<std::string> signatures;
  std::optional<int> deg, pairs, length, trunc, steps, max_cosets;
  std::optional<unsigned> seed;
  std::optional<std::string> c, eta, algebra;
  std::optional<double> tol;
  bool quick = false;

  auto base = [&] {
    json in = json::object();
    if (deg) in["deg"] = *deg;
    if (pairs) in["pairs"] = *pairs;
    if (length) in["length"] = *length;
    if (trunc) in["trunc"] = *trunc;
    if (steps) in["steps"] = *steps;
    if (max_cosets) in["max_cosets"] = *max_cosets;
    if (seed) in["seed"] = *seed;
    if (c) in["c"] = *c;
    if (eta) in["eta"] = *eta;
    if (algebra) in["algebra"] = *algebra;
    if (tol) in["tol"] = *tol;
    return in;
  };

  auto* verify = app.add_subcommand("verify", "Algebraic checks")->require_subcommand(1)->fallthrough();
  auto* kz = app.add_subcommand("kz", "KZ monodromy and tau parameters")->require_subcommand(1)->fallthrough();
  auto* hecke = app.add_subcommand("hecke", "Orbifold groups and Hecke algebras")->require_subcommand(1)->fallthrough();

  auto group_check = [&](const char* name, const char* help, bool with_deg) {
    auto* sub = verify->add_subcommand(name, help)->fallthrough();
    sub->add_option("--group", groups, "Group keys such as S3, Z4, I2(4), B2 (repeatable)")->delimiter(',');
    if (with_deg) sub->add_option("--deg", deg, "Degree bound");
    sub->callback([&, name] {
      for (auto& j : expand(name, base(), "group", as_json_list(groups))) jobs.push_back(std::move(j));
    });
    return sub;
  };
  group_check("dunkl", "Commutativity of Dunkl operators on monomials", true);
  group_check("pbw", "PBW dimension count", true);
  group_check("euler", "Euler element commutators", false);
  group_check("satake", "Satake map at t = 0", true);
  auto* faithful = group_check("faithful", "Random word pairs act multiplicatively", true);
  faithful->add_option("--pairs", pairs, "Number of random pairs");
  faithful->add_option("--length", length, "Maximum word length");
  faithful->add_option("--seed", seed, "Random seed");

  auto* quasi = verify->add_subcommand("quasi", "Quasi-invariants and the radial operator")->fallthrough();
  quasi->add_option("--m", ms, "Multiplicities (repeatable)")->delimiter(',');
  quasi->add_option("--deg", deg, "Degree bound");
  quasi->add_option("--c", c, "Explicit c; a value other than m must fail");
  quasi->callback([&] {
    for (auto& j : expand("quasi", base(), "m", as_json_list(ms))) jobs.push_back(std::move(j));
  });

  auto* all = verify->add_subcommand("all", "Every check of the acceptance plan")->fallthrough();
  all->add_flag("--quick", quick, "Acceptance-level parameters only");
  all->callback([&] {
    char* text = nullptr;
    if (cv_suite_plan(quick ? 1 : 0, &text) != CV_OK) throw CLI::RuntimeError(cv_last_error(), 3);
    for (const auto& item : json::parse(text)) jobs.push_back({item["check"], item["inputs"]});
    cv_string_free(text);
  });

  auto* mono = kz->add_subcommand("monodromy", "Numeric monodromy against exact characters")->fallthrough();
  mono->add_option("--n", ns, "Stabilizer orders (repeatable)")->delimiter(',');
  mono->add_option("--c", c, "c value, or c_1,...,c_{n-1}");
  mono->add_option("--eta", eta, "eta value");
  mono->add_option("--steps", steps, "RK4 steps on the arc (default 4096)");
  mono->add_option("--tol", tol, "Tolerance on the deviation (default 1e-8)");
  mono->callback([&] {
    for (auto& j : expand("kz.monodromy", base(), "n", as_json_list(ns))) jobs.push_back(std::move(j));
  });
  auto* tau = kz->add_subcommand("tau", "Exact tau map, inverse and root identity")->fallthrough();
  tau->add_option("--n", ns, "Stabilizer orders (repeatable)")->delimiter(',');
  tau->add_option("--c", c, "Optional numeric c for an extra exact round trip");
  tau->add_option("--eta", eta, "Optional numeric eta");
  tau->callback([&] {
    for (auto& j : expand("kz.tau", base(), "n", as_json_list(ns))) jobs.push_back(std::move(j));
  });

  auto* dim = hecke->add_subcommand("dim", "Rank of the Hecke algebra over truncated tau")->fallthrough();
  dim->add_option("--algebra", algebra, "cyclic or A2")->check(CLI::IsMember({"cyclic", "A2"}));
  dim->add_option("--n", ns, "Cyclic orders (repeatable)")->delimiter(',');
  dim->add_option("--length", length, "Word length cap");
  dim->add_option("--trunc", trunc, "Truncation order K of C[tau]/(tau^K)");
  dim->callback([&] {
    for (auto& j : expand("hecke.dim", base(), "n", as_json_list(ns))) jobs.push_back(std::move(j));
  });
  auto signature_command = [&](const char* name, const char* check, const char* help) {
    auto* sub = hecke->add_subcommand(name, help)->fallthrough();
    sub->add_option("--signature", signatures, "Orbifold signature such as \"g=0;2,3,5\" (repeatable)");
    sub->add_option("--max-cosets", max_cosets, "Coset enumeration bound (default 10000)");
    sub->callback([&, check] {
      for (auto& j : expand(check, base(), "signature", as_json_list(signatures))) jobs.push_back(std::move(j));
    });
    return sub;
  };
  signature_command("obstruction", "hecke.obstruction", "First-order determinant obstruction on the sphere");
  signature_command("group", "hecke.group", "Todd-Coxeter enumeration of the orbifold group");
  signature_command("verdict", "hecke.verdict", "Flatness verdict report");
  signature_command("specialize", "hecke.specialize", "Hecke relations at tau = 0")
      ->add_option("--trunc", trunc, "Truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 3 ? 3 : 2;
  }
  return run_all(jobs, jobs_flag, as_json);
}
