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

#include "cherednik/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>

#include "cherednik/cherednik.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/kz.hpp"

namespace cherednik::checks {

using nlohmann::json;

namespace {

using Runner = std::function<CheckResult(const json&)>;

struct Entry {
  json defaults;
  Runner run;
};

std::shared_ptr<const refl::ReflectionGroup> group_of(const json& in) {
  return std::make_shared<const refl::ReflectionGroup>(
      refl::ReflectionGroup::build(refl::parse_group_key(in.at("group").get<std::string>())));
}

int int_of(const json& in, const char* key) { return in.at(key).get<int>(); }

std::string str_of(const json& in, const char* key) { return in.at(key).get<std::string>(); }

void require(bool cond, const std::string& message) {
  if (!cond) throw InvalidInput(message);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

kz::LocalModel kz_model(const json& in) {
  const int n = int_of(in, "n");
  require(n >= 1 && n <= 64, "n must lie in 1..64");
  return kz::LocalModel::numeric(n, split(str_of(in, "c"), ','), str_of(in, "eta"));
}

CheckResult run_dunkl(const json& in) {
  const int d = int_of(in, "deg");
  require(d >= 0 && d <= 12, "deg must lie in 0..12");
  return dunkl::dunkl_commute_check(*group_of(in), d);
}

CheckResult run_pbw(const json& in) {
  const int d = int_of(in, "deg");
  require(d >= 0 && d <= 5, "deg must lie in 0..5");
  return pbw::pbw_dimension_check(pbw::CherednikAlgebra(group_of(in)), d);
}

CheckResult run_faithful(const json& in) {
  const int pairs = int_of(in, "pairs");
  const int length = int_of(in, "length");
  const int d = int_of(in, "deg");
  require(pairs >= 0 && length >= 0 && length <= 8 && d >= 0 && d <= 8, "pairs >= 0, length in 0..8, deg in 0..8");
  const pbw::CherednikAlgebra alg(group_of(in));
  std::mt19937 rng(in.at("seed").get<std::uint32_t>());
  const auto monomials = exact::monomials_up_to(alg.group().rank(), d);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  for (int k = 0; k < pairs; ++k) {
    const pbw::Word a = pbw::random_word(alg.group(), length, rng);
    const pbw::Word b = pbw::random_word(alg.group(), length, rng);
    const auto p = exact::MultiPoly::monomial(monomials[pick(rng)], exact::ParamScalar(1L));
    CheckResult r = pbw::homomorphism_check(alg, a, b, p);
    if (!r.ok()) {
      r.witness["pair_index"] = k;
      return r;
    }
  }
  return {Status::pass, {{"pairs_checked", pairs}, {"max_word_length", length}, {"max_degree", d}}};
}

CheckResult run_euler(const json& in) { return pbw::euler_check(pbw::CherednikAlgebra(group_of(in))); }

CheckResult run_satake(const json& in) {
  const int d = int_of(in, "deg");
  require(d >= 0 && d <= 6, "deg must lie in 0..6");
  return pbw::satake_check_t0(group_of(in), d);
}

CheckResult run_quasi(const json& in) {
  dunkl::QuasiInvariantSpec spec{int_of(in, "m"), int_of(in, "deg")};
  require(spec.m >= 0 && spec.m <= 20 && spec.degree >= 0 && spec.degree <= 200, "m in 0..20, deg in 0..200");
  const std::string c = str_of(in, "c");
  CheckResult r = c.empty() ? dunkl::quasi_invariance_check(spec)
                            : dunkl::quasi_invariance_check(spec, exact::ParamScalar(exact::parse_rational(c)));
  if (c.empty() && spec.degree >= 2 * spec.m + 3) {
    const dunkl::HilbertSeries h = dunkl::quasi_hilbert_series(spec);
    std::vector<long> expected(static_cast<std::size_t>(2 * spec.m + 2), 0);
    expected.front() = 1;
    expected.back() += 1;
    r.witness["hilbert_series"] = h.to_string();
    r.witness["numerator"] = h.numerator;
    r.witness["palindromic"] = h.palindromic;
    if (r.ok() && !(h.stabilized && h.palindromic && h.numerator == expected)) r.status = Status::fail;
  }
  return r;
}

CheckResult run_kz_monodromy(const json& in) {
  const kz::LocalModel model = kz_model(in);
  const int steps = int_of(in, "steps");
  const double tol = in.at("tol").get<double>();
  require(steps >= 1, "steps must be positive");
  const kz::MonodromyResult r = kz::monodromy_numeric(model, steps);
  CheckResult out{r.max_deviation <= tol ? Status::pass : Status::fail, kz::to_json(model, r)};
  if (r.resonant) out.status = Status::inconclusive;
  return out;
}

CheckResult run_kz_tau(const json& in) {
  const int n = int_of(in, "n");
  require(n >= 1 && n <= 16, "n must lie in 1..16");
  const kz::LocalModel formal = kz::LocalModel::formal(n);
  const kz::TauParameters tau = kz::tau_from_c_eta(formal);
  const kz::LocalModel back = kz::c_eta_from_tau(tau);
  bool roundtrip = back.eta == formal.eta && back.c == formal.c;
  json taus = json::array();
  for (const auto& v : tau.over_2pi_i) taus.push_back(v.to_string());
  CheckResult roots = kz::hecke_root_check(formal);
  CheckResult out;
  out.witness = {{"n", n}, {"tau_over_2pi_i", taus}, {"roundtrip", roundtrip}, {"root_identity", roots.witness}};
  if (!str_of(in, "c").empty()) {
    const kz::LocalModel num = kz_model(in);
    const kz::LocalModel nb = kz::c_eta_from_tau(kz::tau_from_c_eta(num));
    const bool ok = nb.eta == num.eta && nb.c == num.c && kz::hecke_root_check(num).ok();
    out.witness["numeric_roundtrip"] = ok;
    roundtrip = roundtrip && ok;
  }
  if (!roundtrip || !roots.ok()) out.status = Status::fail;
  return out;
}

CheckResult run_hecke_dim(const json& in) {
  const std::string algebra = str_of(in, "algebra");
  const int trunc = int_of(in, "trunc");
  int length = int_of(in, "length");
  require(trunc >= 1 && trunc <= 6, "trunc must lie in 1..6");
  if (algebra == "A2") {
    if (length < 0) length = 3;
    require(length <= 8, "length must be at most 8");
    return hecke::hecke_rank_check(hecke::hecke_dimension_a2(length, trunc));
  }
  require(algebra == "cyclic", "algebra must be 'cyclic' or 'A2'");
  const int n = int_of(in, "n");
  require(n >= 1 && n <= 24, "n must lie in 1..24");
  if (length < 0) length = n - 1;
  require(length <= 32, "length must be at most 32");
  CheckResult r = hecke::hecke_rank_check(hecke::hecke_dimension_cyclic(n, length, trunc));
  const CheckResult zero = hecke::specialize_tau_zero(hecke::cyclic_hecke_presentation(n, trunc));
  r.witness["tau_zero"] = zero.witness;
  if (r.ok() && !zero.ok()) r.status = Status::fail;
  return r;
}

hecke::OrbifoldSignature signature_of(const json& in) { return hecke::parse_signature(str_of(in, "signature")); }

int cosets_of(const json& in) {
  const int m = int_of(in, "max_cosets");
  require(m >= 1 && m <= 2000000, "max_cosets must lie in 1..2000000");
  return m;
}

CheckResult run_hecke_group(const json& in) {
  const hecke::OrbifoldSignature sig = signature_of(in);
  const hecke::GroupPresentation p = hecke::orbifold_presentation(sig);
  const auto rep = hecke::todd_coxeter(p, cosets_of(in));
  CheckResult r;
  r.witness = {{"presentation", p.to_string()}, {"geometry", hecke::to_string(sig.geometry())}};
  if (rep) {
    r.witness["order"] = rep->degree;
    r.witness["relators_trivial"] = rep->relators_trivial(p);
    if (!rep->relators_trivial(p)) r.status = Status::fail;
  } else {
    r.witness["order"] = "overflow";
    r.status = Status::inconclusive;
  }
  const json& expect = in.at("expect");
  if (!expect.is_null()) {
    r.witness["expected"] = expect;
    r.status = r.witness["order"] == expect && r.status != Status::fail ? Status::pass : Status::fail;
  }
  return r;
}

CheckResult run_hecke_obstruction(const json& in) {
  const hecke::Obstruction ob = hecke::sphere_obstruction(signature_of(in), cosets_of(in));
  json coeffs = json::array();
  bool nonzero = false;
  for (const auto& c : ob.coefficients) {
    coeffs.push_back(c.get_den() == 1 ? json(c.get_num().get_si()) : json(c.get_str()));
    nonzero = nonzero || c != 0;
  }
  json cone_eps = json::array();
  bool cones_ok = true;
  for (std::size_t j = 0; j < ob.cone_epsilon.size(); ++j) {
    cone_eps.push_back(ob.cone_epsilon[j].to_string());
    cones_ok = cones_ok && ob.cone_epsilon[j] == exact::Cyclotomic(ob.cone_signs[j]);
  }
  CheckResult r;
  r.witness = {{"group_order", ob.group_order}, {"coefficients", coeffs},      {"linear_form", ob.linear_form},
               {"epsilon", ob.epsilon.to_string()}, {"cone_epsilon", cone_eps}, {"cone_signs", ob.cone_signs},
               {"verdict", ob.verdict}};
  if (!(nonzero && cones_ok && ob.epsilon == exact::Cyclotomic(1))) r.status = Status::fail;
  return r;
}

CheckResult run_hecke_verdict(const json& in) {
  CheckResult r{Status::pass, hecke::verdict_report(signature_of(in), cosets_of(in))};
  const json& expect = in.at("expect");
  if (!expect.is_null() && r.witness["verdict"] != expect) {
    r.status = Status::fail;
    r.witness["expected"] = expect;
  }
  return r;
}

CheckResult run_hecke_specialize(const json& in) {
  const hecke::OrbifoldSignature sig = signature_of(in);
  CheckResult r = hecke::specialize_tau_zero(hecke::hecke_presentation(sig, int_of(in, "trunc")), sig);
  if (sig.geometry() == hecke::Geometry::spherical) {
    const auto rep = hecke::todd_coxeter(hecke::orbifold_presentation(sig), cosets_of(in));
    if (rep) r.witness["group_algebra_dimension"] = rep->degree;
  }
  return r;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> table = {
      {"dunkl", {{{"group", "S3"}, {"deg", 6}}, run_dunkl}},
      {"pbw", {{{"group", "S3"}, {"deg", 3}}, run_pbw}},
      {"faithful", {{{"group", "S3"}, {"pairs", 100}, {"length", 4}, {"deg", 5}, {"seed", 1}}, run_faithful}},
      {"euler", {{{"group", "S3"}}, run_euler}},
      {"satake", {{{"group", "Z2"}, {"deg", 4}}, run_satake}},
      {"quasi", {{{"m", 1}, {"deg", 12}, {"c", ""}}, run_quasi}},
      {"kz.monodromy", {{{"n", 2}, {"c", "0.1"}, {"eta", "0"}, {"steps", 4096}, {"tol", 1e-8}}, run_kz_monodromy}},
      {"kz.tau", {{{"n", 2}, {"c", ""}, {"eta", "0"}}, run_kz_tau}},
      {"hecke.dim", {{{"algebra", "cyclic"}, {"n", 4}, {"length", -1}, {"trunc", 2}}, run_hecke_dim}},
      {"hecke.group", {{{"signature", "g=0;2,3,3"}, {"max_cosets", 10000}, {"expect", nullptr}}, run_hecke_group}},
      {"hecke.obstruction", {{{"signature", "g=0;2,3,3"}, {"max_cosets", 10000}}, run_hecke_obstruction}},
      {"hecke.verdict", {{{"signature", "g=0;2,3,5"}, {"max_cosets", 10000}, {"expect", nullptr}}, run_hecke_verdict}},
      {"hecke.specialize",
       {{{"signature", "g=0;2,3,3"}, {"trunc", 2}, {"max_cosets", 10000}}, run_hecke_specialize}},
  };
  return table;
}

const Entry& entry(const std::string& check) {
  const auto it = registry().find(check);
  if (it == registry().end()) throw InvalidInput("unknown check '" + check + "'");
  return it->second;
}

// Numbers given for exact parameters are kept as their shortest decimal text.
json coerce(const std::string& key, const json& def, const json& value) {
  if (def.is_string()) {
    if (value.is_string()) return value;
    if (value.is_number()) return value.dump();
  } else if (def.is_number_integer()) {
    if (value.is_number_integer()) return value;
    if (value.is_number_float() && value.get<double>() == static_cast<double>(value.get<long long>())) {
      return value.get<long long>();
    }
  } else if (def.is_number()) {
    if (value.is_number()) return value.get<double>();
  } else if (def.is_null()) {
    if (value.is_null() || value.is_string() || value.is_number_integer()) return value;
  }
  throw InvalidInput("input '" + key + "' has the wrong type: " + value.dump());
}

}  // namespace

json Report::to_json() const {
  return {{"check", check},   {"id", id},           {"inputs", inputs}, {"status", cherednik::to_string(status)},
          {"witness", witness}, {"wall_time_ms", wall_time_ms}};
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& [name, e] : registry()) v.push_back(name);
    return v;
  }();
  return out;
}

json normalize(const std::string& check, const json& inputs) {
  const Entry& e = entry(check);
  if (!inputs.is_null() && !inputs.is_object()) throw InvalidInput("inputs must be a JSON object");
  json out = e.defaults;
  if (inputs.is_object()) {
    for (const auto& [key, value] : inputs.items()) {
      if (!out.contains(key)) throw InvalidInput("check '" + check + "' has no input '" + key + "'");
      out[key] = coerce(key, e.defaults[key], value);
    }
  }
  return out;
}

std::string report_id(const std::string& check, const json& normalized) {
  std::string id = check + "(";
  bool first = true;
  for (const auto& [key, value] : normalized.items()) {
    if (value.is_null() || (value.is_string() && value.get<std::string>().empty())) continue;
    id += (first ? "" : ",") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    first = false;
  }
  return id + ")";
}

Report run(const std::string& check, const json& inputs) {
  Report rep;
  rep.check = check;
  rep.inputs = normalize(check, inputs);
  rep.id = report_id(check, rep.inputs);
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = entry(check).run(rep.inputs);
  } catch (const json::exception& ex) {
    throw InvalidInput(std::string("bad inputs: ") + ex.what());
  }
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.status = r.status;
  rep.witness = std::move(r.witness);
  return rep;
}

json suite(bool quick) {
  json plan = json::array();
  auto add = [&](const std::string& check, json inputs) { plan.push_back({{"check", check}, {"inputs", inputs}}); };
  for (const char* g : {"S3", "Z4", "I2(4)", "B2"}) add("dunkl", {{"group", g}, {"deg", 6}});
  for (const char* g : {"Z2", "Z3", "S3", "B2"}) add("pbw", {{"group", g}, {"deg", quick ? 3 : 4}});
  for (const char* g : {"Z2", "Z3", "S3", "B2"}) add("faithful", {{"group", g}, {"pairs", 125}, {"seed", 7}});
  for (const char* g : {"Z2", "Z3", "Z4", "S3", "I2(4)", "B2"}) add("euler", {{"group", g}});
  for (const char* g : {"Z2", "Z3"}) add("satake", {{"group", g}, {"deg", 4}});
  for (int m = 0; m <= 3; ++m) add("quasi", {{"m", m}, {"deg", 12}});
  for (int n = 2; n <= 8; ++n) add("kz.tau", {{"n", n}});
  for (int n : {2, 3, 4, 6}) add("kz.monodromy", {{"n", n}, {"c", "0.07"}, {"eta", "0.05"}});
  add("hecke.group", {{"signature", "g=0;2,3,3"}, {"expect", 12}});
  add("hecke.group", {{"signature", "g=0;2,3,4"}, {"expect", 24}});
  add("hecke.group", {{"signature", "g=0;2,3,5"}, {"expect", 60}});
  for (int n = 2; n <= (quick ? 6 : 12); ++n) {
    add("hecke.group", {{"signature", "g=0;2,2," + std::to_string(n)}, {"expect", 2 * n}});
  }
  add("hecke.group", {{"signature", "g=0;2,3,7"}, {"expect", "overflow"}});
  for (const char* s : {"g=0;2,3,3", "g=0;2,3,5", "g=0;2,2,2"}) add("hecke.obstruction", {{"signature", s}});
  for (int n = 1; n <= (quick ? 6 : 10); ++n) add("hecke.dim", {{"algebra", "cyclic"}, {"n", n}});
  add("hecke.dim", {{"algebra", "A2"}});
  add("hecke.specialize", {{"signature", "g=0;2,3,3"}});
  add("hecke.verdict", {{"signature", "g=0;2,3,5"}, {"expect", "expected-not-flat"}});
  add("hecke.verdict", {{"signature", "g=0;2,3,7"}, {"expect", "expected-flat"}});
  add("hecke.verdict", {{"signature", "g=0;2,2,2,2"}, {"expect", "expected-flat"}});
  if (!quick) {
    add("satake", {{"group", "Z2"}, {"deg", 5}});
    add("hecke.dim", {{"algebra", "A2"}, {"trunc", 3}});
    for (int n : {5, 8}) add("kz.monodromy", {{"n", n}, {"c", "0.13"}, {"eta", "-0.1"}});
  }
  return plan;
}

}  // namespace cherednik::checks
