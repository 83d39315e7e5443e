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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cherednik/cherednik.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/hecke.hpp"
#include "cherednik/kz.hpp"

namespace {

using namespace cherednik;
using exact::ParamScalar;
using exact::Rational;

// Pinned limits.
constexpr int kDunklDegree = 6;
constexpr double kDunklSeconds = 60.0;
constexpr int kPbwDegree = 3;
constexpr int kWordPairs = 500;
constexpr int kWordLength = 4;
constexpr int kMonomialDegree = 5;
constexpr std::uint32_t kSeed = 20260101;
constexpr int kSatakeDegree = 4;
constexpr int kKzSamples = 20;
constexpr int kKzSteps = 4096;
constexpr double kKzTolerance = 1e-8;
constexpr double kKzSeconds = 30.0;
constexpr double kResonanceGap = 1e-3;
constexpr int kTauMaxN = 8;
constexpr int kMaxCosets = 10000;
constexpr int kQuasiDegree = 12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Group = std::shared_ptr<const refl::ReflectionGroup>;

Group group(const char* key) {
  return std::make_shared<const refl::ReflectionGroup>(refl::ReflectionGroup::build(refl::parse_group_key(key)));
}

void need(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  if (o.pass) o.detail.clear();
  o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome dunkl_commutativity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  long evaluations = 0;
  for (const char* key : {"S3", "Z4", "I2(4)", "B2"}) {
    const Group g = group(key);
    if (std::string(key) == "S3") need(o, g->rank() == 3, "S3 must act on C^3");
    const CheckResult r = dunkl::dunkl_commute_check(*g, kDunklDegree);
    need(o, r.ok(), std::string(key) + ": " + r.witness.dump());
    evaluations += r.witness.value("evaluations", 0L);
  }
  const double t = seconds_since(start);
  need(o, t < kDunklSeconds, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "S3, Z4, I2(4), B2 to degree 6, " + std::to_string(evaluations) + " exact evaluations";
  return o;
}

Outcome pbw_dimensions() {
  Outcome o;
  std::string counts;
  for (const char* key : {"Z2", "Z3", "S3", "B2"}) {
    const pbw::CherednikAlgebra alg(group(key));
    for (int d = 0; d <= kPbwDegree; ++d) {
      const pbw::PBWDimension dim = pbw::pbw_dimension(alg, d);
      const long l = static_cast<long>(alg.group().rank());
      const long expected = static_cast<long>(alg.group().order()) * binomial(2 * l + d, d);
      need(o, static_cast<long>(dim.rank) == expected && static_cast<long>(dim.expected) == expected,
           std::string(key) + " d=" + std::to_string(d) + ": rank " + std::to_string(dim.rank) + " vs " +
               std::to_string(expected));
      if (d == kPbwDegree) counts += std::string(counts.empty() ? "" : ", ") + key + " " + std::to_string(dim.rank);
    }
  }
  if (o.pass) o.detail = "ranks at d=3: " + counts;
  return o;
}

Outcome faithfulness() {
  Outcome o;
  std::mt19937 rng(kSeed);
  const std::vector<const char*> keys = {"Z2", "Z3", "S3", "B2"};
  std::vector<std::unique_ptr<pbw::CherednikAlgebra>> algs;
  std::vector<std::vector<exact::Monomial>> monomials;
  for (const char* k : keys) {
    algs.push_back(std::make_unique<pbw::CherednikAlgebra>(group(k)));
    monomials.push_back(exact::monomials_up_to(algs.back()->group().rank(), kMonomialDegree));
  }
  for (int k = 0; k < kWordPairs; ++k) {
    const std::size_t which = static_cast<std::size_t>(k) % keys.size();
    const auto& alg = *algs[which];
    const pbw::Word a = pbw::random_word(alg.group(), kWordLength, rng);
    const pbw::Word b = pbw::random_word(alg.group(), kWordLength, rng);
    std::uniform_int_distribution<std::size_t> pick(0, monomials[which].size() - 1);
    const auto p = exact::MultiPoly::monomial(monomials[which][pick(rng)], ParamScalar(1L));
    const CheckResult r = pbw::homomorphism_check(alg, a, b, p);
    need(o, r.ok(), std::string(keys[which]) + " pair " + std::to_string(k) + ": " + r.witness.dump());
    if (!o.pass) break;
  }
  if (o.pass) o.detail = "500 random word pairs over Z2, Z3, S3, B2, formal t and c";
  return o;
}

Outcome euler_relations() {
  Outcome o;
  for (const char* key : {"Z2", "Z3", "Z4", "S3", "I2(4)", "B2"}) {
    const CheckResult r = pbw::euler_check(pbw::CherednikAlgebra(group(key)));
    need(o, r.ok(), std::string(key) + ": " + r.witness.dump());
  }
  const Group z2 = group("Z2");
  dunkl::Parameters at_one = dunkl::Parameters::formal(*z2);
  at_one.t = ParamScalar(1L);
  const pbw::CherednikAlgebra alg(z2, at_one);
  const pbw::PBWElement h = alg.euler_element();
  const pbw::PBWElement x = pbw::PBWElement::x(0);
  const pbw::PBWElement y = pbw::PBWElement::y(0);
  need(o, alg.commutator(h, x) == x, "[h,x] != x at t = 1");
  need(o, alg.commutator(h, y) == y.scaled(ParamScalar(-1L)), "[h,y] != -y at t = 1");
  if (o.pass) o.detail = "[h,x]=t x, [h,y]=-t y on six groups; [h,x]=x on Z2 at t=1";
  return o;
}

Outcome satake() {
  Outcome o;
  std::string dims;
  for (const char* key : {"Z2", "Z3"}) {
    const CheckResult r = pbw::satake_check_t0(group(key), kSatakeDegree);
    need(o, r.ok(), std::string(key) + ": " + r.witness.dump());
    dims += std::string(dims.empty() ? "" : ", ") + key + " center " + r.witness["center_dim"].dump() + " = image " +
            r.witness["target_rank"].dump();
  }
  if (o.pass) o.detail = "degree 4: " + dims;
  return o;
}

double min_gap(const std::vector<kz::Character>& zeta) {
  double gap = 2.0;
  for (std::size_t a = 0; a < zeta.size(); ++a) {
    for (std::size_t b = a + 1; b < zeta.size(); ++b) gap = std::min(gap, std::abs(zeta[a].value() - zeta[b].value()));
  }
  return gap;
}

Outcome kz_roots() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> draw(-499, 499);  // value / 1000, strictly inside (-1/2, 1/2)
  double worst = 0.0;
  int runs = 0;
  int rejected = 0;
  for (int n : {2, 3, 4, 6}) {
    const CheckResult symbolic = kz::hecke_root_check(kz::LocalModel::formal(n));
    need(o, symbolic.ok(), "formal n=" + std::to_string(n) + ": " + symbolic.witness.dump());
    for (int s = 0; s < kKzSamples;) {
      std::vector<std::string> c;
      for (int m = 1; m < n; ++m) c.push_back(std::to_string(draw(rng)) + "/1000");
      const kz::LocalModel model = kz::LocalModel::numeric(n, c, std::to_string(draw(rng)) + "/1000");
      const kz::MonodromyResult exact = kz::monodromy_exact(model);
      if (exact.resonant || min_gap(exact.zeta) < kResonanceGap) {
        ++rejected;
        continue;
      }
      ++s;
      need(o, kz::hecke_root_check(model).ok(), "root identity fails for a sample at n=" + std::to_string(n));
      const kz::MonodromyResult num = kz::monodromy_numeric(model, kKzSteps);
      worst = std::max(worst, num.max_deviation);
      ++runs;
    }
  }
  const double t = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max deviation %.2e over %d samples (tol %.0e, %d resonant draws skipped), %.2f s", worst,
                runs, kKzTolerance, rejected, t);
  need(o, worst <= kKzTolerance, buf);
  need(o, t < kKzSeconds, "runtime over 30 s");
  if (o.pass) o.detail = std::string("n=2,3,4,6 exact identity; ") + buf;
  return o;
}

Outcome tau_roundtrip() {
  Outcome o;
  for (int n = 2; n <= kTauMaxN; ++n) {
    const kz::LocalModel formal = kz::LocalModel::formal(n);
    const kz::LocalModel back = kz::c_eta_from_tau(kz::tau_from_c_eta(formal));
    need(o, back.c == formal.c && back.eta == formal.eta, "n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "(c, eta) -> tau -> (c, eta) exact for n=2..8";
  return o;
}

Outcome orbifold_groups() {
  Outcome o;
  auto order = [&](const std::string& sig) {
    const hecke::GroupPresentation p = hecke::orbifold_presentation(hecke::parse_signature(sig));
    const auto rep = hecke::todd_coxeter(p, kMaxCosets);
    if (!rep) return -1;
    need(o, rep->relators_trivial(p), sig + ": relators act nontrivially");
    return rep->degree;
  };
  need(o, order("g=0;2,3,3") == 12, "(2,3,3)");
  need(o, order("g=0;2,3,4") == 24, "(2,3,4)");
  need(o, order("g=0;2,3,5") == 60, "(2,3,5)");
  for (int n = 2; n <= 12; ++n) need(o, order("g=0;2,2," + std::to_string(n)) == 2 * n, "(2,2," + std::to_string(n) + ")");
  need(o, order("g=0;2,3,7") == -1, "(2,3,7) closed");
  if (o.pass) o.detail = "12/24/60, 2n for n=2..12, (2,3,7) overflows at 10^4 cosets";
  return o;
}

Outcome sphere_obstruction() {
  Outcome o;
  auto ints = [](std::initializer_list<int> v) { return std::vector<Rational>(v.begin(), v.end()); };
  const std::vector<std::pair<const char*, std::vector<Rational>>> cases = {
      {"g=0;2,3,3", ints({6, 6, 4, 4, 4, 4, 4, 4})},
      {"g=0;2,3,5", ints({30, 30, 20, 20, 20, 12, 12, 12, 12, 12})},
      {"g=0;2,2,2", ints({2, 2, 2, 2, 2, 2})},
  };
  for (const auto& [sig, coeffs] : cases) {
    const hecke::OrbifoldSignature s = hecke::parse_signature(sig);
    const hecke::Obstruction ob = hecke::sphere_obstruction(s, kMaxCosets);
    need(o, ob.coefficients == coeffs, std::string(sig) + ": " + ob.linear_form);
    need(o, ob.epsilon == exact::Cyclotomic(1), std::string(sig) + ": epsilon " + ob.epsilon.to_string());
    need(o, hecke::signature_verdict(s, kMaxCosets) == "expected-not-flat", std::string(sig) + ": verdict");
  }
  if (o.pass) o.detail = "(2,3,3), (2,3,5), (2,2,2) coefficient vectors exact, epsilon = 1, not flat";
  return o;
}

Outcome hecke_ranks() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const hecke::HeckeRank r = hecke::hecke_dimension_cyclic(n, n - 1, 2);
    need(o, hecke::hecke_rank_check(r).ok() && r.rank == static_cast<std::size_t>(n), "cyclic n=" + std::to_string(n));
    const CheckResult zero = hecke::specialize_tau_zero(hecke::cyclic_hecke_presentation(n, 2));
    need(o, zero.ok() && zero.witness["relations_at_zero"][0] == "T^" + std::to_string(n) + " - 1",
         "tau = 0 for n=" + std::to_string(n));
  }
  const hecke::HeckeRank a2 = hecke::hecke_dimension_a2(3, 2);
  need(o, hecke::hecke_rank_check(a2).ok() && a2.rank == 6, "A2 rank " + std::to_string(a2.rank));
  const hecke::OrbifoldSignature a4 = hecke::parse_signature("g=0;2,3,3");
  need(o, hecke::specialize_tau_zero(hecke::hecke_presentation(a4, 2), a4).ok(), "(2,3,3) at tau = 0");
  if (o.pass) o.detail = "cyclic n=1..8 rank n, A2 rank 6 over C[tau]/(tau^2), T^n - 1 at tau = 0";
  return o;
}

Outcome quasi_invariants() {
  Outcome o;
  const dunkl::LaurentPoly l1x3 = dunkl::RadialOperator(ParamScalar(1L)).apply_monomial(3);
  need(o, l1x3.empty() || std::all_of(l1x3.begin(), l1x3.end(), [](const auto& kv) { return kv.second.is_zero(); }),
       "L_1 x^3 != 0");
  std::string series;
  for (int m = 0; m <= 3; ++m) {
    const dunkl::QuasiInvariantSpec spec{m, kQuasiDegree};
    const CheckResult r = dunkl::quasi_invariance_check(spec);
    need(o, r.ok(), "m=" + std::to_string(m) + ": " + r.witness.dump());
    const CheckResult off = dunkl::quasi_invariance_check(spec, ParamScalar(Rational(2 * m + 1, 2)));
    need(o, !off.ok() && !off.witness.empty(), "no witness for c != m at m=" + std::to_string(m));
    const dunkl::HilbertSeries h = dunkl::quasi_hilbert_series(spec);
    std::vector<long> expected(static_cast<std::size_t>(2 * m + 2), 0);
    expected.front() = 1;
    expected.back() += 1;
    need(o, h.stabilized && h.palindromic && h.numerator == expected, "Hilbert series m=" + std::to_string(m));
    series += std::string(series.empty() ? "" : ", ") + h.to_string();
  }
  if (o.pass) o.detail = "m=0..3 to degree 12, L_1 x^3 = 0, c != m detected; " + series;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Dunkl commutativity", dunkl_commutativity},
      {"PBW dimensions", pbw_dimensions},
      {"Faithfulness consistency", faithfulness},
      {"Euler relations", euler_relations},
      {"Satake at t=0", satake},
      {"KZ/Hecke root correspondence", kz_roots},
      {"tau-map invertibility", tau_roundtrip},
      {"Orbifold groups", orbifold_groups},
      {"Sphere obstruction", sphere_obstruction},
      {"Hecke flat ranks", hecke_ranks},
      {"Quasi-invariants", quasi_invariants},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2zu %-30s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(start),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
