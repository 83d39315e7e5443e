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

#include "cherednik/kz.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "cherednik/errors.hpp"

namespace cherednik::kz {

using exact::ParamVar;
using exact::Rational;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

Cyclotomic omega(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

int mod(int a, int n) { return ((a % n) + n) % n; }

std::complex<double> numeric_value(const ParamScalar& v) { return v.evaluate({}); }

// True when a - b is an integer constant.
bool differs_by_integer(const ParamScalar& a, const ParamScalar& b) {
  const ParamScalar d = a - b;
  if (!d.is_constant()) return false;
  const Cyclotomic v = d.constant_value();
  return v.is_rational() && v.rational_value().get_den() == 1;
}

}  // namespace

LocalModel LocalModel::formal(int n) {
  LocalModel m;
  m.n = n;
  for (int k = 1; k < n; ++k) m.c.push_back(ParamScalar::variable(ParamVar::c(static_cast<std::size_t>(k - 1))));
  m.eta = ParamScalar::variable(ParamVar::eta);
  return m;
}

LocalModel LocalModel::numeric(int n, const std::vector<std::string>& c, const std::string& eta) {
  if (n < 2) throw InvalidInput("local model needs n >= 2");
  LocalModel m;
  m.n = n;
  if (c.size() == 1) {
    m.c.assign(static_cast<std::size_t>(n - 1), ParamScalar(exact::parse_rational(c[0])));
  } else if (c.size() == static_cast<std::size_t>(n - 1)) {
    for (const auto& v : c) m.c.emplace_back(exact::parse_rational(v));
  } else {
    throw InvalidInput("expected 1 or n-1 values of c");
  }
  m.eta = ParamScalar(exact::parse_rational(eta));
  return m;
}

void LocalModel::validate() const {
  if (n < 2) throw InvalidInput("local model needs n >= 2");
  if (c.size() != static_cast<std::size_t>(n - 1)) throw InvalidInput("local model needs n-1 values of c");
  if (t != ParamScalar(1L)) throw InvalidInput("the local model is only set up for t = 1");
}

exact::Matrix<ParamScalar> residue_matrix(const LocalModel& model) {
  model.validate();
  const int n = model.n;
  const auto un = static_cast<std::size_t>(n);
  exact::Matrix<ParamScalar> a(un, un);
  for (std::size_t k = 0; k < un; ++k) a(k, k) = model.eta;
  for (int m = 1; m < n; ++m) {
    const ParamScalar w = model.c[static_cast<std::size_t>(m - 1)] * ParamScalar(Cyclotomic(2) / (Cyclotomic(1) - omega(n, -m)));
    // w (1 - g^m), with g^m sending basis vector k to k + m.
    for (int k = 0; k < n; ++k) {
      a(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) += w;
      a(static_cast<std::size_t>(mod(k + m, n)), static_cast<std::size_t>(k)) -= w;
    }
  }
  return a;
}

ParamScalar flat_exponent(const LocalModel& model, int j) {
  const int n = model.n;
  const auto a = residue_matrix(model);
  std::vector<ParamScalar> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = ParamScalar(omega(n, static_cast<long>(j) * k));
  const auto av = a.apply(v);
  const ParamScalar beta = av[0];
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (av[k] != beta * v[k]) throw InternalInconsistency("character vector is not a residue eigenvector");
  }
  return beta;
}

ParamScalar flat_exponent_closed_form(const LocalModel& model, int j) {
  model.validate();
  ParamScalar beta = model.eta;
  for (int m = 1; m < model.n; ++m) {
    // (1 - w^{-jm}) / (1 - w^{-m}) as the geometric sum over k < j.
    Cyclotomic ratio;
    for (int k = 0; k < j; ++k) ratio += omega(model.n, -static_cast<long>(m) * k);
    beta += ParamScalar(Cyclotomic(2) * ratio) * model.c[static_cast<std::size_t>(m - 1)];
  }
  return beta;
}

std::complex<double> Character::value() const { return std::exp(kTwoPi * kI * numeric_value(exponent)); }

Character zeta_character(const LocalModel& model, int j) {
  if (j < 0 || j >= model.n) throw InvalidInput("character index out of range");
  const ParamScalar beta = flat_exponent(model, j);
  return Character{j, (ParamScalar(static_cast<long>(j)) - beta) * ParamScalar(Rational(1, model.n))};
}

std::vector<std::complex<double>> TauParameters::numeric() const {
  std::vector<std::complex<double>> out;
  for (const auto& v : over_2pi_i) out.push_back(kTwoPi * kI * numeric_value(v));
  return out;
}

TauParameters tau_from_c_eta(const LocalModel& model) {
  TauParameters tau;
  tau.n = model.n;
  for (int j = 1; j <= model.n; ++j) {
    tau.over_2pi_i.push_back(-flat_exponent_closed_form(model, j) * ParamScalar(Rational(1, model.n)));
  }
  return tau;
}

exact::Matrix<Cyclotomic> tau_matrix(int n) {
  if (n < 2) throw InvalidInput("local model needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  exact::Matrix<Cyclotomic> m(un, un);
  const Cyclotomic scale = Cyclotomic(Rational(-1, n));
  for (int j = 1; j <= n; ++j) {
    for (int c = 1; c < n; ++c) {
      Cyclotomic ratio;
      for (int k = 0; k < j; ++k) ratio += omega(n, -static_cast<long>(c) * k);
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(c - 1)) = Cyclotomic(2) * ratio * scale;
    }
    m(static_cast<std::size_t>(j - 1), un - 1) = scale;
  }
  return m;
}

LocalModel c_eta_from_tau(const TauParameters& tau) {
  const auto inv = exact::inverse(tau_matrix(tau.n));
  if (!inv) throw InternalInconsistency("tau map is singular for n = " + std::to_string(tau.n));
  if (tau.over_2pi_i.size() != static_cast<std::size_t>(tau.n)) throw InvalidInput("expected n tau values");
  LocalModel m;
  m.n = tau.n;
  std::vector<ParamScalar> values(static_cast<std::size_t>(tau.n));
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t k = 0; k < values.size(); ++k) values[r] += ParamScalar((*inv)(r, k)) * tau.over_2pi_i[k];
  }
  m.eta = values.back();
  values.pop_back();
  m.c = std::move(values);
  return m;
}

namespace {

std::vector<Character> characters(const LocalModel& model) {
  std::vector<Character> out;
  for (int j = 0; j < model.n; ++j) out.push_back(zeta_character(model, j));
  return out;
}

bool exact_resonance(const std::vector<Character>& zeta) {
  for (std::size_t a = 0; a < zeta.size(); ++a) {
    for (std::size_t b = a + 1; b < zeta.size(); ++b) {
      if (differs_by_integer(zeta[a].exponent, zeta[b].exponent)) return true;
    }
  }
  return false;
}

bool is_numeric(const LocalModel& model) {
  for (const auto& c : model.c) {
    if (!c.is_constant()) return false;
  }
  return model.eta.is_constant();
}

}  // namespace

MonodromyResult monodromy_exact(const LocalModel& model) {
  MonodromyResult r;
  r.n = model.n;
  r.method = "exact-exponent";
  r.zeta = characters(model);
  r.resonant = exact_resonance(r.zeta);
  const bool numeric = is_numeric(model);
  for (int j = 0; j < model.n; ++j) {
    // Continuation multiplies z^{-beta_j} v_j by exp(-2 pi i beta_j / n);
    // g^{-1} multiplies v_j by omega^j.
    const ParamScalar beta = flat_exponent_closed_form(model, j);
    const ParamScalar exponent = (ParamScalar(static_cast<long>(j)) - beta) * ParamScalar(Rational(1, model.n));
    if (exponent != r.zeta[static_cast<std::size_t>(j)].exponent) {
      throw InternalInconsistency("closed-form exponent disagrees with the residue eigenvalue");
    }
    if (numeric) {
      const std::complex<double> ev = std::exp(kTwoPi * kI * numeric_value(exponent));
      r.eigenvalues.push_back(ev);
      r.max_deviation = std::max(r.max_deviation, std::abs(ev - r.zeta[static_cast<std::size_t>(j)].value()));
    }
  }
  return r;
}

MonodromyResult monodromy_numeric(const LocalModel& model, int steps) {
  if (steps < 1) throw InvalidInput("steps must be positive");
  if (!is_numeric(model)) throw InvalidInput("numeric monodromy needs numeric c and eta");
  const int n = model.n;
  const auto exact_a = residue_matrix(model);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) a(i, k) = numeric_value(exact_a(static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
  }
  // d/dtheta f(z(theta)) = f'(z) z'(theta) = -(A / z) f * i z.
  auto rhs = [&](double theta, const Eigen::MatrixXcd& f) -> Eigen::MatrixXcd {
    const std::complex<double> z = std::exp(kI * theta);
    const std::complex<double> dz = kI * z;
    return -(a * f) * (dz / z);
  };
  const double h = kTwoPi / n / steps;
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Identity(n, n);
  for (int s = 0; s < steps; ++s) {
    const double th = s * h;
    const Eigen::MatrixXcd k1 = rhs(th, phi);
    const Eigen::MatrixXcd k2 = rhs(th + h / 2, phi + (h / 2) * k1);
    const Eigen::MatrixXcd k3 = rhs(th + h / 2, phi + (h / 2) * k2);
    const Eigen::MatrixXcd k4 = rhs(th + h, phi + h * k3);
    phi += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  Eigen::MatrixXcd g_inv = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) g_inv(mod(k - 1, n), k) = 1.0;
  const Eigen::MatrixXcd t = g_inv * phi;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(t, false);
  if (solver.info() != Eigen::Success) throw InternalInconsistency("eigenvalue solver did not converge");
  std::vector<std::complex<double>> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  MonodromyResult r;
  r.n = n;
  r.method = "ode-numeric";
  r.steps = steps;
  r.zeta = characters(model);
  std::vector<bool> used(eig.size(), false);
  for (const auto& z : r.zeta) {
    const std::complex<double> target = z.value();
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t k = 0; k < eig.size(); ++k) {
      if (!used[k] && std::abs(eig[k] - target) < best_d) {
        best = k;
        best_d = std::abs(eig[k] - target);
      }
    }
    used[best] = true;
    r.eigenvalues.push_back(eig[best]);
    r.max_deviation = std::max(r.max_deviation, best_d);
  }
  for (std::size_t a = 0; a < r.zeta.size(); ++a) {
    for (std::size_t b = a + 1; b < r.zeta.size(); ++b) {
      if (std::abs(r.zeta[a].value() - r.zeta[b].value()) < 1e-9) r.resonant = true;
    }
  }
  const auto tau = tau_from_c_eta(model).numeric();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
  for (int j = 1; j <= n; ++j) {
    const std::complex<double> root = std::exp(kI * (kTwoPi * j / n)) * std::exp(tau[static_cast<std::size_t>(j - 1)]);
    p = p * (t - root * Eigen::MatrixXcd::Identity(n, n));
  }
  r.hecke_residual = p.norm();
  return r;
}

CheckResult hecke_root_check(const LocalModel& model) {
  const auto zeta = characters(model);
  const TauParameters tau = tau_from_c_eta(model);
  std::vector<bool> used(zeta.size(), false);
  nlohmann::json pairs = nlohmann::json::array();
  for (int j = 1; j <= model.n; ++j) {
    // omega^j exp(tau_j) = exp(2 pi i (j / n + tau_j / (2 pi i)))
    const ParamScalar root = ParamScalar(Rational(j, model.n)) + tau.over_2pi_i[static_cast<std::size_t>(j - 1)];
    bool found = false;
    for (std::size_t k = 0; k < zeta.size() && !found; ++k) {
      if (!used[k] && differs_by_integer(zeta[k].exponent, root)) {
        used[k] = true;
        found = true;
        pairs.push_back({{"root", j}, {"character", zeta[k].j}});
      }
    }
    if (!found) {
      return CheckResult::fail({{"n", model.n}, {"unmatched_root", j}, {"root_exponent", root.to_string()}, {"matched", pairs}});
    }
  }
  return {Status::pass, {{"n", model.n}, {"matched", pairs}}};
}

CheckResult convergence_check(const LocalModel& model, int steps) {
  const double e1 = monodromy_numeric(model, steps).max_deviation;
  const double e2 = monodromy_numeric(model, 2 * steps).max_deviation;
  const double ratio = e1 / e2;
  CheckResult r;
  r.witness = {{"n", model.n}, {"steps", steps}, {"error", e1}, {"error_doubled", e2}, {"ratio", ratio}};
  // Fourth order: halving the step divides the error by about 16.
  if (!(ratio > 12.0 && ratio < 20.0)) r.status = Status::fail;
  return r;
}

nlohmann::json to_json(const LocalModel& model, const MonodromyResult& r) {
  auto scalar = [](const ParamScalar& v) -> nlohmann::json {
    if (v.is_constant()) {
      const auto z = v.constant_value().embed();
      if (z.imag() == 0.0) return z.real();
    }
    return v.to_string();
  };
  nlohmann::json c = nlohmann::json::array();
  for (const auto& v : model.c) c.push_back(scalar(v));
  nlohmann::json eig = nlohmann::json::array();
  for (const auto& z : r.eigenvalues) eig.push_back({z.real(), z.imag()});
  nlohmann::json zeta = nlohmann::json::array();
  for (const auto& z : r.zeta) zeta.push_back("exp(2*pi*i*(" + z.exponent.to_string() + "))");
  nlohmann::json out = {{"n", model.n},         {"c", c},           {"eta", scalar(model.eta)},
                        {"method", r.method},   {"eigenvalues", eig}, {"zeta_exact", zeta},
                        {"max_deviation", r.max_deviation}, {"resonant", r.resonant}};
  if (r.method == "ode-numeric") {
    out["steps"] = r.steps;
    out["hecke_residual"] = r.hecke_residual;
  }
  return out;
}

}  // namespace cherednik::kz
