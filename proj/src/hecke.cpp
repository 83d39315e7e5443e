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

#include "cherednik/hecke.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik::hecke {

using exact::Monomial;

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::spherical:
      return "spherical";
    case Geometry::euclidean:
      return "euclidean";
    case Geometry::hyperbolic:
      return "hyperbolic";
  }
  return "?";
}

Rational OrbifoldSignature::chi_orb() const {
  Rational chi(2 - 2 * genus);
  for (int n : cones) chi -= Rational(1) - Rational(1, n);
  chi.canonicalize();
  return chi;
}

Geometry OrbifoldSignature::geometry() const {
  const int s = sgn(chi_orb());
  return s > 0 ? Geometry::spherical : (s == 0 ? Geometry::euclidean : Geometry::hyperbolic);
}

std::string OrbifoldSignature::to_string() const {
  std::string out = "g=" + std::to_string(genus) + ";";
  for (std::size_t i = 0; i < cones.size(); ++i) out += (i ? "," : "") + std::to_string(cones[i]);
  return out;
}

namespace {

int parse_positive(std::string_view text, std::string_view what) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || v < 0) {
    throw InvalidInput("malformed " + std::string(what) + " '" + std::string(text) + "' in signature");
  }
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

OrbifoldSignature parse_signature(std::string_view text) {
  text = strip(text);
  if (text.substr(0, 2) != "g=") throw InvalidInput("signature must start with 'g=': '" + std::string(text) + "'");
  text.remove_prefix(2);
  const auto semi = text.find(';');
  OrbifoldSignature sig;
  sig.genus = parse_positive(strip(text.substr(0, semi)), "genus");
  if (semi == std::string_view::npos) return sig;
  std::string_view rest = strip(text.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const int n = parse_positive(strip(rest.substr(0, comma)), "cone order");
    if (n < 2) throw InvalidInput("cone orders must be at least 2");
    sig.cones.push_back(n);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (strip(rest).empty()) throw InvalidInput("trailing comma in signature");
  }
  return sig;
}

Relator freely_reduce(Relator w) {
  Relator out;
  for (int x : w) {
    if (!out.empty() && out.back() == (x ^ 1)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Relator invert(const Relator& w) {
  Relator out(w.rbegin(), w.rend());
  for (int& x : out) x ^= 1;
  return out;
}

std::string GroupPresentation::to_string() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? "," : "") << generators[i];
  out << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out << ", ";
    if (relators[r].empty()) out << "1";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const int x = relators[r][i];
      out << (i ? "*" : "") << generators[static_cast<std::size_t>(x / 2)] << ((x & 1) ? "^-1" : "");
    }
  }
  out << ">";
  return out.str();
}

GroupPresentation orbifold_presentation(const OrbifoldSignature& sig) {
  GroupPresentation p;
  const int g = sig.genus;
  for (int l = 1; l <= g; ++l) {
    p.generators.push_back("a" + std::to_string(l));
    p.generators.push_back("b" + std::to_string(l));
  }
  for (std::size_t j = 1; j <= sig.cones.size(); ++j) p.generators.push_back("c" + std::to_string(j));
  auto gen = [&](int index) { return 2 * index; };
  for (std::size_t j = 0; j < sig.cones.size(); ++j) {
    p.relators.push_back(Relator(static_cast<std::size_t>(sig.cones[j]), gen(2 * g + static_cast<int>(j))));
  }
  Relator commutators;
  for (int l = 0; l < g; ++l) {
    const int a = gen(2 * l);
    const int b = gen(2 * l + 1);
    commutators.insert(commutators.end(), {a, b, a ^ 1, b ^ 1});
  }
  Relator product;
  for (std::size_t j = 0; j < sig.cones.size(); ++j) product.push_back(gen(2 * g + static_cast<int>(j)));
  // c_1...c_m = prod [a_l, b_l]
  Relator surface = product.empty() ? commutators : product;
  if (!product.empty()) {
    const Relator inv = invert(commutators);
    surface.insert(surface.end(), inv.begin(), inv.end());
  }
  surface = freely_reduce(surface);
  if (!surface.empty()) p.relators.push_back(surface);
  return p;
}

int PermutationRep::apply(const Relator& w, int point) const {
  for (int x : w) {
    const auto& perm = (x & 1) ? inverse_images[static_cast<std::size_t>(x / 2)] : images[static_cast<std::size_t>(x / 2)];
    point = perm[static_cast<std::size_t>(point)];
  }
  return point;
}

bool PermutationRep::relators_trivial(const GroupPresentation& p) const {
  for (const auto& r : p.relators) {
    for (int pt = 0; pt < degree; ++pt) {
      if (apply(r, pt) != pt) return false;
    }
  }
  return true;
}

int PermutationRep::sign(const Relator& w) const {
  std::vector<int> perm(static_cast<std::size_t>(degree));
  for (int pt = 0; pt < degree; ++pt) perm[static_cast<std::size_t>(pt)] = apply(w, pt);
  std::vector<bool> seen(perm.size(), false);
  int s = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

namespace {

// Coset table with coincidence handling, after the HLT strategy in Holt,
// Eick and O'Brien, Handbook of Computational Group Theory, section 5.1.
class CosetTable {
 public:
  CosetTable(int generators, int max_cosets) : width_(2 * generators), max_(max_cosets) { add_row(); }

  bool overflow() const noexcept { return overflow_; }
  int size() const noexcept { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c * width_ + x)]; }

  bool define(int c, int x) {
    if (size() >= max_) {
      overflow_ = true;
      return false;
    }
    const int d = add_row();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    return true;
  }

  void scan_and_fill(int alpha, const Relator& w) {
    if (w.empty()) return;
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return;
      }
      if (!define(f, w[static_cast<std::size_t>(i)])) return;
    }
  }

  void fill_row(int c) {
    for (int x = 0; x < width_ && live(c) && !overflow_; ++x) {
      if (at(c, x) < 0) define(c, x);
    }
  }

  PermutationRep extract(int generators) {
    std::vector<int> number(parent_.size(), -1);
    int n = 0;
    for (int c = 0; c < size(); ++c) {
      if (live(c)) number[static_cast<std::size_t>(c)] = n++;
    }
    PermutationRep rep;
    rep.degree = n;
    rep.images.assign(static_cast<std::size_t>(generators), std::vector<int>(static_cast<std::size_t>(n)));
    rep.inverse_images = rep.images;
    for (int c = 0; c < size(); ++c) {
      if (!live(c)) continue;
      for (int k = 0; k < generators; ++k) {
        rep.images[static_cast<std::size_t>(k)][static_cast<std::size_t>(number[static_cast<std::size_t>(c)])] =
            number[static_cast<std::size_t>(at(c, 2 * k))];
        rep.inverse_images[static_cast<std::size_t>(k)][static_cast<std::size_t>(number[static_cast<std::size_t>(c)])] =
            number[static_cast<std::size_t>(at(c, 2 * k + 1))];
      }
    }
    return rep;
  }

 private:
  int add_row() {
    const int id = size();
    parent_.push_back(id);
    table_.resize(table_.size() + static_cast<std::size_t>(width_), -1);
    return id;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k);
    const int b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int gamma = queue[q];
      for (int x = 0; x < width_; ++x) {
        const int delta = at(gamma, x);
        if (delta < 0) continue;
        at(delta, x ^ 1) = -1;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1) >= 0) {
          merge(mu, at(nu, x ^ 1), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  int width_;
  int max_;
  bool overflow_ = false;
  std::vector<int> table_;
  std::vector<int> parent_;
};

}  // namespace

std::optional<PermutationRep> todd_coxeter(const GroupPresentation& p, int max_cosets) {
  if (max_cosets < 1) throw InvalidInput("max_cosets must be positive");
  const int gens = static_cast<int>(p.generators.size());
  CosetTable table(gens, max_cosets);
  for (int alpha = 0; alpha < table.size(); ++alpha) {
    for (const auto& r : p.relators) {
      if (!table.live(alpha)) break;
      table.scan_and_fill(alpha, r);
      if (table.overflow()) return std::nullopt;
    }
    if (table.live(alpha)) table.fill_row(alpha);
    if (table.overflow()) return std::nullopt;
  }
  PermutationRep rep = table.extract(gens);
  if (!rep.relators_trivial(p)) throw InternalInconsistency("coset table does not satisfy the relators");
  return rep;
}

std::vector<TruncatedSeries> local_polynomial(int n, std::size_t first, int order) {
  std::vector<TruncatedSeries> poly{TruncatedSeries(Cyclotomic(1), order)};
  for (int k = 1; k <= n; ++k) {
    const TruncatedSeries root = TruncatedSeries(Cyclotomic::root_of_unity(n, k), order) *
                                 exact::series_exp(TruncatedSeries::variable(first + static_cast<std::size_t>(k - 1), order));
    std::vector<TruncatedSeries> next(poly.size() + 1, TruncatedSeries(order));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

HeckeAlgebraPresentation hecke_presentation(const OrbifoldSignature& sig, int order) {
  HeckeAlgebraPresentation h;
  const GroupPresentation full = orbifold_presentation(sig);
  h.braid.generators = full.generators;
  h.braid.relators.assign(full.relators.begin() + static_cast<std::ptrdiff_t>(sig.cones.size()), full.relators.end());
  std::size_t first = 0;
  for (std::size_t j = 0; j < sig.cones.size(); ++j) {
    const int n = sig.cones[j];
    h.local.push_back(LocalRelation{2 * sig.genus + static_cast<int>(j), n, local_polynomial(n, first, order)});
    first += static_cast<std::size_t>(n);
  }
  h.tau_count = static_cast<int>(first);
  return h;
}

HeckeAlgebraPresentation cyclic_hecke_presentation(int n, int order) {
  if (n < 1) throw InvalidInput("cyclic Hecke algebra needs n >= 1");
  HeckeAlgebraPresentation h;
  h.braid.generators = {"T"};
  h.local.push_back(LocalRelation{0, n, local_polynomial(n, 0, order)});
  h.tau_count = n;
  return h;
}

namespace {

bool is_power_minus_one(const LocalRelation& rel) {
  for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
    const Cyclotomic expected = i == 0 ? Cyclotomic(-1) : (i + 1 == rel.coefficients.size() ? Cyclotomic(1) : Cyclotomic(0));
    if (rel.coefficients[i].at_zero() != expected) return false;
  }
  return rel.coefficients.size() == static_cast<std::size_t>(rel.order) + 1;
}

}  // namespace

CheckResult specialize_tau_zero(const HeckeAlgebraPresentation& h) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& rel : h.local) {
    const std::string name = h.braid.generators[static_cast<std::size_t>(rel.generator)];
    rels.push_back(name + "^" + std::to_string(rel.order) + " - 1");
    if (!is_power_minus_one(rel)) return CheckResult::fail({{"generator", name}, {"reason", "tau = 0 relation is not T^n - 1"}});
  }
  return {Status::pass, {{"relations_at_zero", rels}}};
}

CheckResult specialize_tau_zero(const HeckeAlgebraPresentation& h, const OrbifoldSignature& sig) {
  CheckResult r = specialize_tau_zero(h);
  if (!r.ok()) return r;
  GroupPresentation restored;
  restored.generators = h.braid.generators;
  for (const auto& rel : h.local) restored.relators.push_back(Relator(static_cast<std::size_t>(rel.order), 2 * rel.generator));
  restored.relators.insert(restored.relators.end(), h.braid.relators.begin(), h.braid.relators.end());
  const GroupPresentation expected = orbifold_presentation(sig);
  r.witness["presentation"] = restored.to_string();
  if (restored.generators != expected.generators || restored.relators != expected.relators) {
    r.status = Status::fail;
    r.witness["expected"] = expected.to_string();
  }
  return r;
}

Obstruction sphere_obstruction(const OrbifoldSignature& sig, int max_cosets) {
  if (sig.geometry() != Geometry::spherical || sig.genus != 0) {
    throw InvalidInput("sphere obstruction needs a spherical genus-0 signature, got " + sig.to_string());
  }
  const GroupPresentation p = orbifold_presentation(sig);
  const auto rep = todd_coxeter(p, max_cosets);
  if (!rep) throw InvalidInput("coset enumeration overflowed for " + sig.to_string());
  if (rep->degree == 1) throw InvalidInput("sphere obstruction needs a nontrivial group");
  Obstruction ob;
  ob.group_order = rep->degree;
  const int order = 2;
  TruncatedSeries det(Cyclotomic(1), order);
  std::size_t first = 0;
  for (std::size_t j = 0; j < sig.cones.size(); ++j) {
    const int n = sig.cones[j];
    if (ob.group_order % n != 0) throw InternalInconsistency("cone order does not divide the group order");
    const long mult = ob.group_order / n;
    TruncatedSeries cone(Cyclotomic(1), order);
    for (int k = 1; k <= n; ++k) {
      const TruncatedSeries eigen = TruncatedSeries(Cyclotomic::root_of_unity(n, k), order) *
                                    exact::series_exp(TruncatedSeries::variable(first + static_cast<std::size_t>(k - 1), order));
      cone *= eigen.pow(mult);
    }
    ob.cone_epsilon.push_back(cone.at_zero());
    ob.cone_signs.push_back(rep->sign(Relator{2 * static_cast<int>(j)}));
    det *= cone;
    first += static_cast<std::size_t>(n);
  }
  ob.epsilon = det.at_zero();
  std::ostringstream form;
  first = 0;
  for (std::size_t j = 0; j < sig.cones.size(); ++j) {
    for (int k = 1; k <= sig.cones[j]; ++k, ++first) {
      const Cyclotomic c = det.coefficient(exact::unit_monomial(first)) / ob.epsilon;
      if (!c.is_rational()) throw InternalInconsistency("obstruction coefficient is not rational");
      ob.coefficients.push_back(c.rational_value());
      if (first) form << " + ";
      form << c.rational_value().get_str() << "*tau_" << k << "_" << (j + 1);
    }
  }
  ob.linear_form = form.str();
  const bool nonzero = std::any_of(ob.coefficients.begin(), ob.coefficients.end(), [](const Rational& c) { return c != 0; });
  ob.verdict = nonzero ? "not flat for generic tau" : "no first-order obstruction";
  return ob;
}

namespace {

using Vec = std::vector<TruncatedSeries>;
using Mat = std::vector<Vec>;  // row-major, square

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  const int order = a[0][0].order();
  Mat out(n, Vec(n, TruncatedSeries(order)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Mat mat_add_scaled_identity(Mat m, const TruncatedSeries& s) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += s;
  return m;
}

bool is_zero(const Mat& m) {
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(v.size(), TruncatedSeries(v[0].order()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!m[i][k].is_zero() && !v[k].is_zero()) out[i] += m[i][k] * v[k];
    }
  }
  return out;
}

// Elimination over the local ring C[tau]/(tau^K): only units are used as
// pivots. A span is free of rank r when r unit pivots remain and every
// other vector reduces to zero.
struct LocalSpan {
  std::vector<std::pair<std::size_t, Vec>> pivots;

  Vec reduce(Vec v) const {
    for (const auto& [col, p] : pivots) {
      if (v[col].is_zero()) continue;
      const TruncatedSeries f = v[col];
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!p[i].is_zero()) v[i] -= f * p[i];
      }
    }
    return v;
  }

  bool insert(const Vec& v) {
    Vec r = reduce(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_unit()) continue;
      const TruncatedSeries inv = r[i].inverse();
      for (auto& e : r) e *= inv;
      for (auto& [col, p] : pivots) {
        if (p[i].is_zero()) continue;
        const TruncatedSeries f = p[i];
        for (std::size_t k = 0; k < p.size(); ++k) p[k] -= f * r[k];
      }
      pivots.emplace_back(i, std::move(r));
      return true;
    }
    return false;
  }
};

struct RankResult {
  std::size_t rank = 0;
  bool free = true;
};

RankResult local_rank(const std::vector<Vec>& vectors) {
  LocalSpan span;
  std::vector<const Vec*> rest;
  for (const auto& v : vectors) {
    if (!span.insert(v)) rest.push_back(&v);
  }
  RankResult r{span.pivots.size(), true};
  for (const Vec* v : rest) {
    for (const auto& e : span.reduce(*v)) r.free = r.free && e.is_zero();
  }
  return r;
}

// Vectors obtained by applying all words of length <= length to start.
std::vector<Vec> word_orbit(const std::vector<Mat>& gens, const Vec& start, int length) {
  std::vector<Vec> all{start};
  std::vector<Vec> layer{start};
  for (int l = 1; l <= length; ++l) {
    std::vector<Vec> next;
    for (const auto& v : layer) {
      for (const auto& g : gens) next.push_back(mat_vec(g, v));
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

Mat cyclic_model(int n, int order) {
  const auto poly = local_polynomial(n, 0, order);
  const auto un = static_cast<std::size_t>(n);
  Mat m(un, Vec(un, TruncatedSeries(order)));
  for (std::size_t k = 0; k + 1 < un; ++k) m[k + 1][k] = TruncatedSeries(Cyclotomic(1), order);
  for (std::size_t k = 0; k < un; ++k) m[k][un - 1] = -poly[k];
  return m;
}

bool polynomial_annihilates(const Mat& m, const std::vector<TruncatedSeries>& poly) {
  const int order = m[0][0].order();
  Mat acc(m.size(), Vec(m.size(), TruncatedSeries(order)));
  // Horner: acc = acc * m + p_k
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = mat_add_scaled_identity(mat_mul(acc, m), *it);
  return is_zero(acc);
}

HeckeRank rank_of_model(std::string name, const std::vector<Mat>& gens, int length, bool relations, std::size_t expected,
                        const std::vector<Mat>& gens_at_zero) {
  HeckeRank r;
  r.name = std::move(name);
  r.length = length;
  r.expected = expected;
  r.relations_hold = relations;
  const std::size_t dim = gens[0].size();
  const int order = gens[0][0][0].order();
  Vec one(dim, TruncatedSeries(order));
  one[0] = TruncatedSeries(Cyclotomic(1), order);
  const RankResult now = local_rank(word_orbit(gens, one, length));
  const RankResult next = local_rank(word_orbit(gens, one, length + 1));
  r.rank = now.rank;
  r.rank_next = next.rank;
  r.free = now.free && next.free;
  Vec one0(dim, TruncatedSeries(1));
  one0[0] = TruncatedSeries(Cyclotomic(1), 1);
  r.rank_at_zero = local_rank(word_orbit(gens_at_zero, one0, length + 1)).rank;
  return r;
}

// S3 as permutations of {0,1,2}; T_w basis indexed by position in this list.
const std::vector<std::vector<int>>& s3_elements() {
  static const std::vector<std::vector<int>> elems = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return elems;
}

int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j] ? 1 : 0;
  }
  return n;
}

std::size_t s3_index(const std::vector<int>& p) {
  const auto& e = s3_elements();
  return static_cast<std::size_t>(std::find(e.begin(), e.end(), p) - e.begin());
}

Mat a2_generator(int i, int order) {
  // Roots of (T + e^{tau_1})(T - e^{tau_2}).
  const TruncatedSeries r1 = -exact::series_exp(TruncatedSeries::variable(0, order));
  const TruncatedSeries r2 = exact::series_exp(TruncatedSeries::variable(1, order));
  Mat m(6, Vec(6, TruncatedSeries(order)));
  for (const auto& w : s3_elements()) {
    std::vector<int> sw = w;  // s_i o w swaps the values i and i+1
    for (int& v : sw) v = v == i ? i + 1 : (v == i + 1 ? i : v);
    const std::size_t col = s3_index(w);
    const std::size_t to = s3_index(sw);
    if (inversions(sw) > inversions(w)) {
      m[to][col] = TruncatedSeries(Cyclotomic(1), order);
    } else {
      // T_i T_w = T_i^2 T_{s_i w} = (r1 + r2) T_w - r1 r2 T_{s_i w}
      m[col][col] += r1 + r2;
      m[to][col] -= r1 * r2;
    }
  }
  return m;
}

}  // namespace

HeckeRank hecke_dimension_cyclic(int n, int length, int order) {
  if (n < 1) throw InvalidInput("cyclic Hecke algebra needs n >= 1");
  const Mat t = cyclic_model(n, order);
  const bool relations = polynomial_annihilates(t, local_polynomial(n, 0, order));
  return rank_of_model("cyclic(" + std::to_string(n) + ")", {t}, length, relations, static_cast<std::size_t>(n),
                       {cyclic_model(n, 1)});
}

HeckeRank hecke_dimension_a2(int length, int order) {
  const Mat t1 = a2_generator(0, order);
  const Mat t2 = a2_generator(1, order);
  const TruncatedSeries r1 = -exact::series_exp(TruncatedSeries::variable(0, order));
  const TruncatedSeries r2 = exact::series_exp(TruncatedSeries::variable(1, order));
  const std::vector<TruncatedSeries> quadratic{r1 * r2, -(r1 + r2), TruncatedSeries(Cyclotomic(1), order)};
  const bool braid = mat_mul(mat_mul(t1, t2), t1) == mat_mul(mat_mul(t2, t1), t2);
  const bool relations = braid && polynomial_annihilates(t1, quadratic) && polynomial_annihilates(t2, quadratic);
  return rank_of_model("A2", {t1, t2}, length, relations, 6, {a2_generator(0, 1), a2_generator(1, 1)});
}

CheckResult hecke_rank_check(const HeckeRank& r) {
  CheckResult out;
  out.witness = {{"algebra", r.name},
                 {"length", r.length},
                 {"rank", r.rank},
                 {"rank_next", r.rank_next},
                 {"rank_at_tau_zero", r.rank_at_zero},
                 {"expected", r.expected},
                 {"relations_hold", r.relations_hold},
                 {"free", r.free}};
  if (!r.stabilized()) {
    out.status = Status::inconclusive;
  } else if (!(r.relations_hold && r.free && r.rank == r.expected && r.rank_at_zero == r.expected)) {
    out.status = Status::fail;
  }
  return out;
}

std::string signature_verdict(const OrbifoldSignature& sig, int max_cosets) {
  if (sig.geometry() != Geometry::spherical) return "expected-flat";
  const auto rep = todd_coxeter(orbifold_presentation(sig), max_cosets);
  if (!rep) throw InternalInconsistency("spherical orbifold group did not close within max_cosets");
  if (rep->degree > 1) return "expected-not-flat";
  // Trivial group: any cone relation forces a tau combination to vanish.
  return sig.cones.empty() ? "expected-flat" : "expected-not-flat";
}

nlohmann::json verdict_report(const OrbifoldSignature& sig, int max_cosets) {
  nlohmann::json out;
  out["signature"] = sig.to_string();
  const Rational chi = sig.chi_orb();
  out["chi_orb"] = chi.get_d();
  out["chi_orb_exact"] = chi.get_str();
  out["geometry"] = to_string(sig.geometry());
  out["obstruction_form"] = nullptr;
  if (sig.geometry() == Geometry::spherical) {
    const auto rep = todd_coxeter(orbifold_presentation(sig), max_cosets);
    if (!rep) throw InternalInconsistency("spherical orbifold group did not close within max_cosets");
    out["group_order"] = rep->degree;
    if (rep->degree > 1 && sig.genus == 0) {
      const Obstruction ob = sphere_obstruction(sig, max_cosets);
      out["obstruction_form"] = ob.linear_form;
      out["epsilon"] = ob.epsilon.to_string();
    }
  } else {
    out["group_order"] = "infinite";
  }
  out["verdict"] = signature_verdict(sig, max_cosets);
  return out;
}

}  // namespace cherednik::hecke
