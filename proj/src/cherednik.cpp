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

#include "cherednik/cherednik.hpp"

#include <sstream>

#include "cherednik/errors.hpp"
#include "cherednik/exact/linalg.hpp"

namespace cherednik::pbw {

using exact::Cyclotomic;
using exact::ParamVar;
using refl::CycVector;

// PBWElement ---------------------------------------------------------------

PBWElement::PBWElement(const ParamScalar& scalar) { add_term(PBWKey{}, scalar); }

PBWElement PBWElement::word(PBWKey key, const ParamScalar& coeff) {
  exact::trim(key.x);
  exact::trim(key.y);
  PBWElement out;
  out.add_term(key, coeff);
  return out;
}

PBWElement PBWElement::x(std::size_t i) { return word(PBWKey{exact::unit_monomial(i), 0, {}}); }
PBWElement PBWElement::y(std::size_t i) { return word(PBWKey{{}, 0, exact::unit_monomial(i)}); }
PBWElement PBWElement::group(int g) { return word(PBWKey{{}, g, {}}); }

ParamScalar PBWElement::coefficient(const PBWKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void PBWElement::add_term(const PBWKey& key, const ParamScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PBWElement::y_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, exact::mono_degree(k.y));
  return d;
}

int PBWElement::total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree(); }

PBWElement PBWElement::y_part(int d) const {
  PBWElement out;
  for (const auto& [k, c] : terms_) {
    if (exact::mono_degree(k.y) == d) out.terms_.emplace(k, c);
  }
  return out;
}

PBWElement PBWElement::scaled(const ParamScalar& s) const {
  PBWElement out;
  if (s.is_zero()) return out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, c * s);
  return out;
}

PBWElement PBWElement::substitute(const std::map<std::size_t, ParamScalar>& values) const {
  PBWElement out;
  for (const auto& [k, c] : terms_) out.add_term(k, c.substitute(values));
  return out;
}

PBWElement& PBWElement::operator+=(const PBWElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

bool operator==(const PBWElement& a, const PBWElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j) {
    if (!(i->first == j->first) || i->second != j->second) return false;
  }
  return true;
}

std::string to_string(const PBWElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto vars = [](std::ostringstream& os, const Monomial& m, char name) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << '*' << name << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
    }
  };
  for (const auto& [k, c] : a.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ')';
    vars(out, k.x, 'x');
    if (k.g != 0) out << "*g" << k.g;
    vars(out, k.y, 'y');
  }
  return out.str();
}

// CherednikAlgebra ---------------------------------------------------------

struct CherednikAlgebra::Cache {
  std::mutex mu;
  std::map<std::pair<Monomial, Monomial>, PBWElement> y_times_x;
  std::map<std::pair<std::size_t, Monomial>, PBWElement> bracket;
  std::map<std::pair<int, Monomial>, MultiPoly> x_image;
  std::map<std::pair<int, Monomial>, MultiPoly> y_image;
};

namespace {

template <class Map, class Key, class Make>
const typename Map::mapped_type& memo(std::mutex& mu, Map& map, const Key& key, Make make) {
  {
    std::lock_guard lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = make();
  std::lock_guard lock(mu);
  return map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

CherednikAlgebra::~CherednikAlgebra() = default;
CherednikAlgebra::CherednikAlgebra(CherednikAlgebra&&) noexcept = default;
CherednikAlgebra& CherednikAlgebra::operator=(CherednikAlgebra&&) noexcept = default;

CherednikAlgebra::CherednikAlgebra(std::shared_ptr<const ReflectionGroup> group)
    : CherednikAlgebra(group, Parameters::formal(*group)) {}

CherednikAlgebra::CherednikAlgebra(std::shared_ptr<const ReflectionGroup> group, Parameters params)
    : group_(std::move(group)), params_(std::move(params)), cache_(std::make_unique<Cache>()) {
  const std::size_t l = group_->rank();
  if (params_.c.size() != group_->classes().size()) throw InvalidInput("one c per reflection class is required");
  for (std::size_t i = 0; i < l; ++i) {
    CycVector e(l);
    e[i] = Cyclotomic(1);
    dunkl_.emplace_back(*group_, e, params_);
  }
  for (const auto& s : group_->reflections()) {
    std::vector<ParamScalar> w;
    const ParamScalar base =
        params_.c[static_cast<std::size_t>(s.class_label)] * ParamScalar(Cyclotomic(2) / (Cyclotomic(1) - s.lambda));
    for (std::size_t i = 0; i < l; ++i) w.push_back(base * ParamScalar(s.root[i]));
    weights_.push_back(std::move(w));
    roots_.push_back(exact::linear_form(s.root));
  }
  for (int g = 0; g < static_cast<int>(group_->order()); ++g) {
    x_rows_.push_back(dunkl::substitution_rows(*group_, g));
    const auto& m = group_->element(g).matrix;
    std::vector<CycVector> rows(l, CycVector(l));
    for (std::size_t i = 0; i < l; ++i) {
      for (std::size_t j = 0; j < l; ++j) rows[i][j] = m(j, i);
    }
    y_rows_.push_back(std::move(rows));
  }
}

const MultiPoly& CherednikAlgebra::x_image(int g, const Monomial& a) const {
  return memo(cache_->mu, cache_->x_image, std::make_pair(g, a), [&] {
    return exact::linear_substitution(MultiPoly::monomial(a, ParamScalar(1L)), x_rows_[static_cast<std::size_t>(g)]);
  });
}

const MultiPoly& CherednikAlgebra::y_image(int g, const Monomial& b) const {
  return memo(cache_->mu, cache_->y_image, std::make_pair(g, b), [&] {
    return exact::linear_substitution(MultiPoly::monomial(b, ParamScalar(1L)), y_rows_[static_cast<std::size_t>(g)]);
  });
}

// [y_i, x^a] = t d_i x^a - sum_s w_{s,i} ((x^a - s.x^a) / alpha_s) s
const PBWElement& CherednikAlgebra::bracket(std::size_t i, const Monomial& a) const {
  return memo(cache_->mu, cache_->bracket, std::make_pair(i, a), [&] {
    PBWElement out;
    const MultiPoly xa = MultiPoly::monomial(a, ParamScalar(1L));
    const MultiPoly dxa = exact::derivative(xa, i);
    for (const auto& [m, c] : dxa.terms()) out.add_term(PBWKey{m, 0, {}}, c * params_.t);
    const auto& refls = group_->reflections();
    for (std::size_t s = 0; s < refls.size(); ++s) {
      const ParamScalar& w = weights_[s][i];
      if (w.is_zero()) continue;
      const MultiPoly diff = xa - x_image(refls[s].element, a);
      if (diff.is_zero()) continue;
      const MultiPoly q = exact::poly_divide_exact(diff, roots_[s]);
      for (const auto& [m, c] : q.terms()) {
        out.add_term(PBWKey{m, refls[s].element, {}}, -(c * w));
      }
    }
    return out;
  });
}

PBWElement CherednikAlgebra::left_y(std::size_t i, const PBWElement& r) const {
  PBWElement out;
  for (const auto& [key, coeff] : r.terms()) {
    // x^a y_i k y^d = x^a k (k^{-1}.y_i) y^d
    const auto& row = y_rows_[static_cast<std::size_t>(group_->inverse(key.g))][i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      Monomial y = exact::mono_mul(key.y, exact::unit_monomial(j));
      out.add_term(PBWKey{key.x, key.g, std::move(y)}, coeff * ParamScalar(row[j]));
    }
    if (key.x.empty()) continue;
    for (const auto& [bk, bc] : bracket(i, key.x).terms()) {
      out.add_term(PBWKey{bk.x, group_->multiply(bk.g, key.g), key.y}, coeff * bc);
    }
  }
  return out;
}

const PBWElement& CherednikAlgebra::y_times_x(const Monomial& b, const Monomial& c) const {
  return memo(cache_->mu, cache_->y_times_x, std::make_pair(b, c), [&] {
    if (b.empty() || c.empty()) return PBWElement::word(PBWKey{c, 0, b});
    std::size_t i = 0;
    while (b[i] == 0) ++i;
    Monomial rest = b;
    --rest[i];
    exact::trim(rest);
    return left_y(i, y_times_x(rest, c));
  });
}

PBWElement CherednikAlgebra::multiply(const PBWElement& a, const PBWElement& b) const {
  PBWElement out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const ParamScalar cab = ca * cb;
      const int h_inv = group_->inverse(kb.g);
      // x^a g (y^b x^c) h y^d with y^b x^c = sum x^c' k y^b'
      for (const auto& [km, cm] : y_times_x(ka.y, kb.x).terms()) {
        const ParamScalar coeff = cab * cm;
        const int g = group_->multiply(group_->multiply(ka.g, km.g), kb.g);
        const MultiPoly& px = x_image(ka.g, km.x);
        const MultiPoly& py = y_image(h_inv, km.y);
        for (const auto& [mx, cx] : px.terms()) {
          const ParamScalar cxx = coeff * cx;
          Monomial x = exact::mono_mul(ka.x, mx);
          for (const auto& [my, cy] : py.terms()) {
            out.add_term(PBWKey{x, g, exact::mono_mul(my, kb.y)}, cxx * cy);
          }
        }
      }
    }
  }
  return out;
}

PBWElement CherednikAlgebra::commutator(const PBWElement& a, const PBWElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

PBWElement CherednikAlgebra::power(const PBWElement& a, int e) const {
  PBWElement out(ParamScalar(1L));
  for (int k = 0; k < e; ++k) out = multiply(out, a);
  return out;
}

PBWElement CherednikAlgebra::letter(const Letter& l) const {
  switch (l.kind) {
    case Letter::Kind::x:
      return PBWElement::x(static_cast<std::size_t>(l.index));
    case Letter::Kind::y:
      return PBWElement::y(static_cast<std::size_t>(l.index));
    case Letter::Kind::g:
      return PBWElement::group(l.index);
  }
  return {};
}

PBWElement CherednikAlgebra::from_word(const Word& w) const {
  PBWElement out(ParamScalar(1L));
  for (const Letter& l : w) out = multiply(out, letter(l));
  return out;
}

MultiPoly CherednikAlgebra::act(const Letter& l, const MultiPoly& p) const {
  switch (l.kind) {
    case Letter::Kind::x:
      return MultiPoly::variable(static_cast<std::size_t>(l.index)) * p;
    case Letter::Kind::y:
      return dunkl_.at(static_cast<std::size_t>(l.index)).apply(p);
    case Letter::Kind::g:
      return dunkl::group_act(*group_, l.index, p);
  }
  return {};
}

MultiPoly CherednikAlgebra::act(const Word& w, const MultiPoly& p) const {
  MultiPoly out = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = act(*it, out);
  return out;
}

MultiPoly CherednikAlgebra::act(const PBWElement& a, const MultiPoly& p) const {
  MultiPoly out;
  std::map<Monomial, MultiPoly> dy;
  for (const auto& [key, coeff] : a.terms()) {
    auto it = dy.find(key.y);
    if (it == dy.end()) {
      MultiPoly q = p;
      for (std::size_t i = 0; i < key.y.size(); ++i) {
        for (int k = 0; k < key.y[i]; ++k) q = dunkl_[i].apply(q);
      }
      it = dy.emplace(key.y, std::move(q)).first;
    }
    out += dunkl::group_act(*group_, key.g, it->second).shifted(key.x).scaled(coeff);
  }
  return out;
}

PBWElement CherednikAlgebra::symmetrizer() const {
  PBWElement e;
  const ParamScalar w = ParamScalar(exact::Rational(1, static_cast<unsigned long>(group_->order())));
  for (int g = 0; g < static_cast<int>(group_->order()); ++g) e.add_term(PBWKey{{}, g, {}}, w);
  return e;
}

PBWElement CherednikAlgebra::euler_element() const {
  const std::size_t l = group_->rank();
  PBWElement h;
  for (std::size_t i = 0; i < l; ++i) h.add_term(PBWKey{exact::unit_monomial(i), 0, exact::unit_monomial(i)}, ParamScalar(1L));
  h.add_term(PBWKey{}, params_.t * ParamScalar(exact::Rational(static_cast<long>(l), 2L)));
  for (const auto& s : group_->reflections()) {
    const ParamScalar k =
        params_.c[static_cast<std::size_t>(s.class_label)] * ParamScalar(Cyclotomic(2) / (Cyclotomic(1) - s.lambda));
    h.add_term(PBWKey{{}, s.element, {}}, -k);
  }
  return h;
}

std::vector<PBWKey> CherednikAlgebra::basis_up_to(int d) const {
  const std::size_t l = group_->rank();
  std::vector<PBWKey> out;
  for (const Monomial& a : exact::monomials_up_to(l, d)) {
    for (const Monomial& b : exact::monomials_up_to(l, d - exact::mono_degree(a))) {
      for (int g = 0; g < static_cast<int>(group_->order()); ++g) out.push_back(PBWKey{a, g, b});
    }
  }
  return out;
}

std::vector<PBWElement> CherednikAlgebra::generators() const {
  std::vector<PBWElement> out;
  for (std::size_t i = 0; i < group_->rank(); ++i) out.push_back(PBWElement::x(i));
  for (std::size_t i = 0; i < group_->rank(); ++i) out.push_back(PBWElement::y(i));
  for (int g = 1; g < static_cast<int>(group_->order()); ++g) out.push_back(PBWElement::group(g));
  return out;
}

// Checks --------------------------------------------------------------------

namespace {

std::string word_string(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += '*';
    switch (l.kind) {
      case Letter::Kind::x:
        out += "x" + std::to_string(l.index + 1);
        break;
      case Letter::Kind::y:
        out += "y" + std::to_string(l.index + 1);
        break;
      case Letter::Kind::g:
        out += "g" + std::to_string(l.index);
        break;
    }
  }
  return out.empty() ? "1" : out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void words_up_to(std::size_t letters, int length, Word& prefix, std::vector<Word>& out, std::size_t rank) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == length) return;
  for (std::size_t k = 0; k < letters; ++k) {
    const bool is_x = k < rank;
    prefix.push_back(Letter{is_x ? Letter::Kind::x : Letter::Kind::y, static_cast<int>(is_x ? k : k - rank)});
    words_up_to(letters, length, prefix, out, rank);
    prefix.pop_back();
  }
}

}  // namespace

CheckResult dunkl_consistency(const CherednikAlgebra& alg, const Word& w, const MultiPoly& p) {
  const PBWElement nf = alg.from_word(w);
  const MultiPoly lhs = alg.act(nf, p);
  const MultiPoly rhs = alg.act(w, p);
  if (lhs == rhs) return {};
  return CheckResult::fail({{"word", word_string(w)},
                            {"normal_form", to_string(nf)},
                            {"polynomial", exact::to_string(p)},
                            {"normal_form_action", exact::to_string(lhs)},
                            {"word_action", exact::to_string(rhs)}});
}

CheckResult homomorphism_check(const CherednikAlgebra& alg, const Word& a, const Word& b, const MultiPoly& p) {
  const PBWElement ab = alg.multiply(alg.from_word(a), alg.from_word(b));
  const MultiPoly lhs = alg.act(ab, p);
  const MultiPoly rhs = alg.act(a, alg.act(b, p));
  if (lhs == rhs) return {};
  return CheckResult::fail({{"a", word_string(a)},
                            {"b", word_string(b)},
                            {"polynomial", exact::to_string(p)},
                            {"product_action", exact::to_string(lhs)},
                            {"composed_action", exact::to_string(rhs)}});
}

PBWDimension pbw_dimension(const CherednikAlgebra& alg, int d) {
  const ReflectionGroup& g = alg.group();
  const std::size_t l = g.rank();
  PBWDimension out;
  out.expected = g.order() * binomial(2 * l + static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  std::vector<Word> words;
  Word prefix;
  words_up_to(2 * l, d, prefix, words, l);
  exact::SpanBuilder<PBWKey, ParamScalar> span;
  for (const Word& w : words) {
    const PBWElement nf = alg.from_word(w);
    for (int h = 0; h < static_cast<int>(g.order()); ++h) {
      const PBWElement v = alg.multiply(PBWElement::group(h), nf);
      ++out.words;
      if (v.total_degree() > d) out.degree_bound_ok = false;
      if (span.rank() < out.expected) span.insert(std::map<PBWKey, ParamScalar>(v.terms().begin(), v.terms().end()));
    }
  }
  out.rank = span.rank();
  return out;
}

CheckResult pbw_dimension_check(const CherednikAlgebra& alg, int d) {
  const PBWDimension dim = pbw_dimension(alg, d);
  CheckResult r;
  r.witness = {{"group", alg.group().name()},
               {"degree", d},
               {"rank", dim.rank},
               {"expected", dim.expected},
               {"words", dim.words},
               {"degree_bound_ok", dim.degree_bound_ok}};
  if (dim.rank != dim.expected || !dim.degree_bound_ok) r.status = Status::fail;
  return r;
}

CheckResult euler_check(const CherednikAlgebra& alg) {
  const PBWElement h = alg.euler_element();
  const ParamScalar& t = alg.params().t;
  const std::size_t l = alg.group().rank();
  for (std::size_t i = 0; i < l; ++i) {
    const PBWElement x = PBWElement::x(i);
    const PBWElement y = PBWElement::y(i);
    const PBWElement hx = alg.commutator(h, x);
    if (hx != x.scaled(t)) return CheckResult::fail({{"generator", "x" + std::to_string(i + 1)}, {"bracket", to_string(hx)}});
    const PBWElement hy = alg.commutator(h, y);
    if (hy != y.scaled(-t)) return CheckResult::fail({{"generator", "y" + std::to_string(i + 1)}, {"bracket", to_string(hy)}});
  }
  for (int g = 1; g < static_cast<int>(alg.group().order()); ++g) {
    const PBWElement hg = alg.commutator(h, PBWElement::group(g));
    if (!hg.is_zero()) return CheckResult::fail({{"generator", "g" + std::to_string(g)}, {"bracket", to_string(hg)}});
  }
  return {Status::pass, {{"group", alg.group().name()}, {"euler", to_string(h)}}};
}

std::vector<PBWElement> center_basis_t0(const CherednikAlgebra& alg, int d) {
  const std::vector<PBWKey> basis = alg.basis_up_to(d);
  const std::vector<PBWElement> gens = alg.generators();
  std::map<std::pair<std::size_t, PBWKey>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, ParamScalar>>> columns(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const PBWElement b = PBWElement::word(basis[k]);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const PBWElement bracket = alg.commutator(b, gens[a]);
      for (const auto& [key, c] : bracket.terms()) {
        const auto slot = row_of.try_emplace(std::make_pair(a, key), row_of.size()).first->second;
        columns[k].emplace_back(slot, c);
      }
    }
  }
  exact::Matrix<ParamScalar> m(row_of.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (const auto& [r, c] : columns[k]) m(r, k) = c;
  }
  std::vector<PBWElement> out;
  for (const auto& v : exact::nullspace(m)) {
    PBWElement z;
    for (std::size_t k = 0; k < basis.size(); ++k) z.add_term(basis[k], v[k]);
    out.push_back(std::move(z));
  }
  return out;
}

CheckResult satake_check_t0(std::shared_ptr<const ReflectionGroup> group, int d) {
  Parameters params = Parameters::formal(*group);
  params.t = ParamScalar();
  const CherednikAlgebra alg(group, params);
  using Span = exact::SpanBuilder<PBWKey, ParamScalar>;
  auto as_map = [](const PBWElement& a) { return Span::Vector(a.terms().begin(), a.terms().end()); };

  const PBWElement e = alg.symmetrizer();
  const bool idempotent = alg.multiply(e, e) == e;
  const bool unit_ok = alg.multiply(PBWElement(ParamScalar(1L)), e) == e;

  const std::vector<PBWElement> center = center_basis_t0(alg, d);
  Span image;
  for (const auto& z : center) image.insert(as_map(alg.multiply(z, e)));
  const bool injective = image.rank() == center.size();

  Span target;
  std::vector<PBWElement> target_basis;
  for (const PBWKey& key : alg.basis_up_to(d)) {
    const PBWElement v = alg.multiply(alg.multiply(e, PBWElement::word(key)), e);
    if (target.insert(as_map(v))) target_basis.push_back(v);
  }
  bool contained = true;
  for (const auto& z : center) contained = contained && target.contains(as_map(alg.multiply(z, e)));
  const bool onto = contained && image.rank() == target.rank();

  bool commutative = true;
  for (std::size_t i = 0; i < target_basis.size() && commutative; ++i) {
    for (std::size_t j = i + 1; j < target_basis.size() && commutative; ++j) {
      commutative = alg.commutator(target_basis[i], target_basis[j]).is_zero();
    }
  }
  CheckResult r;
  r.witness = {{"group", group->name()},        {"degree", d},
               {"center_dim", center.size()},   {"image_rank", image.rank()},
               {"target_rank", target.rank()},  {"injective", injective},
               {"onto", onto},                  {"idempotent", idempotent},
               {"unit_maps_to_e", unit_ok},     {"spherical_commutative", commutative}};
  if (!(idempotent && unit_ok && injective && onto && commutative)) r.status = Status::fail;
  return r;
}

Word random_word(const ReflectionGroup& group, int max_length, std::mt19937& rng) {
  const int l = static_cast<int>(group.rank());
  const int n = static_cast<int>(group.order());
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> kind(0, 2);
  Word w(static_cast<std::size_t>(length(rng)));
  for (Letter& letter : w) {
    const int k = n > 1 ? kind(rng) : std::uniform_int_distribution<int>(0, 1)(rng);
    if (k == 2) {
      letter = Letter{Letter::Kind::g, std::uniform_int_distribution<int>(1, n - 1)(rng)};
    } else {
      letter = Letter{k == 0 ? Letter::Kind::x : Letter::Kind::y, std::uniform_int_distribution<int>(0, l - 1)(rng)};
    }
  }
  return w;
}

}  // namespace cherednik::pbw
