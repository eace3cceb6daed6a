// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/tower.hpp"

#include <algorithm>
#include <atomic>

#include "field_poly.hpp"
#include "kronecker/factor.hpp"
#include "kronecker/parse.hpp"
#include "tower_internal.hpp"

namespace kronecker {

std::uint64_t next_level_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

// ---------------------------------------------------------------------------
// flat arithmetic

bool coords_zero(const Coords& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Coords tower_add(const Coords& a, const Coords& b) {
  Coords r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Coords tower_sub(const Coords& a, const Coords& b) {
  Coords r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

namespace {

Coords block(const Coords& a, int i, int s) {
  return Coords(a.begin() + static_cast<std::ptrdiff_t>(i) * s,
                a.begin() + static_cast<std::ptrdiff_t>(i + 1) * s);
}

Coords concat(const std::vector<Coords>& blocks, int count, int s) {
  Coords r;
  r.reserve(static_cast<std::size_t>(count * s));
  for (int i = 0; i < count; ++i) {
    if (i < static_cast<int>(blocks.size()) && !blocks[static_cast<std::size_t>(i)].empty()) {
      r.insert(r.end(), blocks[static_cast<std::size_t>(i)].begin(), blocks[static_cast<std::size_t>(i)].end());
    } else {
      r.insert(r.end(), static_cast<std::size_t>(s), Rational(0));
    }
  }
  return r;
}

Coords scale_coords(const Coords& a, const Rational& c) {
  Coords r(a);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace

Coords tower_mul(const Levels& L, int k, const Coords& a, const Coords& b) {
  if (k == 0) return {a[0] * b[0]};
  const Level& lv = *L[static_cast<std::size_t>(k - 1)];
  const int d = lv.degree, s = lv.base_total;
  if (k == 1) {
    Coords prod(static_cast<std::size_t>(2 * d - 1));
    for (int i = 0; i < d; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b[static_cast<std::size_t>(j)] == 0) continue;
        prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      }
    }
    for (int t = 2 * d - 2; t >= d; --t) {
      const Rational c = prod[static_cast<std::size_t>(t)];
      if (c == 0) continue;
      for (int i = 0; i < d; ++i) {
        const Rational& m = lv.minpoly[static_cast<std::size_t>(i)][0];
        if (m != 0) prod[static_cast<std::size_t>(t - d + i)] -= c * m;
      }
    }
    prod.resize(static_cast<std::size_t>(d));
    return prod;
  }
  std::vector<Coords> A(static_cast<std::size_t>(d)), B(static_cast<std::size_t>(d));
  std::vector<bool> za(static_cast<std::size_t>(d)), zb(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    A[static_cast<std::size_t>(i)] = block(a, i, s);
    B[static_cast<std::size_t>(i)] = block(b, i, s);
    za[static_cast<std::size_t>(i)] = coords_zero(A[static_cast<std::size_t>(i)]);
    zb[static_cast<std::size_t>(i)] = coords_zero(B[static_cast<std::size_t>(i)]);
  }
  std::vector<Coords> P(static_cast<std::size_t>(2 * d - 1), Coords(static_cast<std::size_t>(s)));
  for (int i = 0; i < d; ++i) {
    if (za[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < d; ++j) {
      if (zb[static_cast<std::size_t>(j)]) continue;
      auto& slot = P[static_cast<std::size_t>(i + j)];
      slot = tower_add(slot, tower_mul(L, k - 1, A[static_cast<std::size_t>(i)], B[static_cast<std::size_t>(j)]));
    }
  }
  for (int t = 2 * d - 2; t >= d; --t) {
    const Coords c = P[static_cast<std::size_t>(t)];
    if (coords_zero(c)) continue;
    for (int i = 0; i < d; ++i) {
      const Coords& m = lv.minpoly[static_cast<std::size_t>(i)];
      if (coords_zero(m)) continue;
      auto& slot = P[static_cast<std::size_t>(t - d + i)];
      slot = tower_sub(slot, tower_mul(L, k - 1, c, m));
    }
  }
  return concat(P, d, s);
}

namespace {

struct TowerOps {
  using Elem = Coords;
  const Levels* L;
  int k;
  int size;

  Elem zero() const { return Coords(static_cast<std::size_t>(size)); }
  Elem one() const {
    Coords c(static_cast<std::size_t>(size));
    c[0] = 1;
    return c;
  }
  Elem from_rational(const Rational& q) const {
    Coords c(static_cast<std::size_t>(size));
    c[0] = q;
    return c;
  }
  Elem add(const Elem& a, const Elem& b) const { return tower_add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return tower_sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return tower_mul(*L, k, a, b); }
  Elem neg(const Elem& a) const { return scale_coords(a, Rational(-1)); }
  Elem inv(const Elem& a) const { return tower_inverse(*L, k, a); }
  bool is_zero(const Elem& a) const { return coords_zero(a); }
};

}  // namespace

Coords tower_inverse(const Levels& L, int k, const Coords& a) {
  if (coords_zero(a)) throw PreconditionError("inverse of zero");
  if (k == 0) return {1 / a[0]};
  const Level& lv = *L[static_cast<std::size_t>(k - 1)];
  const int d = lv.degree, s = lv.base_total;
  FieldPolyRing<TowerOps> R(TowerOps{&L, k - 1, s});
  std::vector<Coords> A;
  for (int i = 0; i < d; ++i) A.push_back(block(a, i, s));
  R.trim(A);
  std::vector<Coords> M(lv.minpoly.begin(), lv.minpoly.end());
  auto [g, sa] = R.half_ext_gcd(A, M);
  if (R.degree(g) != 0) throw ConsistencyError("level minimal polynomial is not irreducible");
  return concat(sa, d, s);
}

// ---------------------------------------------------------------------------
// embeddings

ComplexBall embed_coords(const Levels& L, int k, const Coords& c, mpfr_prec_t prec) {
  if (k == 0) return ComplexBall::from_rational(c[0], prec);
  const Level& lv = *L[static_cast<std::size_t>(k - 1)];
  const int d = lv.degree, s = lv.base_total;
  const ComplexBall g = level_ball(L, k, prec);
  ComplexBall acc = embed_coords(L, k - 1, block(c, d - 1, s), prec);
  for (int i = d - 2; i >= 0; --i) acc = acc * g + embed_coords(L, k - 1, block(c, i, s), prec);
  return acc;
}

ComplexBall level_ball(const Levels& L, int k, mpfr_prec_t prec) {
  const Level& lv = *L[static_cast<std::size_t>(k - 1)];
  {
    std::lock_guard<std::mutex> lock(lv.cache->mu);
    auto it = lv.cache->balls.find(prec);
    if (it != lv.cache->balls.end()) return it->second;
  }
  const mpfr_prec_t cap = 16 * std::max(prec, lv.ball.precision());
  for (mpfr_prec_t P = prec; P <= cap; P *= 2) {
    std::vector<ComplexBall> cs;
    for (const auto& c : lv.minpoly) cs.push_back(embed_coords(L, k - 1, c, P));
    std::vector<ComplexBall> roots;
    try {
      roots = isolate_roots(cs, P);
    } catch (const PrecisionError&) {
      continue;
    }
    std::vector<std::size_t> inside, touching;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (lv.ball.contains(roots[i])) inside.push_back(i);
      if (lv.ball.overlaps(roots[i])) touching.push_back(i);
    }
    std::optional<std::size_t> pick;
    if (inside.size() == 1) pick = inside[0];
    else if (touching.size() == 1) pick = touching[0];
    if (!pick) continue;
    std::lock_guard<std::mutex> lock(lv.cache->mu);
    return lv.cache->balls.emplace(prec, roots[*pick]).first->second;
  }
  throw PrecisionError("could not refine the embedding of generator g" + std::to_string(k));
}

ComplexBall embed(const AlgebraicElement& x, mpfr_prec_t prec) {
  const auto& K = x.home();
  return embed_coords(K.levels(), K.height(), x.coords(), prec);
}

ComplexBall embed(const AlgebraicElement& x) { return embed(x, default_precision()); }

std::vector<ComplexBall> embed_poly(const KPoly& f, mpfr_prec_t prec) {
  std::vector<ComplexBall> r;
  for (const auto& c : f) r.push_back(embed(c, prec));
  return r;
}

// ---------------------------------------------------------------------------
// TowerField

TowerField::TowerField() : hints_(std::make_shared<HintTable>()) {}

TowerField TowerField::from_levels(Levels levels, std::shared_ptr<const HintTable> hints) {
  TowerField K;
  K.levels_ = std::move(levels);
  if (hints) K.hints_ = std::move(hints);
  return K;
}

int TowerField::degree() const { return levels_.empty() ? 1 : levels_.back()->total; }

int TowerField::level_degree(int k) const {
  if (k < 1 || k > height()) throw PreconditionError("no level " + std::to_string(k));
  return levels_[static_cast<std::size_t>(k - 1)]->degree;
}

int TowerField::degree_through(int k) const {
  if (k < 0 || k > height()) throw PreconditionError("no level " + std::to_string(k));
  return k == 0 ? 1 : levels_[static_cast<std::size_t>(k - 1)]->total;
}

std::vector<AlgebraicElement> TowerField::level_minpoly(int k) const {
  level_degree(k);
  TowerField base = prefix(k - 1);
  std::vector<AlgebraicElement> m;
  for (const auto& c : levels_[static_cast<std::size_t>(k - 1)]->minpoly) m.emplace_back(base, c);
  return m;
}

const ComplexBall& TowerField::root_ball(int k) const {
  level_degree(k);
  return levels_[static_cast<std::size_t>(k - 1)]->ball;
}

ComplexBall TowerField::root_ball_at(int k, mpfr_prec_t prec) const {
  level_degree(k);
  return level_ball(levels_, k, prec);
}

TowerField TowerField::prefix(int k) const {
  if (k < 0 || k > height()) throw PreconditionError("no level " + std::to_string(k));
  return from_levels(Levels(levels_.begin(), levels_.begin() + k), hints_);
}

TowerField TowerField::refined(mpfr_prec_t prec) const {
  Levels out;
  for (int k = 1; k <= height(); ++k) {
    auto lv = std::make_shared<Level>(*levels_[static_cast<std::size_t>(k - 1)]);
    lv->ball = level_ball(levels_, k, prec);
    out.push_back(std::move(lv));
  }
  return from_levels(std::move(out), hints_);
}

std::vector<std::uint64_t> TowerField::level_ids() const {
  std::vector<std::uint64_t> ids;
  for (const auto& l : levels_) ids.push_back(l->id);
  return ids;
}

bool TowerField::extends(const TowerField& other) const {
  if (other.height() > height()) return false;
  for (int i = 0; i < other.height(); ++i) {
    if (levels_[static_cast<std::size_t>(i)]->id != other.levels_[static_cast<std::size_t>(i)]->id) return false;
  }
  return true;
}

bool TowerField::same_as(const TowerField& other) const {
  return height() == other.height() && extends(other);
}

AlgebraicElement TowerField::zero() const { return AlgebraicElement(*this, Coords(static_cast<std::size_t>(degree()))); }

AlgebraicElement TowerField::one() const { return from_rational(1); }

AlgebraicElement TowerField::from_rational(const Rational& q) const {
  Coords c(static_cast<std::size_t>(degree()));
  c[0] = q;
  return AlgebraicElement(*this, std::move(c));
}

AlgebraicElement TowerField::generator(int k) const {
  const int d = level_degree(k);
  const TowerField level = prefix(k);
  Coords c(static_cast<std::size_t>(level.degree()));
  if (d == 1) {
    c = scale_coords(levels_[static_cast<std::size_t>(k - 1)]->minpoly[0], Rational(-1));
    c.resize(static_cast<std::size_t>(level.degree()));
  } else {
    c[static_cast<std::size_t>(degree_through(k - 1))] = 1;
  }
  return AlgebraicElement(level, std::move(c)).lift_to(*this);
}

TowerField TowerField::with_conjugation_hint(int k, const AlgebraicElement& image) const {
  level_degree(k);
  if (!extends(image.home())) throw PreconditionError("conjugation hint is not an element of this tower");
  auto table = std::make_shared<HintTable>(*hints_);
  table->by_level[levels_[static_cast<std::size_t>(k - 1)]->id] = {image.home().level_ids(), image.coords()};
  return from_levels(levels_, std::move(table));
}

std::optional<AlgebraicElement> TowerField::conjugation_hint(int k) const {
  level_degree(k);
  auto it = hints_->by_level.find(levels_[static_cast<std::size_t>(k - 1)]->id);
  if (it == hints_->by_level.end()) return std::nullopt;
  const auto& h = it->second;
  if (h.tower.size() > levels_.size()) return std::nullopt;
  for (std::size_t i = 0; i < h.tower.size(); ++i) {
    if (h.tower[i] != levels_[i]->id) return std::nullopt;
  }
  const auto home = prefix(static_cast<int>(h.tower.size()));
  return AlgebraicElement(home, h.coords).lift_to(*this);
}

int degree_over_Q(const TowerField& K) { return K.degree(); }

// ---------------------------------------------------------------------------
// AlgebraicElement

AlgebraicElement::AlgebraicElement() : coords_{Rational(0)} {}

AlgebraicElement::AlgebraicElement(TowerField home, Coords coords)
    : home_(std::move(home)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != home_.degree()) {
    throw PreconditionError("coordinate vector length does not match the field degree");
  }
}

bool AlgebraicElement::is_zero() const { return coords_zero(coords_); }

bool AlgebraicElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& x) { return x == 0; });
}

Rational AlgebraicElement::rational_value() const {
  if (!is_rational()) throw PreconditionError("element is not rational");
  return coords_[0];
}

AlgebraicElement AlgebraicElement::lift_to(const TowerField& bigger) const {
  if (!bigger.extends(home_)) throw PreconditionError("element does not lie in a subfield of the target tower");
  Coords c(coords_);
  c.resize(static_cast<std::size_t>(bigger.degree()));
  return AlgebraicElement(bigger, std::move(c));
}

std::vector<AlgebraicElement> AlgebraicElement::top_coefficients() const {
  const int h = home_.height();
  if (h == 0) return {*this};
  const TowerField base = home_.prefix(h - 1);
  const int s = base.degree(), d = home_.level_degree(h);
  std::vector<AlgebraicElement> out;
  for (int i = 0; i < d; ++i) out.emplace_back(base, block(coords_, i, s));
  return out;
}

namespace {

const TowerField& common_home(const AlgebraicElement& a, const AlgebraicElement& b) {
  if (a.home().extends(b.home())) return a.home();
  if (b.home().extends(a.home())) return b.home();
  throw PreconditionError("elements belong to unrelated towers");
}

}  // namespace

AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
  const TowerField& K = common_home(a, b);
  return AlgebraicElement(K, tower_add(a.lift_to(K).coords(), b.lift_to(K).coords()));
}

AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) {
  const TowerField& K = common_home(a, b);
  return AlgebraicElement(K, tower_sub(a.lift_to(K).coords(), b.lift_to(K).coords()));
}

AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
  const TowerField K = common_home(a, b);
  if (a.is_rational()) return AlgebraicElement(K, scale_coords(b.lift_to(K).coords(), a.coords()[0]));
  if (b.is_rational()) return AlgebraicElement(K, scale_coords(a.lift_to(K).coords(), b.coords()[0]));
  return AlgebraicElement(K, tower_mul(K.levels(), K.height(), a.lift_to(K).coords(), b.lift_to(K).coords()));
}

AlgebraicElement AlgebraicElement::operator-() const { return AlgebraicElement(home_, scale_coords(coords_, Rational(-1))); }

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
  const TowerField& K = common_home(a, b);
  return a.lift_to(K).coords() == b.lift_to(K).coords();
}

AlgebraicElement add(const AlgebraicElement& a, const AlgebraicElement& b) { return a + b; }
AlgebraicElement mul(const AlgebraicElement& a, const AlgebraicElement& b) { return a * b; }

AlgebraicElement inverse(const AlgebraicElement& a) {
  const auto& K = a.home();
  if (a.is_rational()) {
    if (a.coords()[0] == 0) throw PreconditionError("inverse of zero");
    return K.from_rational(1 / a.coords()[0]);
  }
  return AlgebraicElement(K, tower_inverse(K.levels(), K.height(), a.coords()));
}

AlgebraicElement pow(const AlgebraicElement& a, unsigned e) {
  AlgebraicElement acc = a.home().one(), base = a;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// polynomials over a tower

KPoly normalize_poly(const KPoly& f, const TowerField& K) {
  KPoly r;
  for (const auto& c : f) r.push_back(c.lift_to(K));
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

KPoly kpoly_from_rational(const Polynomial& f, const TowerField& K) {
  KPoly r;
  for (const auto& c : f.coefficients()) r.push_back(K.from_rational(c));
  return r;
}

int kpoly_degree(const KPoly& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

AlgebraicElement kpoly_evaluate(const KPoly& f, const AlgebraicElement& x) {
  AlgebraicElement acc = x.home().zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

KPoly FieldFactorization::product() const {
  const TowerField& K = unit.home();
  KPoly acc{unit};
  for (const auto& [g, m] : factors) {
    for (int t = 0; t < m; ++t) {
      KPoly next(acc.size() + g.size() - 1, K.zero());
      for (std::size_t i = 0; i < acc.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) next[i + j] = next[i + j] + acc[i] * g[j];
      }
      acc = std::move(next);
    }
  }
  return normalize_poly(acc, K);
}

bool kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    const auto& x = a[i].coords();
    const auto& y = b[i].coords();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

// ---------------------------------------------------------------------------
// extensions

ComplexBall select_root(const KPoly& f, const ComplexBall& selector) {
  if (kpoly_degree(f) < 1) throw PreconditionError("cannot select a root of a constant polynomial");
  const mpfr_prec_t P0 = default_precision();
  for (mpfr_prec_t P = P0; P <= 16 * P0; P *= 2) {
    std::vector<ComplexBall> roots;
    try {
      roots = isolate_roots(embed_poly(f, P), P);
    } catch (const PrecisionError&) {
      continue;
    }
    std::size_t inside = 0, touching = 0, pick = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (selector.contains(roots[i])) {
        ++inside;
        pick = i;
      }
      if (selector.overlaps(roots[i])) ++touching;
    }
    if (touching == 0) throw PreconditionError("root selector contains no root of the polynomial");
    if (inside >= 2) {
      throw PreconditionError("root selector is ambiguous: it contains " + std::to_string(inside) +
                              " roots; give a smaller ball");
    }
    if (inside == 1 && touching == 1) return roots[pick];
  }
  throw PrecisionError("root selector does not isolate a single root within the precision cap; "
                       "give a smaller ball or raise KRONECKER_PRECISION_BITS");
}

TowerField make_extension_unchecked(const TowerField& base, const KPoly& m_in, const ComplexBall& selector) {
  KPoly m = normalize_poly(m_in, base);
  if (kpoly_degree(m) < 1) throw PreconditionError("minimal polynomial must have positive degree");
  const AlgebraicElement lc_inv = inverse(m.back());
  for (auto& c : m) c = c * lc_inv;
  ComplexBall ball = select_root(m, selector);
  auto lv = std::make_shared<Level>();
  lv->id = next_level_id();
  lv->degree = kpoly_degree(m);
  lv->base_total = base.degree();
  lv->total = lv->degree * lv->base_total;
  for (const auto& c : m) lv->minpoly.push_back(c.coords());
  lv->ball = std::move(ball);
  lv->cache = std::make_shared<BallCache>();
  Levels levels = base.levels();
  levels.push_back(std::move(lv));
  // Hints keyed by level id stay valid in the taller tower.
  TowerField K = TowerField::from_levels(std::move(levels), nullptr);
  for (int k = 1; k <= base.height(); ++k) {
    if (auto h = base.conjugation_hint(k)) K = K.with_conjugation_hint(k, *h);
  }
  return K;
}

TowerField make_extension(const TowerField& base, const KPoly& m_in, const ComplexBall& selector) {
  KPoly m = normalize_poly(m_in, base);
  if (kpoly_degree(m) < 1) throw PreconditionError("minimal polynomial must have positive degree");
  FieldFactorization fa = factor_over_field(m, base);
  if (fa.factors.size() != 1 || fa.factors[0].second != 1) {
    const KPoly& g = fa.factors[0].first;
    throw ReducibleError("minimal polynomial " + format_field_polynomial(m) +
                             " is reducible over the base field; factor: " + format_field_polynomial(g),
                         g);
  }
  return make_extension_unchecked(base, m, selector);
}

TowerField make_extension(const TowerField& base, const Polynomial& m, const ComplexBall& selector) {
  return make_extension(base, kpoly_from_rational(m, base), selector);
}

// ---------------------------------------------------------------------------
// minimal polynomials and primitive elements

namespace {

// Powers 1, x, x^2, ... until the first linear dependence over Q; returns
// the monic relation. `powers` receives the independent powers.
Polynomial power_relation(const AlgebraicElement& x, std::vector<Coords>* powers) {
  const TowerField& K = x.home();
  const int D = K.degree();
  std::vector<Coords> rows, combos;
  std::vector<int> pivots;
  AlgebraicElement cur = K.one();
  for (int n = 0; n <= D; ++n) {
    Coords v = cur.coords();
    Coords t(static_cast<std::size_t>(n + 1));
    t[static_cast<std::size_t>(n)] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational f = v[static_cast<std::size_t>(pivots[i])];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (rows[i][j] != 0) v[j] -= f * rows[i][j];
      }
      for (std::size_t j = 0; j < combos[i].size(); ++j) {
        if (combos[i][j] != 0) t[j] -= f * combos[i][j];
      }
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (nz == v.end()) return Polynomial(t);
    const int p = static_cast<int>(nz - v.begin());
    const Rational inv = 1 / *nz;
    for (auto& q : v) q *= inv;
    for (auto& q : t) q *= inv;
    rows.push_back(std::move(v));
    combos.push_back(std::move(t));
    pivots.push_back(p);
    if (powers) powers->push_back(cur.coords());
    cur = cur * x;
  }
  throw ConsistencyError("no linear relation among powers within the field degree");
}

// Inverse of a square rational matrix given by columns.
std::vector<Coords> invert_columns(const std::vector<Coords>& cols) {
  const std::size_t n = cols.size();
  // a = [C | I] with C[i][j] = cols[j][i]
  std::vector<Coords> a(n, Coords(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ConsistencyError("change of basis matrix is singular");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& q : a[c]) q *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j < 2 * n; ++j) {
        if (a[c][j] != 0) a[r][j] -= f * a[c][j];
      }
    }
  }
  std::vector<Coords> out(n, Coords(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  }
  return out;
}

struct FlatCache {
  std::mutex mu;
  std::map<std::vector<std::uint64_t>, std::shared_ptr<const Flattening>> map;
};

FlatCache& flat_cache() {
  static FlatCache c;
  return c;
}

}  // namespace

Polynomial minimal_polynomial(const AlgebraicElement& x) {
  if (x.is_rational()) return Polynomial({-x.coords()[0], Rational(1)});
  return power_relation(x, nullptr);
}

std::shared_ptr<const Flattening> flattening(const TowerField& K) {
  if (K.height() == 0) throw PreconditionError("primitive element of Q requested");
  const auto ids = K.level_ids();
  {
    std::lock_guard<std::mutex> lock(flat_cache().mu);
    auto it = flat_cache().map.find(ids);
    if (it != flat_cache().map.end()) return it->second;
  }
  const int D = K.degree();
  auto F = std::make_shared<Flattening>();
  F->ids = ids;
  bool found = false;
  for (int c = 1; c <= 50 && !found; ++c) {
    AlgebraicElement gamma = K.generator(1);
    std::vector<int> mults;
    for (int k = 2; k <= K.height(); ++k) {
      gamma = K.generator(k) + K.from_rational(c) * gamma;
      mults.push_back(c);
    }
    Polynomial mp = minimal_polynomial(gamma);
    if (mp.degree() == D) {
      F->gamma = gamma.coords();
      F->gamma_minpoly = mp;
      F->multipliers = mults;
      found = true;
    }
    if (K.height() == 1) break;
  }
  if (!found) throw Error("no primitive element found with multipliers up to 50");
  Integer L = 1;
  for (const auto& q : F->gamma_minpoly.coefficients()) L = lcm(L, q.get_den());
  F->scale = L;
  for (int j = 0; j <= D; ++j) {
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(D - j));
    Rational v = F->gamma_minpoly.coeff(static_cast<std::size_t>(j)) * Rational(s);
    F->theta_minpoly.push_back(v.get_num());
  }
  const AlgebraicElement theta = AlgebraicElement(K, F->gamma) * K.from_rational(Rational(L));
  AlgebraicElement cur = K.one();
  for (int i = 0; i < D; ++i) {
    F->basis.push_back(cur.coords());
    cur = cur * theta;
  }
  F->inverse = invert_columns(F->basis);
  std::lock_guard<std::mutex> lock(flat_cache().mu);
  return flat_cache().map.emplace(ids, F).first->second;
}

Coords to_theta(const Flattening& F, const Coords& x) {
  const std::size_t n = x.size();
  Coords u(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] != 0 && F.inverse[i][j] != 0) s += F.inverse[i][j] * x[j];
    }
    u[i] = s;
  }
  return u;
}

Coords from_theta(const Flattening& F, const Coords& u) {
  const std::size_t n = F.basis.size();
  Coords x(n);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (F.basis[i][j] != 0) x[j] += u[i] * F.basis[i][j];
    }
  }
  return x;
}

PrimitiveElement primitive_element(const TowerField& K) {
  PrimitiveElement pe;
  pe.flat = flattening(K);
  pe.gamma = AlgebraicElement(K, pe.flat->gamma);
  pe.minpoly = pe.flat->gamma_minpoly;
  pe.multipliers = pe.flat->multipliers;
  return pe;
}

Coords PrimitiveElement::to_power_basis(const AlgebraicElement& x) const {
  Coords u = to_theta(*flat, x.lift_to(gamma.home()).coords());
  Rational s = 1;
  for (auto& c : u) {
    c *= s;
    s *= Rational(flat->scale);
  }
  return u;
}

AlgebraicElement PrimitiveElement::from_power_basis(const Coords& c) const {
  Coords u(c);
  Rational s = 1;
  for (auto& q : u) {
    q /= s;
    s *= Rational(flat->scale);
  }
  u.resize(flat->basis.size());
  return AlgebraicElement(gamma.home(), from_theta(*flat, u));
}

// ---------------------------------------------------------------------------
// text forms

namespace {

bool generator_name(std::string_view name, int height, int* index) {
  if (name.size() < 2 || name[0] != 'g') return false;
  int v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return false;
    if (v > 1000000) return false;
    v = v * 10 + (name[i] - '0');
  }
  if (name[1] == '0' || v < 1 || v > height) return false;
  if (index) *index = v;
  return true;
}

struct PolyValue {
  TowerField K;
  KPoly c;

  friend PolyValue operator+(const PolyValue& a, const PolyValue& b) {
    PolyValue r{a.K, KPoly(std::max(a.c.size(), b.c.size()), a.K.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
  }
  PolyValue operator-() const {
    PolyValue r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend PolyValue operator-(const PolyValue& a, const PolyValue& b) { return a + (-b); }
  friend PolyValue operator*(const PolyValue& a, const PolyValue& b) {
    if (a.c.empty() || b.c.empty()) return {a.K, {}};
    PolyValue r{a.K, KPoly(a.c.size() + b.c.size() - 1, a.K.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
  }
};

constexpr std::size_t kMaxFieldPolyDegree = 4096;

}  // namespace

AlgebraicElement parse_element(std::string_view text, const TowerField& K) {
  const int h = K.height();
  Expr e = parse_expression(text, [h](std::string_view n) { return generator_name(n, h, nullptr); });
  return evaluate_expression<AlgebraicElement>(
      e, [&K](const Rational& q) { return K.from_rational(q); },
      [&K, h](const std::string& name, std::size_t offset) {
        int k = 0;
        if (!generator_name(name, h, &k)) {
          throw ParseError({offset, "unknown variable '" + name + "'", "g1..g" + std::to_string(h)});
        }
        return K.generator(k);
      });
}

AlgebraicElement parse_element(std::string_view text, const TowerField& K,
                               const std::vector<AlgebraicElement>& bindings) {
  const int n = static_cast<int>(bindings.size());
  Expr e = parse_expression(text, [n](std::string_view v) { return generator_name(v, n, nullptr); });
  return evaluate_expression<AlgebraicElement>(
      e, [&K](const Rational& q) { return K.from_rational(q); },
      [&](const std::string& name, std::size_t offset) {
        int k = 0;
        if (!generator_name(name, n, &k)) {
          throw ParseError({offset, "unknown variable '" + name + "'", n ? "g1..g" + std::to_string(n) : "a number"});
        }
        return bindings[static_cast<std::size_t>(k - 1)].lift_to(K);
      });
}

KPoly parse_field_polynomial(std::string_view text, const TowerField& K) {
  const int h = K.height();
  Expr e = parse_expression(text, [h](std::string_view n) { return generator_name(n, h, nullptr); });
  // Guard against huge powers of X before expanding.
  std::function<std::size_t(const Expr&)> bound = [&](const Expr& x) -> std::size_t {
    switch (x.kind) {
      case Expr::Kind::Number: return 0;
      case Expr::Kind::Variable: return (x.name == "X" || x.name == "x") ? 1 : 0;
      case Expr::Kind::Neg: return bound(x.args[0]);
      case Expr::Kind::Add:
      case Expr::Kind::Sub: return std::max(bound(x.args[0]), bound(x.args[1]));
      case Expr::Kind::Mul: return std::min(kMaxFieldPolyDegree + 1, bound(x.args[0]) + bound(x.args[1]));
      case Expr::Kind::Pow: return std::min<std::size_t>(kMaxFieldPolyDegree + 1, bound(x.args[0]) * x.exponent);
    }
    return 0;
  };
  if (bound(e) > kMaxFieldPolyDegree) throw ParseError({0, "degree too large", ""});
  PolyValue v = evaluate_expression<PolyValue>(
      e, [&K](const Rational& q) { return PolyValue{K, {K.from_rational(q)}}; },
      [&K, h](const std::string& name, std::size_t offset) {
        if (name == "X" || name == "x") return PolyValue{K, {K.zero(), K.one()}};
        int k = 0;
        if (!generator_name(name, h, &k)) {
          throw ParseError({offset, "unknown variable '" + name + "'", "X, g1..g" + std::to_string(h)});
        }
        return PolyValue{K, {K.generator(k)}};
      });
  return normalize_poly(v.c, K);
}

namespace {

struct Term {
  Rational coef;
  std::string mono;
};

std::vector<Term> element_terms(const AlgebraicElement& x, const std::vector<std::string>* names = nullptr) {
  const TowerField& K = x.home();
  const int h = K.height();
  std::vector<Term> terms;
  const auto& c = x.coords();
  for (std::size_t t = c.size(); t-- > 0;) {
    if (c[t] == 0) continue;
    std::string mono;
    for (int k = h; k >= 1; --k) {
      const int e = static_cast<int>((t / static_cast<std::size_t>(K.degree_through(k - 1))) %
                                     static_cast<std::size_t>(K.level_degree(k)));
      if (e == 0) continue;
      std::string f = (names ? (*names)[static_cast<std::size_t>(k - 1)] : "g" + std::to_string(k)) +
                      (e > 1 ? "^" + std::to_string(e) : "");
      mono = mono.empty() ? f : f + "*" + mono;
    }
    terms.push_back({c[t], mono});
  }
  return terms;
}

void append_term(std::string& out, const Rational& coef, const std::string& mono, bool first) {
  const bool neg = coef < 0;
  Rational a = neg ? Rational(-coef) : coef;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += to_string(a);
  } else if (a == 1) {
    out += mono;
  } else {
    out += to_string(a) + "*" + mono;
  }
}

}  // namespace

std::string format_element(const AlgebraicElement& x) {
  auto terms = element_terms(x);
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) append_term(out, terms[i].coef, terms[i].mono, i == 0);
  return out;
}

std::string format_element(const AlgebraicElement& x, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) < x.home().height()) throw PreconditionError("too few generator names");
  auto terms = element_terms(x, &names);
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) append_term(out, terms[i].coef, terms[i].mono, i == 0);
  return out;
}

std::string format_field_polynomial(const KPoly& f) {
  std::string out;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    std::string xpow = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
    auto terms = element_terms(f[i]);
    if (terms.size() == 1) {
      std::string mono = terms[0].mono;
      if (!xpow.empty()) mono = mono.empty() ? xpow : mono + "*" + xpow;
      append_term(out, terms[0].coef, mono, first);
    } else {
      out += first ? "" : " + ";
      out += "(" + format_element(f[i]) + ")";
      if (!xpow.empty()) out += "*" + xpow;
    }
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace kronecker
