// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

// Complex conjugation on a tower. conj(g_k) is searched level by level;
// once conj is known on K_{k-1} it maps the minimal polynomial m_k to
// sigma(m_k), whose roots are the conjugates of the roots of m_k. A
// candidate is accepted when it is an exact root of sigma(m_k) and its
// embedding picks out the conjugate of g_k's ball.

#include <algorithm>

#include "kronecker/tower.hpp"
#include "tower_internal.hpp"

namespace kronecker {

namespace {

AlgebraicElement hom_coords(const TowerField& src, int k, const Coords& c,
                            const std::vector<AlgebraicElement>& images, const TowerField& target) {
  if (k == 0) return target.from_rational(c[0]);
  const int d = src.level_degree(k), s = src.degree_through(k - 1);
  auto blk = [&](int i) {
    return Coords(c.begin() + static_cast<std::ptrdiff_t>(i) * s, c.begin() + static_cast<std::ptrdiff_t>(i + 1) * s);
  };
  const AlgebraicElement& g = images[static_cast<std::size_t>(k - 1)];
  AlgebraicElement acc = hom_coords(src, k - 1, blk(d - 1), images, target);
  for (int i = d - 2; i >= 0; --i) acc = acc * g + hom_coords(src, k - 1, blk(i), images, target);
  return acc.lift_to(target);
}

// Whether c, an exact root of sigma(m_k), is conj(g_k).
bool is_conjugate_of_generator(const TowerField& K, int k, const AlgebraicElement& c) {
  const mpfr_prec_t P0 = default_precision();
  const auto m = K.level_minpoly(k);
  for (mpfr_prec_t P = P0; P <= 16 * P0; P *= 2) {
    std::vector<ComplexBall> roots;
    try {
      roots = isolate_roots(embed_poly(m, P), P);
    } catch (const PrecisionError&) {
      continue;
    }
    const ComplexBall gk = K.root_ball_at(k, P);
    std::vector<std::size_t> self;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (roots[i].overlaps(gk)) self.push_back(i);
    }
    if (self.size() != 1) continue;
    const ComplexBall ec = embed(c, P);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (ec.overlaps(roots[i].conj())) hits.push_back(i);
    }
    const bool has_self = std::find(hits.begin(), hits.end(), self[0]) != hits.end();
    if (!has_self) return false;
    if (hits.size() == 1) return true;
  }
  throw PrecisionError("cannot decide which conjugate root an element denotes within the precision cap");
}

}  // namespace

AlgebraicElement apply_homomorphism(const AlgebraicElement& x, const std::vector<AlgebraicElement>& images,
                                    const TowerField& target) {
  const TowerField& src = x.home();
  if (static_cast<int>(images.size()) < src.height()) throw PreconditionError("too few generator images");
  return hom_coords(src, src.height(), x.coords(), images, target);
}

AlgebraicElement conjugate(const AlgebraicElement& x, const std::vector<AlgebraicElement>& conj_images) {
  if (x.home().height() == 0) return x;
  const TowerField& K = conj_images.back().home();
  return apply_homomorphism(x, conj_images, K);
}

std::optional<std::vector<AlgebraicElement>> conjugation_map(const TowerField& K) {
  std::vector<AlgebraicElement> images;
  for (int k = 1; k <= K.height(); ++k) {
    KPoly sm;
    for (const auto& c : K.level_minpoly(k)) sm.push_back(apply_homomorphism(c, images, K));
    if (kpoly_degree(sm) == 1) {
      images.push_back(-(sm[0] * inverse(sm[1])));
      continue;
    }
    std::vector<AlgebraicElement> candidates;
    if (auto h = K.conjugation_hint(k)) candidates.push_back(*h);
    const AlgebraicElement g = K.generator(k);
    candidates.push_back(g);
    candidates.push_back(-g);
    candidates.push_back(inverse(g));
    for (int j = 1; j <= K.height(); ++j) {
      if (j != k) candidates.push_back(K.generator(j));
    }
    std::optional<AlgebraicElement> found;
    for (const auto& c : candidates) {
      if (kpoly_evaluate(sm, c).is_zero() && is_conjugate_of_generator(K, k, c)) {
        found = c;
        break;
      }
    }
    if (!found) {
      for (const auto& r : roots_in_field(sm, K)) {
        if (is_conjugate_of_generator(K, k, r)) {
          found = r;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
    images.push_back(*found);
  }
  return images;
}

bool is_conjugation_invariant(const TowerField& K) { return conjugation_map(K).has_value(); }

}  // namespace kronecker
