// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Small fixtures shared by the number-field, radical and verdict tests.

#include <cmath>
#include <random>
#include <string>

#include "kronecker/parse.hpp"
#include "kronecker/tower.hpp"

namespace testsupport {

using namespace kronecker;

inline Polynomial P(const char* s) { return parse_polynomial(s); }
inline Polynomial P(const std::string& s) { return parse_polynomial(s); }

inline ComplexBall sel(const char* re, const char* im, const char* rad) {
  return ball_from_decimals(re, im, rad, 128);
}

inline std::string dec(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

/// Selector around exp(2 pi i k / q).
inline ComplexBall zeta_selector(long q, long k) {
  const double t = 2 * M_PI * static_cast<double>(k) / static_cast<double>(q);
  return ball_from_decimals(dec(std::cos(t)), dec(std::sin(t)), "1e-6", 128);
}

/// Selector around r * exp(2 pi i k / q).
inline ComplexBall radical_selector(double r, long q, long k) {
  const double t = 2 * M_PI * static_cast<double>(k) / static_cast<double>(q);
  return ball_from_decimals(dec(r * std::cos(t)), dec(r * std::sin(t)), "1e-6", 128);
}

inline Polynomial cyclotomic_prime(long q) {
  std::vector<Rational> c(static_cast<std::size_t>(q), Rational(1));
  return Polynomial(c);
}

inline TowerField cyclotomic_field(long q) {
  return make_extension(TowerField(), cyclotomic_prime(q), zeta_selector(q, 1));
}

/// Q(alpha) with alpha = zeta_7 * 11^(1/7).
inline TowerField example_alpha_field() {
  return make_extension(TowerField(), P("X^7-11"), radical_selector(std::pow(11.0, 1.0 / 7), 7, 1));
}

/// Q(sqrt 2)(cbrt(1 + sqrt 2)).
inline TowerField two_level_field() {
  auto K1 = make_extension(TowerField(), P("X^2-2"), sel("1.414", "0", "0.01"));
  return make_extension(K1, parse_field_polynomial("X^3 - g1 - 1", K1), sel("1.34", "0", "0.01"));
}

inline AlgebraicElement random_element(std::mt19937_64& rng, const TowerField& K, long c) {
  Coords v(static_cast<std::size_t>(K.degree()));
  for (auto& x : v) x = Rational(static_cast<long>(rng() % static_cast<unsigned long>(2 * c + 1)) - c);
  return AlgebraicElement(K, v);
}

inline bool kpoly_equal(const KPoly& a, const KPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

inline bool product_equals(const FieldFactorization& fa, const KPoly& f) { return kpoly_equal(fa.product(), f); }

}  // namespace testsupport
