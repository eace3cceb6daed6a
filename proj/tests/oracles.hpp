// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Reference implementations used only to check the library. Each one goes
// through a different algorithm from the code it checks.

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "kronecker/polynomial.hpp"

namespace oracle {

using kronecker::Integer;
using kronecker::Polynomial;
using kronecker::Rational;

/// Determinant of the Sylvester matrix, Gaussian elimination over Q.
Rational sylvester_resultant(const Polynomial& f, const Polynomial& g);

/// gcd(f, g) == 1 decided by reduction modulo a few word-sized primes that
/// do not divide the leading coefficients. nullopt when every prime is
/// unlucky.
std::optional<bool> coprime_modular(const Polynomial& f, const Polynomial& g);

/// disc(X^5 + a X + b).
Integer quintic_trinomial_discriminant(const Integer& a, const Integer& b);

/// lc^(2n-2) prod_{i<j} (r_i - r_j)^2 from numerically computed roots,
/// 50 decimal digits. Returned as a long double approximation and the
/// relative error the computation is good to.
struct NumericDisc {
  long double value;
  long double rel_tol;
};
NumericDisc root_product_discriminant(const Polynomial& f);

/// Distinct real roots of a squarefree integer-coefficient polynomial by
/// exact subdivision with Lipschitz exclusion, refined below the root
/// separation bound.
int bisection_real_root_count(const Polynomial& f);
/// Roots inside (lo, hi), same method.
int bisection_real_root_count_in(const Polynomial& f, const Rational& lo, const Rational& hi);

/// A nontrivial factor found by Kronecker's interpolation method, or
/// nullopt when f (primitive, degree <= 8) is irreducible.
std::optional<Polynomial> kronecker_factor(const Polynomial& f);

/// Res_Y(a(Y), b(X, Y)) where b is given as a polynomial in Y with
/// coefficients in Q[X]; evaluation at integer points and interpolation.
Polynomial bivariate_resultant(const Polynomial& a, const std::vector<Polynomial>& b_in_y);

/// Random polynomial with integer coefficients in [-c, c] and exact degree d.
Polynomial random_poly(std::mt19937_64& rng, int d, long c);

/// Same, with nonzero constant term as well.
Polynomial random_poly_nonzero_ends(std::mt19937_64& rng, int d, long c);

/// Numeric complex roots (50 digits) via Durand-Kerner.
std::vector<std::complex<long double>> numeric_roots(const Polynomial& f);

}  // namespace oracle
