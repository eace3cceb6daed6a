// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Scripted walk through the cubic X^3 + X^2 - 2X - 1 and the radical
// alpha = zeta_7 * 11^(1/7): the cubic stays irreducible over Q(alpha),
// splits over Q(alpha, conj(alpha)), and the conjugation invariant chain
// starts with rho = 121^(1/7).

#include <ostream>
#include <string>
#include <vector>

#include "kronecker/ball.hpp"

namespace kronecker {

struct CardanoValue {
  ComplexBall x;         // value of the expression for one cube root
  ComplexBall residual;  // f(x)
  double residual_upper = 0;
};

/// The three values of cbrt(w)/6 + 14/(3 cbrt(w)) + shift, w = 28 + 84 sqrt(-3),
/// one per cube root of w, evaluated at `prec` bits.
std::vector<CardanoValue> cardano_values(const Rational& shift, mpfr_prec_t prec);

struct ReplayResult {
  bool minpoly_of_trace = false;         // minpoly(zeta + 1/zeta) == X^3 + X^2 - 2X - 1
  bool irreducible_over_alpha = false;   // cubic irreducible over Q(alpha)
  bool alpha_field_not_invariant = false;
  bool splits_over_closure = false;      // three linear factors over Q(alpha, conj alpha)
  int closure_degree = 0;
  bool ratio_is_zeta_squared = false;    // alpha / conj(alpha) within 2^-100 of zeta^2
  bool ratio_seventh_power_one = false;
  bool rho_qth_root = false;             // is_qth_power(11, 7) over Q(rho) == rho^4 / 11
  bool binomial_reducible_over_rho = false;
  bool conj_chain_ok = false;            // make_conjugation_invariant gives [rho, alpha]
  bool cyclotomic_rho_criterion = false; // Q < Q(zeta_7) predicts 3 real roots, Sturm agrees
  std::vector<CardanoValue> formula_as_printed;  // shift +1/3
  std::vector<CardanoValue> formula_shift_minus; // shift -1/3
  double seconds = 0;

  bool exact_claims_hold() const;
};

/// Runs every step, writing a readable transcript to `out`.
ReplayResult replay_cyclotomic_cubic(std::ostream& out);

}  // namespace kronecker
