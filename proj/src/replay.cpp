// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/replay.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "kronecker/parse.hpp"
#include "kronecker/radical.hpp"
#include "kronecker/sturm.hpp"
#include "kronecker/tower.hpp"

namespace kronecker {

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

// Ball of radius 1e-6 around r * exp(2 pi i k / n).
ComplexBall polar_selector(double r, int k, int n) {
  const double t = 2 * M_PI * k / n;
  return ball_from_decimals(fixed(r * std::cos(t)), fixed(r * std::sin(t)), "1e-6", 128);
}

ComplexBall zeta_power_ball(int k, int n, mpfr_prec_t P) {
  Real t(P), s(P), c(P);
  mpfr_const_pi(t.get(), MPFR_RNDN);
  mpfr_mul_si(t.get(), t.get(), 2 * k, MPFR_RNDN);
  mpfr_div_si(t.get(), t.get(), n, MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  Real rad(kRadiusPrec);
  mpfr_set_ui_2exp(rad.get(), 1, 8 - P, MPFR_RNDU);
  return ComplexBall(std::move(c), std::move(s), std::move(rad));
}

double distance_upper(const ComplexBall& a, const ComplexBall& b) {
  Real lo(kRadiusPrec), hi(kRadiusPrec);
  center_distance(a, b, lo, hi);
  return mpfr_get_d(hi.get(), MPFR_RNDU) + a.radius_upper() + b.radius_upper();
}

std::string show(const ComplexBall& b) {
  std::string s = b.re().to_decimal(20);
  const double im = b.im().to_double();
  if (std::abs(im) > b.radius_upper()) {
    Real a = b.im();
    mpfr_abs(a.get(), a.get(), MPFR_RNDN);
    s += (im < 0 ? " - " : " + ") + a.to_decimal(20) + "i";
  }
  return s;
}

std::string degrees(const FieldFactorization& fa) {
  std::string s = "[";
  for (std::size_t i = 0; i < fa.factors.size(); ++i) {
    for (int m = 0; m < fa.factors[i].second; ++m) {
      if (s.size() > 1) s += ", ";
      s += std::to_string(kpoly_degree(fa.factors[i].first));
    }
  }
  return s + "]";
}

const char* yes(bool b) { return b ? "yes" : "NO"; }

}  // namespace

std::vector<CardanoValue> cardano_values(const Rational& shift, mpfr_prec_t P) {
  // w = 28 + 84 i sqrt(3)
  Real s3(P);
  mpfr_sqrt_ui(s3.get(), 3, MPFR_RNDN);
  Real im(P);
  mpfr_mul_ui(im.get(), s3.get(), 84, MPFR_RNDN);
  Real rad(kRadiusPrec);
  mpfr_set_ui_2exp(rad.get(), 1, 10 - P, MPFR_RNDU);
  ComplexBall w(Real::from_si(28, P), std::move(im), std::move(rad));
  const ComplexBall zero(P), one = ComplexBall::from_rational(1, P);
  auto cube_roots = isolate_roots({-w, zero, zero, one}, P);
  const Polynomial f = parse_polynomial("X^3+X^2-2X-1");
  std::vector<ComplexBall> fc;
  for (const auto& c : f.coefficients()) fc.push_back(ComplexBall::from_rational(c, P));
  std::vector<CardanoValue> out;
  for (const auto& c : cube_roots) {
    CardanoValue v;
    v.x = c * ComplexBall::from_rational(Rational(1, 6), P) +
          ComplexBall::from_rational(14, P) / (ComplexBall::from_rational(3, P) * c) +
          ComplexBall::from_rational(shift, P);
    v.residual = evaluate(fc, v.x);
    v.residual_upper = v.residual.mag_upper().to_double();
    out.push_back(std::move(v));
  }
  return out;
}

bool ReplayResult::exact_claims_hold() const {
  return minpoly_of_trace && irreducible_over_alpha && alpha_field_not_invariant && splits_over_closure &&
         closure_degree == 42 && ratio_is_zeta_squared && ratio_seventh_power_one && rho_qth_root &&
         binomial_reducible_over_rho && conj_chain_ok && cyclotomic_rho_criterion;
}

ReplayResult replay_cyclotomic_cubic(std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const mpfr_prec_t P = default_precision();
  ReplayResult R;
  const Polynomial f = parse_polynomial("X^3+X^2-2X-1");
  const Polynomial phi7 = parse_polynomial("X^6+X^5+X^4+X^3+X^2+X+1");
  const double r11 = std::pow(11.0, 1.0 / 7);
  out << "working precision: " << P << " bits\n";
  out << "f = " << format_polynomial(f) << "\n\n";

  // Q(zeta)
  const TowerField Z = make_extension(TowerField(), phi7, polar_selector(1, 1, 7));
  const AlgebraicElement zeta = Z.generator(1);
  const Polynomial trace_mp = minimal_polynomial(zeta + inverse(zeta));
  R.minpoly_of_trace = trace_mp == f;
  out << "[1] Q(zeta), zeta = exp(2 pi i/7), minimal polynomial " << format_polynomial(phi7) << "\n";
  out << "    minimal polynomial of zeta + zeta^-1: " << format_polynomial(trace_mp) << "  equals f: "
      << yes(R.minpoly_of_trace) << "\n";

  // Q(alpha)
  const StepDescription a_step{7, "11", polar_selector(r11, 1, 7)};
  const StepDescription abar_step{7, "11", polar_selector(r11, -1, 7)};
  const RadicalChain c1 = build_chain({a_step});
  const TowerField& K1 = c1.realized;
  const FieldFactorization f_k1 = factor_over_field(f, K1);
  R.irreducible_over_alpha = f_k1.factors.size() == 1 && f_k1.factors[0].second == 1;
  R.alpha_field_not_invariant = !is_conjugation_invariant(K1);
  const FieldFactorization bin_k1 = factor_over_field(parse_polynomial("X^7-11"), K1);
  out << "\n[2] K1 = Q(alpha), alpha = zeta * 11^(1/7) ~ " << show(embed(c1.roots[0])) << "\n";
  out << "    [K1 : Q] = " << degree_over_Q(K1) << "\n";
  out << "    f over K1: factor degrees " << degrees(f_k1) << "  irreducible: " << yes(R.irreducible_over_alpha)
      << "\n";
  out << "    K1 conjugation invariant: " << (R.alpha_field_not_invariant ? "no" : "YES") << "\n";
  out << "    X^7 - 11 over K1: factor degrees " << degrees(bin_k1) << " (conj(alpha) is a reducible radical)\n";

  // Q(alpha, conj alpha)
  const RadicalChain c2 = build_chain({a_step, abar_step});
  const TowerField& K2 = c2.realized;
  R.closure_degree = degree_over_Q(K2);
  const FieldFactorization f_k2 = factor_over_field(f, K2);
  R.splits_over_closure = f_k2.factors.size() == 3;
  for (const auto& [g, m] : f_k2.factors) R.splits_over_closure = R.splits_over_closure && kpoly_degree(g) == 1 && m == 1;
  out << "\n[3] K2 = K1(conj alpha), step degree " << K2.level_degree(2) << ", [K2 : Q] = " << R.closure_degree << "\n";
  out << "    f over K2: factor degrees " << degrees(f_k2) << "  three linear factors: " << yes(R.splits_over_closure)
      << "\n";
  for (const auto& [g, m] : f_k2.factors) {
    if (kpoly_degree(g) == 1) out << "      root ~ " << show(embed(-g[0])) << "\n";
  }
  auto rep = first_reducibility(c2, f);
  if (rep) {
    out << "    first reducible at step " << rep->step << ", step degree " << rep->step_degree
        << ", 3 divides it: " << yes(rep->nagell_divisibility) << ", radical " << to_string(rep->radical_kind) << "\n";
  }

  const AlgebraicElement ratio = c2.roots_in_top()[0] * inverse(c2.roots_in_top()[1]);
  R.ratio_seventh_power_one = pow(ratio, 7) == K2.one();
  const ComplexBall re = embed(ratio, P);
  const double dist = distance_upper(re, zeta_power_ball(2, 7, P));
  R.ratio_is_zeta_squared = dist <= std::ldexp(1.0, -100);
  out << "    alpha / conj(alpha) ~ " << show(re) << "\n";
  out << "    (alpha / conj(alpha))^7 = 1 exactly: " << yes(R.ratio_seventh_power_one) << "\n";
  out << "    |alpha / conj(alpha) - zeta^2| <= " << dist << " (bound 2^-100): " << yes(R.ratio_is_zeta_squared)
      << "\n";

  // rho first
  const ConjugationInvariantChain ci = make_conjugation_invariant(c1);
  const RadicalChain& cc = ci.chain;
  R.conj_chain_ok = cc.steps.size() == 2 && cc.levels[0] == 1 && cc.levels[1] == 2 &&
                    minimal_polynomial(cc.roots[0]) == parse_polynomial("X^7-121") &&
                    pow(ci.original_roots[0], 7) == cc.realized.from_rational(11);
  const TowerField Krho = cc.realized.prefix(1);
  const AlgebraicElement rho = Krho.generator(1);
  const auto root11 = is_qth_power(Krho.from_rational(11), 7);
  R.rho_qth_root = root11 && *root11 == pow(rho, 4) * Krho.from_rational(Rational(1, 11));
  const FieldFactorization bin_rho = factor_over_field(parse_polynomial("X^7-11"), Krho);
  R.binomial_reducible_over_rho = bin_rho.factors.size() > 1;
  out << "\n[4] conjugation invariant chain for [alpha]: ";
  for (std::size_t i = 0; i < cc.steps.size(); ++i) {
    out << (i ? ", " : "") << "X^" << cc.steps[i].q << " - (" << format_element(cc.steps[i].radicand) << ")";
  }
  out << "\n    rho = alpha * conj(alpha), minimal polynomial " << format_polynomial(minimal_polynomial(cc.roots[0]))
      << "\n";
  out << "    11^(1/7) in Q(rho): " << (root11 ? format_element(*root11) : std::string("none"))
      << "  equals rho^4/11: " << yes(R.rho_qth_root) << "\n";
  out << "    X^7 - 11 over Q(rho): factor degrees " << degrees(bin_rho) << "  reducible: "
      << yes(R.binomial_reducible_over_rho) << "\n";
  auto rep2 = first_reducibility(cc, f);
  if (rep2) {
    out << "    f first reducible at step " << rep2->step << " of that chain, step degree " << rep2->step_degree
        << "\n";
  }
  out << "    every level conjugation invariant: " << yes(R.conj_chain_ok) << "\n";

  // Q < Q(zeta), rho = 1
  const RadicalChain cz = build_chain({{7, "1", polar_selector(1, 1, 7)}});
  const RhoCriterion rc = rho_criterion(cz, 0, f);
  R.cyclotomic_rho_criterion = rc.predicted == 3 && rc.sturm_count == 3;
  out << "\n[5] Q < Q(zeta): f reducible over Q(zeta), rho = 1 in Q, predicted real roots " << rc.predicted
      << ", Sturm count " << rc.sturm_count << ": " << yes(R.cyclotomic_rho_criterion) << "\n";

  // Explicit formula.
  R.formula_as_printed = cardano_values(Rational(1, 3), P);
  R.formula_shift_minus = cardano_values(Rational(-1, 3), P);
  out << "\n[6] cbrt(28 + 84 sqrt(-3))/6 + 14/(3 cbrt(28 + 84 sqrt(-3))) + c, one value per cube root\n";
  for (const auto* vals : {&R.formula_as_printed, &R.formula_shift_minus}) {
    out << "    c = " << (vals == &R.formula_as_printed ? "+1/3" : "-1/3") << "\n";
    for (const auto& v : *vals) {
      out << "      x ~ " << show(v.x) << "   |f(x)| <= " << v.residual_upper << "\n";
    }
  }

  R.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << "\nall exact claims hold: " << yes(R.exact_claims_hold()) << "\n";
  out << "elapsed: " << R.seconds << " s\n";
  return R;
}

}  // namespace kronecker
