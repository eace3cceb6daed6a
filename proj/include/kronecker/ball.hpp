// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Certified complex balls: an MPFR midpoint pair and an upper bound on the
// distance to the represented value. Every operation adds its own rounding
// error to the radius, so the true value is always inside.

#include <mpfr.h>

#include <string>
#include <string_view>
#include <vector>

#include "kronecker/rational.hpp"

namespace kronecker {

/// RAII wrapper over mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  static Real from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_si(long v, mpfr_prec_t prec);
  /// Throws std::invalid_argument unless the whole string is a number.
  static Real from_decimal(std::string_view s, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Plain decimal ("-1.25e-3" style) with the given significant digits.
  std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t v_;
};

/// Precision used for radii; radii are always rounded up.
inline constexpr mpfr_prec_t kRadiusPrec = 64;

/// Working precision from KRONECKER_PRECISION_BITS (default 256, clamped
/// to [64, 1 << 20]).
mpfr_prec_t default_precision();

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 64);
  ComplexBall(Real re, Real im, Real rad);

  static ComplexBall from_rational(const Rational& re, mpfr_prec_t prec);
  static ComplexBall from_rationals(const Rational& re, const Rational& im, mpfr_prec_t prec);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  const Real& rad() const { return rad_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  ComplexBall conj() const;
  ComplexBall operator-() const;

  /// Upper bound of |z| over the ball.
  Real mag_upper() const;
  /// Lower bound of |z| over the ball (zero if the ball touches 0).
  Real abs_lower() const;
  bool contains_zero() const;
  /// Certified: every point of `other` lies in this ball.
  bool contains(const ComplexBall& other) const;
  /// False only when the balls are certainly disjoint.
  bool overlaps(const ComplexBall& other) const;
  /// Certified: imaginary part of every point is nonzero.
  bool certainly_nonreal() const;

  /// Radius as a double, rounded up (inf when huge).
  double radius_upper() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  /// Adds e to the radius.
  void inflate(const Real& e);

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  /// Throws PrecisionError when b may contain zero.
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

 private:
  Real re_, im_, rad_;
};

ComplexBall pow(const ComplexBall& b, unsigned e);

/// Ball from decimal strings; the radius is widened by the rounding error of
/// the center. Throws std::invalid_argument for malformed numbers or a
/// negative radius.
ComplexBall ball_from_decimals(std::string_view re, std::string_view im, std::string_view radius,
                               mpfr_prec_t prec);

/// Lower and upper bounds on |center(a) - center(b)|.
void center_distance(const ComplexBall& a, const ComplexBall& b, Real& lo, Real& hi);

/// Horner evaluation; coefficients ascending.
ComplexBall evaluate(const std::vector<ComplexBall>& coeffs, const ComplexBall& z);

/// Certified isolating balls for all complex roots of the polynomial with
/// the given coefficient balls (ascending; the leading ball must exclude
/// zero). Balls are pairwise disjoint and each holds exactly one root.
/// Throws PrecisionError when this precision cannot separate them.
std::vector<ComplexBall> isolate_roots(const std::vector<ComplexBall>& coeffs, mpfr_prec_t prec);

}  // namespace kronecker
