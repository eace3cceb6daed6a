// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/ball.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "kronecker/errors.hpp"

namespace kronecker {

// ---------------------------------------------------------------------------
// Real

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

Real Real::from_si(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_decimal(std::string_view s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  std::string str(s);
  if (str.empty() || str.find_first_of(" \t\n") != std::string::npos) {
    throw std::invalid_argument("not a decimal number: " + str);
  }
  char* end = nullptr;
  mpfr_strtofr(r.v_, str.c_str(), &end, 10, rnd);
  if (end != str.c_str() + str.size()) throw std::invalid_argument("not a decimal number: " + str);
  return r;
}

std::string Real::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(std::max(1, digits - 1)) + "R" +
                    (rnd == MPFR_RNDU ? "U" : rnd == MPFR_RNDD ? "D" : "N") + "e";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpfr_prec_t default_precision() {
  const char* env = std::getenv("KRONECKER_PRECISION_BITS");
  if (!env || !*env) return 256;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) return 256;
  return static_cast<mpfr_prec_t>(std::clamp(v, 64L, 1L << 20));
}

// ---------------------------------------------------------------------------
// helpers on radii (all rounded up)

namespace {

Real abs_up(const Real& x) {
  Real r(kRadiusPrec);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

Real add_up(const Real& a, const Real& b) {
  Real r(kRadiusPrec);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(kRadiusPrec);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// |re| + |im| of the midpoint, rounded up.
Real l1_up(const Real& re, const Real& im) { return add_up(abs_up(re), abs_up(im)); }

// 2^e * x, rounded up.
Real scale2_up(const Real& x, long e) {
  Real r(kRadiusPrec);
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDU);
  return r;
}

// Lower bound of |x - y| and upper bound, for reals.
void diff_bounds(const Real& x, const Real& y, Real& lo, Real& hi) {
  const mpfr_prec_t p = std::max(x.precision(), y.precision());
  Real d_lo(p), d_hi(p);
  mpfr_sub(d_lo.get(), x.get(), y.get(), MPFR_RNDD);
  mpfr_sub(d_hi.get(), x.get(), y.get(), MPFR_RNDU);
  lo = Real(p);
  hi = Real(p);
  if (mpfr_sgn(d_lo.get()) <= 0 && mpfr_sgn(d_hi.get()) >= 0) {
    mpfr_set_zero(lo.get(), 1);
  } else if (mpfr_sgn(d_lo.get()) > 0) {
    mpfr_set(lo.get(), d_lo.get(), MPFR_RNDD);
  } else {
    mpfr_neg(lo.get(), d_hi.get(), MPFR_RNDD);
  }
  Real a(p), b(p);
  mpfr_abs(a.get(), d_lo.get(), MPFR_RNDU);
  mpfr_abs(b.get(), d_hi.get(), MPFR_RNDU);
  mpfr_max(hi.get(), a.get(), b.get(), MPFR_RNDU);
}

Real hypot_dir(const Real& x, const Real& y, mpfr_rnd_t rnd) {
  const mpfr_prec_t p = std::max<mpfr_prec_t>(kRadiusPrec, std::max(x.precision(), y.precision()));
  Real a(p), b(p), r(p);
  mpfr_sqr(a.get(), x.get(), rnd);
  mpfr_sqr(b.get(), y.get(), rnd);
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  mpfr_sqrt(r.get(), r.get(), rnd);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadiusPrec) {}

ComplexBall::ComplexBall(Real re, Real im, Real rad)
    : re_(std::move(re)), im_(std::move(im)), rad_(kRadiusPrec) {
  mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

ComplexBall ComplexBall::from_rational(const Rational& re, mpfr_prec_t prec) {
  return from_rationals(re, Rational(0), prec);
}

ComplexBall ComplexBall::from_rationals(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  ComplexBall b(prec);
  int t1 = mpfr_set_q(b.re_.get(), re.get_mpq_t(), MPFR_RNDN);
  int t2 = mpfr_set_q(b.im_.get(), im.get_mpq_t(), MPFR_RNDN);
  if (t1 != 0 || t2 != 0) b.rad_ = scale2_up(l1_up(b.re_, b.im_), 1 - prec);
  return b;
}

ComplexBall ComplexBall::conj() const {
  ComplexBall r(*this);
  mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::operator-() const {
  ComplexBall r(*this);
  mpfr_neg(r.re_.get(), r.re_.get(), MPFR_RNDN);
  mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
  return r;
}

Real ComplexBall::mag_upper() const { return add_up(hypot_dir(re_, im_, MPFR_RNDU), rad_); }

Real ComplexBall::abs_lower() const {
  Real m = hypot_dir(re_, im_, MPFR_RNDD);
  Real r(m.precision());
  mpfr_sub(r.get(), m.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool ComplexBall::contains_zero() const { return mpfr_sgn(abs_lower().get()) <= 0; }

bool ComplexBall::contains(const ComplexBall& other) const {
  Real lo, hi;
  center_distance(*this, other, lo, hi);
  Real need = add_up(hi, other.rad_);
  return mpfr_lessequal_p(need.get(), rad_.get());
}

bool ComplexBall::overlaps(const ComplexBall& other) const {
  Real lo, hi;
  center_distance(*this, other, lo, hi);
  Real reach = add_up(rad_, other.rad_);
  return !mpfr_greater_p(lo.get(), reach.get());
}

bool ComplexBall::certainly_nonreal() const {
  Real a(im_.precision());
  mpfr_abs(a.get(), im_.get(), MPFR_RNDD);
  return mpfr_greater_p(a.get(), rad_.get());
}

void ComplexBall::inflate(const Real& e) { rad_ = add_up(rad_, e); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  ComplexBall r(p);
  int t1 = mpfr_add(r.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  int t2 = mpfr_add(r.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  r.rad_ = add_up(a.rad_, b.rad_);
  if (t1 || t2) r.rad_ = add_up(r.rad_, scale2_up(l1_up(r.re_, r.im_), 1 - p));
  return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return a + (-b); }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  ComplexBall r(p);
  Real t1(p), t2(p);
  mpfr_mul(t1.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_sub(r.re_.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  mpfr_add(r.im_.get(), t1.get(), t2.get(), MPFR_RNDN);
  const Real na = l1_up(a.re_, a.im_), nb = l1_up(b.re_, b.im_);
  Real rad = add_up(add_up(mul_up(na, b.rad_), mul_up(nb, a.rad_)), mul_up(a.rad_, b.rad_));
  rad = add_up(rad, scale2_up(mul_up(na, nb), 3 - p));
  r.rad_ = rad;
  return r;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t p = std::max(a.precision(), b.precision());
  // 1/b first.
  Real mid_lo = hypot_dir(b.re_, b.im_, MPFR_RNDD);
  Real margin(mid_lo.precision());
  mpfr_sub(margin.get(), mid_lo.get(), b.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(margin.get()) <= 0) throw PrecisionError("division by a ball that may contain zero");
  ComplexBall inv(p);
  Real n(p);
  Real t(p);
  mpfr_sqr(n.get(), b.re_.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im_.get(), MPFR_RNDN);
  mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
  mpfr_div(inv.re_.get(), b.re_.get(), n.get(), MPFR_RNDN);
  mpfr_div(inv.im_.get(), b.im_.get(), n.get(), MPFR_RNDN);
  mpfr_neg(inv.im_.get(), inv.im_.get(), MPFR_RNDN);
  // |1/(b + d) - 1/b| <= r / (|b| (|b| - r))
  Real den(kRadiusPrec);
  mpfr_mul(den.get(), mid_lo.get(), margin.get(), MPFR_RNDD);
  Real prop(kRadiusPrec);
  mpfr_div(prop.get(), b.rad_.get(), den.get(), MPFR_RNDU);
  inv.rad_ = add_up(prop, scale2_up(l1_up(inv.re_, inv.im_), 4 - p));
  return a * inv;
}

ComplexBall pow(const ComplexBall& b, unsigned e) {
  ComplexBall acc = ComplexBall::from_rational(1, b.precision());
  ComplexBall base = b;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

ComplexBall ball_from_decimals(std::string_view re, std::string_view im, std::string_view radius,
                               mpfr_prec_t prec) {
  Real r = Real::from_decimal(re, prec), i = Real::from_decimal(im, prec);
  Real rad = Real::from_decimal(radius, kRadiusPrec, MPFR_RNDU);
  if (mpfr_sgn(rad.get()) < 0 || !mpfr_number_p(rad.get())) throw std::invalid_argument("radius must be finite and nonnegative");
  if (!mpfr_number_p(r.get()) || !mpfr_number_p(i.get())) throw std::invalid_argument("center must be finite");
  rad = add_up(rad, scale2_up(l1_up(r, i), 1 - prec));
  return ComplexBall(std::move(r), std::move(i), std::move(rad));
}

void center_distance(const ComplexBall& a, const ComplexBall& b, Real& lo, Real& hi) {
  Real xlo, xhi, ylo, yhi;
  diff_bounds(a.re(), b.re(), xlo, xhi);
  diff_bounds(a.im(), b.im(), ylo, yhi);
  lo = hypot_dir(xlo, ylo, MPFR_RNDD);
  hi = hypot_dir(xhi, yhi, MPFR_RNDU);
}

ComplexBall evaluate(const std::vector<ComplexBall>& coeffs, const ComplexBall& z) {
  if (coeffs.empty()) return ComplexBall(z.precision());
  ComplexBall acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Root isolation: Aberth iteration on the midpoints, then inclusion radii
// r_i = n |p(z_i)| / (|lc| prod_{j != i} |z_i - z_j|).

namespace {

struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

Cx cx_add(const Cx& a, const Cx& b) {
  Cx r(a.re.precision());
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_sub(const Cx& a, const Cx& b) {
  Cx r(a.re.precision());
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

Cx cx_mul(const Cx& a, const Cx& b) {
  const mpfr_prec_t p = a.re.precision();
  Cx r(p);
  Real t1(p), t2(p);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
  return r;
}

bool cx_is_zero(const Cx& a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Cx cx_div(const Cx& a, const Cx& b) {
  const mpfr_prec_t p = a.re.precision();
  Real n(p), t(p);
  mpfr_sqr(n.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(n.get(), n.get(), t.get(), MPFR_RNDN);
  Cx conjb(p);
  mpfr_set(conjb.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conjb.im.get(), b.im.get(), MPFR_RNDN);
  Cx r = cx_mul(a, conjb);
  mpfr_div(r.re.get(), r.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), n.get(), MPFR_RNDN);
  return r;
}

double cx_abs_d(const Cx& a) { return std::hypot(mpfr_get_d(a.re.get(), MPFR_RNDN), mpfr_get_d(a.im.get(), MPFR_RNDN)); }

long cx_log2(const Cx& a) {
  if (cx_is_zero(a)) return LONG_MIN / 2;
  long e1 = mpfr_zero_p(a.re.get()) ? LONG_MIN / 2 : mpfr_get_exp(a.re.get());
  long e2 = mpfr_zero_p(a.im.get()) ? LONG_MIN / 2 : mpfr_get_exp(a.im.get());
  return std::max(e1, e2);
}

}  // namespace

std::vector<ComplexBall> isolate_roots(const std::vector<ComplexBall>& coeffs, mpfr_prec_t prec) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  if (coeffs.back().contains_zero()) throw PrecisionError("leading coefficient ball contains zero");
  std::vector<Cx> c;
  for (const auto& b : coeffs) {
    Cx x(prec);
    mpfr_set(x.re.get(), b.re().get(), MPFR_RNDN);
    mpfr_set(x.im.get(), b.im().get(), MPFR_RNDN);
    c.push_back(std::move(x));
  }
  std::vector<Cx> z;
  if (n == 1) {
    Cx r = cx_div(c[0], c[1]);
    mpfr_neg(r.re.get(), r.re.get(), MPFR_RNDN);
    mpfr_neg(r.im.get(), r.im.get(), MPFR_RNDN);
    z.push_back(std::move(r));
  } else {
    // Fujiwara bound for the starting circle.
    const double lc = cx_abs_d(c[static_cast<std::size_t>(n)]);
    double bound = 0;
    for (int k = 1; k <= n; ++k) {
      const double a = cx_abs_d(c[static_cast<std::size_t>(n - k)]) / lc;
      double t = std::pow(a, 1.0 / k);
      if (k == n) t = std::pow(a / 2, 1.0 / k);
      bound = std::max(bound, t);
    }
    bound = 2 * bound;
    if (!(bound > 0) || !std::isfinite(bound)) bound = 1;
    for (int k = 0; k < n; ++k) {
      Cx x(prec);
      const double ang = 2 * M_PI * k / n + 0.4;
      mpfr_set_d(x.re.get(), bound * std::cos(ang), MPFR_RNDN);
      mpfr_set_d(x.im.get(), bound * std::sin(ang), MPFR_RNDN);
      z.push_back(std::move(x));
    }
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    const int max_iter = 200 + 4 * static_cast<int>(prec);
    for (int it = 0; it < max_iter; ++it) {
      bool all = true;
      for (int i = 0; i < n; ++i) {
        if (done[static_cast<std::size_t>(i)]) continue;
        // p(z) and p'(z) by Horner.
        Cx pv = c[static_cast<std::size_t>(n)];
        Cx dv(prec);
        for (int k = n - 1; k >= 0; --k) {
          dv = cx_add(cx_mul(dv, z[static_cast<std::size_t>(i)]), pv);
          pv = cx_add(cx_mul(pv, z[static_cast<std::size_t>(i)]), c[static_cast<std::size_t>(k)]);
        }
        if (cx_is_zero(pv)) {
          done[static_cast<std::size_t>(i)] = true;
          continue;
        }
        all = false;
        Cx ratio = cx_div(pv, dv);
        Cx sum(prec);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          Cx d = cx_sub(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
          if (cx_is_zero(d)) continue;
          Cx one(prec);
          mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
          sum = cx_add(sum, cx_div(one, d));
        }
        Cx one(prec);
        mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
        Cx w = cx_div(ratio, cx_sub(one, cx_mul(ratio, sum)));
        z[static_cast<std::size_t>(i)] = cx_sub(z[static_cast<std::size_t>(i)], w);
        const long scale = std::max(0L, cx_log2(z[static_cast<std::size_t>(i)]));
        if (cx_log2(w) < scale - static_cast<long>(prec) + 8) done[static_cast<std::size_t>(i)] = true;
      }
      if (all || std::all_of(done.begin(), done.end(), [](bool b) { return b; })) break;
    }
  }

  std::vector<ComplexBall> balls;
  for (const auto& zi : z) balls.emplace_back(zi.re, zi.im, Real(kRadiusPrec));
  const Real lc_lo = coeffs.back().abs_lower();
  std::vector<Real> radii;
  for (int i = 0; i < n; ++i) {
    ComplexBall pv = evaluate(coeffs, balls[static_cast<std::size_t>(i)]);
    Real num = mul_up(pv.mag_upper(), Real::from_si(n, kRadiusPrec));
    Real den(kRadiusPrec);
    mpfr_set(den.get(), lc_lo.get(), MPFR_RNDD);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Real lo, hi;
      center_distance(balls[static_cast<std::size_t>(i)], balls[static_cast<std::size_t>(j)], lo, hi);
      mpfr_mul(den.get(), den.get(), lo.get(), MPFR_RNDD);
    }
    if (mpfr_sgn(den.get()) <= 0) throw PrecisionError("root approximations coincide at this precision");
    Real r(kRadiusPrec);
    mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
    radii.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i) balls[static_cast<std::size_t>(i)] = ComplexBall(balls[static_cast<std::size_t>(i)].re(), balls[static_cast<std::size_t>(i)].im(), radii[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (balls[static_cast<std::size_t>(i)].overlaps(balls[static_cast<std::size_t>(j)])) {
        throw PrecisionError("root inclusion disks overlap at this precision");
      }
    }
  }
  return balls;
}

}  // namespace kronecker
