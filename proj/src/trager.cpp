// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

// Factorization over a number field by Trager's method. The tower is
// flattened to Q(theta) with theta integral; the norm
//   N(X) = Res_Y(M(Y), F(X - s Y, Y))
// is computed by evaluation/interpolation modulo 62-bit primes and CRT.

#include <algorithm>
#include <cmath>
#include <limits>

#include "field_poly.hpp"
#include "kronecker/factor.hpp"
#include "kronecker/modp.hpp"
#include "kronecker/tower.hpp"
#include "tower_internal.hpp"

namespace kronecker {

namespace {

// ---------------------------------------------------------------------------
// Q(theta) = Q[Y]/(M), elements as rational polynomials of degree < deg M.

std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  // Wang's algorithm with N = D = floor(sqrt(m / 2)).
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = zpoly::smod(u, m);
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

struct SimpleOps {
  using Elem = Polynomial;
  std::shared_ptr<const zpoly::ZPoly> M;
  std::shared_ptr<const Polynomial> Mq;

  Elem zero() const { return {}; }
  Elem one() const { return Polynomial::constant(1); }
  Elem from_rational(const Rational& q) const { return Polynomial::constant(q); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.is_constant()) return b * a.coeff(0);
    if (b.is_constant()) return a * b.coeff(0);
    return poly_divmod(a * b, *Mq).remainder;
  }
  Elem mul_theta(const Elem& a) const {
    // theta * a, one reduction step since M is monic.
    std::vector<Rational> c(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) c[i + 1] = a.coeff(i);
    const std::size_t D = M->size() - 1;
    if (c.size() > D) {
      const Rational top = c[D];
      for (std::size_t i = 0; i < D; ++i) c[i] -= top * Rational((*M)[i]);
      c.resize(D);
    }
    return Polynomial(std::move(c));
  }
  Elem inv(const Elem& a) const;
};

Polynomial SimpleOps::inv(const Polynomial& a) const {
  if (a.is_zero()) throw PreconditionError("inverse of zero");
  if (a.is_constant()) return Polynomial::constant(1 / a.coeff(0));
  Rational content;
  const zpoly::ZPoly A = primitive_integer_part(a, &content);
  const std::size_t D = M->size() - 1;
  std::vector<Integer> acc(D);
  Integer modulus = 1;
  std::size_t used = 0, next_check = 2;
  for (std::size_t idx = 0; idx < 100000; ++idx) {
    const modp::u64 p = modp::large_prime(idx);
    const modp::Poly Ap = modp::reduce(A, p), Mp = modp::reduce(*M, p);
    if (modp::degree(Ap) != zpoly::degree(A)) continue;
    auto eg = modp::ext_gcd(Ap, Mp, p);
    if (eg.g.size() != 1) continue;
    const Integer P(std::to_string(p));
    for (std::size_t i = 0; i < D; ++i) {
      const modp::u64 si = i < eg.s.size() ? eg.s[i] : 0;
      // acc + modulus * ((si - acc) / modulus mod p)
      const modp::u64 am = modp::reduce(acc[i], p);
      const modp::u64 mm = modp::reduce(modulus, p);
      const modp::u64 k = modp::mul(modp::sub(si, am, p), modp::inv(mm, p), p);
      acc[i] += modulus * Integer(std::to_string(k));
    }
    modulus *= P;
    for (auto& x : acc) x = zpoly::smod(x, modulus);
    if (++used < next_check) continue;
    next_check *= 2;
    std::vector<Rational> u(D);
    bool ok = true;
    for (std::size_t i = 0; i < D && ok; ++i) {
      auto r = rational_reconstruct(acc[i], modulus);
      if (!r) ok = false;
      else u[i] = *r;
    }
    if (!ok) continue;
    Polynomial U(u);
    Polynomial Aq = from_integers(A);
    if (mul(Aq, U) == one()) return U * (1 / content);
  }
  throw ConsistencyError("modular inverse did not converge");
}

using SimpleRing = FieldPolyRing<SimpleOps>;

// ---------------------------------------------------------------------------
// norm

long double log2_abs(const Integer& x) {
  if (x == 0) return -std::numeric_limits<long double>::infinity();
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log2(std::fabs(static_cast<long double>(m))) + static_cast<long double>(e);
}

long double log2_sum(long double a, long double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const long double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0L + std::exp2(lo - hi));
}

// Res_Y(M(Y), G(x - sY, Y)) for G given by integer coefficient rows
// G[k] (polynomial in Y multiplying X^k).
zpoly::ZPoly norm_resultant(const std::vector<zpoly::ZPoly>& G, const zpoly::ZPoly& M, long s) {
  const int n = static_cast<int>(G.size()) - 1;
  const int D = zpoly::degree(M);
  const int degN = n * D;
  // Coefficient bound via prod over conjugates of the 1-norm.
  long double logR = 0;
  for (int i = 1; i <= D; ++i) {
    const long double t = (log2_abs(M[static_cast<std::size_t>(D - i)]) + (i == D ? -1.0L : 0.0L)) / i;
    logR = std::max(logR, t);
  }
  logR += 1;  // Fujiwara: R <= 2 max |c_{D-i}|^(1/i), with the halved constant term
  const long double log1sR = std::log2(1.0L + static_cast<long double>(s) * std::exp2(std::min(logR, 1000.0L)));
  long double acc = -std::numeric_limits<long double>::infinity();
  for (int k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j < G[static_cast<std::size_t>(k)].size(); ++j) {
      if (G[static_cast<std::size_t>(k)][j] == 0) continue;
      acc = log2_sum(acc, log2_abs(G[static_cast<std::size_t>(k)][j]) + static_cast<long double>(j) * logR +
                              static_cast<long double>(k) * (s ? log1sR : 0.0L));
    }
  }
  const long double bits = static_cast<long double>(D) * acc + 2;
  const std::size_t primes_needed = static_cast<std::size_t>(std::ceil(bits / 61.0L)) + 1;

  std::vector<Integer> coef(static_cast<std::size_t>(degN + 1));
  Integer modulus = 1;
  std::size_t used = 0;
  std::vector<modp::u64> xs(static_cast<std::size_t>(degN + 1));
  for (int i = 0; i <= degN; ++i) xs[static_cast<std::size_t>(i)] = static_cast<modp::u64>(i);
  for (std::size_t idx = 0; used < primes_needed; ++idx) {
    const modp::u64 p = modp::large_prime(idx);
    const modp::Poly Mp = modp::reduce(M, p);
    if (modp::reduce(zpoly::leading(G.back()), p) == 0) continue;
    std::vector<modp::Poly> Gp;
    for (const auto& g : G) Gp.push_back(modp::reduce(g, p));
    std::vector<modp::u64> ys(xs.size());
    const modp::u64 sp = modp::reduce(Integer(s), p);
    for (std::size_t t = 0; t < xs.size(); ++t) {
      // (x - sY) as a polynomial in Y
      modp::Poly lin{xs[t] % p, modp::sub(0, sp, p)};
      modp::trim(lin);
      modp::Poly accp;
      for (int k = n; k >= 0; --k) {
        accp = modp::add(modp::rem(modp::mul(accp, lin, p), Mp, p), Gp[static_cast<std::size_t>(k)], p);
      }
      accp = modp::rem(accp, Mp, p);
      ys[t] = accp.empty() ? 0 : modp::resultant(Mp, accp, p);
    }
    modp::Poly Np = modp::interpolate(xs, ys, p);
    const Integer P(std::to_string(p));
    for (std::size_t i = 0; i < coef.size(); ++i) {
      const modp::u64 ci = i < Np.size() ? Np[i] : 0;
      const modp::u64 am = modp::reduce(coef[i], p);
      const modp::u64 mm = modp::reduce(modulus, p);
      const modp::u64 k = modp::mul(modp::sub(ci, am, p), modp::inv(mm, p), p);
      coef[i] += modulus * Integer(std::to_string(k));
    }
    modulus *= P;
    for (auto& x : coef) x = zpoly::smod(x, modulus);
    ++used;
  }
  zpoly::trim(coef);
  return coef;
}

// Certified squarefree check by a gcd modulo primes preserving the degree.
bool squarefree_modular(const zpoly::ZPoly& N) {
  int tried = 0;
  for (std::size_t idx = 40; tried < 3; ++idx) {
    const modp::u64 p = modp::large_prime(idx);
    if (modp::reduce(zpoly::leading(N), p) == 0) continue;
    ++tried;
    const modp::Poly Np = modp::reduce(N, p);
    if (modp::degree(modp::gcd(Np, modp::derivative(Np, p), p)) == 0) return true;
  }
  return false;
}

std::vector<std::vector<Polynomial>> trager_squarefree(const SimpleRing& R, const std::vector<Polynomial>& F) {
  const int n = R.degree(F);
  if (n <= 1) return {F};
  const SimpleOps& ops = R.ops();
  // Integer rows G[k](Y) = d * F_k(Y).
  Integer d = 1;
  for (const auto& c : F) {
    for (const auto& q : c.coefficients()) d = lcm(d, q.get_den());
  }
  std::vector<zpoly::ZPoly> G;
  for (const auto& c : F) {
    zpoly::ZPoly row;
    for (const auto& q : c.coefficients()) row.push_back(Rational(q * Rational(d)).get_num());
    G.push_back(row);
  }
  for (long s = 0; s <= 64; ++s) {
    zpoly::ZPoly N = norm_resultant(G, *ops.M, s);
    if (zpoly::degree(N) != n * zpoly::degree(*ops.M)) continue;
    if (!squarefree_modular(N)) continue;
    N = zpoly::primitive_part(N);
    if (zpoly::leading(N) < 0) N = zpoly::scale(N, Integer(-1));
    const auto parts = factor_squarefree_integer(N);
    if (parts.size() == 1) return {F};
    std::vector<std::vector<Polynomial>> out;
    int total = 0;
    for (const auto& Ni : parts) {
      // r = Ni(X + s theta) mod F, Horner in K[X]/(F).
      std::vector<Polynomial> acc;
      for (std::size_t j = Ni.size(); j-- > 0;) {
        // acc *= (X + s theta)
        std::vector<Polynomial> next(acc.size() + 1);
        for (std::size_t i = 0; i < acc.size(); ++i) {
          next[i + 1] = next[i + 1] + acc[i];
          if (s != 0) next[i] = next[i] + ops.mul_theta(acc[i]) * Rational(s);
        }
        if (next.empty()) next.resize(1);
        next[0] = next[0] + Polynomial::constant(Rational(Ni[j]));
        R.trim(next);
        if (R.degree(next) >= n) {
          const Polynomial top = next[static_cast<std::size_t>(n)];
          for (int i = 0; i < n; ++i) {
            next[static_cast<std::size_t>(i)] =
                next[static_cast<std::size_t>(i)] - ops.mul(top, F[static_cast<std::size_t>(i)]);
          }
          next.resize(static_cast<std::size_t>(n));
          R.trim(next);
        }
        acc = std::move(next);
      }
      auto h = R.gcd(F, acc);
      if (R.degree(h) < 1) throw ConsistencyError("norm factor has no gcd with the polynomial");
      total += R.degree(h);
      out.push_back(std::move(h));
    }
    if (total != n) throw ConsistencyError("factor degrees do not add up in norm factorization");
    return out;
  }
  throw Error("no squarefree norm found for shifts up to 64");
}

KPoly to_kpoly(const std::vector<Polynomial>& f, const Flattening& F, const TowerField& K) {
  KPoly out;
  const std::size_t D = F.basis.size();
  for (const auto& c : f) {
    Coords u(D);
    for (std::size_t i = 0; i < c.size(); ++i) u[i] = c.coeff(i);
    out.emplace_back(K, from_theta(F, u));
  }
  return out;
}

FieldFactorization factor_over_Q_as_field(const KPoly& f, const TowerField& K) {
  std::vector<Rational> c;
  for (const auto& x : f) c.push_back(x.coords()[0]);
  Factorization fa = factor_over_Q(Polynomial(c));
  FieldFactorization out;
  out.unit = K.from_rational(fa.unit);
  for (const auto& [g, m] : fa.factors) out.factors.emplace_back(kpoly_from_rational(g, K), m);
  return out;
}

}  // namespace

FieldFactorization factor_over_field(const KPoly& f_in, const TowerField& K) {
  KPoly f = normalize_poly(f_in, K);
  if (f.empty()) throw PreconditionError("cannot factor the zero polynomial");
  if (K.height() == 0) return factor_over_Q_as_field(f, K);
  FieldFactorization out;
  out.unit = f.back();
  if (f.size() == 1) return out;
  const AlgebraicElement lc_inv = inverse(f.back());
  for (auto& c : f) c = c * lc_inv;
  if (f.size() == 2) {
    out.factors.emplace_back(f, 1);
    return out;
  }
  const auto flat = flattening(K);
  SimpleOps ops{std::make_shared<zpoly::ZPoly>(flat->theta_minpoly),
                std::make_shared<Polynomial>(from_integers(flat->theta_minpoly))};
  SimpleRing R(ops);
  std::vector<Polynomial> F;
  for (const auto& c : f) F.push_back(Polynomial(to_theta(*flat, c.coords())));
  R.trim(F);
  for (const auto& [part, mult] : R.squarefree(F)) {
    for (const auto& g : trager_squarefree(R, part)) out.factors.emplace_back(to_kpoly(g, *flat, K), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size() || !(a.first == b.first)) return kpoly_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

FieldFactorization factor_over_field(const Polynomial& f, const TowerField& K) {
  return factor_over_field(kpoly_from_rational(f, K), K);
}

std::vector<AlgebraicElement> roots_in_field(const KPoly& f, const TowerField& K) {
  std::vector<AlgebraicElement> roots;
  for (const auto& [g, m] : factor_over_field(f, K).factors) {
    if (g.size() == 2) roots.push_back(-g[0]);
  }
  return roots;
}

std::vector<AlgebraicElement> roots_in_field(const Polynomial& f, const TowerField& K) {
  return roots_in_field(kpoly_from_rational(f, K), K);
}

std::optional<AlgebraicElement> is_qth_power(const AlgebraicElement& a, long q) {
  if (!is_prime(q)) throw PreconditionError("q = " + std::to_string(q) + " is not prime");
  if (a.is_zero()) throw PreconditionError("is_qth_power of zero");
  const TowerField& K = a.home();
  std::vector<AlgebraicElement> roots;
  if (a.is_rational()) {
    Polynomial f = Polynomial::monomial(1, static_cast<std::size_t>(q)) - Polynomial::constant(a.rational_value());
    for (const auto& r : rational_roots(f)) roots.push_back(K.from_rational(r));
    if (roots.empty() && K.height() > 0) roots = roots_in_field(f, K);
  } else {
    KPoly f(static_cast<std::size_t>(q + 1), K.zero());
    f[0] = -a;
    f.back() = K.one();
    roots = roots_in_field(f, K);
  }
  if (roots.empty()) return std::nullopt;
  for (const auto& r : roots) {
    const ComplexBall b = embed(r);
    Real lo(b.precision());
    mpfr_sub(lo.get(), b.re().get(), b.rad().get(), MPFR_RNDD);
    if (!b.certainly_nonreal() && mpfr_sgn(lo.get()) > 0) return r;
  }
  return roots.front();
}

}  // namespace kronecker
