// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

// Factorization over Q: squarefree decomposition, a small prime where the
// polynomial stays squarefree, distinct- and equal-degree splitting there,
// quadratic Hensel lifting along a factor tree, then Zassenhaus
// recombination.

#include "kronecker/factor.hpp"

#include <algorithm>
#include <map>

#include "kronecker/errors.hpp"
#include "kronecker/modp.hpp"

namespace kronecker {

using zpoly::ZPoly;

Polynomial Factorization::product() const {
  Polynomial r = Polynomial::constant(unit);
  for (const auto& [g, m] : factors) {
    for (int i = 0; i < m; ++i) r *= g;
  }
  return r;
}

bool factor_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeff(static_cast<std::size_t>(i));
    const auto& y = b.coeff(static_cast<std::size_t>(i));
    if (x != y) return x < y;
  }
  return false;
}

namespace {

// Prime factors of |n| by trial division up to `limit`; the leftover
// cofactor is appended when it is a probable prime, otherwise `complete`
// is cleared.
std::vector<Integer> prime_factors(Integer n, bool* complete, unsigned long limit = 1000000) {
  std::vector<Integer> out;
  n = abs(n);
  if (complete) *complete = true;
  if (n <= 1) return out;
  for (unsigned long d = 2; d <= limit; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1) {
    if (is_prime(n) || Integer(limit) * limit >= n) {
      out.push_back(n);
    } else if (complete) {
      *complete = false;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> divisors(const Integer& n, bool* complete) {
  std::vector<Integer> ds{1};
  Integer m = abs(n);
  for (const auto& p : prime_factors(m, complete)) {
    std::vector<Integer> next;
    Integer pk = 1;
    Integer r = m;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
      for (const auto& d : ds) next.push_back(d * pk);
      pk *= p;
      r /= p;
    }
    for (const auto& d : ds) next.push_back(d * pk);
    ds = std::move(next);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool vanishes_at(const ZPoly& F, const Rational& x) {
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = 0, dpow = 1;
  for (auto it = F.rbegin(); it != F.rend(); ++it) {
    acc = acc * n + *it * dpow;
    dpow *= d;
  }
  return acc == 0;
}

std::vector<bool> subset_sums(const std::vector<int>& degs, int n) {
  std::vector<bool> s(static_cast<std::size_t>(n + 1), false);
  s[0] = true;
  for (int d : degs) {
    for (int k = n; k >= d; --k) {
      if (s[static_cast<std::size_t>(k - d)]) s[static_cast<std::size_t>(k)] = true;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hensel lifting

struct Lifted {
  ZPoly g, h, s, t;
};

// One quadratic step: from f = gh, sg + th = 1 mod m to the same mod m^2.
Lifted hensel_step(const ZPoly& f, const Lifted& in, const Integer& M) {
  using namespace zpoly;
  ZPoly e = smod(sub(f, mul(in.g, in.h)), M);
  auto qr = divmod_mod(mul(in.s, e), in.h, M);
  Lifted out;
  out.g = smod(add(add(in.g, mul(in.t, e)), mul(qr.quotient, in.g)), M);
  out.h = smod(add(in.h, qr.remainder), M);
  ZPoly b = smod(sub(add(mul(in.s, out.g), mul(in.t, out.h)), ZPoly{1}), M);
  auto cd = divmod_mod(mul(in.s, b), out.h, M);
  out.s = smod(sub(in.s, cd.remainder), M);
  out.t = smod(sub(sub(in.t, mul(in.t, b)), mul(cd.quotient, out.g)), M);
  return out;
}

ZPoly monic_mod(const ZPoly& f, const Integer& M) {
  Integer inv;
  Integer lc = f.back();
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
  return zpoly::smod(zpoly::scale(f, inv), M);
}

// f is known modulo P = p^(2^steps); factors are monic mod p with
// f = lc(f) * prod factors mod p.
std::vector<ZPoly> lift_tree(const ZPoly& f, const std::vector<modp::Poly>& factors, modp::u64 p,
                             int steps) {
  Integer pp(static_cast<unsigned long>(p));
  Integer P = pp;
  for (int i = 0; i < steps; ++i) P *= P;
  if (factors.size() == 1) return {monic_mod(f, P)};
  const std::size_t half = factors.size() / 2;
  std::vector<modp::Poly> A(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<modp::Poly> B(factors.begin() + static_cast<long>(half), factors.end());
  modp::Poly h0{1};
  for (const auto& a : A) h0 = modp::mul(h0, a, p);
  modp::Poly g0 = modp::divmod(modp::reduce(f, p), h0, p).quotient;
  auto eg = modp::ext_gcd(g0, h0, p);
  Lifted cur{modp::lift(g0, p), modp::lift(h0, p), modp::lift(eg.s, p), modp::lift(eg.t, p)};
  Integer m = pp;
  for (int i = 0; i < steps; ++i) {
    m *= m;
    cur = hensel_step(f, cur, m);
  }
  auto left = lift_tree(cur.h, A, p, steps);
  auto right = lift_tree(cur.g, B, p, steps);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// ---------------------------------------------------------------------------
// Recombination

ZPoly product_mod(const std::vector<ZPoly>& u, const std::vector<int>& idx, const Integer& lc,
                  const Integer& P) {
  ZPoly r{lc};
  for (int i : idx) r = zpoly::mul_mod(r, u[static_cast<std::size_t>(i)], P);
  return zpoly::smod(r, P);
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> recombine(ZPoly F, std::vector<ZPoly> u, const Integer& P,
                             const std::vector<bool>& allowed) {
  std::vector<ZPoly> found;
  int s = 1;
  while (2 * s <= static_cast<int>(u.size())) {
    const int r = static_cast<int>(u.size());
    std::vector<int> c(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) c[static_cast<std::size_t>(i)] = i;
    bool hit = false;
    const Integer lc = zpoly::leading(F);
    const Integer lc_const = lc * F[0];
    do {
      int deg = 0;
      for (int i : c) deg += zpoly::degree(u[static_cast<std::size_t>(i)]);
      if (deg >= static_cast<int>(allowed.size()) || !allowed[static_cast<std::size_t>(deg)]) continue;
      // Constant-term test before forming the product.
      Integer c0 = lc;
      for (int i : c) c0 = zpoly::smod(c0 * u[static_cast<std::size_t>(i)][0], P);
      if (c0 == 0 || !mpz_divisible_p(lc_const.get_mpz_t(), c0.get_mpz_t())) continue;
      ZPoly g = product_mod(u, c, lc, P);
      ZPoly G = zpoly::primitive_part(g);
      if (sgn(zpoly::leading(G)) < 0) G = zpoly::scale(G, Integer(-1));
      auto q = zpoly::divide_exact(F, G);
      if (!q) continue;
      found.push_back(G);
      F = *q;
      std::vector<ZPoly> rest;
      for (int i = 0; i < r; ++i) {
        if (std::find(c.begin(), c.end(), i) == c.end()) rest.push_back(u[static_cast<std::size_t>(i)]);
      }
      u = std::move(rest);
      hit = true;
      break;
    } while (next_combination(c, r));
    if (!hit) ++s;
  }
  if (zpoly::degree(F) > 0) {
    if (sgn(zpoly::leading(F)) < 0) F = zpoly::scale(F, Integer(-1));
    found.push_back(F);
  }
  return found;
}

std::vector<modp::u64> small_odd_primes(std::size_t count_limit_value) {
  std::vector<modp::u64> ps;
  for (modp::u64 n = 3; ps.size() < count_limit_value; n += 2) {
    if (is_prime(static_cast<long>(n))) ps.push_back(n);
  }
  return ps;
}

std::vector<ZPoly> factor_primitive_squarefree(const ZPoly& F) {
  const int n = zpoly::degree(F);
  if (n <= 1) return {F};
  const Integer& lc = zpoly::leading(F);

  struct Candidate {
    modp::u64 p;
    modp::Poly fp;
    std::vector<int> degs;
    std::vector<std::pair<modp::Poly, int>> ddf;
  };
  std::vector<Candidate> good;
  std::vector<bool> allowed(static_cast<std::size_t>(n + 1), true);
  static const std::vector<modp::u64> primes = small_odd_primes(400);
  const std::size_t wanted = n <= 4 ? 3 : 7;
  for (modp::u64 p : primes) {
    if (good.size() >= wanted) break;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    modp::Poly fp = modp::monic(modp::reduce(F, p), p);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) > 0) continue;
    Candidate c{p, fp, {}, modp::distinct_degree(fp, p)};
    for (const auto& [g, d] : c.ddf) {
      for (int i = 0; i < modp::degree(g) / d; ++i) c.degs.push_back(d);
    }
    auto sums = subset_sums(c.degs, n);
    bool any = false;
    for (int k = 1; k < n; ++k) {
      allowed[static_cast<std::size_t>(k)] = allowed[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)];
      any = any || allowed[static_cast<std::size_t>(k)];
    }
    if (c.degs.size() == 1 || !any) return {F};
    good.push_back(std::move(c));
  }
  if (good.empty()) throw ConsistencyError("factor: no usable prime found");

  auto best = std::min_element(good.begin(), good.end(), [](const Candidate& a, const Candidate& b) {
    return a.degs.size() < b.degs.size();
  });
  const modp::u64 p = best->p;
  std::mt19937_64 rng(0x6b726f6eULL + p);
  std::vector<modp::Poly> facs;
  for (const auto& [g, d] : best->ddf) {
    auto parts = modp::equal_degree(g, d, p, rng);
    facs.insert(facs.end(), parts.begin(), parts.end());
  }

  // Coefficients of lc * (factor / lc(factor)) are below |lc| 2^n ||F||_2.
  Integer bound = abs(lc) * zpoly::norm2_ceil(F);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  Integer P(static_cast<unsigned long>(p));
  int steps = 0;
  while (P <= bound) {
    P *= P;
    ++steps;
  }
  auto lifted = lift_tree(zpoly::smod(F, P), facs, p, steps);
  auto out = recombine(F, lifted, P, allowed);
  return out;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& F_in) {
  ZPoly F = zpoly::primitive_part(F_in);
  if (F.empty() || zpoly::degree(F) < 1) throw PreconditionError("factor: nonconstant input required");
  if (sgn(zpoly::leading(F)) < 0) F = zpoly::scale(F, Integer(-1));
  std::vector<ZPoly> out;
  if (F[0] == 0) {
    out.push_back(ZPoly{0, 1});
    F.erase(F.begin());
  }
  if (zpoly::degree(F) >= 1) {
    auto parts = factor_primitive_squarefree(F);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) {
    return factor_less(from_integers(a).monic(), from_integers(b).monic());
  });
  return out;
}

Factorization factor_over_Q(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("factor_over_Q: zero polynomial");
  Factorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  for (const auto& [a, m] : squarefree_decomposition(f)) {
    for (const auto& g : factor_squarefree_integer(primitive_integer_part(a))) {
      out.factors.emplace_back(from_integers(g).monic(), m);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return factor_less(x.first, y.first); });
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  ZPoly F = primitive_integer_part(f);
  while (F.size() > 1 && F[0] == 0) {
    roots.emplace_back(0);
    F.erase(F.begin());
  }
  auto multiplicity_of = [&](const Rational& r) {
    // Divide F by (den X - num) as long as it goes.
    ZPoly lin{-r.get_num(), r.get_den()};
    int k = 0;
    while (zpoly::degree(F) >= 1) {
      auto q = zpoly::divide_exact(F, lin);
      if (!q) break;
      F = *q;
      ++k;
    }
    return k;
  };
  if (zpoly::degree(F) >= 1) {
    bool ok0 = true, ok1 = true;
    auto ps = divisors(F[0], &ok0);
    auto qs = divisors(zpoly::leading(F), &ok1);
    if (ok0 && ok1) {
      std::vector<Rational> cands;
      for (const auto& a : ps) {
        for (const auto& b : qs) {
          Rational r(a, b);
          r.canonicalize();
          cands.push_back(r);
          cands.push_back(-r);
        }
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (const auto& r : cands) {
        if (zpoly::degree(F) < 1) break;
        if (vanishes_at(F, r)) {
          int k = multiplicity_of(r);
          for (int i = 0; i < k; ++i) roots.push_back(r);
        }
      }
    } else {
      // Coefficients too large to enumerate divisors; read roots off the
      // linear factors instead.
      for (const auto& [g, m] : factor_over_Q(from_integers(F)).factors) {
        if (g.degree() != 1) continue;
        Rational r = -g.coeff(0);
        for (int i = 0; i < m; ++i) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool check_eisenstein(const Polynomial& f, const EisensteinWitness& w) {
  if (f.degree() < 1 || !is_prime(w.prime)) return false;
  ZPoly F = zpoly::taylor_shift(primitive_integer_part(f), w.shift);
  const Integer& p = w.prime;
  if (mpz_divisible_p(F.back().get_mpz_t(), p.get_mpz_t())) return false;
  for (std::size_t i = 0; i + 1 < F.size(); ++i) {
    if (!mpz_divisible_p(F[i].get_mpz_t(), p.get_mpz_t())) return false;
  }
  Integer p2 = p * p;
  return !mpz_divisible_p(F[0].get_mpz_t(), p2.get_mpz_t());
}

std::optional<EisensteinWitness> eisenstein_witness(const Polynomial& f, long shift_bound) {
  if (f.degree() < 1) return std::nullopt;
  ZPoly F0 = primitive_integer_part(f);
  for (long k = 0; k <= 2 * shift_bound; ++k) {
    const long s = (k == 0) ? 0 : ((k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
    ZPoly F = zpoly::taylor_shift(F0, Integer(s));
    if (F[0] == 0) continue;
    Integer g = 0;
    for (std::size_t i = 0; i + 1 < F.size(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), F[i].get_mpz_t());
    if (g <= 1) continue;
    bool complete = true;
    for (const auto& p : prime_factors(g, &complete)) {
      EisensteinWitness w{p, Integer(s)};
      if (check_eisenstein(f, w)) return w;
    }
  }
  return std::nullopt;
}

std::string to_string(IrreducibilityMethod m) {
  switch (m) {
    case IrreducibilityMethod::Eisenstein: return "eisenstein";
    case IrreducibilityMethod::DegreeAtMostOne: return "degree<=1";
    case IrreducibilityMethod::FullFactorization: return "full-factorization";
  }
  return "";
}

IrreducibilityCertificate is_irreducible_over_Q(const Polynomial& f) {
  if (f.degree() < 1) throw PreconditionError("is_irreducible_over_Q: polynomial must have degree >= 1");
  IrreducibilityCertificate c;
  if (f.degree() == 1) {
    c.irreducible = true;
    c.method = IrreducibilityMethod::DegreeAtMostOne;
    return c;
  }
  if (auto w = eisenstein_witness(f)) {
    c.irreducible = true;
    c.method = IrreducibilityMethod::Eisenstein;
    c.eisenstein = w;
    return c;
  }
  c.method = IrreducibilityMethod::FullFactorization;
  c.factorization = factor_over_Q(f);
  c.irreducible = c.factorization->factors.size() == 1 && c.factorization->factors[0].second == 1;
  return c;
}

}  // namespace kronecker
