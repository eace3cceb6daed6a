// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/sturm.hpp"

#include <algorithm>

#include "kronecker/errors.hpp"
#include "kronecker/parse.hpp"
#include "kronecker/zpoly.hpp"

namespace kronecker {

namespace {

using zpoly::ZPoly;

// Sign of F(n/d) for integer F, without leaving Z.
int sign_at(const ZPoly& F, const Rational& x) {
  if (F.empty()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = 0, dpow = 1;
  for (auto it = F.rbegin(); it != F.rend(); ++it) {
    acc = acc * n + *it * dpow;
    dpow *= d;
  }
  return sgn(acc);
}

// Chain scaled by positive constants only: each entry is primitive over Z.
std::vector<ZPoly> integer_chain(const ZPoly& f) {
  std::vector<ZPoly> c;
  c.push_back(zpoly::primitive_part(f));
  ZPoly d = zpoly::derivative(c[0]);
  if (d.empty()) return c;
  c.push_back(zpoly::primitive_part(d));
  while (true) {
    const ZPoly& a = c[c.size() - 2];
    const ZPoly& b = c.back();
    if (zpoly::degree(b) == 0) break;
    ZPoly r = zpoly::pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^(da - db + 1) * rem; undo a negative factor.
    const int e = zpoly::degree(a) - zpoly::degree(b) + 1;
    const bool flip = sgn(zpoly::leading(b)) < 0 && (e % 2 == 1);
    Integer g = zpoly::content(r);
    if (!flip) g = -g;
    c.push_back(zpoly::divide_scalar(r, g));
  }
  return c;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<ZPoly>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(sign_at(p, x));
  return variations(s);
}

int variations_inf(const std::vector<ZPoly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& p : chain) {
    int sg = sgn(zpoly::leading(p));
    if (!positive && zpoly::degree(p) % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

ZPoly squarefree_integer(const Polynomial& f) {
  return primitive_integer_part(squarefree_part(f));
}

Rational split_point(const ZPoly& F, const Rational& lo, const Rational& hi) {
  // Midpoint, nudged off any root.
  for (long den = 2;; ++den) {
    for (long k = den / 2, step = 0; step < den; ++step) {
      const long kk = (step % 2 == 0) ? k + step / 2 : k - (step + 1) / 2;
      if (kk <= 0 || kk >= den) continue;
      Rational m = lo + (hi - lo) * Rational(kk, den);
      if (sign_at(F, m) != 0) return m;
    }
  }
}

}  // namespace

SturmChain sturm_chain(const Polynomial& f) {
  if (f.degree() < 1) throw PreconditionError("sturm_chain: polynomial must have degree >= 1");
  Polynomial g = poly_gcd(f, derivative(f));
  if (g.degree() > 0) {
    throw PreconditionError("sturm_chain: polynomial is not squarefree; repeated factor " +
                            format_polynomial(g));
  }
  SturmChain chain;
  chain.polynomials.push_back(f);
  chain.polynomials.push_back(derivative(f));
  while (true) {
    const auto& a = chain.polynomials[chain.polynomials.size() - 2];
    const auto& b = chain.polynomials.back();
    Polynomial r = poly_divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain.polynomials.push_back(-r);
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : chain.polynomials) s.push_back(sgn(p(x)));
  return variations(s);
}

int sign_variations_at_pos_inf(const SturmChain& chain) {
  std::vector<int> s;
  for (const auto& p : chain.polynomials) s.push_back(sgn(p.leading()));
  return variations(s);
}

int sign_variations_at_neg_inf(const SturmChain& chain) {
  std::vector<int> s;
  for (const auto& p : chain.polynomials) {
    int sg = sgn(p.leading());
    if (p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

SturmSummary sturm_summary(const Polynomial& f) {
  if (f.degree() < 1) throw PreconditionError("count_real_roots: polynomial must have degree >= 1");
  auto chain = integer_chain(squarefree_integer(f));
  SturmSummary s;
  s.chain_length = static_cast<int>(chain.size());
  s.variations_neg_inf = variations_inf(chain, false);
  s.variations_pos_inf = variations_inf(chain, true);
  s.real_roots = s.variations_neg_inf - s.variations_pos_inf;
  return s;
}

int count_real_roots(const Polynomial& f) { return sturm_summary(f).real_roots; }

int count_real_roots_in(const Polynomial& f, const Interval& iv) {
  if (f.degree() < 1) throw PreconditionError("count_real_roots_in: polynomial must have degree >= 1");
  if (!(iv.lo < iv.hi)) throw PreconditionError("count_real_roots_in: interval needs lo < hi");
  if (f(iv.lo) == 0 || f(iv.hi) == 0) {
    throw PreconditionError("count_real_roots_in: an endpoint is a root; perturb the interval");
  }
  auto chain = integer_chain(squarefree_integer(f));
  return variations_at(chain, iv.lo) - variations_at(chain, iv.hi);
}

Rational cauchy_bound(const Polynomial& f) {
  if (f.degree() < 1) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max<Rational>(m, abs(f.coeff(static_cast<std::size_t>(i))));
  return 1 + m / abs(f.leading());
}

Interval refine_root(const Polynomial& f, Interval iv, const Rational& width) {
  ZPoly F = squarefree_integer(f);
  int slo = sign_at(F, iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational m = split_point(F, iv.lo, iv.hi);
    int sm = sign_at(F, m);
    if (sm == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

std::vector<Interval> isolate_real_roots(const Polynomial& f, const Rational& max_width) {
  if (f.degree() < 1) throw PreconditionError("isolate_real_roots: polynomial must have degree >= 1");
  ZPoly F = squarefree_integer(f);
  auto chain = integer_chain(F);
  const Rational b = cauchy_bound(from_integers(F));
  std::vector<Interval> out;
  struct Job {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Job> stack{{-b, b, variations_at(chain, -b), variations_at(chain, b)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    const int n = j.vlo - j.vhi;
    if (n == 0) continue;
    if (n == 1) {
      Interval iv{j.lo, j.hi};
      if (iv.hi - iv.lo > max_width) iv = refine_root(from_integers(F), iv, max_width);
      out.push_back(iv);
      continue;
    }
    Rational m = split_point(F, j.lo, j.hi);
    int vm = variations_at(chain, m);
    stack.push_back({j.lo, m, j.vlo, vm});
    stack.push_back({m, j.hi, vm, j.vhi});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace kronecker
