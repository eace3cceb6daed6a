// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "kronecker/polynomial.hpp"

namespace kronecker {

/// f0 = f, f1 = f', f(i+1) = -rem(f(i-1), f(i)), stopping at the last
/// nonzero remainder.
struct SturmChain {
  std::vector<Polynomial> polynomials;
};

/// Open interval (lo, hi) with lo < hi.
struct Interval {
  Rational lo;
  Rational hi;
};

/// Throws PreconditionError for constants and for non-squarefree f (the
/// message names gcd(f, f')).
SturmChain sturm_chain(const Polynomial& f);

/// Sign variations of the chain at x, zeros skipped.
int sign_variations(const SturmChain& chain, const Rational& x);
int sign_variations_at_pos_inf(const SturmChain& chain);
int sign_variations_at_neg_inf(const SturmChain& chain);

/// Data a verifier needs to recheck a real-root count.
struct SturmSummary {
  int real_roots = 0;
  int chain_length = 0;
  int variations_neg_inf = 0;
  int variations_pos_inf = 0;
};

/// Number of distinct real roots. Works on the squarefree part of f.
int count_real_roots(const Polynomial& f);
SturmSummary sturm_summary(const Polynomial& f);

/// Distinct roots in (lo, hi]. Throws PreconditionError when f(lo) or f(hi)
/// vanishes.
int count_real_roots_in(const Polynomial& f, const Interval& iv);

/// Cauchy bound 1 + max|a_i| / |a_n|; every complex root has smaller modulus.
Rational cauchy_bound(const Polynomial& f);

/// Disjoint intervals, one per distinct real root, ascending, each of width
/// at most max_width.
std::vector<Interval> isolate_real_roots(const Polynomial& f,
                                         const Rational& max_width = Rational(1, 2));

/// Shrinks an isolating interval of a squarefree f until hi - lo <= width.
Interval refine_root(const Polynomial& f, Interval iv, const Rational& width);

}  // namespace kronecker
