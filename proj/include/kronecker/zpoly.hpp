// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense integer polynomials, ascending coefficients. This is the
// fraction-free kernel under resultants, Hensel lifting and recombination.

#include <optional>
#include <span>
#include <vector>

#include "kronecker/rational.hpp"

namespace kronecker::zpoly {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline const Integer& leading(const ZPoly& f) { return f.back(); }

/// Nonnegative gcd of all coefficients (0 for the zero polynomial).
Integer content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& f);

/// lc(b)^(deg a - deg b + 1) * a = q * b + r.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// a / b when b divides a over Z, otherwise nullopt.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Coefficientwise exact division by a nonzero integer.
ZPoly divide_scalar(const ZPoly& a, const Integer& c);

Integer evaluate(const ZPoly& f, const Integer& x);

/// f(X + c).
ZPoly taylor_shift(const ZPoly& f, const Integer& c);

/// Subresultant (Collins / Brown) resultant.
Integer resultant(const ZPoly& a, const ZPoly& b);

/// Euclidean norm, rounded up to an integer.
Integer norm2_ceil(const ZPoly& f);
Integer max_abs(const ZPoly& f);

// Arithmetic modulo a positive integer m, symmetric residues in (-m/2, m/2].
Integer smod(const Integer& x, const Integer& m);
ZPoly smod(const ZPoly& f, const Integer& m);
ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m);

struct DivModResult {
  ZPoly quotient;
  ZPoly remainder;
};

/// Division by a polynomial whose leading coefficient is a unit modulo m.
DivModResult divmod_mod(const ZPoly& a, const ZPoly& b, const Integer& m);

}  // namespace kronecker::zpoly
