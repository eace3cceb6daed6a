// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense polynomials over F_p for word-sized odd primes p < 2^63.
// Ascending coefficients in [0, p), trimmed.

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "kronecker/zpoly.hpp"

namespace kronecker::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
u64 pow(u64 a, u64 e, u64 p);
/// a^-1 mod p; a must be nonzero mod p.
u64 inv(u64 a, u64 p);

u64 reduce(const Integer& x, u64 p);
Poly reduce(const zpoly::ZPoly& f, u64 p);
/// Symmetric lift to (-p/2, p/2].
zpoly::ZPoly lift(const Poly& f, u64 p);

void trim(Poly& f);
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
Poly derivative(const Poly& f, u64 p);
Poly monic(const Poly& f, u64 p);
u64 evaluate(const Poly& f, u64 x, u64 p);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b, u64 p);

/// Monic g = gcd(a, b) with s*a + t*b = g.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p);

/// base^e mod m, exponent given as a big integer.
Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p);

/// Res(a, b) over F_p (Euclid with degree bookkeeping).
u64 resultant(const Poly& a, const Poly& b, u64 p);

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p);

/// Splits a monic squarefree product of irreducibles of degree d.
std::vector<Poly> equal_degree(const Poly& f, int d, u64 p, std::mt19937_64& rng);

/// All monic irreducible factors of a monic squarefree f.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng);

/// The polynomial of degree < n through (xs[i], ys[i]), xs distinct.
Poly interpolate(std::span<const u64> xs, std::span<const u64> ys, u64 p);

/// Primes just below 2^62, descending, generated on first use.
u64 large_prime(std::size_t index);

}  // namespace kronecker::modp
