// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kronecker {

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator, and zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "n" or "n/d" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Trial-division primality for small values, Miller-Rabin (GMP) above.
bool is_prime(const Integer& n);
bool is_prime(long n);

}  // namespace kronecker
