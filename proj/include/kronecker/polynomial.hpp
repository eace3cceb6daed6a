// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kronecker/rational.hpp"

namespace kronecker {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies X^i. The coefficient vector is either empty (the
/// zero polynomial) or has a nonzero last entry; every operation returns
/// values in this canonical form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t exponent);
  static Polynomial x() { return monomial(Rational(1), 1); }
  /// Convenience for tests and literals: ascending integer coefficients.
  static Polynomial from_ints(std::initializer_list<long> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of X^i; zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_constant() const { return coeffs_.size() <= 1; }
  /// True when every coefficient has denominator 1.
  bool has_integer_coefficients() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;

  /// f / lc(f). The zero polynomial is returned unchanged.
  Polynomial monic() const;
  /// f(X + c).
  Polynomial shifted(const Rational& c) const;
  /// f(c * X).
  Polynomial scaled_argument(const Rational& c) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Named forms of the ring operations.
inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return f - g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q; throws PreconditionError when g is zero.
DivMod poly_divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd; throws PreconditionError for gcd(0, 0).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

Polynomial derivative(const Polynomial& f);

inline Rational evaluate(const Polynomial& f, const Rational& x) { return f(x); }

/// Res(f, g) = lc(f)^deg g * prod g(roots of f), computed with the
/// subresultant algorithm on primitive integer parts.
/// Throws PreconditionError when either input is zero.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws PreconditionError for constants.
Rational discriminant(const Polynomial& f);

/// f / gcd(f, f'), made monic. Throws PreconditionError for f = 0.
Polynomial squarefree_part(const Polynomial& f);

/// Yun's decomposition: monic squarefree pairwise coprime a_i with
/// f = lc(f) * prod a_i^i. Entries with a_i = 1 are omitted.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

/// Positive rational c with f = c * F, F integral primitive with the sign of
/// lc(f) kept in F. Returns F's coefficients; c is written to *content.
std::vector<Integer> primitive_integer_part(const Polynomial& f, Rational* content = nullptr);

Polynomial from_integers(std::span<const Integer> ascending);

}  // namespace kronecker
