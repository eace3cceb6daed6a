// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Towers Q = K_0 < K_1 < ... < K_h of simple algebraic extensions with a
// fixed complex embedding. Level k adjoins a generator g_k with a monic
// irreducible minimal polynomial over K_{k-1} and a ball that isolates the
// complex root g_k denotes.
//
// Elements are stored as flat rational vectors of length [K_h : Q] in the
// nested power basis: block i (of size [K_{h-1} : Q]) holds the coefficient
// of g_h^i, recursively.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kronecker/ball.hpp"
#include "kronecker/errors.hpp"
#include "kronecker/polynomial.hpp"

namespace kronecker {

using Coords = std::vector<Rational>;

struct Level;
struct HintTable;
struct Flattening;

class AlgebraicElement;

class TowerField {
 public:
  /// The rationals.
  TowerField();

  int height() const { return static_cast<int>(levels_.size()); }
  /// Product of the level degrees.
  int degree() const;
  /// [K_k : K_{k-1}] for 1 <= k <= height.
  int level_degree(int k) const;
  /// [K_k : Q].
  int degree_through(int k) const;
  /// Minimal polynomial of g_k over K_{k-1}, monic, as elements of the
  /// prefix tower of height k-1 (ascending).
  std::vector<AlgebraicElement> level_minpoly(int k) const;
  /// Stored isolating ball of g_k.
  const ComplexBall& root_ball(int k) const;
  /// Certified ball around g_k at working precision >= prec.
  ComplexBall root_ball_at(int k, mpfr_prec_t prec) const;

  /// The tower K_0 < ... < K_k.
  TowerField prefix(int k) const;
  /// Same field with every stored ball recomputed at `prec`.
  TowerField refined(mpfr_prec_t prec) const;
  /// True when this tower's levels start with all levels of `other`.
  bool extends(const TowerField& other) const;
  bool same_as(const TowerField& other) const;

  /// Generator g_k (1 <= k <= height) as an element of this tower.
  AlgebraicElement generator(int k) const;
  AlgebraicElement zero() const;
  AlgebraicElement one() const;
  AlgebraicElement from_rational(const Rational& q) const;

  /// Records an element claimed to equal conj(g_k). Purely a hint for
  /// is_conjugation_invariant, which verifies it before use.
  TowerField with_conjugation_hint(int k, const AlgebraicElement& image) const;
  std::optional<AlgebraicElement> conjugation_hint(int k) const;

  /// Identity of the level objects (refined copies share ids).
  std::vector<std::uint64_t> level_ids() const;

  // Internal plumbing.
  const std::vector<std::shared_ptr<const Level>>& levels() const { return levels_; }
  static TowerField from_levels(std::vector<std::shared_ptr<const Level>> levels,
                                std::shared_ptr<const HintTable> hints);

 private:
  std::vector<std::shared_ptr<const Level>> levels_;
  std::shared_ptr<const HintTable> hints_;
};

class AlgebraicElement {
 public:
  AlgebraicElement();  // zero of Q
  AlgebraicElement(TowerField home, Coords coords);

  const TowerField& home() const { return home_; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const;
  /// Nonzero only in the constant slot.
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  /// The same element viewed in a tower extending home().
  AlgebraicElement lift_to(const TowerField& bigger) const;

  /// Coordinates in the power basis of the top generator over K_{h-1},
  /// each a member of the prefix tower.
  std::vector<AlgebraicElement> top_coefficients() const;

  friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b);
  AlgebraicElement operator-() const;
  /// Equality of values; the homes must be compatible.
  friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b);

 private:
  TowerField home_;
  Coords coords_;
};

AlgebraicElement add(const AlgebraicElement& a, const AlgebraicElement& b);
AlgebraicElement mul(const AlgebraicElement& a, const AlgebraicElement& b);
/// Throws PreconditionError for zero.
AlgebraicElement inverse(const AlgebraicElement& a);
AlgebraicElement pow(const AlgebraicElement& a, unsigned e);

/// Polynomial over a tower, ascending; all coefficients live in the same
/// tower (use `normalize_poly` to lift).
using KPoly = std::vector<AlgebraicElement>;

/// Lifts every coefficient into K and trims zero leading terms.
KPoly normalize_poly(const KPoly& f, const TowerField& K);
KPoly kpoly_from_rational(const Polynomial& f, const TowerField& K);
int kpoly_degree(const KPoly& f);
/// Value of f at x, all inside K.
AlgebraicElement kpoly_evaluate(const KPoly& f, const AlgebraicElement& x);

/// Polynomial over K with a multiplicity, as in Factorization.
struct FieldFactorization {
  AlgebraicElement unit;
  std::vector<std::pair<KPoly, int>> factors;  // monic, sorted
  KPoly product() const;
};

/// Raised by make_extension when m is reducible over its base.
class ReducibleError : public PreconditionError {
 public:
  ReducibleError(const std::string& what, KPoly factor)
      : PreconditionError(what), factor_(std::move(factor)) {}
  const KPoly& factor() const { return factor_; }

 private:
  KPoly factor_;
};

/// Adjoins the root of m selected by `selector` (the unique root whose
/// isolating ball lies inside the selector). Verifies irreducibility.
TowerField make_extension(const TowerField& base, const KPoly& m, const ComplexBall& selector);
TowerField make_extension(const TowerField& base, const Polynomial& m, const ComplexBall& selector);
/// Same without the irreducibility check; for factors already known to be
/// irreducible.
TowerField make_extension_unchecked(const TowerField& base, const KPoly& m, const ComplexBall& selector);

/// Isolating ball of the unique root of f lying in `selector`. Precision
/// doubles from default_precision() up to 16 times that. Throws
/// PreconditionError when the selector holds no root or several roots and
/// PrecisionError at the cap.
ComplexBall select_root(const KPoly& f, const ComplexBall& selector);

int degree_over_Q(const TowerField& K);

/// Certified image of x under the tower's embedding.
ComplexBall embed(const AlgebraicElement& x, mpfr_prec_t prec);
ComplexBall embed(const AlgebraicElement& x);
std::vector<ComplexBall> embed_poly(const KPoly& f, mpfr_prec_t prec);

Polynomial minimal_polynomial(const AlgebraicElement& x);

struct PrimitiveElement {
  AlgebraicElement gamma;
  Polynomial minpoly;       // monic, over Q, degree [K : Q]
  std::vector<int> multipliers;  // gamma_k = g_k + c * gamma_{k-1}; one c per level above 1
  /// Coordinates of x in the basis 1, gamma, ..., gamma^(D-1).
  Coords to_power_basis(const AlgebraicElement& x) const;
  AlgebraicElement from_power_basis(const Coords& c) const;

  std::shared_ptr<const Flattening> flat;
};

/// Throws PreconditionError for Q, Error when the multiplier search fails.
PrimitiveElement primitive_element(const TowerField& K);

/// Complete factorization of f over K (Trager's norm method).
FieldFactorization factor_over_field(const KPoly& f, const TowerField& K);
FieldFactorization factor_over_field(const Polynomial& f, const TowerField& K);

/// All roots of f in K, sorted like the linear factors they come from.
std::vector<AlgebraicElement> roots_in_field(const KPoly& f, const TowerField& K);
std::vector<AlgebraicElement> roots_in_field(const Polynomial& f, const TowerField& K);

/// A q-th root of a inside a's field, preferring a real positive one.
/// Throws PreconditionError when a = 0 or q is not prime.
std::optional<AlgebraicElement> is_qth_power(const AlgebraicElement& a, long q);

/// Images conj(g_1), ..., conj(g_h) when every one of them lies in K;
/// nullopt otherwise.
std::optional<std::vector<AlgebraicElement>> conjugation_map(const TowerField& K);
bool is_conjugation_invariant(const TowerField& K);
/// conj(x) for x in a conjugation invariant field.
AlgebraicElement conjugate(const AlgebraicElement& x, const std::vector<AlgebraicElement>& conj_images);

/// Evaluates x (an element of a tower T) with T's generators replaced by
/// `images` (elements of `target`). Used for homomorphisms between towers.
AlgebraicElement apply_homomorphism(const AlgebraicElement& x,
                                    const std::vector<AlgebraicElement>& images,
                                    const TowerField& target);

/// Elements and polynomials in the expression syntax, with variables
/// g1..gk (level generators) and, for polynomials, X.
AlgebraicElement parse_element(std::string_view text, const TowerField& K);
/// Same syntax with g1..gn bound to the given elements of K.
AlgebraicElement parse_element(std::string_view text, const TowerField& K,
                               const std::vector<AlgebraicElement>& bindings);
KPoly parse_field_polynomial(std::string_view text, const TowerField& K);
/// Sum of rational multiples of generator monomials, e.g. "g1^2 - 3/2*g2 + 1".
std::string format_element(const AlgebraicElement& x);
/// Same with level k printed as names[k-1].
std::string format_element(const AlgebraicElement& x, const std::vector<std::string>& names);
std::string format_field_polynomial(const KPoly& f);

}  // namespace kronecker
