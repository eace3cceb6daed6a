// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronecker/polynomial.hpp"
#include "kronecker/zpoly.hpp"

namespace kronecker {

/// unit * prod factor^multiplicity == input. Factors are monic, distinct,
/// sorted by degree then by coefficients.
struct Factorization {
  Rational unit;
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial product() const;
  bool operator==(const Factorization&) const = default;
};

/// Criterion applied to F(X + shift), F the primitive integer part.
struct EisensteinWitness {
  Integer prime;
  Integer shift;
  bool operator==(const EisensteinWitness&) const = default;
};

/// Rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const Polynomial& f);

/// Shifts are tried in the order 0, 1, -1, 2, -2, ... up to |shift| <= bound;
/// for each shift the primes dividing every non-leading coefficient are
/// tried in increasing order.
std::optional<EisensteinWitness> eisenstein_witness(const Polynomial& f, long shift_bound = 1);

/// True iff the criterion holds for (f, w).
bool check_eisenstein(const Polynomial& f, const EisensteinWitness& w);

Factorization factor_over_Q(const Polynomial& f);

enum class IrreducibilityMethod { Eisenstein, DegreeAtMostOne, FullFactorization };
std::string to_string(IrreducibilityMethod m);

struct IrreducibilityCertificate {
  bool irreducible = false;
  IrreducibilityMethod method = IrreducibilityMethod::FullFactorization;
  std::optional<EisensteinWitness> eisenstein;
  std::optional<Factorization> factorization;  // set for FullFactorization
};

/// Throws PreconditionError for constants.
IrreducibilityCertificate is_irreducible_over_Q(const Polynomial& f);

/// Irreducible factors over Z of a primitive squarefree F with positive
/// leading coefficient; each factor primitive with positive leading
/// coefficient, sorted like Factorization.
std::vector<zpoly::ZPoly> factor_squarefree_integer(const zpoly::ZPoly& F);

/// Sorting key used for every factor list.
bool factor_less(const Polynomial& a, const Polynomial& b);

}  // namespace kronecker
