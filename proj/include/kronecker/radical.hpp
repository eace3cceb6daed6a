// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Radical chains Q = K_0 < K_1 < ... where each step adjoins a root of
// X^q - a, q prime. A step whose binomial is reducible adjoins only the
// irreducible factor vanishing at the selected root; a linear factor makes
// the step trivial (recorded, no new level).

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kronecker/tower.hpp"

namespace kronecker {

struct RadicalStep {
  long q = 0;
  AlgebraicElement radicand;  // in the field before the step
  ComplexBall root_selector;
};

struct RadicalChain {
  std::vector<RadicalStep> steps;
  /// Root of step i inside the tower right after step i.
  std::vector<AlgebraicElement> roots;
  /// Level adjoined by step i, or 0 for a trivial step.
  std::vector<int> levels;
  /// Whether X^q - a was irreducible over the field before step i.
  std::vector<bool> irreducible_radical;
  TowerField realized;

  /// Field before step i (0-based).
  TowerField base_of(std::size_t i) const;
  /// Step roots lifted into the realized tower.
  std::vector<AlgebraicElement> roots_in_top() const;
};

/// Step as written in a chain file: the radicand is text over g1..gk, the
/// roots of the earlier steps.
struct StepDescription {
  long q = 0;
  std::string radicand;
  ComplexBall root;
};

RadicalChain empty_chain();
/// Appends one step. `radicand` must live in (a prefix of) chain.realized.
RadicalChain extend_chain(const RadicalChain& chain, long q, const AlgebraicElement& radicand,
                          const ComplexBall& selector);
RadicalChain build_chain(const std::vector<StepDescription>& steps);

std::vector<StepDescription> parse_chain_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const RadicalChain& chain);

struct RhoInfo {
  /// rho, the real positive q-th root of a * conj(a), inside `field`.
  AlgebraicElement rho;
  /// True when rho already lies in the base of the step.
  bool in_base = false;
  /// The base, or the base extended by rho.
  TowerField field;
  /// a * conj(a), in the base.
  AlgebraicElement norm;
  /// Ball used to pick rho among the roots of X^q - a * conj(a).
  ComplexBall selector;
};

/// rho for a step with radicand a over a conjugation invariant base.
/// Throws PreconditionError when the base is not conjugation invariant.
RhoInfo rho_for(const TowerField& base, long q, const AlgebraicElement& a);
RhoInfo rho_of_step(const RadicalChain& chain, std::size_t step);

struct ConjugationInvariantChain {
  RadicalChain chain;
  /// Root of each input step expressed in chain.realized.
  std::vector<AlgebraicElement> original_roots;
};

/// Every level of the result is conjugation invariant (checked before
/// returning); the input top field embeds into the output top field.
ConjugationInvariantChain make_conjugation_invariant(const RadicalChain& chain);

enum class RadicalKind { Irreducible, Reducible };
std::string to_string(RadicalKind k);

struct ReducibilityReport {
  std::size_t step = 0;  // 1-based step index
  int level = 0;         // level of the realized tower
  int step_degree = 0;   // [K_i : K_(i-1)]
  std::vector<int> factor_degrees;
  bool nagell_divisibility = false;
  RadicalKind radical_kind = RadicalKind::Irreducible;
};

/// First step over which f (irreducible over Q) splits. Throws
/// PreconditionError when f is reducible over Q and ConsistencyError when a
/// prime-degree f violates p | [K_i : K_(i-1)].
std::optional<ReducibilityReport> first_reducibility(const RadicalChain& chain, const Polynomial& f);

/// Counters over every report first_reducibility produced in this process.
struct NagellStatistics {
  long reports = 0;
  long prime_degree_reports = 0;
  long violations = 0;
};
NagellStatistics nagell_statistics();

struct RhoCriterion {
  int predicted = 0;    // p when rho lies in K, 1 otherwise
  int sturm_count = 0;  // real roots of f, for comparison
  bool rho_in_base = false;
};

/// Real-root prediction for f from the step producing L = K(alpha), where
/// K = chain.base_of(step). Each hypothesis is checked; a failure throws
/// PreconditionError naming it.
RhoCriterion rho_criterion(const RadicalChain& chain, std::size_t step, const Polynomial& f);

nlohmann::json report_to_json(const ReducibilityReport& r);
nlohmann::json rho_criterion_to_json(const RhoCriterion& r);

}  // namespace kronecker
