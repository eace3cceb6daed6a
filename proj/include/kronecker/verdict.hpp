// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Kronecker's criterion as a classifier. An irreducible polynomial of odd
// prime degree with rational coefficients that is solvable by radicals has
// either exactly one real root or only real roots; any other real-root count
// certifies unsolvability. The engine never claims solvability.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kronecker/polynomial.hpp"

namespace kronecker {

enum class Conclusion { UnsolvableByRadicals, ConsistentOneReal, ConsistentAllReal, NotApplicable };
std::string to_string(Conclusion c);

enum class DiscStatus { Passes, Fails, NotApplicable };
std::string to_string(DiscStatus s);

/// Sign pre-screen from the discriminant alone.
struct DiscCondition {
  DiscStatus status = DiscStatus::NotApplicable;
  /// Which Kronecker case the sign allows: "one-real", "all-real", "either",
  /// "none" (fails) or the not-applicable reason.
  std::string consistent_with;
  bool operator==(const DiscCondition&) const = default;
};

/// Throws PreconditionError when f is not squarefree.
DiscCondition discriminant_necessary_condition(const Polynomial& f);

struct IrreducibilityEvidence {
  std::string method;  // "eisenstein", "degree<=1", "full-factorization"
  std::optional<Integer> eisenstein_prime;
  std::optional<Integer> eisenstein_shift;
  /// Factor list (text, multiplicity) when the method is a full factorization.
  std::vector<std::pair<std::string, int>> factors;
  bool operator==(const IrreducibilityEvidence&) const = default;
};

struct Verdict {
  std::string input;  // canonical text of f
  int degree = 0;
  bool degree_is_odd_prime = false;
  bool squarefree = false;
  bool irreducible = false;
  IrreducibilityEvidence irreducibility;
  int real_root_count = 0;
  int complex_pair_count = 0;
  int sturm_chain_length = 0;
  int variations_neg_inf = 0;
  int variations_pos_inf = 0;
  Rational discriminant;
  int discriminant_sign = 0;
  bool disc_rule_check = false;
  DiscCondition disc_condition;
  Conclusion conclusion = Conclusion::NotApplicable;
  std::string reason;  // set for NotApplicable
  bool operator==(const Verdict&) const = default;
};

/// Throws PreconditionError for f = 0 and ConsistencyError when an internal
/// cross-check fails (r + 2s = p, sign rule, irreducible => squarefree).
Verdict kronecker_verdict(const Polynomial& f);

enum class ReportFormat { Human, Json };
std::string verdict_report(const Verdict& v, ReportFormat format);
nlohmann::json verdict_to_json(const Verdict& v);
/// Inverse of verdict_to_json. Throws PreconditionError on schema errors.
Verdict verdict_from_json(const nlohmann::json& j);

}  // namespace kronecker
