// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Polynomial expression syntax:
//
//   poly   := term { ("+"|"-") term }
//   term   := factor { ["*"] factor }
//   factor := primary ["^" natural] | "-" factor
//   primary := rational | variable | "(" poly ")"
//   rational := integer ["/" positive-integer]
//
// Implicit multiplication ("4X", "2(X+1)") is accepted; whitespace is
// ignored between tokens. A factor never starts with "-" inside a term, so
// "X - 1" is a difference.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/polynomial.hpp"

namespace kronecker {

struct ParseDiagnostic {
  std::size_t offset = 0;  // byte offset into the input, <= input length
  std::string message;
  std::string expected;  // hint, may be empty
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic d);
  const ParseDiagnostic& diagnostic() const { return diag_; }

 private:
  ParseDiagnostic diag_;
};

/// Parsed expression tree. Kept around only long enough to evaluate it in
/// whatever ring the caller needs (Q[X], a number field, K[X]).
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Number;
  Rational value;        // Number
  std::string name;      // Variable
  unsigned exponent = 0; // Pow
  std::size_t offset = 0;
  std::vector<Expr> args;
};

/// Accepts the names "X"/"x" plus whatever `known` approves. Variable tokens
/// are "X", "x", or a lowercase letter followed by digits ("g3").
Expr parse_expression(std::string_view text,
                      const std::function<bool(std::string_view)>& known);

/// Largest exponent accepted after "^".
inline constexpr unsigned kMaxExponent = 10000;

template <class T, class NumberFn, class VariableFn>
T evaluate_expression(const Expr& e, NumberFn&& number, VariableFn&& variable) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return number(e.value);
    case Expr::Kind::Variable:
      return variable(e.name, e.offset);
    case Expr::Kind::Neg:
      return -evaluate_expression<T>(e.args[0], number, variable);
    case Expr::Kind::Add:
      return evaluate_expression<T>(e.args[0], number, variable) +
             evaluate_expression<T>(e.args[1], number, variable);
    case Expr::Kind::Sub:
      return evaluate_expression<T>(e.args[0], number, variable) -
             evaluate_expression<T>(e.args[1], number, variable);
    case Expr::Kind::Mul:
      return evaluate_expression<T>(e.args[0], number, variable) *
             evaluate_expression<T>(e.args[1], number, variable);
    case Expr::Kind::Pow: {
      T base = evaluate_expression<T>(e.args[0], number, variable);
      T acc = number(Rational(1));
      unsigned n = e.exponent;
      while (n) {
        if (n & 1u) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
      }
      return acc;
    }
  }
  return number(Rational(0));
}

/// Parses a polynomial in X (or x) with rational coefficients.
Polynomial parse_polynomial(std::string_view text);

/// Descending-degree rendering, e.g. "X^5 - 4*X - 2", "3/2*X^2", "0".
/// parse_polynomial(format_polynomial(f)) == f.
std::string format_polynomial(const Polynomial& f, std::string_view var = "X");

}  // namespace kronecker
