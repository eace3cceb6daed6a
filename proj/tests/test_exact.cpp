// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "kronecker/errors.hpp"
#include "kronecker/parse.hpp"
#include "kronecker/polynomial.hpp"
#include "oracles.hpp"

using namespace kronecker;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Polynomial random_rational_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  const int d = deg(rng);
  std::vector<Rational> v(static_cast<std::size_t>(d + 1));
  for (auto& x : v) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Polynomial(v);
}

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("ring operations") {
    CHECK(P("X+1") + P("X-1") == P("2X"));
    CHECK(P("X-1") * P("X^2+X+1") == P("X^3-1"));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
      auto f = random_rational_poly(rng, 8);
      CHECK(f + Polynomial() == f);
    }
  }

  TEST_CASE("canonical zero and trimming") {
    CHECK((P("X^3+2") - P("X^3+2")).is_zero());
    CHECK((P("X^3+2") - P("X^3+2")).degree() == -1);
    CHECK(P("X^3 + X - X^3").degree() == 1);
    Rational half(2, 4);
    half.canonicalize();
    CHECK(half.get_num() == 1);
    CHECK(half.get_den() == 2);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("0/7").get_den() == 1);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1/"));
  }

  TEST_CASE("divmod") {
    auto qr = poly_divmod(P("X^3-1"), P("X-1"));
    CHECK(qr.quotient == P("X^2+X+1"));
    CHECK(qr.remainder.is_zero());
    qr = poly_divmod(P("X^2+1"), P("X"));
    CHECK(qr.quotient == P("X"));
    CHECK(qr.remainder == P("1"));
    CHECK_THROWS_AS(poly_divmod(P("X^2"), Polynomial()), PreconditionError);
  }

  TEST_CASE("gcd") {
    CHECK(poly_gcd(P("X^2-1"), P("X^3-1")) == P("X-1"));
    CHECK(poly_gcd(P("(X-1)^2"), P("(X-1)(X+1)")) == P("X-1"));
    CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), PreconditionError);
    Polynomial f = P("X^5-4X-2");
    CHECK(poly_gcd(f, derivative(f)) == P("1"));
    CHECK(oracle::coprime_modular(f, derivative(f)) == std::optional<bool>(true));
  }

  TEST_CASE("derivative and evaluation") {
    CHECK(derivative(P("X^5-4X-2")) == P("5X^4-4"));
    CHECK(derivative(P("7")).is_zero());
    CHECK(derivative(P("X^3+X^2-2X-1")) == P("3X^2+2X-2"));
    CHECK(P("X^5-4X-2")(Rational(0)) == -2);
    CHECK(P("X^3+X^2-2X-1")(Rational(1)) == -1);
  }

  TEST_CASE("resultant") {
    CHECK(resultant(P("X-2"), P("X-3")) == -1);
    CHECK(resultant(P("X^2+1"), P("X")) == 1);
    CHECK_THROWS_AS(resultant(Polynomial(), P("X")), PreconditionError);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 60; ++i) {
      auto f = random_rational_poly(rng, 6);
      auto g = random_rational_poly(rng, 6);
      if (f.is_zero() || g.is_zero()) continue;
      Rational r = resultant(f, g);
      Rational s = resultant(g, f);
      if ((f.degree() * g.degree()) % 2 == 1) s = -s;
      CHECK(r == s);
      CHECK(r == oracle::sylvester_resultant(f, g));
    }
  }

  TEST_CASE("discriminant") {
    CHECK(discriminant(P("X^2+1")) == -4);
    CHECK_THROWS_AS(discriminant(P("3")), PreconditionError);

    Polynomial cubic = P("X^3+X^2-2X-1");
    auto nd = oracle::root_product_discriminant(cubic);
    CHECK(std::fabs(static_cast<double>(nd.value - 49)) < 1e-20);
    CHECK(discriminant(cubic) == 49);

    Integer trinomial = oracle::quintic_trinomial_discriminant(-4, -2);
    CHECK(trinomial == -212144);
    CHECK(discriminant(P("X^5-4X-2")) == Rational(trinomial));
  }

  TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("(X-1)^2(X+2)")) == P("(X-1)(X+2)"));
    CHECK(squarefree_part(P("3X^2+6")) == P("X^2+2"));
    Polynomial f = P("X^5-4X-2");
    CHECK(squarefree_part(f) == f);
    CHECK(oracle::coprime_modular(f, derivative(f)) == std::optional<bool>(true));
    auto dec = squarefree_decomposition(P("5(X-1)^3(X+2)^2(X^2+1)"));
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == std::make_pair(P("X^2+1"), 1));
    CHECK(dec[1] == std::make_pair(P("X+2"), 2));
    CHECK(dec[2] == std::make_pair(P("X-1"), 3));
  }

  TEST_CASE("property: ring axioms and divmod round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      auto f = random_rational_poly(rng, 7), g = random_rational_poly(rng, 7), h = random_rational_poly(rng, 7);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      if (!g.is_zero()) CHECK(poly_divmod(f * g, g).remainder.is_zero());
    }
    for (int i = 0; i < 500; ++i) {
      auto f = random_rational_poly(rng, 10), g = random_rational_poly(rng, 6);
      if (g.is_zero()) continue;
      auto [q, r] = poly_divmod(f, g);
      CHECK(q * g + r == f);
      CHECK((r.is_zero() || r.degree() < g.degree()));
    }
  }

  TEST_CASE("property: gcd of constructed instances") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
      auto c = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 5);
      auto a = oracle::random_poly(rng, static_cast<int>(rng() % 4), 5);
      auto b = oracle::random_poly(rng, static_cast<int>(rng() % 4), 5);
      auto f = a * c, g = b * c;
      auto d = poly_gcd(f, g);
      CHECK(poly_divmod(f, d).remainder.is_zero());
      CHECK(poly_divmod(g, d).remainder.is_zero());
      CHECK(poly_divmod(d, c.monic()).remainder.is_zero());
      CHECK(d.leading() == 1);
    }
  }

  TEST_CASE("property: discriminant of products") {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 60) {
      auto f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
      auto g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
      if (discriminant(f * g) == 0) continue;
      ++checked;
      CHECK(discriminant(f) != 0);
      CHECK(discriminant(g) != 0);
      CHECK(poly_gcd(f, g) == P("1"));
    }
  }

  TEST_CASE("property: discriminant against root products") {
    std::mt19937_64 rng(6);
    int checked = 0;
    while (checked < 100) {
      auto f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5), 9);
      Rational d = discriminant(f);
      if (d == 0) continue;
      ++checked;
      auto nd = oracle::root_product_discriminant(f);
      const long double exact = std::stold(d.get_str());
      CHECK(std::fabs(static_cast<double>((nd.value - exact) / exact)) <= static_cast<double>(nd.rel_tol) + 1e-25);
    }
  }
}

TEST_SUITE("poly-parse") {
  TEST_CASE("examples") {
    auto f = parse_polynomial("X^5 - 4X - 2");
    std::vector<Rational> want{-2, -4, 0, 0, 0, 1};
    CHECK(std::vector<Rational>(f.coefficients().begin(), f.coefficients().end()) == want);
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("(X-1)*(X+1)") == P("X^2-1"));
    CHECK(parse_polynomial("2(x+1)") == P("2X+2"));
    CHECK(parse_polynomial("3/2 X^2") == Polynomial(std::vector<Rational>{0, 0, Rational(3, 2)}));
    CHECK(parse_polynomial("-X^2") == Polynomial(std::vector<Rational>{0, 0, -1}));
    CHECK(parse_polynomial("X - -1") == P("X+1"));
    CHECK(parse_polynomial("(X+1)^3") == P("X^3+3X^2+3X+1"));
  }

  TEST_CASE("format") {
    CHECK(format_polynomial(Polynomial(std::vector<Rational>{-2, -4, 0, 0, 0, 1})) == "X^5 - 4*X - 2");
    CHECK(format_polynomial(Polynomial()) == "0");
    CHECK(format_polynomial(Polynomial(std::vector<Rational>{0, 0, Rational(-3, 2)})) == "-3/2*X^2");
    CHECK(format_polynomial(P("X")) == "X");
  }

  TEST_CASE("errors") {
    auto diag = [](const char* s) {
      try {
        parse_polynomial(s);
      } catch (const ParseError& e) {
        return e.diagnostic();
      }
      FAIL("expected a parse error for " << s);
      return ParseDiagnostic{};
    };
    CHECK(diag("X^-1").message == "negative exponent");
    CHECK(diag("X^1/2").message == "exponent must be a nonnegative integer");
    CHECK(diag("Y + 1").message == "unknown variable 'Y'");
    CHECK(diag("Y + 1").offset == 0);
    CHECK(diag("X + ").offset == 4);
    CHECK(diag("(X + 1").message == "missing ')'");
    CHECK(diag("X + 1)").offset == 5);
    CHECK(diag("1/0").message == "denominator must be positive");
    CHECK(diag("").offset == 0);
    CHECK(diag("X $").offset == 2);
  }

  TEST_CASE("property: format round trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> big(-1000000000L, 1000000000L), den(1, 1000), deg(0, 20);
    for (int i = 0; i < 1000; ++i) {
      std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
      for (auto& x : v) {
        x = (rng() % 3 == 0) ? Rational(0) : Rational(big(rng), den(rng));
        x.canonicalize();
      }
      Polynomial f(v);
      CHECK(parse_polynomial(format_polynomial(f)) == f);
    }
  }

  TEST_CASE("property: grammar generator always parses") {
    std::mt19937_64 rng(8);
    std::function<std::string(int)> poly, term, factor;
    factor = [&](int depth) -> std::string {
      switch (rng() % (depth > 3 ? 3 : 5)) {
        case 0: return std::to_string(rng() % 50) + (rng() % 3 == 0 ? "/" + std::to_string(1 + rng() % 9) : "");
        case 1: return std::string(rng() % 2 ? "X" : "x") + (rng() % 2 ? "^" + std::to_string(rng() % 6) : "");
        case 2: return "-" + factor(depth + 1);
        default: return "(" + poly(depth + 1) + ")";
      }
    };
    term = [&](int depth) {
      std::string s = factor(depth);
      const int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) {
        std::string next = factor(depth);
        // A leading '-' may not start an implicit factor.
        s += (rng() % 2 || next[0] == '-') ? " * " + next : " " + next;
      }
      return s;
    };
    poly = [&](int depth) {
      std::string s = term(depth);
      const int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) s += (rng() % 2 ? " + " : " - ") + term(depth);
      return s;
    };
    for (int i = 0; i < 500; ++i) {
      std::string s = poly(0);
      CHECK_NOTHROW(parse_polynomial(s));
    }
  }

  TEST_CASE("property: arbitrary bytes never crash") {
    std::mt19937_64 rng(9);
    const std::string alphabet = "Xx0123456789+-*/^() \t\n\x01\xff" "ag";
    for (int i = 0; i < 5000; ++i) {
      std::string s;
      const int len = static_cast<int>(rng() % 24);
      for (int k = 0; k < len; ++k) {
        s.push_back(rng() % 5 == 0 ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()]);
      }
      try {
        parse_polynomial(s);
      } catch (const ParseError& e) {
        CHECK(e.diagnostic().offset <= s.size());
      }
    }
    CHECK_THROWS_AS(parse_polynomial(std::string(5000, '(')), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(X^9999)^9999"), ParseError);
  }
}
