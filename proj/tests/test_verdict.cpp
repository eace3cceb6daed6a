// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "kronecker/verdict.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace kronecker;
using testsupport::P;

TEST_SUITE("verdict") {
  TEST_CASE("classic quintic") {
    auto v = kronecker_verdict(P("X^5-4X-2"));
    CHECK(v.conclusion == Conclusion::UnsolvableByRadicals);
    CHECK(v.degree_is_odd_prime);
    CHECK(v.irreducibility.method == "eisenstein");
    CHECK(*v.irreducibility.eisenstein_prime == 2);
    CHECK(*v.irreducibility.eisenstein_shift == 0);
    CHECK(v.real_root_count == 3);
    CHECK(v.complex_pair_count == 1);
    CHECK(v.discriminant == -212144);
    CHECK(Rational(oracle::quintic_trinomial_discriminant(-4, -2)) == v.discriminant);
    CHECK(v.discriminant_sign == -1);
    CHECK(v.disc_rule_check);
    CHECK(v.disc_condition.status == DiscStatus::Fails);

    auto j = verdict_to_json(v);
    CHECK(j["conclusion"] == "UNSOLVABLE_BY_RADICALS");
    CHECK(j["certificate"]["irreducibility"]["method"] == "eisenstein");
    CHECK(j["certificate"]["irreducibility"]["prime"] == "2");
    CHECK(j["certificate"]["irreducibility"]["shift"] == "0");
    CHECK(j["certificate"]["sturm"]["real_roots"] == 3);
    CHECK(j["certificate"]["discriminant"]["value"] == "-212144");
    CHECK(j["certificate"]["discriminant"]["sign"] == -1);
  }

  TEST_CASE("other examples") {
    auto c = kronecker_verdict(P("X^3+X^2-2X-1"));
    CHECK(c.conclusion == Conclusion::ConsistentAllReal);
    CHECK(c.discriminant == 49);
    CHECK(c.disc_condition.status == DiscStatus::Passes);
    CHECK(c.disc_condition.consistent_with == "all-real");

    auto q = kronecker_verdict(P("X^2-2"));
    CHECK(q.conclusion == Conclusion::NotApplicable);
    CHECK(q.reason == "degree-not-odd-prime");
    CHECK(verdict_report(q, ReportFormat::Human) == "NOT_APPLICABLE: degree-not-odd-prime (X^2 - 2)\n");

    CHECK(kronecker_verdict(P("X^5-2")).conclusion == Conclusion::ConsistentOneReal);
    auto r = kronecker_verdict(P("X^5+X+1"));
    CHECK(r.conclusion == Conclusion::NotApplicable);
    CHECK(r.reason == "reducible");
    REQUIRE(r.irreducibility.factors.size() == 2);
    CHECK(r.irreducibility.factors[0].first == "X^2 + X + 1");
    CHECK(kronecker_verdict(P("(X-1)^2 (X+2)")).reason == "not-squarefree-degenerate");
    CHECK(kronecker_verdict(P("7")).reason == "degree-not-odd-prime");
    CHECK_THROWS_AS(kronecker_verdict(P("0")), PreconditionError);
  }

  TEST_CASE("discriminant condition") {
    auto a = discriminant_necessary_condition(P("X^5-4X-2"));
    CHECK(a.status == DiscStatus::Fails);
    CHECK(oracle::quintic_trinomial_discriminant(-4, -2) < 0);
    auto b = discriminant_necessary_condition(P("X^3+X^2-2X-1"));
    CHECK(b.status == DiscStatus::Passes);
    CHECK(b.consistent_with == "all-real");
    CHECK(oracle::sylvester_resultant(P("X^3+X^2-2X-1"), P("3X^2+2X-2")) == -49);
    CHECK(discriminant_necessary_condition(P("X^3-2")).consistent_with == "one-real");
    CHECK(discriminant_necessary_condition(P("X^5-2")).consistent_with == "either");
    CHECK(discriminant_necessary_condition(P("X^5+X+1")).status == DiscStatus::NotApplicable);
    CHECK_THROWS_AS(discriminant_necessary_condition(P("(X-1)^2 (X+2)")), PreconditionError);
  }

  TEST_CASE("JSON round trip and scaling") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 60; ++i) {
      auto f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 7), 6);
      auto v = kronecker_verdict(f);
      auto j = verdict_to_json(v);
      CHECK(verdict_from_json(j) == v);
      CHECK(verdict_from_json(nlohmann::json::parse(j.dump())) == v);
      const long scales[] = {-5, -2, -1, 2, 3, 11};
      const Rational c(scales[rng() % 6], 1 + static_cast<long>(rng() % 7));
      CHECK(kronecker_verdict(f * c).conclusion == v.conclusion);
    }
    CHECK_THROWS_AS(verdict_from_json(nlohmann::json::parse("{}")), PreconditionError);
  }

  TEST_CASE("property: consistency triangle on random polynomials") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 200; ++i) {
      auto f = oracle::random_poly(rng, 3 + static_cast<int>(rng() % 5), 10);
      auto v = kronecker_verdict(f);
      if (v.squarefree) {
        CHECK(v.real_root_count + 2 * v.complex_pair_count == v.degree);
        CHECK(v.discriminant_sign == (v.complex_pair_count % 2 ? -1 : 1));
        CHECK(v.real_root_count == oracle::bisection_real_root_count(f));
      }
      if (v.irreducible) CHECK(v.squarefree);
      CHECK((v.conclusion == Conclusion::UnsolvableByRadicals) ==
            (v.degree_is_odd_prime && v.irreducible && v.real_root_count != 1 && v.real_root_count != v.degree));
    }
  }

  TEST_CASE("exhaustive monic quintics with small coefficients") {
    long unsolvable = 0, total = 0;
    for (int a0 = -3; a0 <= 3; ++a0)
      for (int a1 = -3; a1 <= 3; ++a1)
        for (int a2 = -3; a2 <= 3; ++a2)
          for (int a3 = -3; a3 <= 3; ++a3)
            for (int a4 = -3; a4 <= 3; ++a4) {
              auto f = Polynomial::from_ints({a0, a1, a2, a3, a4, 1});
              auto v = kronecker_verdict(f);
              ++total;
              if (v.conclusion != Conclusion::UnsolvableByRadicals) continue;
              ++unsolvable;
              const int r = oracle::bisection_real_root_count(f);
              if (r == 1 || r == 5 || r != v.real_root_count) {
                FAIL_CHECK("bad verdict for " << v.input);
              }
            }
    CHECK(total == 16807);
    CHECK(unsolvable > 0);
    MESSAGE(unsolvable << " of " << total << " quintics certified unsolvable");
  }
}
