// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "kronecker/errors.hpp"
#include "kronecker/factor.hpp"
#include "kronecker/parse.hpp"
#include "kronecker/sturm.hpp"
#include "oracles.hpp"

using namespace kronecker;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<Polynomial> chain_of(const char* s) { return sturm_chain(P(s)).polynomials; }

}  // namespace

TEST_SUITE("real-roots") {
  TEST_CASE("sturm chain") {
    CHECK(chain_of("X^2-2") == std::vector<Polynomial>{P("X^2-2"), P("2X"), P("2")});
    CHECK(chain_of("X^2+1") == std::vector<Polynomial>{P("X^2+1"), P("2X"), P("-1")});
    CHECK_THROWS_AS(sturm_chain(P("(X-1)^2")), PreconditionError);
    try {
      sturm_chain(P("(X-1)^2"));
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("X - 1") != std::string::npos);
    }
    auto c = sturm_chain(P("X^5-4X-2"));
    for (std::size_t i = 1; i < c.polynomials.size(); ++i) {
      CHECK(c.polynomials[i].degree() < c.polynomials[i - 1].degree());
    }
    CHECK(c.polynomials.back().degree() == 0);
    CHECK(sign_variations_at_neg_inf(c) - sign_variations_at_pos_inf(c) == 3);
  }

  TEST_CASE("counting") {
    CHECK(count_real_roots(P("X^5-4X-2")) == 3);
    CHECK(count_real_roots(P("X^2+1")) == 0);
    CHECK(count_real_roots(P("X^3+X^2-2X-1")) == 3);
    CHECK(count_real_roots(P("(X-1)^3(X+1)")) == 2);
  }

  TEST_CASE("counting in an interval") {
    CHECK(count_real_roots_in(P("X^2-2"), {0, 2}) == 1);
    CHECK(count_real_roots_in(P("X^2-2"), {-2, 2}) == 2);
    CHECK(count_real_roots_in(P("X^5-4X-2"), {-1, 0}) == 1);
    CHECK(oracle::bisection_real_root_count_in(P("X^5-4X-2"), -1, 0) == 1);
    CHECK(oracle::bisection_real_root_count_in(P("X^5-4X-2"), Rational(-52, 100), Rational(-50, 100)) == 1);
    CHECK_THROWS_AS(count_real_roots_in(P("X^2-1"), {1, 2}), PreconditionError);
  }

  TEST_CASE("isolation") {
    auto iv = isolate_real_roots(P("X^2-2"));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].lo >= Rational(-3, 2));
    CHECK(iv[0].hi <= -1);
    CHECK(iv[1].lo >= 1);
    CHECK(iv[1].hi <= Rational(3, 2));
    CHECK(isolate_real_roots(P("X^2+1")).empty());
    Polynomial f = P("X^5-4X-2");
    auto q = isolate_real_roots(f);
    REQUIRE(q.size() == 3);
    for (const auto& i : q) CHECK(oracle::bisection_real_root_count_in(f, i.lo, i.hi) == 1);
  }

  TEST_CASE("property: random squarefree polynomials") {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 150) {
      auto f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 8), 100);
      if (poly_gcd(f, derivative(f)).degree() > 0) continue;
      ++checked;
      const int r = count_real_roots(f);
      CHECK(r == oracle::bisection_real_root_count(f));
      if (f.degree() % 2 == 1) CHECK(r % 2 == 1);
      const int s = (f.degree() - r) / 2;
      CHECK(sgn(discriminant(f)) == (s % 2 == 0 ? 1 : -1));
      auto iv = isolate_real_roots(f);
      CHECK(static_cast<int>(iv.size()) == r);
      for (std::size_t i = 0; i < iv.size(); ++i) {
        CHECK(iv[i].lo < iv[i].hi);
        CHECK(sgn(f(iv[i].lo)) * sgn(f(iv[i].hi)) < 0);
        if (i > 0) CHECK(iv[i - 1].hi <= iv[i].lo);
      }
    }
  }
}

TEST_SUITE("factor-rational") {
  TEST_CASE("rational roots") {
    CHECK(rational_roots(P("X^7-11")).empty());
    CHECK(rational_roots(P("X^2-X-2")) == std::vector<Rational>{-1, 2});
    CHECK(rational_roots(P("2X-3")) == std::vector<Rational>{Rational(3, 2)});
    CHECK(rational_roots(P("X^2(X-1)^2")) == std::vector<Rational>{0, 0, 1, 1});
    for (const auto& r : rational_roots(P("6X^3-11X^2+6X-1"))) CHECK(P("6X^3-11X^2+6X-1")(r) == 0);
  }

  TEST_CASE("eisenstein") {
    CHECK(eisenstein_witness(P("X^5-4X-2")) == EisensteinWitness{2, 0});
    CHECK(eisenstein_witness(P("X^7-11")) == EisensteinWitness{11, 0});
    CHECK(eisenstein_witness(P("X^2+X+1")) == EisensteinWitness{3, 1});
    CHECK_FALSE(eisenstein_witness(P("X^4+4")).has_value());
    CHECK(check_eisenstein(P("X^3+X^2-2X-1"), {7, 2}));
  }

  TEST_CASE("factor over Q") {
    auto f = factor_over_Q(P("X^4+4"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == P("X^2-2X+2"));
    CHECK(f.factors[1].first == P("X^2+2X+2"));
    CHECK(f.product() == P("X^4+4"));

    f = factor_over_Q(P("X^3+X^2-2X-1"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::make_pair(P("X^3+X^2-2X-1"), 1));

    f = factor_over_Q(P("(X-1)^2(X^2+1)"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::make_pair(P("X-1"), 2));
    CHECK(f.factors[1] == std::make_pair(P("X^2+1"), 1));

    f = factor_over_Q(P("-3/2 X^5 + 3/2 X"));
    CHECK(f.unit == Rational(-3, 2));
    CHECK(f.product() == P("-3/2 X^5 + 3/2 X"));
    CHECK(f.factors.size() == 4);

    // Swinnerton-Dyer style: many modular factors, irreducible over Q.
    f = factor_over_Q(P("X^8-40X^6+352X^4-960X^2+576"));
    CHECK(f.factors.size() == 1);
  }

  TEST_CASE("irreducibility certificates") {
    auto c = is_irreducible_over_Q(P("X^5-4X-2"));
    CHECK(c.irreducible);
    CHECK(c.method == IrreducibilityMethod::Eisenstein);
    CHECK(c.eisenstein == EisensteinWitness{2, 0});
    CHECK_FALSE(is_irreducible_over_Q(P("X^4+4")).irreducible);
    c = is_irreducible_over_Q(P("X^3+X^2-2X-1"));
    CHECK(c.irreducible);
    CHECK(c.method == IrreducibilityMethod::FullFactorization);
    CHECK(is_irreducible_over_Q(P("2X+1")).method == IrreducibilityMethod::DegreeAtMostOne);
    CHECK_THROWS_AS(is_irreducible_over_Q(P("5")), PreconditionError);
  }

  TEST_CASE("property: reconstruction of random products") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
      Polynomial f = Polynomial::constant(Rational(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1));
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < k; ++j) {
        auto g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
        const int m = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < m; ++t) f *= g;
      }
      auto fa = factor_over_Q(f);
      CHECK(fa.product() == f);
      for (std::size_t j = 0; j < fa.factors.size(); ++j) {
        const auto& g = fa.factors[j].first;
        CHECK(g.leading() == 1);
        if (j > 0) CHECK(factor_less(fa.factors[j - 1].first, g));
        if (g.degree() >= 2 && g.degree() <= 3) CHECK(rational_roots(g).empty());
      }
    }
  }

  TEST_CASE("property: factors agree with the interpolation oracle") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
      Polynomial f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 3) *
                     oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 3);
      if (rng() % 2) f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5), 4);
      f = squarefree_part(f);
      if (f.degree() < 1) continue;
      auto fa = factor_over_Q(f);
      for (const auto& [g, m] : fa.factors) {
        CHECK_FALSE(oracle::kronecker_factor(g).has_value());
      }
      CHECK((fa.factors.size() == 1) == !oracle::kronecker_factor(f).has_value());
    }
  }

  TEST_CASE("property: eisenstein implies irreducible") {
    std::mt19937_64 rng(14);
    const long primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 100; ++i) {
      const long p = primes[rng() % 4];
      const int n = 2 + static_cast<int>(rng() % 7);
      std::vector<Rational> v(static_cast<std::size_t>(n + 1));
      for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = p * (static_cast<long>(rng() % 7) - 3);
      v[0] = p * (1 + static_cast<long>(rng() % (p - 1 > 0 ? p - 1 : 1)));
      if (rng() % 2) v[0] = -v[0];
      v[static_cast<std::size_t>(n)] = 1 + static_cast<long>(rng() % (p - 1 > 0 ? p - 1 : 1));
      Polynomial f(v);
      const long shift = static_cast<long>(rng() % 5) - 2;
      f = f.shifted(Rational(-shift));
      auto w = eisenstein_witness(f, 2);
      REQUIRE(w.has_value());
      CHECK(is_irreducible_over_Q(f).irreducible);
      CHECK(factor_over_Q(f).factors.size() == 1);
    }
  }

  TEST_CASE("property: scaling leaves the factor list unchanged") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 60; ++i) {
      auto f = oracle::random_poly(rng, 2, 5) * oracle::random_poly(rng, 3, 5);
      Rational c(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) + 1);
      if (c == 0) c = 7;
      c.canonicalize();
      auto a = factor_over_Q(f), b = factor_over_Q(c * f);
      CHECK(a.factors == b.factors);
      CHECK(b.unit == c * a.unit);
    }
  }
}
