// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "kronecker/radical.hpp"
#include "kronecker/sturm.hpp"
#include "kronecker/tower_io.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace kronecker;
using namespace testsupport;

namespace {

StepDescription step(long q, const char* a, ComplexBall root) { return {q, a, std::move(root)}; }

const double kRoot7of11 = std::pow(11.0, 1.0 / 7);

// zeta_7 * 11^(1/7)
StepDescription alpha_step() { return step(7, "11", radical_selector(kRoot7of11, 7, 1)); }
StepDescription alpha_bar_step() { return step(7, "11", radical_selector(kRoot7of11, 7, -1)); }

}  // namespace

TEST_SUITE("radical-tower") {
  TEST_CASE("build_chain") {
    auto c = build_chain({alpha_step()});
    CHECK(degree_over_Q(c.realized) == 7);
    CHECK(c.irreducible_radical[0]);
    CHECK(pow(c.roots[0], 7) == c.realized.from_rational(11));

    auto s2 = build_chain({step(2, "2", sel("1.41", "0", "0.1"))});
    CHECK(degree_over_Q(s2.realized) == 2);

    // X^7 - 11 is reducible over the real seventh root of 11; the step
    // adjoins the sextic factor holding zeta * 11^(1/7).
    auto two = build_chain({step(7, "11", sel("1.41", "0", "0.05")), alpha_step()});
    CHECK(two.levels == std::vector<int>{1, 2});
    CHECK(two.realized.level_degree(2) == 6);
    CHECK_FALSE(two.irreducible_radical[1]);
    CHECK(degree_over_Q(two.realized) == 42);

    // A trivial step adds no level.
    auto triv = build_chain({step(2, "2", sel("1.41", "0", "0.1")), step(2, "8", sel("2.83", "0", "0.1"))});
    CHECK(triv.levels == std::vector<int>{1, 0});
    CHECK(triv.roots[1] == triv.realized.generator(1) * triv.realized.from_rational(2));
    CHECK(triv.realized.height() == 1);

    // Radicands refer to earlier step roots: g2 is the root of step 2.
    auto named = build_chain({step(2, "2", sel("1.41", "0", "0.1")), step(2, "2", sel("-1.41", "0", "0.1")),
                              step(3, "g2 + 3", sel("1.16", "0", "0.05"))});
    CHECK(named.levels == std::vector<int>{1, 0, 2});
    CHECK(named.steps[2].radicand == named.realized.prefix(1).from_rational(3) - named.realized.prefix(1).generator(1));

    CHECK_THROWS_AS(build_chain({step(4, "2", sel("1.19", "0", "0.1"))}), PreconditionError);
    CHECK_THROWS_AS(build_chain({step(2, "0", sel("0", "0", "0.1"))}), PreconditionError);
    CHECK_THROWS_AS(build_chain({step(2, "g1", sel("0", "0", "0.1"))}), ParseError);
    CHECK_THROWS_AS(build_chain({step(2, "2", sel("0", "0", "3"))}), PreconditionError);
  }

  TEST_CASE("chain JSON round trip") {
    auto c = build_chain({step(2, "2", sel("1.41", "0", "0.1")), step(3, "1 + g1", sel("1.34", "0", "0.05"))});
    auto j = chain_to_json(c);
    CHECK(j["degree"] == 6);
    CHECK(j["steps"][1]["radicand"] == "g1 + 1");
    auto again = build_chain(parse_chain_json(j["steps"]));
    CHECK(chain_to_json(again).dump() == j.dump());
    auto t = tower_from_json(j["tower"]);
    CHECK(tower_to_json(t).dump() == j["tower"].dump());
    CHECK_THROWS_AS(parse_chain_json(nlohmann::json::parse(R"([{"q": 2}])")), PreconditionError);
    CHECK_THROWS_AS(parse_chain_json(nlohmann::json::parse(R"([{"q": "x", "radicand": "2", "root": {"re": "1", "im": "0", "radius": "1"}}])")),
                    PreconditionError);
    CHECK_THROWS_AS(parse_chain_json(nlohmann::json::parse(R"([{"q": 2, "radicand": "2", "root": {"re": "1", "im": "0", "radius": "-1"}}])")),
                    PreconditionError);
  }

  TEST_CASE("rho of a step") {
    auto c = build_chain({alpha_step()});
    auto rho = rho_of_step(c, 0);
    CHECK_FALSE(rho.in_base);
    CHECK(minimal_polynomial(rho.rho) == P("X^7-121"));
    auto z = build_chain({step(7, "1", zeta_selector(7, 1))});
    auto r1 = rho_of_step(z, 0);
    CHECK(r1.in_base);
    CHECK(r1.rho == TowerField().one());
    auto s = build_chain({step(2, "2", sel("1.41", "0", "0.1"))});
    auto r2 = rho_of_step(s, 0);
    CHECK(r2.in_base);
    CHECK(r2.rho == TowerField().from_rational(2));
    // Base must be conjugation invariant.
    auto bad = build_chain({alpha_step(), step(2, "2", sel("1.41", "0", "0.1"))});
    CHECK_THROWS_AS(rho_of_step(bad, 1), PreconditionError);
  }

  TEST_CASE("property: rho is real, positive and equal to |alpha|^2") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 12; ++i) {
      const long q = (i % 2) ? 3 : 5;
      const long a = 2 + static_cast<long>(rng() % 9);
      const long k = static_cast<long>(rng() % static_cast<unsigned long>(q));
      auto c = build_chain({step(q, std::to_string(a).c_str(), radical_selector(std::pow(double(a), 1.0 / q), q, k))});
      auto rho = rho_of_step(c, 0);
      auto e = embed(rho.rho, 256);
      CHECK(e.re().to_double() > 0);
      auto al = embed(c.roots[0], 256);
      auto n2 = al * al.conj();
      CHECK(n2.overlaps(e));
      CHECK(e.overlaps(e.conj()));  // real within the radius
      CHECK(pow(rho.rho, static_cast<unsigned>(q)) == rho.field.from_rational(Rational(a) * a));
    }
  }

  TEST_CASE("make_conjugation_invariant") {
    auto c = build_chain({alpha_step()});
    auto ci = make_conjugation_invariant(c);
    REQUIRE(ci.chain.steps.size() == 2);
    CHECK(ci.chain.levels == std::vector<int>{1, 2});
    CHECK(minimal_polynomial(ci.chain.roots[0]) == P("X^7-121"));
    CHECK(ci.chain.realized.level_degree(2) == 6);
    CHECK_FALSE(ci.chain.irreducible_radical[1]);
    CHECK(is_conjugation_invariant(ci.chain.realized));
    CHECK(pow(ci.original_roots[0], 7) == ci.chain.realized.from_rational(11));
    CHECK(embed(ci.original_roots[0]).overlaps(embed(c.roots[0])));

    auto s = build_chain({step(2, "2", sel("1.41", "0", "0.1"))});
    CHECK(make_conjugation_invariant(s).chain.steps.size() == 1);
    auto i = build_chain({step(2, "-1", sel("0", "1", "0.1"))});
    auto ii = make_conjugation_invariant(i);
    CHECK(ii.chain.steps.size() == 1);
    CHECK(ii.chain.realized.height() == 1);
  }

  TEST_CASE("first_reducibility") {
    auto c = build_chain({alpha_step(), alpha_bar_step()});
    CHECK(degree_over_Q(c.realized) == 42);
    auto r = first_reducibility(c, P("X^3+X^2-2X-1"));
    REQUIRE(r.has_value());
    CHECK(r->step == 2);
    CHECK(r->factor_degrees == std::vector<int>{1, 1, 1});
    CHECK(r->nagell_divisibility);
    CHECK(r->step_degree == 6);
    CHECK(r->radical_kind == RadicalKind::Reducible);

    auto s = build_chain({step(2, "2", sel("1.41", "0", "0.1"))});
    auto r2 = first_reducibility(s, P("X^2-2"));
    REQUIRE(r2.has_value());
    CHECK(r2->step == 1);
    CHECK(r2->radical_kind == RadicalKind::Irreducible);
    CHECK_FALSE(first_reducibility(s, P("X^2+1")).has_value());
    CHECK_THROWS_AS(first_reducibility(s, P("X^2-1")), PreconditionError);
  }

  TEST_CASE("rho_criterion") {
    auto z7 = build_chain({step(7, "1", zeta_selector(7, 1))});
    auto r = rho_criterion(z7, 0, P("X^3+X^2-2X-1"));
    CHECK(r.predicted == 3);
    CHECK(r.sturm_count == 3);
    CHECK(r.rho_in_base);

    auto k5 = build_chain({step(5, "1", zeta_selector(5, 1)), step(5, "2", sel("1.1487", "0", "0.01"))});
    CHECK_FALSE(is_qth_power(k5.realized.prefix(1).from_rational(4), 5).has_value());
    auto r5 = rho_criterion(k5, 1, P("X^5-2"));
    CHECK(r5.predicted == 1);
    CHECK(r5.sturm_count == 1);
    CHECK(r5.sturm_count == oracle::bisection_real_root_count(P("X^5-2")));

    auto cbrt = build_chain({step(3, "2", sel("1.26", "0", "0.01"))});
    try {
      rho_criterion(cbrt, 0, P("X^3-2"));
      FAIL("expected a hypothesis failure");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("normal") != std::string::npos);
    }
    CHECK_THROWS_AS(rho_criterion(z7, 0, P("X^2-2")), PreconditionError);
    CHECK_THROWS_AS(rho_criterion(z7, 0, P("X^5-4X-2")), PreconditionError);
  }

  TEST_CASE("property: Nagell over random chains") {
    std::mt19937_64 rng(42);
    const long qs[] = {2, 3};
    const char* fs[] = {"X^3-2", "X^3+X^2-2X-1", "X^3-3X+1", "X^5-4X-2", "X^2-3", "X^3-5"};
    for (int t = 0; t < 12; ++t) {
      std::vector<StepDescription> steps;
      const int h = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < h; ++i) {
        const long q = qs[rng() % 2];
        const long a = 2 + static_cast<long>(rng() % 4);
        const long k = static_cast<long>(rng() % static_cast<unsigned long>(q));
        steps.push_back(step(q, std::to_string(a).c_str(), radical_selector(std::pow(double(a), 1.0 / q), q, k)));
      }
      RadicalChain c;
      try {
        c = build_chain(steps);
      } catch (const PreconditionError&) {
        continue;  // selector hit two roots of a reducible binomial
      }
      const auto f = P(fs[rng() % 6]);
      auto r = first_reducibility(c, f);
      if (r) {
        CHECK(r->step_degree % f.degree() == 0);
      }
    }
    CHECK(nagell_statistics().violations == 0);
  }
}
