// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "kronecker/factor.hpp"
#include "kronecker/radical.hpp"
#include "kronecker/replay.hpp"
#include "kronecker/sturm.hpp"
#include "kronecker/verdict.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace kronecker;
using namespace testsupport;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// One root of m over its field, as a small ball suitable as a selector.
ComplexBall pick_root(const KPoly& m, std::mt19937_64& rng) {
  auto roots = isolate_roots(embed_poly(m, 128), 128);
  ComplexBall s = roots[rng() % roots.size()];
  s.inflate(Real::from_decimal("1e-20", 64));
  return s;
}

KPoly binomial(long q, const AlgebraicElement& a) {
  const TowerField& K = a.home();
  KPoly m(static_cast<std::size_t>(q) + 1, K.zero());
  m[0] = -a;
  m.back() = K.one();
  return m;
}

/// Monic, irreducible over Q, exact degree d, coefficients in [-c, c].
Polynomial random_irreducible(std::mt19937_64& rng, int d, long c) {
  for (;;) {
    auto f = oracle::random_poly(rng, d, c);
    std::vector<Rational> co(f.coefficients().begin(), f.coefficients().end());
    co.back() = 1;
    Polynomial g(co);
    if (g.degree() == d && is_irreducible_over_Q(g).irreducible) return g;
  }
}

Outcome criterion_1() {
  const auto t0 = Clock::now();
  const Verdict v = kronecker_verdict(parse_polynomial("X^5-4X-2"));
  const double dt = seconds_since(t0);
  const Integer oracle_disc = oracle::quintic_trinomial_discriminant(-4, -2);
  const bool ok = v.conclusion == Conclusion::UnsolvableByRadicals && v.irreducibility.method == "eisenstein" &&
                  v.irreducibility.eisenstein_prime && *v.irreducibility.eisenstein_prime == 2 &&
                  v.real_root_count == 3 && v.discriminant == -212144 && Rational(oracle_disc) == v.discriminant &&
                  dt < 1.0;
  std::ostringstream d;
  d << to_string(v.conclusion) << ", p = " << (v.irreducibility.eisenstein_prime ? to_string(*v.irreducibility.eisenstein_prime) : "-")
    << ", r = " << v.real_root_count << ", disc = " << to_string(v.discriminant) << " (oracle " << oracle_disc.get_str()
    << "), " << dt << " s";
  return {ok, d.str()};
}

Outcome criterion_2() {
  std::ostringstream transcript;
  const ReplayResult r = replay_cyclotomic_cubic(transcript);
  const bool ok = r.exact_claims_hold() && r.seconds < 60.0;
  std::ostringstream d;
  d << "minpoly " << r.minpoly_of_trace << ", irreducible over Q(alpha) " << r.irreducible_over_alpha
    << ", splits over Q(alpha, conj alpha) " << r.splits_over_closure << ", ratio ~ zeta^2 " << r.ratio_is_zeta_squared
    << ", rho^4/11 " << r.rho_qth_root << ", X^7-11 reducible over Q(rho) " << r.binomial_reducible_over_rho << ", "
    << r.seconds << " s at " << default_precision() << " bits";
  return {ok, d.str()};
}

Outcome criterion_3() {
  const auto plus = cardano_values(Rational(1, 3), 256);
  const auto minus = cardano_values(Rational(-1, 3), 256);
  bool ok = plus.size() == 3;
  std::ostringstream d;
  d << "|f(x)| with +1/3:";
  for (const auto& v : plus) {
    ok = ok && v.residual_upper < 1e-20;
    d << ' ' << v.residual_upper;
  }
  d << "; with -1/3:";
  for (const auto& v : minus) d << ' ' << v.residual_upper;
  return {ok, d.str()};
}

Outcome criterion_4() {
  std::mt19937_64 rng(1004);
  const int primes[] = {2, 3, 5, 7};
  int pairs = 0, stayed = 0;
  while (pairs < 100) {
    const int p = primes[rng() % 4];
    // extension: one or two levels over Q, total degree coprime to p
    const int d1 = 2 + static_cast<int>(rng() % 4);
    const int d2 = (rng() % 3 == 0) ? 2 + static_cast<int>(rng() % 2) : 1;
    const int d = d1 * d2;
    if (std::gcd(p, d) != 1 || p * d > 36) continue;
    TowerField Q;
    auto g = random_irreducible(rng, d1, 4);
    TowerField K = make_extension(Q, g, pick_root(kpoly_from_rational(g, Q), rng));
    if (d2 > 1) {
      KPoly m = kpoly_from_rational(random_irreducible(rng, d2, 3), K);
      m[0] = m[0] + K.generator(1);
      try {
        K = make_extension(K, m, pick_root(m, rng));
      } catch (const ReducibleError&) {
        continue;
      }
    }
    const Polynomial f = random_irreducible(rng, p, 5);
    const auto fa = factor_over_field(f, K);
    ++pairs;
    if (fa.factors.size() == 1 && kpoly_degree(fa.factors[0].first) == p) ++stayed;
  }

  // Reports from chains where the polynomial does split.
  const double r11 = std::pow(11.0, 1.0 / 7);
  const std::vector<std::pair<std::vector<StepDescription>, const char*>> splitting = {
      {{{7, "11", radical_selector(r11, 7, 1)}, {7, "11", radical_selector(r11, 7, -1)}}, "X^3+X^2-2X-1"},
      {{{7, "1", zeta_selector(7, 1)}}, "X^3+X^2-2X-1"},
      {{{5, "1", zeta_selector(5, 1)}, {5, "2", sel("1.1487", "0", "0.01")}}, "X^5-2"},
      {{{3, "1", zeta_selector(3, 1)}, {3, "2", sel("1.26", "0", "0.01")}}, "X^3-2"},
      {{{2, "5", sel("2.236", "0", "0.01")}}, "X^2-X-1"},
      {{{2, "-3", sel("0", "1.732", "0.01")}, {3, "2", sel("1.26", "0", "0.01")}}, "X^3-2"},
  };
  int reported = 0;
  for (const auto& [steps, fs] : splitting) {
    const auto chain = build_chain(steps);
    if (first_reducibility(chain, parse_polynomial(fs))) ++reported;
  }
  const NagellStatistics st = nagell_statistics();
  std::ostringstream d;
  d << stayed << "/" << pairs << " irreducible over coprime extensions; " << reported << "/" << splitting.size()
    << " chains split f; " << st.reports << " reports, " << st.violations << " divisibility violations";
  return {stayed == pairs && reported == static_cast<int>(splitting.size()) && st.reports > 0 && st.violations == 0,
          d.str()};
}

Outcome criterion_5() {
  std::mt19937_64 rng(1005);
  int cases = 0, violations = 0, split = 0, nonlinear_split = 0;
  auto check = [&](const Polynomial& f, const TowerField& K) {
    const auto fa = factor_over_field(f, K);
    ++cases;
    const int d0 = kpoly_degree(fa.factors[0].first);
    for (const auto& [g, m] : fa.factors) {
      if (kpoly_degree(g) != d0 || m != 1) ++violations;
    }
    if (fa.factors.size() > 1) ++split;
    if (fa.factors.size() > 1 && d0 > 1) ++nonlinear_split;
  };
  for (long q : {3L, 5L, 7L, 11L}) {
    const TowerField Z = cyclotomic_field(q);
    // real subfield, splits into linear factors
    const auto gen = Z.generator(1);
    check(minimal_polynomial(gen + inverse(gen)), Z);
    // zeta + sqrt 2 has degree 2(q-1); over Q(zeta) it splits into quadratics
    if (q <= 7) {
      const auto S = make_extension(Z, kpoly_from_rational(parse_polynomial("X^2-2"), Z), sel("1.414", "0", "0.01"));
      check(minimal_polynomial(S.generator(1) + S.generator(2)), Z);
    }
    for (int i = 0; i < (q == 11 ? 1 : 2); ++i) check(minimal_polynomial(random_element(rng, Z, 3)), Z);
    for (int i = 0; i < 2; ++i) check(random_irreducible(rng, 2 + static_cast<int>(rng() % 3), 5), Z);
  }
  // Kummer fields Q(zeta_q, 2^(1/q)) are normal of degree q(q-1).
  for (long q : {3L, 5L}) {
    const TowerField Z = cyclotomic_field(q);
    const auto bin = binomial(q, Z.from_rational(2));
    const TowerField L = make_extension(Z, bin, pick_root(bin, rng));
    check(parse_polynomial("X^" + std::to_string(q) + "-2"), L);
    check(random_irreducible(rng, 3, 4), L);
    if (q == 3) {
      check(parse_polynomial("X^2+3"), L);
      check(minimal_polynomial(L.generator(2) + L.generator(1)), L);
    }
  }
  while (cases < 30) check(random_irreducible(rng, 2 + static_cast<int>(rng() % 4), 6), cyclotomic_field(5));
  std::ostringstream d;
  d << cases << " cases over normal fields, " << split << " split (" << nonlinear_split
    << " into non-linear factors), " << violations << " unequal degrees";
  return {violations == 0 && cases >= 30 && nonlinear_split > 0, d.str()};
}

Outcome criterion_6() {
  std::mt19937_64 rng(1006);
  TowerField Q;
  std::vector<TowerField> fields = {
      Q,
      make_extension(Q, parse_polynomial("X^2-2"), sel("1.414", "0", "0.01")),
      make_extension(Q, parse_polynomial("X^3-2"), sel("1.26", "0", "0.01")),
      cyclotomic_field(3),
      cyclotomic_field(5),
  };
  const long qs[] = {2, 3, 5};
  int cases = 0, agree = 0, yes = 0, no = 0;
  for (int i = 0; i < 50; ++i) {
    const TowerField& K = fields[static_cast<std::size_t>(i) % fields.size()];
    const long q = qs[rng() % 3];
    AlgebraicElement a = random_element(rng, K, 3);
    if (a.is_zero()) a = K.one();
    if (rng() % 2) a = pow(a, static_cast<unsigned>(q));  // a q-th power by construction
    if (rng() % 4 == 0) a = a * K.from_rational(Rational(-1));
    const auto r = is_qth_power(a, q);
    bool linear = false;
    for (const auto& [g, m] : factor_over_field(binomial(q, a), K).factors) linear = linear || kpoly_degree(g) == 1;
    const bool sound = !r || pow(*r, static_cast<unsigned>(q)) == a;
    ++cases;
    if (r.has_value() == linear && sound) ++agree;
    (r ? yes : no)++;
  }
  std::ostringstream d;
  d << agree << "/" << cases << " agree (" << yes << " q-th powers, " << no << " not)";
  return {agree == cases && yes > 0 && no > 0, d.str()};
}

Outcome criterion_7() {
  std::mt19937_64 rng(1007);
  int cases = 0, agree = 0, sign_ok = 0;
  while (cases < 300) {
    const auto f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 8), 12);
    if (squarefree_part(f).degree() != f.degree()) continue;
    ++cases;
    const int r = sturm_summary(f).real_roots;
    if (r == oracle::bisection_real_root_count(f)) ++agree;
    const int s = (f.degree() - r) / 2;
    if (sign(discriminant(f)) == (s % 2 ? -1 : 1)) ++sign_ok;
  }
  std::ostringstream d;
  d << agree << "/" << cases << " Sturm counts match bisection, sign rule holds on " << sign_ok << "/" << cases;
  return {agree == cases && sign_ok == cases, d.str()};
}

Outcome criterion_8() {
  const auto cubic = parse_polynomial("X^3+X^2-2X-1");
  const auto z7 = build_chain({{7, "1", zeta_selector(7, 1)}});
  const auto a = rho_criterion(z7, 0, cubic);
  const auto k5 = build_chain({{5, "1", zeta_selector(5, 1)}, {5, "2", sel("1.1487", "0", "0.01")}});
  const auto quintic = parse_polynomial("X^5-2");
  const auto b = rho_criterion(k5, 1, quintic);
  const bool ok = a.predicted == a.sturm_count && a.sturm_count == oracle::bisection_real_root_count(cubic) &&
                  b.predicted == b.sturm_count && b.sturm_count == oracle::bisection_real_root_count(quintic);
  std::ostringstream d;
  d << "Q < Q(zeta7): predicted " << a.predicted << ", Sturm " << a.sturm_count << "; Q(zeta5) < Q(zeta5, 2^(1/5)): predicted "
    << b.predicted << ", Sturm " << b.sturm_count;
  return {ok, d.str()};
}

Outcome criterion_9() {
  std::mt19937_64 rng(1009);
  // Step shapes with product of q at most 15.
  const std::vector<std::vector<long>> shapes = {{7}, {5}, {3}, {2, 7}, {5, 2}, {5, 3}, {3, 3}, {3, 2}, {2, 3, 2}, {2, 2, 3}, {3, 2, 2}, {2, 2, 2}};
  int chains = 0, ok = 0, levels = 0;
  std::vector<std::string> failures;
  while (chains < 20) {
    const auto& shape = shapes[rng() % shapes.size()];
    RadicalChain c = empty_chain();
    bool built = true;
    for (std::size_t i = 0; i < shape.size() && built; ++i) {
      const TowerField& K = c.realized;
      AlgebraicElement a = K.from_rational(Rational(static_cast<long>(rng() % 9) - 4));
      if (a.is_zero()) a = K.from_rational(3);
      if (i > 0 && rng() % 2) a = a + c.roots_in_top()[rng() % i];
      if (K.height() > 0 && rng() % 3 == 0) a = a + K.generator(K.height());
      if (a.is_zero()) a = K.one();
      try {
        c = extend_chain(c, shape[i], a, pick_root(binomial(shape[i], a), rng));
      } catch (const PreconditionError&) {
        built = false;
      }
    }
    if (!built) continue;
    ++chains;
    bool good = true;
    try {
      const auto ci = make_conjugation_invariant(c);
      const TowerField& T = ci.chain.realized;
      for (int k = 1; k <= T.height(); ++k) good = good && is_conjugation_invariant(T.prefix(k));
      levels += T.height();
      for (std::size_t i = 0; i < c.roots.size(); ++i) {
        const auto& orig = ci.original_roots[i];
        good = good && orig.home().same_as(T) && embed(orig).overlaps(embed(c.roots[i])) &&
               minimal_polynomial(orig) == minimal_polynomial(c.roots[i]);
      }
    } catch (const std::exception& e) {
      failures.push_back(e.what());
      good = false;
    }
    if (good) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << chains << " chains conjugation invariant at every level with all original roots recovered ("
    << levels << " output levels)";
  if (!failures.empty()) d << "; first error: " << failures.front();
  return {ok == chains, d.str()};
}

Outcome criterion_10() {
  const auto t0 = Clock::now();
  long total = 0, violations = 0, unsolvable = 0;
  for (int a0 = -3; a0 <= 3; ++a0)
    for (int a1 = -3; a1 <= 3; ++a1)
      for (int a2 = -3; a2 <= 3; ++a2)
        for (int a3 = -3; a3 <= 3; ++a3)
          for (int a4 = -3; a4 <= 3; ++a4) {
            const auto f = Polynomial::from_ints({a0, a1, a2, a3, a4, 1});
            ++total;
            try {
              const Verdict v = kronecker_verdict(f);
              bool good = !v.irreducible || v.squarefree;
              if (v.squarefree) {
                good = good && v.real_root_count + 2 * v.complex_pair_count == 5 &&
                       v.discriminant_sign == (v.complex_pair_count % 2 ? -1 : 1);
              }
              if (v.conclusion == Conclusion::UnsolvableByRadicals) {
                ++unsolvable;
                const int r = oracle::bisection_real_root_count(f);
                good = good && r != 1 && r != 5 && r == v.real_root_count;
              }
              if (!good) ++violations;
            } catch (const std::exception&) {
              ++violations;
            }
          }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << total << " quintics, " << unsolvable << " certified unsolvable, " << violations << " violations, " << dt << " s";
  return {violations == 0 && total == 16807 && dt < 1800, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"verdict on X^5-4X-2", criterion_1},
      {"cyclotomic cubic replay", criterion_2},
      {"cube-root formula values", criterion_3},
      {"Nagell divisibility", criterion_4},
      {"equal factor degrees over normal fields", criterion_5},
      {"q-th powers vs linear factors", criterion_6},
      {"Sturm vs bisection, sign rule", criterion_7},
      {"rho criterion", criterion_8},
      {"conjugation invariant chains", criterion_9},
      {"exhaustive quintic sweep", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
