// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/radical.hpp"

#include <algorithm>
#include <atomic>

#include "kronecker/factor.hpp"
#include "kronecker/sturm.hpp"
#include "kronecker/tower_io.hpp"

namespace kronecker {

namespace {

KPoly binomial(long q, const AlgebraicElement& a) {
  const TowerField& K = a.home();
  KPoly f(static_cast<std::size_t>(q) + 1, K.zero());
  f[0] = -a;
  f.back() = K.one();
  return f;
}

// Index of the factor of fa vanishing at the root isolated by `ball`.
std::size_t factor_holding(const FieldFactorization& fa, const ComplexBall& ball) {
  if (fa.factors.size() == 1) return 0;
  const mpfr_prec_t P0 = default_precision();
  for (mpfr_prec_t P = P0; P <= 16 * P0; P *= 2) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < fa.factors.size(); ++i) {
      const KPoly& g = fa.factors[i].first;
      std::vector<ComplexBall> roots;
      if (kpoly_degree(g) == 1) {
        roots.push_back(embed(-g[0], P));
      } else {
        try {
          roots = isolate_roots(embed_poly(g, P), P);
        } catch (const PrecisionError&) {
          hits.clear();
          hits.push_back(i);
          hits.push_back(i);
          break;
        }
      }
      if (std::any_of(roots.begin(), roots.end(), [&](const ComplexBall& r) { return r.overlaps(ball); })) {
        hits.push_back(i);
      }
    }
    if (hits.size() == 1) return hits[0];
  }
  throw PrecisionError("cannot tell which factor of the binomial the selected root belongs to");
}

bool certainly_positive(const AlgebraicElement& x) {
  const mpfr_prec_t P0 = default_precision();
  for (mpfr_prec_t P = P0; P <= 16 * P0; P *= 2) {
    ComplexBall b = embed(x, P);
    Real lo(b.precision());
    mpfr_sub(lo.get(), b.re().get(), b.rad().get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) > 0) return true;
    Real hi(b.precision());
    mpfr_add(hi.get(), b.re().get(), b.rad().get(), MPFR_RNDU);
    if (mpfr_sgn(hi.get()) < 0) return false;
  }
  throw PrecisionError("cannot decide the sign of a real element within the precision cap");
}

// Ball around the real positive q-th root of a positive real b.
ComplexBall positive_root_selector(const AlgebraicElement& b, long q) {
  const mpfr_prec_t P = default_precision();
  ComplexBall e = embed(b, P);
  Real c(P);
  mpfr_rootn_ui(c.get(), e.re().get(), static_cast<unsigned long>(q), MPFR_RNDN);
  Real rad(kRadiusPrec);
  mpfr_abs(rad.get(), c.get(), MPFR_RNDU);
  mpfr_mul_2si(rad.get(), rad.get(), -30, MPFR_RNDU);
  return ComplexBall(std::move(c), Real::from_si(0, P), std::move(rad));
}

std::atomic<long> g_reports{0}, g_prime_reports{0}, g_violations{0};

std::vector<std::string> step_names(const RadicalChain& chain) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    if (chain.levels[i] != 0) names.push_back("g" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace

TowerField RadicalChain::base_of(std::size_t i) const {
  int h = 0;
  for (std::size_t j = 0; j < i && j < levels.size(); ++j) {
    if (levels[j] != 0) h = levels[j];
  }
  return realized.prefix(h);
}

std::vector<AlgebraicElement> RadicalChain::roots_in_top() const {
  std::vector<AlgebraicElement> out;
  for (const auto& r : roots) out.push_back(r.lift_to(realized));
  return out;
}

RadicalChain empty_chain() { return RadicalChain{}; }

RadicalChain extend_chain(const RadicalChain& chain, long q, const AlgebraicElement& radicand,
                          const ComplexBall& selector) {
  if (q < 2 || !is_prime(q)) throw PreconditionError("step exponent q = " + std::to_string(q) + " is not prime");
  const TowerField& K = chain.realized;
  if (!K.extends(radicand.home())) throw PreconditionError("radicand is not an element of the current field");
  const AlgebraicElement a = radicand.lift_to(K);
  if (a.is_zero()) throw PreconditionError("radicand must be nonzero");
  const KPoly f = binomial(q, a);
  const ComplexBall ball = select_root(f, selector);
  const FieldFactorization fa = factor_over_field(f, K);
  const KPoly& g = fa.factors[factor_holding(fa, ball)].first;

  RadicalChain out = chain;
  out.steps.push_back({q, a, selector});
  out.irreducible_radical.push_back(fa.factors.size() == 1);
  if (kpoly_degree(g) == 1) {
    out.roots.push_back(-g[0]);
    out.levels.push_back(0);
    return out;
  }
  out.realized = make_extension_unchecked(K, g, selector);
  out.roots.push_back(out.realized.generator(out.realized.height()));
  out.levels.push_back(out.realized.height());
  return out;
}

RadicalChain build_chain(const std::vector<StepDescription>& steps) {
  RadicalChain chain = empty_chain();
  for (const auto& s : steps) {
    AlgebraicElement a = parse_element(s.radicand, chain.realized, chain.roots_in_top());
    chain = extend_chain(chain, s.q, a, s.root);
  }
  return chain;
}

std::vector<StepDescription> parse_chain_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("chain description must be a JSON list of steps");
  std::vector<StepDescription> out;
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("q") || !s.contains("radicand") || !s.contains("root")) {
      throw PreconditionError("each step needs \"q\", \"radicand\" and \"root\"");
    }
    StepDescription d;
    const auto& q = s.at("q");
    if (q.is_number_integer()) {
      d.q = q.get<long>();
    } else if (q.is_string()) {
      const std::string t = q.get<std::string>();
      std::size_t used = 0;
      try {
        d.q = std::stol(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != t.size()) throw PreconditionError("\"q\" must be an integer, got \"" + t + "\"");
    } else {
      throw PreconditionError("\"q\" must be an integer");
    }
    const auto& r = s.at("radicand");
    if (r.is_string()) {
      d.radicand = r.get<std::string>();
    } else if (r.is_number_integer()) {
      d.radicand = r.dump();
    } else {
      throw PreconditionError("\"radicand\" must be a string");
    }
    d.root = ball_from_json(s.at("root"), default_precision());
    out.push_back(std::move(d));
  }
  return out;
}

nlohmann::json chain_to_json(const RadicalChain& chain) {
  const auto names = step_names(chain);
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    const TowerField base = chain.base_of(i);
    nlohmann::json j;
    j["q"] = s.q;
    j["radicand"] = format_element(s.radicand.lift_to(base), names);
    j["root"] = ball_to_json(embed(chain.roots[i]));
    j["level"] = chain.levels[i];
    j["degree"] = chain.levels[i] == 0 ? 1 : chain.realized.level_degree(chain.levels[i]);
    j["radical_kind"] = chain.irreducible_radical[i] ? "irreducible" : "reducible";
    steps.push_back(std::move(j));
  }
  nlohmann::json out;
  out["steps"] = std::move(steps);
  out["tower"] = tower_to_json(chain.realized);
  out["degree"] = degree_over_Q(chain.realized);
  return out;
}

RhoInfo rho_for(const TowerField& base, long q, const AlgebraicElement& a_in) {
  auto conj = conjugation_map(base);
  if (!conj) throw PreconditionError("base field is not conjugation invariant");
  const AlgebraicElement a = a_in.lift_to(base);
  const AlgebraicElement b = a * conjugate(a, *conj);
  const ComplexBall sel = positive_root_selector(b, q);
  for (const auto& r : roots_in_field(binomial(q, b), base)) {
    if (conjugate(r, *conj) == r && certainly_positive(r)) return {r, true, base, b, sel};
  }
  // No q-th root of b in the base, so X^q - b is irreducible there.
  TowerField L = make_extension_unchecked(base, binomial(q, b), sel);
  const AlgebraicElement rho = L.generator(L.height());
  L = L.with_conjugation_hint(L.height(), rho);
  return {rho.lift_to(L), false, L, b, sel};
}

RhoInfo rho_of_step(const RadicalChain& chain, std::size_t step) {
  if (step >= chain.steps.size()) throw PreconditionError("no step " + std::to_string(step + 1));
  return rho_for(chain.base_of(step), chain.steps[step].q, chain.steps[step].radicand);
}

ConjugationInvariantChain make_conjugation_invariant(const RadicalChain& chain) {
  RadicalChain out = empty_chain();
  std::vector<AlgebraicElement> images;  // image of each input level generator
  std::vector<AlgebraicElement> originals;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    std::vector<AlgebraicElement> lifted;
    for (const auto& x : images) lifted.push_back(x.lift_to(out.realized));
    const AlgebraicElement a = apply_homomorphism(s.radicand, lifted, out.realized);
    RhoInfo rho = rho_for(out.realized, s.q, a);
    AlgebraicElement rho_value = rho.rho;
    if (!rho.in_base) {
      out.steps.push_back({s.q, rho.norm, rho.selector});
      out.irreducible_radical.push_back(true);
      out.realized = rho.field;
      out.roots.push_back(rho.rho);
      out.levels.push_back(rho.field.height());
    }
    out = extend_chain(out, s.q, a, s.root_selector);
    const AlgebraicElement alpha = out.roots.back().lift_to(out.realized);
    if (out.levels.back() != 0) {
      // alpha * conj(alpha) = rho
      out.realized = out.realized.with_conjugation_hint(out.levels.back(),
                                                        rho_value.lift_to(out.realized) * inverse(alpha));
    }
    if (chain.levels[i] != 0) images.push_back(alpha);
    originals.push_back(alpha);
  }
  for (int k = 1; k <= out.realized.height(); ++k) {
    if (!is_conjugation_invariant(out.realized.prefix(k))) {
      throw ConsistencyError("level " + std::to_string(k) + " of the transformed chain is not conjugation invariant");
    }
  }
  for (auto& x : originals) x = x.lift_to(out.realized);
  return {std::move(out), std::move(originals)};
}

std::string to_string(RadicalKind k) { return k == RadicalKind::Irreducible ? "irreducible" : "reducible"; }

std::optional<ReducibilityReport> first_reducibility(const RadicalChain& chain, const Polynomial& f) {
  if (f.degree() < 1) throw PreconditionError("f must have positive degree");
  if (!is_irreducible_over_Q(f).irreducible) throw PreconditionError("f is reducible over Q");
  const int p = f.degree();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const int level = chain.levels[i];
    if (level == 0) continue;
    const FieldFactorization fa = factor_over_field(f, chain.realized.prefix(level));
    if (fa.factors.size() == 1 && fa.factors[0].second == 1) continue;
    ReducibilityReport r;
    r.step = i + 1;
    r.level = level;
    r.step_degree = chain.realized.level_degree(level);
    for (const auto& [g, m] : fa.factors) {
      for (int t = 0; t < m; ++t) r.factor_degrees.push_back(kpoly_degree(g));
    }
    r.nagell_divisibility = r.step_degree % p == 0;
    r.radical_kind = chain.irreducible_radical[i] ? RadicalKind::Irreducible : RadicalKind::Reducible;
    ++g_reports;
    if (is_prime(static_cast<long>(p))) {
      ++g_prime_reports;
      if (!r.nagell_divisibility) {
        ++g_violations;
        throw ConsistencyError("f of prime degree " + std::to_string(p) + " split over a step of degree " +
                               std::to_string(r.step_degree));
      }
    }
    return r;
  }
  return std::nullopt;
}

NagellStatistics nagell_statistics() { return {g_reports.load(), g_prime_reports.load(), g_violations.load()}; }

RhoCriterion rho_criterion(const RadicalChain& chain, std::size_t step, const Polynomial& f) {
  if (step >= chain.steps.size()) throw PreconditionError("no step " + std::to_string(step + 1));
  const int p = f.degree();
  if (p < 3 || !is_prime(static_cast<long>(p))) throw PreconditionError("hypothesis failed: deg f must be an odd prime");
  const TowerField K = chain.base_of(step);
  const FieldFactorization over_k = factor_over_field(f, K);
  if (over_k.factors.size() != 1 || over_k.factors[0].second != 1) {
    throw PreconditionError("hypothesis failed: f must be irreducible over K");
  }
  if (!is_conjugation_invariant(K)) throw PreconditionError("hypothesis failed: K must be conjugation invariant");
  const int level = chain.levels[step];
  if (level == 0) throw PreconditionError("hypothesis failed: the step must enlarge K");
  const TowerField L = chain.realized.prefix(level);
  const RadicalStep& s = chain.steps[step];
  if (static_cast<long>(roots_in_field(binomial(s.q, s.radicand.lift_to(L)), L).size()) != s.q) {
    throw PreconditionError("hypothesis failed: L must be normal over K (X^q - a does not split in L)");
  }
  if (!is_conjugation_invariant(L)) throw PreconditionError("hypothesis failed: L must be conjugation invariant");
  const FieldFactorization over_l = factor_over_field(f, L);
  if (over_l.factors.size() == 1 && over_l.factors[0].second == 1) {
    throw PreconditionError("hypothesis failed: f must be reducible over L");
  }
  if (s.q == p) {
    std::vector<Rational> cyc(static_cast<std::size_t>(p), Rational(1));
    if (roots_in_field(Polynomial(cyc), K).empty()) {
      throw PreconditionError("hypothesis failed: K must contain a primitive p-th root of unity");
    }
  }
  RhoCriterion r;
  r.rho_in_base = rho_for(K, s.q, s.radicand).in_base;
  r.predicted = r.rho_in_base ? p : 1;
  r.sturm_count = count_real_roots(f);
  return r;
}

nlohmann::json report_to_json(const ReducibilityReport& r) {
  nlohmann::json j;
  j["step"] = r.step;
  j["level"] = r.level;
  j["step_degree"] = r.step_degree;
  j["factor_degrees"] = r.factor_degrees;
  j["nagell_divisibility"] = r.nagell_divisibility;
  j["radical_kind"] = to_string(r.radical_kind);
  return j;
}

nlohmann::json rho_criterion_to_json(const RhoCriterion& r) {
  nlohmann::json j;
  j["predicted_real_roots"] = r.predicted;
  j["sturm_real_roots"] = r.sturm_count;
  j["rho_in_base"] = r.rho_in_base;
  j["agrees"] = r.predicted == r.sturm_count;
  return j;
}

}  // namespace kronecker
