// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/verdict.hpp"

#include <sstream>

#include "kronecker/errors.hpp"
#include "kronecker/factor.hpp"
#include "kronecker/parse.hpp"
#include "kronecker/sturm.hpp"

namespace kronecker {

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::UnsolvableByRadicals: return "UNSOLVABLE_BY_RADICALS";
    case Conclusion::ConsistentOneReal: return "CONSISTENT_ONE_REAL";
    case Conclusion::ConsistentAllReal: return "CONSISTENT_ALL_REAL";
    case Conclusion::NotApplicable: return "NOT_APPLICABLE";
  }
  return "";
}

std::string to_string(DiscStatus s) {
  switch (s) {
    case DiscStatus::Passes: return "passes";
    case DiscStatus::Fails: return "fails";
    case DiscStatus::NotApplicable: return "not-applicable";
  }
  return "";
}

namespace {

bool odd_prime(int n) { return n >= 3 && is_prime(static_cast<long>(n)); }

// p = 1 mod 4: both cases need s even, so disc > 0.
// p = 3 mod 4: one real root means s = (p-1)/2 odd (disc < 0), all real
// means s = 0 (disc > 0).
DiscCondition sign_screen(int p, int disc_sign) {
  if (p % 4 == 1) {
    if (disc_sign < 0) return {DiscStatus::Fails, "none"};
    return {DiscStatus::Passes, "either"};
  }
  return {DiscStatus::Passes, disc_sign < 0 ? "one-real" : "all-real"};
}

Conclusion conclusion_from_string(const std::string& s) {
  for (Conclusion c : {Conclusion::UnsolvableByRadicals, Conclusion::ConsistentOneReal, Conclusion::ConsistentAllReal,
                       Conclusion::NotApplicable}) {
    if (to_string(c) == s) return c;
  }
  throw PreconditionError("unknown conclusion \"" + s + "\"");
}

DiscStatus status_from_string(const std::string& s) {
  for (DiscStatus d : {DiscStatus::Passes, DiscStatus::Fails, DiscStatus::NotApplicable}) {
    if (to_string(d) == s) return d;
  }
  throw PreconditionError("unknown discriminant status \"" + s + "\"");
}

}  // namespace

DiscCondition discriminant_necessary_condition(const Polynomial& f) {
  if (f.degree() < 1) throw PreconditionError("polynomial must have positive degree");
  const Rational d = discriminant(f);
  if (d == 0) throw PreconditionError("polynomial is not squarefree");
  if (!odd_prime(f.degree())) return {DiscStatus::NotApplicable, "degree-not-odd-prime"};
  if (!is_irreducible_over_Q(f).irreducible) return {DiscStatus::NotApplicable, "reducible"};
  return sign_screen(f.degree(), sign(d));
}

Verdict kronecker_verdict(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no verdict");
  Verdict v;
  v.input = format_polynomial(f);
  v.degree = f.degree();
  v.degree_is_odd_prime = odd_prime(v.degree);
  if (v.degree < 1) {
    v.conclusion = Conclusion::NotApplicable;
    v.reason = "degree-not-odd-prime";
    v.disc_condition = {DiscStatus::NotApplicable, "degree-not-odd-prime"};
    v.irreducibility.method = "none";
    return v;
  }

  v.discriminant = discriminant(f);
  v.discriminant_sign = sign(v.discriminant);
  v.squarefree = v.discriminant_sign != 0;

  const SturmSummary ss = sturm_summary(f);
  v.real_root_count = ss.real_roots;
  v.sturm_chain_length = ss.chain_length;
  v.variations_neg_inf = ss.variations_neg_inf;
  v.variations_pos_inf = ss.variations_pos_inf;
  const int distinct = squarefree_part(f).degree();
  if ((distinct - v.real_root_count) % 2 != 0 || v.real_root_count > distinct) {
    throw ConsistencyError("real root count " + std::to_string(v.real_root_count) + " does not fit degree " +
                           std::to_string(distinct));
  }
  v.complex_pair_count = (distinct - v.real_root_count) / 2;
  if (v.degree % 2 == 1 && v.real_root_count == 0) {
    throw ConsistencyError("odd-degree polynomial with no real root");
  }

  const IrreducibilityCertificate cert = is_irreducible_over_Q(f);
  v.irreducible = cert.irreducible;
  v.irreducibility.method = to_string(cert.method);
  if (cert.eisenstein) {
    v.irreducibility.eisenstein_prime = cert.eisenstein->prime;
    v.irreducibility.eisenstein_shift = cert.eisenstein->shift;
  }
  if (cert.factorization) {
    for (const auto& [g, m] : cert.factorization->factors) v.irreducibility.factors.emplace_back(format_polynomial(g), m);
  }
  if (v.irreducible && !v.squarefree) throw ConsistencyError("irreducible polynomial with zero discriminant");

  if (v.squarefree) {
    const int expected = v.complex_pair_count % 2 == 0 ? 1 : -1;
    v.disc_rule_check = v.discriminant_sign == expected;
    if (!v.disc_rule_check) {
      throw ConsistencyError("discriminant sign " + std::to_string(v.discriminant_sign) + " contradicts " +
                             std::to_string(v.complex_pair_count) + " complex pairs");
    }
  }

  if (!v.degree_is_odd_prime) {
    v.reason = "degree-not-odd-prime";
  } else if (!v.squarefree) {
    v.reason = "not-squarefree-degenerate";
  } else if (!v.irreducible) {
    v.reason = "reducible";
  }
  if (!v.reason.empty()) {
    v.conclusion = Conclusion::NotApplicable;
    v.disc_condition = {DiscStatus::NotApplicable, v.reason};
    return v;
  }
  v.disc_condition = sign_screen(v.degree, v.discriminant_sign);
  if (v.real_root_count == 1) {
    v.conclusion = Conclusion::ConsistentOneReal;
  } else if (v.real_root_count == v.degree) {
    v.conclusion = Conclusion::ConsistentAllReal;
  } else {
    v.conclusion = Conclusion::UnsolvableByRadicals;
  }
  if (v.disc_condition.status == DiscStatus::Fails && v.conclusion != Conclusion::UnsolvableByRadicals) {
    throw ConsistencyError("discriminant screen failed but the real-root count is " +
                           std::to_string(v.real_root_count));
  }
  return v;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json irr;
  irr["method"] = v.irreducibility.method;
  if (v.irreducibility.eisenstein_prime) irr["prime"] = to_string(*v.irreducibility.eisenstein_prime);
  if (v.irreducibility.eisenstein_shift) irr["shift"] = to_string(*v.irreducibility.eisenstein_shift);
  if (!v.irreducibility.factors.empty()) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& [g, m] : v.irreducibility.factors) fs.push_back({{"factor", g}, {"multiplicity", m}});
    irr["factors"] = std::move(fs);
  }
  nlohmann::json sturm;
  sturm["real_roots"] = v.real_root_count;
  sturm["chain_length"] = v.sturm_chain_length;
  sturm["variations_neg_inf"] = v.variations_neg_inf;
  sturm["variations_pos_inf"] = v.variations_pos_inf;
  nlohmann::json disc;
  disc["value"] = to_string(v.discriminant);
  disc["sign"] = v.discriminant_sign;

  nlohmann::json j;
  j["input"] = v.input;
  j["degree"] = v.degree;
  j["degree_is_odd_prime"] = v.degree_is_odd_prime;
  j["squarefree"] = v.squarefree;
  j["irreducible"] = v.irreducible;
  j["real_root_count"] = v.real_root_count;
  j["complex_pair_count"] = v.complex_pair_count;
  j["disc_rule_check"] = v.disc_rule_check;
  j["discriminant_condition"] = {{"status", to_string(v.disc_condition.status)},
                                 {"consistent_with", v.disc_condition.consistent_with}};
  j["conclusion"] = to_string(v.conclusion);
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["certificate"] = {{"irreducibility", irr}, {"sturm", sturm}, {"discriminant", disc}};
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  try {
    Verdict v;
    v.input = j.at("input").get<std::string>();
    v.degree = j.at("degree").get<int>();
    v.degree_is_odd_prime = j.at("degree_is_odd_prime").get<bool>();
    v.squarefree = j.at("squarefree").get<bool>();
    v.irreducible = j.at("irreducible").get<bool>();
    v.real_root_count = j.at("real_root_count").get<int>();
    v.complex_pair_count = j.at("complex_pair_count").get<int>();
    v.disc_rule_check = j.at("disc_rule_check").get<bool>();
    const auto& dc = j.at("discriminant_condition");
    v.disc_condition.status = status_from_string(dc.at("status").get<std::string>());
    v.disc_condition.consistent_with = dc.at("consistent_with").get<std::string>();
    v.conclusion = conclusion_from_string(j.at("conclusion").get<std::string>());
    if (j.contains("reason")) v.reason = j.at("reason").get<std::string>();
    const auto& cert = j.at("certificate");
    const auto& irr = cert.at("irreducibility");
    v.irreducibility.method = irr.at("method").get<std::string>();
    if (irr.contains("prime")) v.irreducibility.eisenstein_prime = Integer(irr.at("prime").get<std::string>());
    if (irr.contains("shift")) v.irreducibility.eisenstein_shift = Integer(irr.at("shift").get<std::string>());
    if (irr.contains("factors")) {
      for (const auto& f : irr.at("factors")) {
        v.irreducibility.factors.emplace_back(f.at("factor").get<std::string>(), f.at("multiplicity").get<int>());
      }
    }
    const auto& st = cert.at("sturm");
    v.sturm_chain_length = st.at("chain_length").get<int>();
    v.variations_neg_inf = st.at("variations_neg_inf").get<int>();
    v.variations_pos_inf = st.at("variations_pos_inf").get<int>();
    if (st.at("real_roots").get<int>() != v.real_root_count) throw PreconditionError("real root counts disagree");
    const auto& d = cert.at("discriminant");
    v.discriminant = parse_rational(d.at("value").get<std::string>());
    v.discriminant_sign = d.at("sign").get<int>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed verdict JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string("malformed number in verdict JSON: ") + e.what());
  }
}

std::string verdict_report(const Verdict& v, ReportFormat format) {
  if (format == ReportFormat::Json) return verdict_to_json(v).dump();
  std::ostringstream out;
  if (v.conclusion == Conclusion::NotApplicable) {
    out << "NOT_APPLICABLE: " << v.reason << " (" << v.input << ")\n";
    return out.str();
  }
  auto row = [&out](const char* key, const std::string& value) {
    out << "  " << key;
    for (std::size_t i = std::string(key).size(); i < 22; ++i) out << ' ';
    out << value << '\n';
  };
  out << "polynomial  " << v.input << '\n';
  row("degree", std::to_string(v.degree) + " (odd prime)");
  std::string irr = v.irreducibility.method;
  if (v.irreducibility.eisenstein_prime) {
    irr += ", p = " + to_string(*v.irreducibility.eisenstein_prime) + ", shift " +
           to_string(*v.irreducibility.eisenstein_shift);
  }
  row("irreducible", "yes (" + irr + ")");
  row("real roots", std::to_string(v.real_root_count) + " (Sturm chain of length " +
                        std::to_string(v.sturm_chain_length) + ", variations " +
                        std::to_string(v.variations_neg_inf) + " -> " + std::to_string(v.variations_pos_inf) + ")");
  row("complex pairs", std::to_string(v.complex_pair_count));
  row("discriminant", to_string(v.discriminant) + " (sign " + std::to_string(v.discriminant_sign) + ")");
  row("sign rule", v.disc_rule_check ? "holds" : "violated");
  row("discriminant screen", to_string(v.disc_condition.status) + " (" + v.disc_condition.consistent_with + ")");
  row("conclusion", to_string(v.conclusion));
  return out.str();
}

}  // namespace kronecker
