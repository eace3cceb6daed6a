// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Exit codes: 0 ok, 1 parse error, 2 precondition
// error, 3 precision or internal failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kronecker/factor.hpp"
#include "kronecker/parse.hpp"
#include "kronecker/radical.hpp"
#include "kronecker/replay.hpp"
#include "kronecker/sturm.hpp"
#include "kronecker/verdict.hpp"

using namespace kronecker;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kParse = 1, kPrecondition = 2, kInternal = 3;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const PreconditionError*>(&e)) return kPrecondition;
  return kInternal;
}

std::string kind_of(int code) {
  switch (code) {
    case kParse: return "parse";
    case kPrecondition: return "precondition";
    default: return "internal";
  }
}

json factorization_json(const Polynomial& f, const Factorization& fa) {
  json fs = json::array();
  for (const auto& [g, m] : fa.factors) fs.push_back({{"factor", format_polynomial(g)}, {"multiplicity", m}});
  return {{"input", format_polynomial(f)}, {"unit", to_string(fa.unit)}, {"factors", fs}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError({e.byte > 0 ? e.byte - 1 : 0, "invalid JSON", ""});
  }
}

int cmd_verdict(const std::string& text, bool as_json) {
  const Verdict v = kronecker_verdict(parse_polynomial(text));
  std::cout << verdict_report(v, as_json ? ReportFormat::Json : ReportFormat::Human);
  if (as_json) std::cout << '\n';
  return kOk;
}

int cmd_factor(const std::string& text, bool as_json) {
  const Polynomial f = parse_polynomial(text);
  if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  const Factorization fa = factor_over_Q(f);
  if (as_json) {
    json j = factorization_json(f, fa);
    if (f.degree() >= 1) {
      const auto cert = is_irreducible_over_Q(f);
      j["irreducible"] = cert.irreducible;
      j["method"] = to_string(cert.method);
      if (cert.eisenstein) {
        j["eisenstein"] = {{"prime", to_string(cert.eisenstein->prime)}, {"shift", to_string(cert.eisenstein->shift)}};
      }
    }
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << to_string(fa.unit);
  for (const auto& [g, m] : fa.factors) {
    std::cout << " * (" << format_polynomial(g) << ")";
    if (m > 1) std::cout << "^" << m;
  }
  std::cout << '\n';
  if (f.degree() >= 1) {
    const auto cert = is_irreducible_over_Q(f);
    std::cout << (cert.irreducible ? "irreducible" : "reducible") << " (" << to_string(cert.method);
    if (cert.eisenstein) {
      std::cout << ", p = " << to_string(cert.eisenstein->prime) << ", shift " << to_string(cert.eisenstein->shift);
    }
    std::cout << ")\n";
  }
  return kOk;
}

int cmd_sturm(const std::string& text, const std::vector<std::string>& interval) {
  const Polynomial f = parse_polynomial(text);
  if (f.degree() < 1) throw PreconditionError("Sturm chains need a polynomial of positive degree");
  const Polynomial g = squarefree_part(f);
  const SturmChain chain = sturm_chain(g);
  if (g.degree() != f.degree()) std::cout << "squarefree part: " << format_polynomial(g) << '\n';
  for (std::size_t i = 0; i < chain.polynomials.size(); ++i) {
    std::cout << "f" << i << " = " << format_polynomial(chain.polynomials[i]) << '\n';
  }
  const int vn = sign_variations_at_neg_inf(chain), vp = sign_variations_at_pos_inf(chain);
  std::cout << "V(-inf) = " << vn << ", V(+inf) = " << vp << '\n';
  std::cout << "real roots: " << vn - vp << '\n';
  if (!interval.empty()) {
    Interval iv;
    try {
      iv = {parse_rational(interval[0]), parse_rational(interval[1])};
    } catch (const std::invalid_argument&) {
      throw ParseError({0, "interval endpoints must be rationals", "n or n/d"});
    }
    std::cout << "real roots in (" << to_string(iv.lo) << ", " << to_string(iv.hi)
              << "]: " << count_real_roots_in(f, iv) << '\n';
  }
  return kOk;
}

int cmd_disc(const std::string& text) {
  const Polynomial f = parse_polynomial(text);
  if (f.degree() < 1) throw PreconditionError("discriminant needs a polynomial of positive degree");
  const Rational d = discriminant(f);
  std::cout << "discriminant: " << to_string(d) << '\n';
  std::cout << "sign: " << sign(d) << '\n';
  if (d != 0) {
    const DiscCondition c = discriminant_necessary_condition(f);
    std::cout << "screen: " << to_string(c.status) << " (" << c.consistent_with << ")\n";
  }
  return kOk;
}

int cmd_roots(const std::string& text) {
  const Polynomial f = parse_polynomial(text);
  if (f.degree() < 1) throw PreconditionError("root isolation needs a polynomial of positive degree");
  const auto ivs = isolate_real_roots(f);
  std::cout << ivs.size() << " real root" << (ivs.size() == 1 ? "" : "s") << '\n';
  for (const auto& iv : ivs) std::cout << "(" << to_string(iv.lo) << ", " << to_string(iv.hi) << ")\n";
  return kOk;
}

int cmd_chain(const std::string& path, bool conj_invariant, const std::string& first_reducible,
              const std::string& rho_poly) {
  const json desc = parse_json_text(read_file(path));
  RadicalChain chain = build_chain(parse_chain_json(desc));
  json out;
  if (conj_invariant) {
    const ConjugationInvariantChain ci = make_conjugation_invariant(chain);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ci.chain.levels.size(); ++i) {
      if (ci.chain.levels[i] != 0) names.push_back("g" + std::to_string(i + 1));
    }
    json originals = json::array();
    for (const auto& r : ci.original_roots) originals.push_back(format_element(r, names));
    out["input_chain"] = chain_to_json(chain);
    out["original_roots"] = originals;
    chain = ci.chain;
  }
  out["chain"] = chain_to_json(chain);
  if (!first_reducible.empty()) {
    auto r = first_reducibility(chain, parse_polynomial(first_reducible));
    out["first_reducibility"] = r ? report_to_json(*r) : json(nullptr);
  }
  if (!rho_poly.empty()) {
    if (chain.steps.empty()) throw PreconditionError("the chain has no step");
    out["rho_criterion"] = rho_criterion_to_json(rho_criterion(chain, chain.steps.size() - 1, parse_polynomial(rho_poly)));
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_replay(const std::string& name) {
  if (name != "example-4-1") throw PreconditionError("unknown replay \"" + name + "\"; available: example-4-1");
  const ReplayResult r = replay_cyclotomic_cubic(std::cout);
  return r.exact_claims_hold() ? kOk : kInternal;
}

int cmd_batch(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw PreconditionError("cannot open " + path);
    in = &file;
  }
  int worst = kOk;
  std::string line;
  while (std::getline(*in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(b, e - b + 1);
    json j;
    try {
      j = verdict_to_json(kronecker_verdict(parse_polynomial(text)));
    } catch (const std::exception& ex) {
      const int code = exit_code_for(ex);
      worst = std::max(worst, code);
      j = {{"input", text}, {"error", {{"kind", kind_of(code)}, {"message", ex.what()}}}};
    }
    std::cout << j.dump() << '\n' << std::flush;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker's real-root criterion for solvability by radicals"};
  app.require_subcommand(1);

  std::string poly, path, name, first_reducible, rho_poly;
  bool as_json = false, conj_invariant = false;
  std::vector<std::string> interval;

  auto* verdict = app.add_subcommand("verdict", "classify a polynomial");
  verdict->add_option("poly", poly, "polynomial in X")->required();
  verdict->add_flag("--json", as_json, "JSON certificate");

  auto* factor = app.add_subcommand("factor", "factor over Q");
  factor->add_option("poly", poly, "polynomial in X")->required();
  factor->add_flag("--json", as_json, "JSON output");

  auto* sturm = app.add_subcommand("sturm", "Sturm chain and real-root count");
  sturm->add_option("poly", poly, "polynomial in X")->required();
  sturm->add_option("--interval", interval, "count roots in (lo, hi]")->expected(2);

  auto* disc = app.add_subcommand("disc", "discriminant and sign screen");
  disc->add_option("poly", poly, "polynomial in X")->required();

  auto* roots = app.add_subcommand("roots", "isolating intervals of the real roots");
  roots->add_option("poly", poly, "polynomial in X")->required();

  auto* chain = app.add_subcommand("chain", "build a radical chain from a JSON description");
  chain->add_option("chain", path, "chain JSON file")->required();
  chain->add_flag("--conj-invariant", conj_invariant, "make every level conjugation invariant first");
  chain->add_option("--first-reducible", first_reducible, "first step over which this polynomial splits");
  chain->add_option("--rho-criterion", rho_poly, "real-root prediction from the last step");

  auto* replay = app.add_subcommand("replay", "scripted transcript");
  replay->add_option("name", name, "example-4-1")->required();

  auto* batch = app.add_subcommand("batch", "one polynomial per line, JSON-lines verdicts");
  batch->add_option("file", path, "input file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*verdict) return cmd_verdict(poly, as_json);
    if (*factor) return cmd_factor(poly, as_json);
    if (*sturm) return cmd_sturm(poly, interval);
    if (*disc) return cmd_disc(poly);
    if (*roots) return cmd_roots(poly);
    if (*chain) return cmd_chain(path, conj_invariant, first_reducible, rho_poly);
    if (*replay) return cmd_replay(name);
    if (*batch) return cmd_batch(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}
