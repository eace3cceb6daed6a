// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker/tower_io.hpp"

#include <cmath>
#include <stdexcept>

namespace kronecker {

namespace {

std::string decimal_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("ball is missing \"") + key + "\"");
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw PreconditionError(std::string("ball field \"") + key + "\" must be a decimal string");
}

}  // namespace

nlohmann::json ball_to_json(const ComplexBall& b) {
  const mpfr_prec_t P = b.precision();
  const int digits = static_cast<int>(std::ceil(static_cast<double>(P) * 0.30103)) + 1;
  // Printing the center to `digits` places moves it by at most
  // |c| * 10^(1 - digits) per coordinate.
  Real err(kRadiusPrec), t(kRadiusPrec), scale(kRadiusPrec);
  mpfr_set_ui(scale.get(), 10, MPFR_RNDU);
  mpfr_pow_si(scale.get(), scale.get(), 1 - digits, MPFR_RNDU);
  mpfr_abs(t.get(), b.re().get(), MPFR_RNDU);
  mpfr_abs(err.get(), b.im().get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), t.get(), MPFR_RNDU);
  mpfr_mul(err.get(), err.get(), scale.get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), b.rad().get(), MPFR_RNDU);
  nlohmann::json j;
  j["re"] = b.re().to_decimal(digits);
  j["im"] = b.im().to_decimal(digits);
  j["radius"] = err.to_decimal(6, MPFR_RNDU);
  return j;
}

ComplexBall ball_from_json(const nlohmann::json& j, mpfr_prec_t prec) {
  try {
    return ball_from_decimals(decimal_field(j, "re"), decimal_field(j, "im"), decimal_field(j, "radius"), prec);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(std::string("malformed ball: ") + e.what());
  }
}

nlohmann::json tower_to_json(const TowerField& K) {
  const mpfr_prec_t P = default_precision();
  nlohmann::json out = nlohmann::json::array();
  for (int k = 1; k <= K.height(); ++k) {
    nlohmann::json lv;
    lv["minpoly"] = format_field_polynomial(K.level_minpoly(k));
    lv["root"] = ball_to_json(K.root_ball_at(k, P));
    out.push_back(std::move(lv));
  }
  return out;
}

TowerField tower_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("tower description must be a JSON list of levels");
  TowerField K;
  for (const auto& lv : j) {
    if (!lv.is_object() || !lv.contains("minpoly") || !lv.at("minpoly").is_string() || !lv.contains("root")) {
      throw PreconditionError("each level needs a \"minpoly\" string and a \"root\" ball");
    }
    KPoly m = parse_field_polynomial(lv.at("minpoly").get<std::string>(), K);
    K = make_extension(K, m, ball_from_json(lv.at("root"), default_precision()));
  }
  return K;
}

}  // namespace kronecker
