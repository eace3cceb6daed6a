// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON form of towers: a list of levels
//   {"minpoly": "<polynomial in X over g1..g(k-1)>",
//    "root": {"re": "<decimal>", "im": "<decimal>", "radius": "<decimal>"}}
// The formatter recomputes each root ball at default_precision(), so
// format(parse(format(K))) == format(K) byte for byte.

#include "json.hpp"

#include "kronecker/tower.hpp"

namespace kronecker {

/// Center printed with enough digits for `prec` bits, radius (6 digits,
/// rounded up) widened to cover the printing error of the center.
nlohmann::json ball_to_json(const ComplexBall& b);
/// Throws PreconditionError for missing keys or malformed numbers.
ComplexBall ball_from_json(const nlohmann::json& j, mpfr_prec_t prec);

nlohmann::json tower_to_json(const TowerField& K);
/// Rebuilds the tower level by level with make_extension (irreducibility is
/// checked). Parse errors in a minpoly surface as ParseError.
TowerField tower_from_json(const nlohmann::json& j);

}  // namespace kronecker
