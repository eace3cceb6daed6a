// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Shared internals of the number-field code. Not installed.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kronecker/tower.hpp"
#include "kronecker/zpoly.hpp"

namespace kronecker {

using Levels = std::vector<std::shared_ptr<const Level>>;

struct BallCache {
  std::mutex mu;
  std::map<mpfr_prec_t, ComplexBall> balls;
};

struct Level {
  std::uint64_t id = 0;
  int degree = 0;      // over the previous level
  int total = 0;       // over Q
  int base_total = 1;  // previous level over Q
  std::vector<Coords> minpoly;  // degree + 1 entries, monic
  ComplexBall ball;             // isolates the generator
  std::shared_ptr<BallCache> cache;
};

struct HintTable {
  struct Hint {
    std::vector<std::uint64_t> tower;  // level ids of the image's home
    Coords coords;
  };
  std::map<std::uint64_t, Hint> by_level;
};

struct Flattening {
  std::vector<std::uint64_t> ids;
  std::vector<int> multipliers;
  Coords gamma;
  Polynomial gamma_minpoly;
  Integer scale;                // theta = scale * gamma
  zpoly::ZPoly theta_minpoly;   // monic
  std::vector<Coords> basis;    // basis[i] = theta^i in tower coordinates
  std::vector<Coords> inverse;  // rows: theta coordinates from tower ones
};

std::uint64_t next_level_id();

// Flat arithmetic on the first k levels.
Coords tower_add(const Coords& a, const Coords& b);
Coords tower_sub(const Coords& a, const Coords& b);
Coords tower_mul(const Levels& L, int k, const Coords& a, const Coords& b);
Coords tower_inverse(const Levels& L, int k, const Coords& a);
bool coords_zero(const Coords& a);

ComplexBall level_ball(const Levels& L, int k, mpfr_prec_t prec);
ComplexBall embed_coords(const Levels& L, int k, const Coords& c, mpfr_prec_t prec);

std::shared_ptr<const Flattening> flattening(const TowerField& K);
Coords to_theta(const Flattening& F, const Coords& x);
Coords from_theta(const Flattening& F, const Coords& u);

/// Ordering of monic polynomials over a tower: degree, then coordinates
/// from the top coefficient down.
bool kpoly_less(const KPoly& a, const KPoly& b);

}  // namespace kronecker
