/*
 * Copyright 2026 The sphereconv Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#pragma once

#include "sphereconv/core/euclid.hpp"
#include "sphereconv/core/sphere.hpp"

#include <cstdint>
#include <random>

namespace sphereconv {

/// All randomness is drawn from std::mt19937_64. Trial streams are seeded
/// with splitmix64 applied to seed ^ splitmix64(trial index + 1), so every
/// (seed, trial) pair owns an independent, reproducible generator.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

Rng make_stream(std::uint64_t seed, std::uint64_t index);

double uniform(Rng& rng, double lo, double hi);

Vec random_unit(Rng& rng, int dim);

/// Unit vector orthogonal to u (u unit).
Vec random_orthogonal_unit(Rng& rng, const Vec& u);

/// Uniform point on the spherical cap of angular radius theta_max <= pi/2
/// about the unit vector c.
Vec random_in_cap(Rng& rng, const Vec& c, double theta_max);

struct CapBodyParams {
    int generators = 5;
    double theta_max = 1.0471975511965976; // pi/3
};

/// make_body of m points drawn uniformly from the cap about `center`.
SpherePolytope random_cap_body(Rng& rng, const Vec& center, const CapBodyParams& params = {});

/// Random subspace of dimension `dim` whose basis starts with the unit x.
SubspaceBasis random_subspace_through(Rng& rng, const Vec& x, int dim);

/// Random subspace of the given dimension.
SubspaceBasis random_subspace(Rng& rng, int ambient, int dim);

/// m Gaussian points scaled by `radius`, canonicalized.
ConvexPolytope random_polytope(Rng& rng, int dim, int points, double radius = 1.0);

/// Random polygon (or point / segment) in a random closed quadrant.
QuadrantPolytope random_quadrant_polygon(Rng& rng);

/// Haar-distributed rotation (det +1).
Mat random_rotation(Rng& rng, int dim);

} // namespace sphereconv
