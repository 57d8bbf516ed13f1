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

#include "sphereconv/core/gnomonic.hpp"
#include "sphereconv/core/radial_map.hpp"
#include "sphereconv/core/random.hpp"
#include "sphereconv/core/sphere.hpp"

#include <cstdint>
#include <functional>

namespace sphereconv {

/// Spherical star set about u through its spherical radial function
/// rho_u : S_u -> [0, pi/2), evaluated on unit v orthogonal to u (ambient
/// coordinates).
struct SphStarMap {
    Vec u;
    std::function<double(const Vec&)> eval;

    static SphStarMap from_function(Vec u, std::function<double(const Vec&)> f);
    /// Cap of angular radius alpha about u.
    static SphStarMap cap(Vec u, double alpha);
    static SphStarMap point(Vec u) { return cap(std::move(u), 0.0); }
};

RadialMap radial_sum(const RadialMap& K, const RadialMap& L);

/// rho^p = rho_K^p + rho_L^p, p > 0.
RadialMap lp_radial_sum(double p, const RadialMap& K, const RadialMap& L);

/// Restriction to span(V) in V coordinates.
RadialMap section(const RadialMap& L, const SubspaceBasis& V);

/// L rotated by R: rho_{RL}(x) = rho_L(R^T x). R must be a rotation within 1e-12.
RadialMap rotate(const RadialMap& L, const Mat& R);

/// rho_u(L, v) with orthogonality and range checks (Domain when the value
/// leaves [0, pi/2)).
double sph_radial(const SphStarMap& S, const Vec& v);

/// u cos(rho) + v sin(rho)
Vec sph_boundary_point(const SphStarMap& S, const Vec& v);

/// L intersected with the great subsphere span(S) through u: rho is kept on
/// directions of span(S) (distance <= 1e-9) and zero elsewhere.
SphStarMap sph_section(const SphStarMap& L, const SubspaceBasis& S);

/// Rotation fixing u: rho(v) -> rho(R^T v).
SphStarMap sph_rotate(const SphStarMap& L, const Mat& R);

/// Gnomonic image: rho(g_u(L), x) = tan rho_u(L, x) in chart coordinates.
RadialMap star_bridge(const HemisphereChart& chart, const SphStarMap& S);

/// Inverse of star_bridge: rho_u(v) = arctan rho(x).
SphStarMap star_unbridge(const HemisphereChart& chart, const RadialMap& R);

/// Star map of a proper convex body containing u in its interior, by
/// bisection against `contains`.
SphStarMap body_star_map(const SpherePolytope& K, const Vec& u, double tol = 1e-13);

/// max{alpha in [0, pi/2) : u cos(alpha) + v sin(alpha) in K} by bisection.
double ray_reach(const SpherePolytope& K, const Vec& u, const Vec& v, double tol = 1e-13);

using StarCombiner = std::function<double(double, double, double, double)>;

/// rho(v) = f(rho_K(-v), rho_K(v), rho_L(-v), rho_L(v)).
SphStarMap f_op(const StarCombiner& f, const SphStarMap& K, const SphStarMap& L);

/// (a, b, c, d) -> arctan((tan^p b + tan^p d)^(1/p)): the transported L_p
/// radial sum.
StarCombiner lp_star_combiner(double p);

using StarOp = std::function<SphStarMap(const SphStarMap&, const SphStarMap&)>;

/// A combiner that reads L at one fixed direction orthogonal to u, so it is
/// not section covariant.
StarOp broken_star_op(const Vec& u, const Vec& external);

/// rho(v) = c0 + sum_k c_k max(0, v.z_k)^2, capped below pi/2.
SphStarMap random_star_map(Rng& rng, const Vec& u);

struct SectionReport {
    int trials = 0;
    double max_dev = 0.0;
    int violations = 0;
    int first_violation = -1;
    std::uint64_t seed = 0;
};

/// op(K n S, L n S) against op(K, L) n S on directions of S_u inside span(S).
/// `make_op` receives the trial's u and returns the op under test.
SectionReport section_covariance_check(const std::function<StarOp(const Vec&)>& make_op, int trials,
                                       double tol, std::uint64_t seed, int ambient_dim = 3,
                                       int directions = 64);

struct PolarReport {
    double relation_dev = 0.0; // max |h_u(K,v) + rho_{-u}(K°,v) - pi/2|
    double bridge_dev = 0.0;   // max |1/h(g_u K, v) - tan rho_{-u}(K°, v)|
    SpherePolytope polar;
    Vec rho_polar; // rho_{-u}(K°, v) on the sampled directions
    Mat directions;
};

/// Polar relations on `dirs` directions of S_u. K must contain u in its
/// interior (Precondition otherwise).
PolarReport polar_relations_check(const HemisphereChart& chart, const SpherePolytope& K, int dirs);

/// Ring of m generators at angle alpha about u.
SpherePolytope cap_ring(const Vec& u, double alpha, int m);

} // namespace sphereconv
