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

#include "sphereconv/core/linalg.hpp"

#include <optional>

namespace sphereconv {

/// Proper spherical convex body: the spherical convex hull of finitely many
/// unit generators that all lie in the open hemisphere of `center`.
class SpherePolytope {
public:
    SpherePolytope() = default;

    /// Validates unit generators (1e-12), a unit center and a positive
    /// margin min(center . g) > 1e-9. Generators are stored as given.
    static SpherePolytope from_parts(Mat generators, Vec center);

    int ambient_dim() const { return static_cast<int>(generators_.rows()); }
    int size() const { return static_cast<int>(generators_.cols()); }
    const Mat& generators() const { return generators_; }
    const Vec& center() const { return center_; }

    /// min over generators of center . g
    double margin() const;

private:
    Mat generators_;
    Vec center_;
};

/// Unit check with tolerance 1e-9 (throws InvalidArgument).
void require_unit(const Vec& v, const char* what);

double sph_dist(const Vec& u, const Vec& v);

struct HemisphereFit {
    Vec center;    // normalized min-norm point of conv(points), or empty
    double margin; // min over points of center . p; <= 0 when no open hemisphere fits
};

/// Margin-maximizing hemisphere center of unit vectors (columns).
HemisphereFit fit_hemisphere(const Mat& points);

/// The center of fit_hemisphere when its margin exceeds 1e-9.
std::optional<Vec> hemisphere_center(const Mat& points);

/// Normalizes, certifies a hemisphere center and keeps the extreme
/// generators. Throws Improper when no open hemisphere contains the points.
SpherePolytope make_body(const Mat& points);

/// Orthonormal basis (columns) of the hyperplane u^perp: Gram-Schmidt seeded
/// with u followed by the standard basis, with u dropped.
Mat tangent_basis(const Vec& u);

/// x in the convex cone generated by K's generators (residual <= tol in the
/// chart of K's center).
bool contains(const SpherePolytope& K, const Vec& x, double tol = 1e-9);

/// K|S = (rad(K)|V) intersected with the sphere, V = span(S).
SpherePolytope sph_project(const SpherePolytope& K, const SubspaceBasis& S);

/// h_u(K, v) = max over generators of atan2(v . g, u . g).
double sph_support(const Vec& u, const SpherePolytope& K, const Vec& v);

/// {u cos(l) + w sin(l) : l in [alpha, beta]}
SpherePolytope segment(const Vec& u, const Vec& w, double alpha, double beta);

SpherePolytope conv_union(const SpherePolytope& K, const SpherePolytope& L);

SpherePolytope neg(const SpherePolytope& K);

/// Spherical distance from unit x to K through the cone projection onto rad(K);
/// falls back to sampled boundary points when the projection vanishes.
double point_body_angle(const Vec& x, const SpherePolytope& K);

/// Generators, geodesic samples between generator pairs and deterministic
/// random interior combinations; `samples` points in total (at least the
/// generators).
Mat boundary_samples(const SpherePolytope& K, int samples);

/// Sampled lower bound for the spherical Hausdorff distance.
double delta_s(const SpherePolytope& K, const SpherePolytope& L, int samples);

/// max over a sample of v in S_u of |h_u(K,v) - h_u(L,v)|.
double gamma_u(const Vec& u, const SpherePolytope& K, const SpherePolytope& L, int samples);

/// Directions of S_u used by gamma_u, one unit column each.
Mat equator_directions(const Vec& u, int samples);

/// K° = {v : v . w <= 0 for w in K} through double description. Needs
/// ambient_dim <= 4 and spanning generators.
SpherePolytope sph_polar(const SpherePolytope& K);

/// Body equality: generators of each within 1e-9 of the other body.
double body_gap(const SpherePolytope& K, const SpherePolytope& L);
bool same_body(const SpherePolytope& K, const SpherePolytope& L, double slack = 1e-9);

} // namespace sphereconv
