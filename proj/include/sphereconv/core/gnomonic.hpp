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

#include <utility>

namespace sphereconv {

/// Open hemisphere at u together with an orthonormal basis of u^perp. Plane
/// values are expressed in basis coordinates (dimension n).
struct HemisphereChart {
    Vec u;
    Mat basis; // (n+1) x n

    /// Deterministic chart: Gram-Schmidt on [u, e_1, ..., e_{n+1}].
    static HemisphereChart at(const Vec& u);

    /// Validates a caller-supplied basis (orthonormal and orthogonal to u
    /// within 1e-12).
    static HemisphereChart from_parts(Vec u, Mat basis);

    int plane_dim() const { return static_cast<int>(basis.cols()); }

    /// Plane coordinates of an ambient vector (its u-component dropped).
    Vec to_plane(const Vec& v) const { return basis.transpose() * v; }
    Vec to_ambient(const Vec& x) const { return basis * x; }
};

/// g_u(v) = v/(u.v) - u in plane coordinates; OutOfChart when u.v <= 1e-12.
Vec gproj(const HemisphereChart& chart, const Vec& v);

/// (x + u)/|x + u|
Vec gproj_inv(const HemisphereChart& chart, const Vec& x);

ConvexPolytope map_body(const HemisphereChart& chart, const SpherePolytope& K);

SpherePolytope map_body_inv(const HemisphereChart& chart, const ConvexPolytope& P);

/// span(S) intersected with u^perp, in plane coordinates. Precondition when
/// u is not in span(S).
SubspaceBasis subsphere_to_subspace(const HemisphereChart& chart, const SubspaceBasis& S);

/// (h(g_u K, v), tan h_u(K, v)) for v in S_u given in ambient coordinates.
std::pair<double, double> support_bridge(const HemisphereChart& chart, const SpherePolytope& K,
                                         const Vec& v);

} // namespace sphereconv
