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
#include "sphereconv/core/gnomonic.hpp"

#include "sphereconv/core/errors.hpp"

#include <cmath>

namespace sphereconv {

HemisphereChart HemisphereChart::at(const Vec& u) {
    require_unit(u, "HemisphereChart");
    return from_parts(u / u.norm(), tangent_basis(u / u.norm()));
}

HemisphereChart HemisphereChart::from_parts(Vec u, Mat basis) {
    require_same_dim(basis.rows(), u.size(), "HemisphereChart");
    if (basis.cols() != u.size() - 1)
        fail(ErrorCode::InvalidArgument, "chart basis must have n vectors for S^n");
    if (std::abs(u.norm() - 1.0) > 1e-12)
        fail(ErrorCode::InvalidArgument, "chart center must be a unit vector within 1e-12");
    if (!is_orthonormal(basis) || (basis.transpose() * u).cwiseAbs().maxCoeff() > 1e-12)
        fail(ErrorCode::InvalidArgument, "chart basis must be orthonormal and orthogonal to u");
    return HemisphereChart{std::move(u), std::move(basis)};
}

Vec gproj(const HemisphereChart& chart, const Vec& v) {
    require_same_dim(v.size(), chart.u.size(), "gproj");
    const double uv = chart.u.dot(v);
    if (!(uv > 1e-12))
        fail(ErrorCode::OutOfChart, "point is outside the open hemisphere of the chart (u.v <= 1e-12)");
    // The u-component of v/(u.v) is exactly 1, so subtracting u only drops it.
    return chart.to_plane(v) / uv;
}

Vec gproj_inv(const HemisphereChart& chart, const Vec& x) {
    require_same_dim(x.size(), chart.plane_dim(), "gproj_inv");
    return (chart.to_ambient(x) + chart.u).normalized();
}

ConvexPolytope map_body(const HemisphereChart& chart, const SpherePolytope& K) {
    require_same_dim(K.ambient_dim(), chart.u.size(), "map_body");
    Mat pts(chart.plane_dim(), K.size());
    for (Eigen::Index i = 0; i < K.size(); ++i)
        pts.col(i) = gproj(chart, K.generators().col(i));
    return ConvexPolytope(pts);
}

SpherePolytope map_body_inv(const HemisphereChart& chart, const ConvexPolytope& P) {
    require_same_dim(P.dim(), chart.plane_dim(), "map_body_inv");
    Mat g(chart.u.size(), P.size());
    for (Eigen::Index i = 0; i < P.size(); ++i)
        g.col(i) = gproj_inv(chart, P.vertices().col(i));
    return make_body(g);
}

SubspaceBasis subsphere_to_subspace(const HemisphereChart& chart, const SubspaceBasis& S) {
    require_same_dim(S.ambient_dim(), chart.u.size(), "subsphere_to_subspace");
    if (S.distance(chart.u) > 1e-12)
        fail(ErrorCode::Precondition, "subsphere does not pass through the chart center");
    // Columns are images of unit vectors; the image of u is numerically zero
    // and must not survive as a noise direction.
    Mat coords = chart.basis.transpose() * S.basis();
    for (Eigen::Index c = 0; c < coords.cols(); ++c) {
        if (coords.col(c).norm() <= 1e-8)
            coords.col(c).setZero();
    }
    const Mat q = gram_schmidt(coords, 1e-8, S.dim() - 1);
    if (q.cols() != S.dim() - 1)
        fail(ErrorCode::Degenerate, "subsphere basis is numerically degenerate");
    return SubspaceBasis(q);
}

std::pair<double, double> support_bridge(const HemisphereChart& chart, const SpherePolytope& K,
                                         const Vec& v) {
    const double spherical = sph_support(chart.u, K, v);
    return {support(map_body(chart, K), chart.to_plane(v)), std::tan(spherical)};
}

} // namespace sphereconv
