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
#include "sphereconv/core/sphere.hpp"

#include "sphereconv/core/dual_cone.hpp"
#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/euclid.hpp"
#include "sphereconv/core/min_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace sphereconv {

namespace {

Mat normalize_columns(const Mat& points) {
    Mat out(points.rows(), points.cols());
    for (Eigen::Index i = 0; i < points.cols(); ++i) {
        const double n = points.col(i).norm();
        if (!(n > 1e-300) || !std::isfinite(n))
            fail(ErrorCode::InvalidArgument, "generator must be a finite nonzero vector");
        out.col(i) = points.col(i) / n;
    }
    return out;
}

// Chart images g / (c . g), in ambient coordinates on the plane c . y = 1.
Mat chart_images(const Mat& gens, const Vec& c) {
    Mat out(gens.rows(), gens.cols());
    for (Eigen::Index i = 0; i < gens.cols(); ++i)
        out.col(i) = gens.col(i) / c.dot(gens.col(i));
    return out;
}

void require_in_hemisphere(const Vec& u, const SpherePolytope& K, const char* what) {
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        if (!(u.dot(K.generators().col(i)) > 1e-12))
            fail(ErrorCode::Precondition, std::string(what) + ": body is not in the open hemisphere of u");
    }
}

} // namespace

SpherePolytope SpherePolytope::from_parts(Mat generators, Vec center) {
    if (generators.cols() == 0)
        fail(ErrorCode::InvalidArgument, "spherical body needs at least one generator");
    require_same_dim(center.size(), generators.rows(), "SpherePolytope");
    if (generators.rows() < 1)
        fail(ErrorCode::InvalidArgument, "ambient dimension must be positive");
    for (Eigen::Index i = 0; i < generators.cols(); ++i) {
        if (std::abs(generators.col(i).norm() - 1.0) > 1e-12)
            fail(ErrorCode::InvalidArgument, "generators must be unit vectors within 1e-12");
    }
    if (std::abs(center.norm() - 1.0) > 1e-12)
        fail(ErrorCode::InvalidArgument, "center must be a unit vector within 1e-12");
    SpherePolytope K;
    K.generators_ = std::move(generators);
    K.center_ = std::move(center);
    if (!(K.margin() > 1e-9))
        fail(ErrorCode::Improper, "center does not witness an open hemisphere (margin <= 1e-9)");
    return K;
}

double SpherePolytope::margin() const {
    return (center_.transpose() * generators_).minCoeff();
}

void require_unit(const Vec& v, const char* what) {
    if (!(std::abs(v.norm() - 1.0) <= 1e-9))
        fail(ErrorCode::InvalidArgument, std::string(what) + ": expected a unit vector");
}

double sph_dist(const Vec& u, const Vec& v) {
    require_same_dim(u.size(), v.size(), "sph_dist");
    require_unit(u, "sph_dist");
    require_unit(v, "sph_dist");
    return 2.0 * std::atan2((u - v).norm(), (u + v).norm());
}

HemisphereFit fit_hemisphere(const Mat& points) {
    const Mat unit = normalize_columns(points);
    const Vec p = min_norm_point(unit, kWolfeTight).point;
    const double norm = p.norm();
    if (!(norm > 1e-12))
        return {Vec(), 0.0};
    const Vec c = p / norm;
    return {c, (c.transpose() * unit).minCoeff()};
}

std::optional<Vec> hemisphere_center(const Mat& points) {
    if (points.cols() == 0)
        fail(ErrorCode::InvalidArgument, "hemisphere_center needs a nonempty point list");
    HemisphereFit fit = fit_hemisphere(points);
    if (fit.center.size() == 0 || !(fit.margin > 1e-9))
        return std::nullopt;
    return fit.center;
}

Mat tangent_basis(const Vec& u) {
    const Eigen::Index n = u.size();
    Mat seeds(n, n + 1);
    seeds.col(0) = u;
    seeds.rightCols(n) = Mat::Identity(n, n);
    const Mat q = gram_schmidt(seeds, 1e-8, static_cast<int>(n));
    return q.rightCols(n - 1);
}

SpherePolytope make_body(const Mat& points) {
    if (points.cols() == 0)
        fail(ErrorCode::InvalidArgument, "spherical body needs at least one generator");
    const Mat unit = normalize_columns(points);
    const auto center = hemisphere_center(unit);
    if (!center)
        fail(ErrorCode::Improper, "generators do not lie in an open hemisphere");
    const Vec& c = *center;
    // Extreme rays of the cone are the extreme points of the chart images.
    const Mat chart = tangent_basis(c).transpose() * chart_images(unit, c);
    const auto idx = extreme_point_indices(chart);
    Mat gens(unit.rows(), static_cast<Eigen::Index>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        gens.col(static_cast<Eigen::Index>(i)) = unit.col(idx[i]);
    return SpherePolytope::from_parts(std::move(gens), c);
}

bool contains(const SpherePolytope& K, const Vec& x, double tol) {
    require_same_dim(x.size(), K.ambient_dim(), "contains");
    const Vec& c = K.center();
    const double cx = c.dot(x);
    if (cx <= 1e-12)
        return false;
    return distance_to_hull(chart_images(K.generators(), c), x / cx, kWolfeTight) <= tol;
}

SpherePolytope sph_project(const SpherePolytope& K, const SubspaceBasis& S) {
    require_same_dim(S.ambient_dim(), K.ambient_dim(), "sph_project");
    const Mat proj = S.basis() * (S.basis().transpose() * K.generators());
    Mat kept(proj.rows(), 0);
    for (Eigen::Index i = 0; i < proj.cols(); ++i) {
        const double n = proj.col(i).norm();
        if (n > 1e-12) {
            kept.conservativeResize(Eigen::NoChange, kept.cols() + 1);
            kept.col(kept.cols() - 1) = proj.col(i) / n;
        }
    }
    if (kept.cols() == 0)
        fail(ErrorCode::Precondition, "projection of the body onto the subsphere is empty");
    try {
        return make_body(kept);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Improper)
            fail(ErrorCode::Precondition, "projected body is not proper: no center of K lies in S");
        throw;
    }
}

double sph_support(const Vec& u, const SpherePolytope& K, const Vec& v) {
    require_same_dim(u.size(), K.ambient_dim(), "sph_support");
    require_same_dim(v.size(), K.ambient_dim(), "sph_support");
    require_unit(u, "sph_support");
    require_unit(v, "sph_support");
    if (std::abs(u.dot(v)) > 1e-12)
        fail(ErrorCode::InvalidArgument, "sph_support needs v orthogonal to u");
    require_in_hemisphere(u, K, "sph_support");
    double best = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        const auto g = K.generators().col(i);
        best = std::max(best, std::atan2(v.dot(g), u.dot(g)));
    }
    return best;
}

SpherePolytope segment(const Vec& u, const Vec& w, double alpha, double beta) {
    require_same_dim(u.size(), w.size(), "segment");
    require_unit(u, "segment");
    require_unit(w, "segment");
    if (std::abs(u.dot(w)) > 1e-12)
        fail(ErrorCode::InvalidArgument, "segment needs w orthogonal to u");
    const double half_pi = std::numbers::pi / 2.0;
    if (!(-half_pi < alpha && alpha <= beta && beta < half_pi))
        fail(ErrorCode::InvalidArgument, "segment needs -pi/2 < alpha <= beta < pi/2");
    if (alpha == beta)
        return make_body(Mat(u * std::cos(alpha) + w * std::sin(alpha)));
    Mat g(u.size(), 2);
    g.col(0) = u * std::cos(alpha) + w * std::sin(alpha);
    g.col(1) = u * std::cos(beta) + w * std::sin(beta);
    return make_body(g);
}

SpherePolytope conv_union(const SpherePolytope& K, const SpherePolytope& L) {
    require_same_dim(K.ambient_dim(), L.ambient_dim(), "conv_union");
    Mat g(K.ambient_dim(), K.size() + L.size());
    g << K.generators(), L.generators();
    return make_body(g);
}

SpherePolytope neg(const SpherePolytope& K) {
    return SpherePolytope::from_parts(-K.generators(), -K.center());
}

Mat boundary_samples(const SpherePolytope& K, int samples) {
    if (samples < 1)
        fail(ErrorCode::InvalidArgument, "samples must be >= 1");
    const Eigen::Index m = K.size();
    const Mat& g = K.generators();
    const Eigen::Index total = std::max<Eigen::Index>(samples, m);
    Mat out(K.ambient_dim(), total);
    out.leftCols(m) = g;
    Eigen::Index c = m;
    const Eigen::Index pairs = m * (m - 1) / 2;
    if (pairs > 0) {
        // Half of the remaining budget goes to the geodesic edges.
        const Eigen::Index per_pair = (total - m) / (2 * pairs);
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = i + 1; j < m; ++j) {
                for (Eigen::Index k = 1; k <= per_pair; ++k) {
                    const double t = static_cast<double>(k) / static_cast<double>(per_pair + 1);
                    out.col(c++) = ((1.0 - t) * g.col(i) + t * g.col(j)).normalized();
                }
            }
        }
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::exponential_distribution<double> expo(1.0);
    while (c < total) {
        Vec w(m);
        for (Eigen::Index i = 0; i < m; ++i)
            w(i) = expo(rng);
        out.col(c++) = (g * w).normalized();
    }
    return out;
}

double point_body_angle(const Vec& x, const SpherePolytope& K) {
    require_same_dim(x.size(), K.ambient_dim(), "point_body_angle");
    if (contains(K, x))
        return 0.0;
    // Cone points of norm <= 1 have coefficient sum <= 1/margin, so the
    // truncated hull of {0} and g/margin carries the cone projection of x.
    const double scale = 1.0 / K.margin();
    Mat pts(K.ambient_dim(), K.size() + 1);
    pts.col(0).setZero();
    pts.rightCols(K.size()) = scale * K.generators();
    const Vec p = nearest_in_hull(pts, x, kWolfeTight).point;
    if (p.norm() > 1e-12)
        return std::atan2((x - p).norm(), p.norm());
    const Mat border = boundary_samples(K, 256);
    double best = std::numbers::pi;
    for (Eigen::Index i = 0; i < border.cols(); ++i)
        best = std::min(best, angle_between(x, border.col(i)));
    return best;
}

double delta_s(const SpherePolytope& K, const SpherePolytope& L, int samples) {
    require_same_dim(K.ambient_dim(), L.ambient_dim(), "delta_s");
    double best = 0.0;
    const Mat sk = boundary_samples(K, samples);
    for (Eigen::Index i = 0; i < sk.cols(); ++i)
        best = std::max(best, point_body_angle(sk.col(i), L));
    const Mat sl = boundary_samples(L, samples);
    for (Eigen::Index i = 0; i < sl.cols(); ++i)
        best = std::max(best, point_body_angle(sl.col(i), K));
    return best;
}

Mat equator_directions(const Vec& u, int samples) {
    if (samples < 1)
        fail(ErrorCode::InvalidArgument, "samples must be >= 1");
    const Mat t = tangent_basis(u);
    return t * direction_grid(static_cast<int>(t.cols()), samples);
}

double gamma_u(const Vec& u, const SpherePolytope& K, const SpherePolytope& L, int samples) {
    require_same_dim(K.ambient_dim(), L.ambient_dim(), "gamma_u");
    require_same_dim(u.size(), K.ambient_dim(), "gamma_u");
    require_unit(u, "gamma_u");
    require_in_hemisphere(u, K, "gamma_u");
    require_in_hemisphere(u, L, "gamma_u");
    const Mat dirs = equator_directions(u, samples);
    double best = 0.0;
    for (Eigen::Index i = 0; i < dirs.cols(); ++i)
        best = std::max(best, std::abs(sph_support(u, K, dirs.col(i)) - sph_support(u, L, dirs.col(i))));
    return best;
}

SpherePolytope sph_polar(const SpherePolytope& K) {
    const int d = K.ambient_dim();
    if (d > 4)
        fail(ErrorCode::UnsupportedDim, "sph_polar supports ambient dimension <= 4");
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(K.generators());
    cod.setThreshold(1e-10);
    if (cod.rank() < d)
        fail(ErrorCode::Degenerate, "sph_polar needs generators spanning the ambient space");
    const Mat rays = dual_cone_rays(K.generators().transpose());
    return make_body(rays);
}

double body_gap(const SpherePolytope& K, const SpherePolytope& L) {
    require_same_dim(K.ambient_dim(), L.ambient_dim(), "body_gap");
    double best = 0.0;
    for (Eigen::Index i = 0; i < K.size(); ++i)
        best = std::max(best, point_body_angle(K.generators().col(i), L));
    for (Eigen::Index i = 0; i < L.size(); ++i)
        best = std::max(best, point_body_angle(L.generators().col(i), K));
    return best;
}

bool same_body(const SpherePolytope& K, const SpherePolytope& L, double slack) {
    if (K.ambient_dim() != L.ambient_dim())
        return false;
    return body_gap(K, L) <= slack;
}

} // namespace sphereconv
