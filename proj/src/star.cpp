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
#include "sphereconv/core/star.hpp"

#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sphereconv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_rotation(const Mat& R, int dim, const char* what) {
    if (R.rows() != dim || R.cols() != dim)
        fail(ErrorCode::DimensionMismatch, std::string(what) + ": rotation has the wrong size");
    const double ortho = (R.transpose() * R - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (ortho > 1e-12 || std::abs(R.determinant() - 1.0) > 1e-12)
        fail(ErrorCode::InvalidArgument, std::string(what) + ": matrix is not a rotation");
}

} // namespace

SphStarMap SphStarMap::from_function(Vec u, std::function<double(const Vec&)> f) {
    require_unit(u, "SphStarMap");
    return SphStarMap{u.normalized(), std::move(f)};
}

SphStarMap SphStarMap::cap(Vec u, double alpha) {
    if (!(alpha >= 0.0 && alpha < kHalfPi))
        fail(ErrorCode::InvalidArgument, "cap radius must lie in [0, pi/2)");
    return from_function(std::move(u), [alpha](const Vec&) { return alpha; });
}

RadialMap radial_sum(const RadialMap& K, const RadialMap& L) {
    return lp_radial_sum(1.0, K, L);
}

RadialMap lp_radial_sum(double p, const RadialMap& K, const RadialMap& L) {
    if (!(p > 0.0))
        fail(ErrorCode::InvalidArgument, "L_p radial sum needs p > 0");
    require_same_dim(K.dim, L.dim, "lp_radial_sum");
    auto k = K.eval;
    auto l = L.eval;
    if (p == 1.0)
        return RadialMap::from_function(K.dim, [k, l](const Vec& v) { return k(v) + l(v); });
    return RadialMap::from_function(K.dim, [p, k, l](const Vec& v) {
        return std::pow(std::pow(k(v), p) + std::pow(l(v), p), 1.0 / p);
    });
}

RadialMap section(const RadialMap& L, const SubspaceBasis& V) {
    require_same_dim(V.ambient_dim(), L.dim, "section");
    if (V.dim() < 1)
        fail(ErrorCode::InvalidArgument, "section needs a subspace of dimension >= 1");
    auto f = L.eval;
    Mat B = V.basis();
    return RadialMap::from_function(V.dim(), [f, B](const Vec& y) { return f(B * y); });
}

RadialMap rotate(const RadialMap& L, const Mat& R) {
    require_rotation(R, L.dim, "rotate");
    auto f = L.eval;
    Mat Rt = R.transpose();
    return RadialMap::from_function(L.dim, [f, Rt](const Vec& x) { return f(Rt * x); });
}

double sph_radial(const SphStarMap& S, const Vec& v) {
    require_same_dim(v.size(), S.u.size(), "sph_radial");
    require_unit(v, "sph_radial");
    if (std::abs(S.u.dot(v)) > 1e-12)
        fail(ErrorCode::InvalidArgument, "sph_radial needs v orthogonal to u");
    const double rho = S.eval(v);
    if (!(rho >= 0.0 && rho < kHalfPi))
        fail(ErrorCode::Domain, "spherical radial value outside [0, pi/2)");
    return rho;
}

Vec sph_boundary_point(const SphStarMap& S, const Vec& v) {
    const double rho = sph_radial(S, v);
    return S.u * std::cos(rho) + v * std::sin(rho);
}

SphStarMap sph_section(const SphStarMap& L, const SubspaceBasis& S) {
    require_same_dim(S.ambient_dim(), L.u.size(), "sph_section");
    if (S.distance(L.u) > 1e-12)
        fail(ErrorCode::Precondition, "section subsphere must pass through u");
    auto f = L.eval;
    return SphStarMap{L.u, [f, S](const Vec& v) { return S.distance(v) <= 1e-9 ? f(v) : 0.0; }};
}

SphStarMap sph_rotate(const SphStarMap& L, const Mat& R) {
    require_rotation(R, static_cast<int>(L.u.size()), "sph_rotate");
    if ((R * L.u - L.u).norm() > 1e-12)
        fail(ErrorCode::InvalidArgument, "sph_rotate needs a rotation fixing u");
    auto f = L.eval;
    Mat Rt = R.transpose();
    return SphStarMap{L.u, [f, Rt](const Vec& v) { return f(Rt * v); }};
}

RadialMap star_bridge(const HemisphereChart& chart, const SphStarMap& S) {
    require_same_dim(S.u.size(), chart.u.size(), "star_bridge");
    if ((S.u - chart.u).norm() > 1e-12)
        fail(ErrorCode::InvalidArgument, "star map and chart have different centers");
    SphStarMap s = S;
    Mat B = chart.basis;
    return RadialMap::from_function(chart.plane_dim(),
                                    [s, B](const Vec& x) { return std::tan(sph_radial(s, B * x)); });
}

SphStarMap star_unbridge(const HemisphereChart& chart, const RadialMap& R) {
    require_same_dim(R.dim, chart.plane_dim(), "star_unbridge");
    auto f = R.eval;
    Mat B = chart.basis;
    return SphStarMap{chart.u, [f, B](const Vec& v) { return std::atan(f(B.transpose() * v)); }};
}

double ray_reach(const SpherePolytope& K, const Vec& u, const Vec& v, double tol) {
    if (!contains(K, u, tol))
        fail(ErrorCode::Precondition, "ray_reach needs u in the body");
    double lo = 0.0;
    double hi = kHalfPi;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (contains(K, u * std::cos(mid) + v * std::sin(mid), tol))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

SphStarMap body_star_map(const SpherePolytope& K, const Vec& u, double tol) {
    require_unit(u, "body_star_map");
    if (!contains(K, u, tol))
        fail(ErrorCode::Precondition, "body_star_map needs u in the body");
    return SphStarMap{u.normalized(), [K, u, tol](const Vec& v) { return ray_reach(K, u, v, tol); }};
}

SphStarMap f_op(const StarCombiner& f, const SphStarMap& K, const SphStarMap& L) {
    require_same_dim(K.u.size(), L.u.size(), "f_op");
    if ((K.u - L.u).norm() > 1e-12)
        fail(ErrorCode::InvalidArgument, "f_op needs star maps about the same u");
    SphStarMap k = K;
    SphStarMap l = L;
    return SphStarMap{K.u, [f, k, l](const Vec& v) {
                          const double value = f(sph_radial(k, -v), sph_radial(k, v), sph_radial(l, -v),
                                                 sph_radial(l, v));
                          if (!(value >= 0.0 && value < kHalfPi))
                              fail(ErrorCode::Domain, "combiner value outside [0, pi/2)");
                          return value;
                      }};
}

StarCombiner lp_star_combiner(double p) {
    if (!(p > 0.0))
        fail(ErrorCode::InvalidArgument, "L_p combiner needs p > 0");
    return [p](double, double b, double, double d) {
        return std::atan(std::pow(std::pow(std::tan(b), p) + std::pow(std::tan(d), p), 1.0 / p));
    };
}

StarOp broken_star_op(const Vec& u, const Vec& external) {
    if (std::abs(u.dot(external)) > 1e-12)
        fail(ErrorCode::InvalidArgument, "external direction must be orthogonal to u");
    Vec z = external.normalized();
    return [z](const SphStarMap& K, const SphStarMap& L) {
        SphStarMap k = K;
        SphStarMap l = L;
        return SphStarMap{K.u, [k, l, z](const Vec& v) {
                              return std::atan(std::tan(sph_radial(k, v)) + std::tan(sph_radial(l, z)));
                          }};
    };
}

SphStarMap random_star_map(Rng& rng, const Vec& u) {
    const double c0 = uniform(rng, 0.1, 0.4);
    Mat z(u.size(), 3);
    Vec c(3);
    for (int k = 0; k < 3; ++k) {
        z.col(k) = random_unit(rng, static_cast<int>(u.size()));
        c(k) = uniform(rng, 0.0, 0.3);
    }
    return SphStarMap::from_function(u, [c0, z, c](const Vec& v) {
        const Vec dots = (z.transpose() * v).cwiseMax(0.0);
        return std::min(c0 + c.dot(dots.cwiseProduct(dots)), 1.5);
    });
}

SectionReport section_covariance_check(const std::function<StarOp(const Vec&)>& make_op, int trials,
                                       double tol, std::uint64_t seed, int ambient_dim, int directions) {
    if (trials < 1)
        fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    if (ambient_dim < 3)
        fail(ErrorCode::InvalidArgument, "section checks need ambient dimension >= 3");
    SectionReport report;
    report.trials = trials;
    report.seed = seed;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = make_stream(seed, static_cast<std::uint64_t>(trial));
        const Vec u = random_unit(rng, ambient_dim);
        const SphStarMap K = random_star_map(rng, u);
        const SphStarMap L = random_star_map(rng, u);
        const int dim_v = std::uniform_int_distribution<int>(2, ambient_dim - 1)(rng);
        const SubspaceBasis S = random_subspace_through(rng, u, dim_v);
        const StarOp op = make_op(u);

        const SphStarMap lhs = op(sph_section(K, S), sph_section(L, S));
        const SphStarMap rhs = sph_section(op(K, L), S);
        const Mat tangent = S.basis().rightCols(dim_v - 1);
        const Mat dirs = tangent * direction_grid(dim_v - 1, directions);
        double dev = 0.0;
        for (Eigen::Index i = 0; i < dirs.cols(); ++i)
            dev = std::max(dev, std::abs(sph_radial(lhs, dirs.col(i)) - sph_radial(rhs, dirs.col(i))));
        report.max_dev = std::max(report.max_dev, dev);
        if (dev > tol) {
            ++report.violations;
            if (report.first_violation < 0)
                report.first_violation = trial;
        }
    }
    return report;
}

SpherePolytope cap_ring(const Vec& u, double alpha, int m) {
    if (u.size() < 3 || m < 3)
        fail(ErrorCode::InvalidArgument, "cap_ring needs ambient dimension >= 3 and m >= 3");
    if (!(alpha > 0.0 && alpha < kHalfPi))
        fail(ErrorCode::InvalidArgument, "cap_ring needs alpha in (0, pi/2)");
    const Mat t = tangent_basis(u);
    Mat g(u.size(), m);
    for (int k = 0; k < m; ++k) {
        const double th = 2.0 * std::numbers::pi * k / m;
        g.col(k) = u * std::cos(alpha) + (t.col(0) * std::cos(th) + t.col(1) * std::sin(th)) * std::sin(alpha);
    }
    return make_body(g);
}

PolarReport polar_relations_check(const HemisphereChart& chart, const SpherePolytope& K, int dirs) {
    const Vec& u = chart.u;
    const ConvexPolytope Kbar = map_body(chart, K);
    if (!(interior_margin(Kbar) >= 1e-9))
        fail(ErrorCode::Precondition, "polar relations need u in the interior of K");
    const RadialMap polar_bar = polar_radial(Kbar);

    PolarReport report;
    report.polar = sph_polar(K);
    report.directions = equator_directions(u, dirs);
    report.rho_polar.resize(report.directions.cols());
    for (Eigen::Index i = 0; i < report.directions.cols(); ++i) {
        const Vec v = report.directions.col(i);
        const double rho = ray_reach(report.polar, -u, v);
        report.rho_polar(i) = rho;
        report.relation_dev = std::max(report.relation_dev, std::abs(sph_support(u, K, v) + rho - kHalfPi));
        report.bridge_dev =
            std::max(report.bridge_dev, std::abs(polar_bar.radial(chart.to_plane(v)) - std::tan(rho)));
    }
    return report;
}

} // namespace sphereconv
