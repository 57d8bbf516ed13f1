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
#include "sphereconv/core/euclid.hpp"

#include "hull3d.hpp"

#include "sphereconv/core/dual_cone.hpp"
#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/min_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace sphereconv {

namespace {

double coordinate_scale(const Mat& points) {
    return std::max(1.0, points.cwiseAbs().maxCoeff());
}

bool lex_less(const Mat& p, Eigen::Index i, Eigen::Index j) {
    for (Eigen::Index k = 0; k < p.rows(); ++k) {
        if (p(k, i) != p(k, j))
            return p(k, i) < p(k, j);
    }
    return i < j;
}

double cross2(const Mat& p, Eigen::Index o, Eigen::Index a, Eigen::Index b) {
    return (p(0, a) - p(0, o)) * (p(1, b) - p(1, o)) - (p(1, a) - p(1, o)) * (p(0, b) - p(0, o));
}

std::vector<Eigen::Index> hull_2d(const Mat& p, double eps) {
    std::vector<Eigen::Index> order(static_cast<size_t>(p.cols()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return lex_less(p, i, j); });

    // Andrew's monotone chain; a middle point is dropped when its distance to
    // the chord is within eps.
    auto drop_middle = [&](Eigen::Index o, Eigen::Index a, Eigen::Index b) {
        const double chord = (p.col(b) - p.col(o)).norm();
        return cross2(p, o, a, b) <= eps * chord;
    };
    std::vector<Eigen::Index> hull;
    for (Eigen::Index idx : order) {
        while (hull.size() >= 2 && drop_middle(hull[hull.size() - 2], hull.back(), idx))
            hull.pop_back();
        hull.push_back(idx);
    }
    const size_t lower = hull.size() + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (hull.size() >= lower && drop_middle(hull[hull.size() - 2], hull.back(), *it))
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() == 2 && (p.col(hull[0]) - p.col(hull[1])).norm() <= eps)
        hull.pop_back();
    if (hull.empty())
        hull.push_back(order.front());
    return hull;
}

Eigen::Index argmax_lex(const Mat& p, const Vec& w, double tie) {
    const Vec vals = p.transpose() * w;
    const double best = vals.maxCoeff();
    Eigen::Index arg = -1;
    for (Eigen::Index i = 0; i < p.cols(); ++i) {
        if (vals(i) >= best - tie && (arg < 0 || lex_less(p, arg, i)))
            arg = i;
    }
    return arg;
}

std::vector<Eigen::Index> hull_clarkson(const Mat& p, double eps) {
    const Eigen::Index m = p.cols();
    const Vec centroid = p.rowwise().mean();
    std::vector<Eigen::Index> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    // Far points first: they are likely extreme, which lets the interior ones
    // be rejected against an almost complete hull.
    Vec spread(m);
    for (Eigen::Index i = 0; i < m; ++i)
        spread(i) = (p.col(i) - centroid).squaredNorm();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return spread(i) > spread(j); });

    std::vector<Eigen::Index> extreme;
    Mat hull(p.rows(), 0);
    auto add = [&](Eigen::Index i) {
        extreme.push_back(i);
        hull.conservativeResize(Eigen::NoChange, hull.cols() + 1);
        hull.col(hull.cols() - 1) = p.col(i);
    };
    add(argmax_lex(p, Vec::Unit(p.rows(), 0), 0.0));

    for (Eigen::Index cand : order) {
        for (;;) {
            if (std::find(extreme.begin(), extreme.end(), cand) != extreme.end())
                break;
            const Vec q = nearest_in_hull(hull, p.col(cand), kWolfeTight).point;
            const Vec w = p.col(cand) - q;
            const double gap = w.norm();
            if (gap <= eps)
                break;
            const Eigen::Index next = argmax_lex(p, w, 1e-14 * gap);
            if (std::find(extreme.begin(), extreme.end(), next) != extreme.end())
                break;
            add(next);
        }
    }
    std::sort(extreme.begin(), extreme.end());
    return extreme;
}

} // namespace

std::vector<Eigen::Index> extreme_point_indices(const Mat& points, double tol) {
    if (points.cols() == 0)
        fail(ErrorCode::InvalidArgument, "point set is empty");
    if (!points.allFinite())
        fail(ErrorCode::InvalidArgument, "point set has non-finite coordinates");
    if (points.rows() == 0)
        return {0};
    const double eps = tol * coordinate_scale(points);
    if (points.rows() == 1) {
        Eigen::Index lo = 0;
        Eigen::Index hi = 0;
        points.row(0).minCoeff(&lo);
        points.row(0).maxCoeff(&hi);
        if (points(0, hi) - points(0, lo) <= eps)
            return {lo};
        return {lo, hi};
    }
    if (points.rows() == 2)
        return hull_2d(points, eps);
    // Large full-dimensional sets in R^3 (M-sums of fine combining sets) go
    // through quickhull; Wolfe-per-candidate is quadratic there.
    if (points.rows() == 3 && points.cols() > 64) {
        if (auto idx = detail::quickhull_3d(points, eps))
            return *idx;
    }
    return hull_clarkson(points, eps);
}

ConvexPolytope::ConvexPolytope(const Mat& points) {
    const auto idx = extreme_point_indices(points);
    vertices_.resize(points.rows(), static_cast<Eigen::Index>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        vertices_.col(static_cast<Eigen::Index>(i)) = points.col(idx[i]);
}

ConvexPolytope ConvexPolytope::point(const Vec& p) {
    return ConvexPolytope(Mat(p));
}

ConvexPolytope ConvexPolytope::cube(int dim, double lo, double hi) {
    if (dim < 1 || dim > 20)
        fail(ErrorCode::InvalidArgument, "cube dimension must be in [1, 20]");
    const Eigen::Index count = Eigen::Index{1} << dim;
    Mat v(dim, count);
    for (Eigen::Index c = 0; c < count; ++c) {
        for (int k = 0; k < dim; ++k)
            v(k, c) = (c >> k) & 1 ? hi : lo;
    }
    return ConvexPolytope(v);
}

ConvexPolytope ConvexPolytope::cross_polytope(int dim, double radius) {
    if (dim < 1)
        fail(ErrorCode::InvalidArgument, "cross-polytope dimension must be positive");
    Mat v(dim, 2 * dim);
    v << radius * Mat::Identity(dim, dim), -radius * Mat::Identity(dim, dim);
    return ConvexPolytope(v);
}

ConvexPolytope ConvexPolytope::negated() const {
    return ConvexPolytope(Mat(-vertices_));
}

ConvexPolytope ConvexPolytope::scaled(double factor) const {
    return ConvexPolytope(Mat(factor * vertices_));
}

ConvexPolytope ConvexPolytope::translated(const Vec& t) const {
    require_same_dim(t.size(), dim(), "translated");
    return ConvexPolytope(Mat(vertices_.colwise() + t));
}

QuadrantPolytope::QuadrantPolytope(Mat vertices, std::array<int, 2> signs) : signs_(signs) {
    if (vertices.rows() != 2)
        fail(ErrorCode::DimensionMismatch, "combining set vertices must be points of R^2");
    for (int s : signs) {
        if (s != 1 && s != -1)
            fail(ErrorCode::InvalidArgument, "quadrant signs must be +1 or -1");
    }
    for (Eigen::Index i = 0; i < vertices.cols(); ++i) {
        if (signs[0] * vertices(0, i) < -1e-12 || signs[1] * vertices(1, i) < -1e-12)
            fail(ErrorCode::InvalidArgument, "combining set vertex outside its quadrant");
    }
    if (vertices.cols() > 0) {
        const auto idx = extreme_point_indices(vertices);
        vertices_.resize(2, static_cast<Eigen::Index>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            vertices_.col(static_cast<Eigen::Index>(i)) = vertices.col(idx[i]);
    }
}

QuadrantPolytope QuadrantPolytope::infer(const Mat& vertices) {
    if (vertices.rows() != 2)
        fail(ErrorCode::DimensionMismatch, "combining set vertices must be points of R^2");
    std::array<int, 2> signs{1, 1};
    for (int r = 0; r < 2; ++r) {
        const bool neg = vertices.cols() > 0 && vertices.row(r).minCoeff() < 0.0;
        const bool pos = vertices.cols() > 0 && vertices.row(r).maxCoeff() > 0.0;
        if (neg && pos)
            fail(ErrorCode::InvalidArgument, "combining set is not contained in one quadrant");
        signs[static_cast<size_t>(r)] = neg ? -1 : 1;
    }
    return QuadrantPolytope(vertices, signs);
}

QuadrantPolytope QuadrantPolytope::singleton(double a, double b) {
    Mat v(2, 1);
    v << a, b;
    return infer(v);
}

QuadrantPolytope QuadrantPolytope::hull_segment() {
    Mat v(2, 2);
    v << 1.0, 0.0, 0.0, 1.0;
    return QuadrantPolytope(v, {1, 1});
}

Mat QuadrantPolytope::reflected() const {
    Mat r = vertices_;
    r.row(0) *= signs_[0];
    r.row(1) *= signs_[1];
    return r;
}

double QuadrantPolytope::reflected_support(double s, double t) const {
    if (empty())
        fail(ErrorCode::InvalidArgument, "combining set is empty");
    double best = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < vertices_.cols(); ++i)
        best = std::max(best, s * signs_[0] * vertices_(0, i) + t * signs_[1] * vertices_(1, i));
    return best;
}

SupportFun4 SupportFun4::of_points(std::vector<Args> points, std::string name) {
    if (points.empty())
        fail(ErrorCode::InvalidArgument, "support functional needs a nonempty point set");
    SupportFun4 f;
    f.name = std::move(name);
    f.eval = [points = std::move(points)](const Args& x) {
        double best = -std::numeric_limits<double>::infinity();
        for (const Args& p : points)
            best = std::max(best, p[0] * x[0] + p[1] * x[1] + p[2] * x[2] + p[3] * x[3]);
        return best;
    };
    return f;
}

SupportFun4 SupportFun4::lp(double p) {
    if (!(p >= 1.0))
        fail(ErrorCode::InvalidArgument, "L_p functional needs p >= 1");
    SupportFun4 f;
    f.name = "lp(" + std::to_string(p) + ")";
    f.eval = [p](const Args& x) {
        const double b = std::max(x[1], 0.0);
        const double d = std::max(x[3], 0.0);
        if (std::isinf(p))
            return std::max(b, d);
        return std::pow(std::pow(b, p) + std::pow(d, p), 1.0 / p);
    };
    return f;
}

double support(const ConvexPolytope& K, const Vec& x) {
    require_same_dim(x.size(), K.dim(), "support");
    return (K.vertices().transpose() * x).maxCoeff();
}

ConvexPolytope minkowski_sum(const ConvexPolytope& K, const ConvexPolytope& L) {
    require_same_dim(K.dim(), L.dim(), "minkowski_sum");
    Mat pts(K.dim(), K.size() * L.size());
    Eigen::Index c = 0;
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        for (Eigen::Index j = 0; j < L.size(); ++j)
            pts.col(c++) = K.vertices().col(i) + L.vertices().col(j);
    }
    return ConvexPolytope(pts);
}

ConvexPolytope m_add(const QuadrantPolytope& M, const ConvexPolytope& K, const ConvexPolytope& L) {
    if (M.empty())
        fail(ErrorCode::InvalidArgument, "combining set is empty");
    require_same_dim(K.dim(), L.dim(), "m_add");
    // a X + b Y over the original coordinates equals (e1 a)(e1 X) + (e2 b)(e2 Y).
    const Mat& mv = M.vertices();
    Mat pts(K.dim(), mv.cols() * K.size() * L.size());
    Eigen::Index c = 0;
    for (Eigen::Index m = 0; m < mv.cols(); ++m) {
        for (Eigen::Index i = 0; i < K.size(); ++i) {
            const Vec av = mv(0, m) * K.vertices().col(i);
            for (Eigen::Index j = 0; j < L.size(); ++j)
                pts.col(c++) = av + mv(1, m) * L.vertices().col(j);
        }
    }
    return ConvexPolytope(pts);
}

double m_support(const QuadrantPolytope& M, const ConvexPolytope& K, const ConvexPolytope& L,
                 const Vec& x) {
    require_same_dim(K.dim(), L.dim(), "m_support");
    const auto [e1, e2] = M.signs();
    const double hk = e1 > 0 ? support(K, x) : support(K, -x);
    const double hl = e2 > 0 ? support(L, x) : support(L, -x);
    return M.reflected_support(hk, hl);
}

QuadrantPolytope lp_m_set(double p, double tol) {
    if (!(p > 1.0) || !std::isfinite(p))
        fail(ErrorCode::InvalidArgument, "lp_m_set needs a finite p > 1");
    if (!(tol > 0.0))
        fail(ErrorCode::InvalidArgument, "lp_m_set needs tol > 0");
    const double q = p / (p - 1.0);
    auto curve = [q](double t) {
        Vec v(2);
        v << std::pow(std::cos(t), 2.0 / q), std::pow(std::sin(t), 2.0 / q);
        return v;
    };
    auto sagitta = [&](double t0, double t1) {
        const Vec a = curve(t0);
        const Vec b = curve(t1);
        const Vec d = b - a;
        const double len = d.norm();
        double worst = 0.0;
        for (int k = 1; k < 8; ++k) {
            const Vec c = curve(t0 + (t1 - t0) * k / 8.0) - a;
            const double dist = len > 0.0 ? std::abs(d(0) * c(1) - d(1) * c(0)) / len : c.norm();
            worst = std::max(worst, dist);
        }
        return worst;
    };

    std::vector<double> ts{0.0};
    // Depth-first subdivision keeps the breakpoints ordered.
    std::vector<std::pair<double, double>> stack{{0.0, std::numbers::pi / 2.0}};
    while (!stack.empty()) {
        auto [t0, t1] = stack.back();
        stack.pop_back();
        if (t1 - t0 > 1e-12 && sagitta(t0, t1) > 0.5 * tol) {
            const double mid = 0.5 * (t0 + t1);
            stack.push_back({mid, t1});
            stack.push_back({t0, mid});
        } else {
            ts.push_back(t1);
        }
    }
    Mat v(2, static_cast<Eigen::Index>(ts.size()) + 1);
    v.col(0).setZero();
    for (size_t i = 0; i < ts.size(); ++i)
        v.col(static_cast<Eigen::Index>(i) + 1) = curve(ts[i]);
    // Exact corner values: cos(pi/2) is not exactly zero.
    v.col(1) << 1.0, 0.0;
    v.col(v.cols() - 1) << 0.0, 1.0;
    return QuadrantPolytope(v, {1, 1});
}

ConvexPolytope project(const ConvexPolytope& K, const SubspaceBasis& V) {
    require_same_dim(V.ambient_dim(), K.dim(), "project");
    return ConvexPolytope(Mat(V.basis().transpose() * K.vertices()));
}

ConvexPolytope gl_apply(const Mat& A, const ConvexPolytope& K) {
    if (A.rows() != A.cols())
        fail(ErrorCode::InvalidArgument, "gl_apply needs a square matrix");
    require_same_dim(A.cols(), K.dim(), "gl_apply");
    if (!(std::abs(A.determinant()) > 1e-12))
        fail(ErrorCode::InvalidArgument, "gl_apply needs an invertible matrix (|det| > 1e-12)");
    return ConvexPolytope(Mat(A * K.vertices()));
}

Vec min_norm_point(const Vec& x, const ConvexPolytope& K) {
    require_same_dim(x.size(), K.dim(), "min_norm_point");
    return nearest_in_hull(K.vertices(), x, kWolfeTight).point;
}

double distance(const Vec& x, const ConvexPolytope& K) {
    return (x - min_norm_point(x, K)).norm();
}

double hausdorff(const ConvexPolytope& K, const ConvexPolytope& L) {
    require_same_dim(K.dim(), L.dim(), "hausdorff");
    double best = 0.0;
    for (Eigen::Index i = 0; i < K.size(); ++i)
        best = std::max(best, distance(K.vertices().col(i), L));
    for (Eigen::Index i = 0; i < L.size(); ++i)
        best = std::max(best, distance(L.vertices().col(i), K));
    return best;
}

double sampled_support_gap(const ConvexPolytope& K, const ConvexPolytope& L, const Mat& directions) {
    require_same_dim(K.dim(), L.dim(), "sampled_support_gap");
    require_same_dim(directions.rows(), K.dim(), "sampled_support_gap");
    const Mat hk = (K.vertices().transpose() * directions).colwise().maxCoeff();
    const Mat hl = (L.vertices().transpose() * directions).colwise().maxCoeff();
    return (hk - hl).cwiseAbs().maxCoeff();
}

bool same_body(const ConvexPolytope& K, const ConvexPolytope& L, double slack) {
    if (K.dim() != L.dim())
        return false;
    return hausdorff(K, L) <= slack;
}

double interior_margin(const ConvexPolytope& K) {
    const int n = K.dim();
    if (n == 0)
        return 0.0;
    const Mat& v = K.vertices();
    const Vec nearest = min_norm_point(Vec::Zero(n), K);
    if (nearest.norm() > 1e-12)
        return -nearest.norm();

    auto h = [&](const Vec& u) { return (v.transpose() * u).maxCoeff(); };
    double best = std::numeric_limits<double>::infinity();
    const Mat grid = direction_grid(n, 4096);
    for (Eigen::Index i = 0; i < grid.cols(); ++i)
        best = std::min(best, h(grid.col(i)));

    const Eigen::Index m = v.cols();
    auto consider = [&](Vec normal) {
        const double len = normal.norm();
        if (len <= 1e-14)
            return;
        normal /= len;
        best = std::min({best, h(normal), h(-normal)});
    };
    if (n == 2) {
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = i + 1; j < m; ++j) {
                const Vec d = v.col(j) - v.col(i);
                consider(Vec{{-d(1), d(0)}});
            }
        }
    } else if (n == 3 && m <= 64) {
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = i + 1; j < m; ++j) {
                const Eigen::Vector3d a = v.col(j) - v.col(i);
                for (Eigen::Index k = j + 1; k < m; ++k) {
                    const Eigen::Vector3d b = v.col(k) - v.col(i);
                    consider(Vec(a.cross(b)));
                }
            }
        }
    }
    return best;
}

RadialMap polar_radial(const ConvexPolytope& K) {
    if (!(interior_margin(K) >= 1e-9))
        fail(ErrorCode::Precondition, "polar_radial needs the origin in the interior of K");
    return RadialMap::from_function(K.dim(), [K](const Vec& u) { return 1.0 / support(K, u); });
}

namespace {

ConvexPolytope vertices_from_homogeneous_rays(const Mat& rays) {
    const Eigen::Index n = rays.rows() - 1;
    Mat pts(n, rays.cols());
    Eigen::Index c = 0;
    for (Eigen::Index i = 0; i < rays.cols(); ++i) {
        const double t = rays(n, i);
        if (t <= 1e-12)
            fail(ErrorCode::Degenerate, "halfspace system is unbounded");
        pts.col(c++) = rays.col(i).head(n) / t;
    }
    if (c == 0)
        fail(ErrorCode::Degenerate, "halfspace system has no vertices");
    return ConvexPolytope(Mat(pts.leftCols(c)));
}

} // namespace

ConvexPolytope polar_polytope(const ConvexPolytope& K) {
    if (!(interior_margin(K) >= 1e-9))
        fail(ErrorCode::Precondition, "polar body needs the origin in the interior of K");
    const int n = K.dim();
    // (x, t) with v.x <= t for every vertex v, and t >= 0.
    Mat A(K.size() + 1, n + 1);
    A.topLeftCorner(K.size(), n) = K.vertices().transpose();
    A.topRightCorner(K.size(), 1).setConstant(-1.0);
    A.bottomRows(1).setZero();
    A(K.size(), n) = -1.0;
    return vertices_from_homogeneous_rays(dual_cone_rays(A));
}

ConvexPolytope body_from_support(const std::function<double(const Vec&)>& h, const Mat& directions) {
    const Eigen::Index n = directions.rows();
    Mat A(directions.cols() + 1, n + 1);
    for (Eigen::Index i = 0; i < directions.cols(); ++i) {
        const double value = h(directions.col(i));
        if (!std::isfinite(value))
            fail(ErrorCode::Domain, "support value is not finite");
        A.row(i).head(n) = directions.col(i).transpose();
        A(i, n) = -value;
    }
    A.row(directions.cols()).setZero();
    A(directions.cols(), n) = -1.0;
    return vertices_from_homogeneous_rays(dual_cone_rays(A));
}

double m4_op(const SupportFun4& Mbar, const ConvexPolytope& K, const ConvexPolytope& L,
             const Vec& x) {
    require_same_dim(K.dim(), L.dim(), "m4_op");
    const SupportFun4::Args args{support(K, -x), support(K, x), support(L, -x), support(L, x)};
    const double value = Mbar.eval(args);
    if (!std::isfinite(value))
        fail(ErrorCode::Domain, "support functional is infinite at the evaluated arguments");
    return value;
}

} // namespace sphereconv
