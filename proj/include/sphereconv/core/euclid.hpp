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
#include "sphereconv/core/radial_map.hpp"

#include <array>
#include <functional>
#include <string>

namespace sphereconv {

/// Compact convex set in R^dim as the convex hull of finitely many points.
/// Construction canonicalizes: only extreme points are stored. `dim` may be 0
/// for the projection onto the zero subspace.
class ConvexPolytope {
public:
    ConvexPolytope() = default;

    /// Points are the columns of `points`. Throws InvalidArgument when empty
    /// or non-finite.
    explicit ConvexPolytope(const Mat& points);

    static ConvexPolytope point(const Vec& p);
    static ConvexPolytope cube(int dim, double lo = 0.0, double hi = 1.0);
    static ConvexPolytope cross_polytope(int dim, double radius = 1.0);

    int dim() const { return static_cast<int>(vertices_.rows()); }
    int size() const { return static_cast<int>(vertices_.cols()); }
    const Mat& vertices() const { return vertices_; }

    ConvexPolytope negated() const;
    ConvexPolytope scaled(double factor) const;
    ConvexPolytope translated(const Vec& t) const;

private:
    Mat vertices_;
};

/// Indices of the extreme points among the columns of `points`.
/// dim 1: min/max; dim 2: monotone chain; otherwise Clarkson-style discovery
/// with the min-norm-point oracle. Points within `tol * scale` of the hull of
/// the others are dropped.
std::vector<Eigen::Index> extreme_point_indices(const Mat& points, double tol = 1e-10);

/// Convex combining set M in one closed quadrant of R^2, with the quadrant
/// signs (e1, e2). An empty M is representable; operations reject it.
class QuadrantPolytope {
public:
    QuadrantPolytope() = default;

    /// Validates e1*a >= 0 and e2*b >= 0 for every vertex (a, b).
    QuadrantPolytope(Mat vertices, std::array<int, 2> signs);

    /// Infers the quadrant from the vertices (throws InvalidArgument when the
    /// points straddle two quadrants).
    static QuadrantPolytope infer(const Mat& vertices);

    static QuadrantPolytope singleton(double a, double b);
    /// conv{(1,0),(0,1)}: combining set of the convex hull of the union.
    static QuadrantPolytope hull_segment();

    const Mat& vertices() const { return vertices_; }
    std::array<int, 2> signs() const { return signs_; }
    bool empty() const { return vertices_.cols() == 0; }

    /// M+ = {(e1 a, e2 b)} in [0, inf)^2.
    Mat reflected() const;

    /// max over M+ of (s, t) . m
    double reflected_support(double s, double t) const;

private:
    Mat vertices_ = Mat(2, 0);
    std::array<int, 2> signs_{1, 1};
};

/// Support functional of a nonempty closed convex set in R^4, possibly
/// +infinity outside its finiteness domain.
struct SupportFun4 {
    using Args = std::array<double, 4>;
    std::function<double(const Args&)> eval;
    std::string name;

    static SupportFun4 of_points(std::vector<Args> points, std::string name = "points");
    /// (a, b, c, d) -> (max(b,0)^p + max(d,0)^p)^(1/p): the L_p sum functional
    /// for bodies containing the origin.
    static SupportFun4 lp(double p);
};

double support(const ConvexPolytope& K, const Vec& x);

ConvexPolytope minkowski_sum(const ConvexPolytope& K, const ConvexPolytope& L);

/// M-sum: conv{ a v + b w : (a,b) in M, v in K, w in L } over vertices.
ConvexPolytope m_add(const QuadrantPolytope& M, const ConvexPolytope& K, const ConvexPolytope& L);

/// h_{M+}(h_{e1 K}(x), h_{e2 L}(x)), evaluated without building the sum.
double m_support(const QuadrantPolytope& M, const ConvexPolytope& K, const ConvexPolytope& L,
                 const Vec& x);

/// Inner polygonal approximation of {(a,b) in [0,1]^2 : a^q + b^q <= 1},
/// 1/p + 1/q = 1, within Hausdorff distance `tol` of the true set.
QuadrantPolytope lp_m_set(double p, double tol);

/// Orthogonal projection onto span(V), in V coordinates.
ConvexPolytope project(const ConvexPolytope& K, const SubspaceBasis& V);

/// Vertex-wise image under an invertible matrix (|det A| > 1e-12).
ConvexPolytope gl_apply(const Mat& A, const ConvexPolytope& K);

/// Nearest point of K to x.
Vec min_norm_point(const Vec& x, const ConvexPolytope& K);

double distance(const Vec& x, const ConvexPolytope& K);

/// Exact Hausdorff distance: the point-to-body distance is convex, so its
/// maximum over a polytope sits at a vertex.
double hausdorff(const ConvexPolytope& K, const ConvexPolytope& L);

/// max over the columns of `directions` of |h_K - h_L|.
double sampled_support_gap(const ConvexPolytope& K, const ConvexPolytope& L, const Mat& directions);

/// Body equality: every vertex of each body within `slack` of the other.
bool same_body(const ConvexPolytope& K, const ConvexPolytope& L, double slack = 1e-9);

/// min over unit u of h(K, u), evaluated on a 4096-direction grid plus facet
/// normal candidates (exact in dims 2 and 3). Positive iff o is interior.
double interior_margin(const ConvexPolytope& K);

/// Radial map of the polar body: v -> 1/h(K, v). Requires the origin in the
/// interior (margin >= 1e-9), else Precondition.
RadialMap polar_radial(const ConvexPolytope& K);

/// Polar body K* = {x : x.y <= 1 for y in K} as a polytope (double
/// description on the homogenized constraints).
ConvexPolytope polar_polytope(const ConvexPolytope& K);

/// Polytope bounded by the supporting halfspaces {y : x_i . y <= h(x_i)} for
/// the columns x_i of `directions`. This is an outer approximation of the body
/// whose support function is `h`.
ConvexPolytope body_from_support(const std::function<double(const Vec&)>& h, const Mat& directions);

/// h_{Mbar}(h_{-K}(x), h_K(x), h_{-L}(x), h_L(x)). Throws Domain on +inf.
double m4_op(const SupportFun4& Mbar, const ConvexPolytope& K, const ConvexPolytope& L,
             const Vec& x);

} // namespace sphereconv
