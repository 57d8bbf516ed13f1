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
#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/euclid.hpp"
#include "sphereconv/core/min_norm.hpp"
#include "sphereconv/core/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sphereconv;

namespace {

Mat pts(std::initializer_list<std::initializer_list<double>> rows) {
    const Eigen::Index n = static_cast<Eigen::Index>(rows.begin()->size());
    Mat m(n, static_cast<Eigen::Index>(rows.size()));
    Eigen::Index c = 0;
    for (const auto& r : rows) {
        Eigen::Index i = 0;
        for (double v : r)
            m(i++, c) = v;
        ++c;
    }
    return m;
}

Vec vec(std::initializer_list<double> v) {
    Vec out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v)
        out(i++) = x;
    return out;
}

// Ray shooting by bisection against the hull distance.
double ray_shoot(const ConvexPolytope& K, const Vec& v) {
    double lo = 0.0;
    double hi = 1.0;
    while (distance_to_hull(K.vertices(), hi * v) <= 1e-13)
        hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (distance_to_hull(K.vertices(), mid * v) <= 1e-13 ? lo : hi) = mid;
    }
    return lo;
}

ConvexPolytope random_body_around_origin(Rng& rng, int dim) {
    Mat p(dim, 2 * dim + 6);
    for (Eigen::Index i = 0; i < p.cols(); ++i)
        p.col(i) = random_unit(rng, dim) * uniform(rng, 0.5, 1.5);
    p.leftCols(dim) = Mat::Identity(dim, dim) * 0.4;
    p.middleCols(dim, dim) = -Mat::Identity(dim, dim) * 0.4;
    return ConvexPolytope(p);
}

} // namespace

TEST(Support, Examples) {
    const ConvexPolytope cross = ConvexPolytope::cross_polytope(2);
    EXPECT_DOUBLE_EQ(support(cross, vec({1, 1})), 1.0);
    EXPECT_DOUBLE_EQ(support(ConvexPolytope::point(Vec::Zero(3)), vec({1, -2, 3})), 0.0);
    EXPECT_DOUBLE_EQ(support(ConvexPolytope(pts({{1, 0}, {0, 1}})), vec({2, 1})), 2.0);
    EXPECT_THROW(support(cross, vec({1, 1, 1})), Error);
}

TEST(Canonicalize, KeepsOnlyExtremePoints) {
    ConvexPolytope sq(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}, {1, 1}}));
    EXPECT_EQ(sq.size(), 4);
    ConvexPolytope cube(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1},
                             {1, 1, 1}, {0.5, 0.5, 0.5}, {0.5, 0.5, 1}, {1, 1, 1}}));
    EXPECT_EQ(cube.size(), 8);
    ConvexPolytope seg(pts({{0}, {3}, {1}, {2}}));
    EXPECT_EQ(seg.size(), 2);
    ConvexPolytope single(pts({{2, 2}, {2, 2}, {2, 2}}));
    EXPECT_EQ(single.size(), 1);
}

TEST(Canonicalize, NoVertexInHullOfOthers) {
    Rng rng = make_stream(3, 0);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + trial % 3;
        const ConvexPolytope K = random_polytope(rng, d, 30);
        for (Eigen::Index i = 0; i < K.size(); ++i) {
            Mat others(d, K.size() - 1);
            Eigen::Index c = 0;
            for (Eigen::Index j = 0; j < K.size(); ++j) {
                if (j != i)
                    others.col(c++) = K.vertices().col(j);
            }
            if (others.cols() > 0) {
                EXPECT_GT(distance_to_hull(others, K.vertices().col(i)), 1e-10);
            }
        }
    }
}

TEST(Canonicalize, LargeSetsInR3MatchBruteForce) {
    Rng rng = make_stream(12, 0);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 100 + 60 * trial;
        Mat p(3, n);
        for (int j = 0; j < n; ++j) {
            switch (trial % 4) {
            case 0: p.col(j) = random_unit(rng, 3); break;                          // all extreme
            case 1: p.col(j) << normal(rng), normal(rng), normal(rng); break;       // mostly interior
            case 2: p.col(j) = Vec::Unit(3, j % 3) * uniform(rng, -1, 1); break;    // degenerate axes
            default:                                                                 // cube lattice
                p.col(j) << (j % 3) * 0.5, ((j / 3) % 3) * 0.5, ((j / 9) % 3) * 0.5;
            }
        }
        if (trial % 4 == 1)
            p.col(7) = p.col(3); // duplicate
        const auto got = extreme_point_indices(p);
        const double eps = 1e-10 * std::max(1.0, p.cwiseAbs().maxCoeff());
        // First occurrence of a point, farther than eps from the hull of all
        // points different from it.
        std::vector<Eigen::Index> brute;
        for (Eigen::Index i = 0; i < n; ++i) {
            bool first = true;
            Mat others(3, 0);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (p.col(j) == p.col(i)) {
                    first = first && j >= i;
                    continue;
                }
                others.conservativeResize(Eigen::NoChange, others.cols() + 1);
                others.col(others.cols() - 1) = p.col(j);
            }
            if (first && distance_to_hull(others, p.col(i)) > eps)
                brute.push_back(i);
        }
        EXPECT_EQ(got, brute) << "trial " << trial;
        // Every input point lies in the hull of the returned vertices.
        Mat hv(3, static_cast<Eigen::Index>(got.size()));
        for (size_t k = 0; k < got.size(); ++k)
            hv.col(static_cast<Eigen::Index>(k)) = p.col(got[k]);
        for (Eigen::Index i = 0; i < n; ++i)
            EXPECT_LE(distance_to_hull(hv, p.col(i)), 1e-9);
    }
}

TEST(MinkowskiSum, Examples) {
    const ConvexPolytope unit = ConvexPolytope::cube(2);
    EXPECT_TRUE(same_body(minkowski_sum(unit, unit), ConvexPolytope::cube(2, 0, 2)));
    EXPECT_TRUE(same_body(minkowski_sum(unit, ConvexPolytope::point(Vec::Zero(2))), unit));
    const ConvexPolytope s1(pts({{-1, 0}, {1, 0}}));
    const ConvexPolytope s2(pts({{0, -1}, {0, 1}}));
    EXPECT_TRUE(same_body(minkowski_sum(s1, s2), ConvexPolytope::cube(2, -1, 1)));
}

TEST(MAdd, Examples) {
    Rng rng = make_stream(4, 0);
    const ConvexPolytope K = random_polytope(rng, 3, 6);
    const ConvexPolytope L = random_polytope(rng, 3, 6);
    EXPECT_TRUE(same_body(m_add(QuadrantPolytope::singleton(1, 1), K, L), minkowski_sum(K, L)));
    EXPECT_TRUE(same_body(m_add(QuadrantPolytope::singleton(1, 0), K, L), K));
    Mat kl(3, K.size() + L.size());
    kl << K.vertices(), L.vertices();
    EXPECT_TRUE(same_body(m_add(QuadrantPolytope::hull_segment(), K, L), ConvexPolytope(kl)));
    EXPECT_THROW(m_add(QuadrantPolytope(), K, L), Error);
}

TEST(MSupport, Examples) {
    Rng rng = make_stream(5, 0);
    const ConvexPolytope K = random_polytope(rng, 2, 5);
    const ConvexPolytope L = random_polytope(rng, 2, 5);
    for (int i = 0; i < 20; ++i) {
        const Vec x = random_unit(rng, 2);
        EXPECT_NEAR(m_support(QuadrantPolytope::singleton(1, 1), K, L, x), support(K, x) + support(L, x), 1e-14);
        EXPECT_NEAR(m_support(QuadrantPolytope::hull_segment(), K, L, x),
                    std::max(support(K, x), support(L, x)), 1e-14);
        EXPECT_DOUBLE_EQ(m_support(QuadrantPolytope::singleton(0, 0), K, L, x), 0.0);
    }
}

TEST(MAdd, SupportLawOnRandomTriples) {
    Rng rng = make_stream(6, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 3;
        const QuadrantPolytope M = random_quadrant_polygon(rng);
        const ConvexPolytope K = random_polytope(rng, d, 5);
        const ConvexPolytope L = random_polytope(rng, d, 5);
        const ConvexPolytope S = m_add(M, K, L);
        for (int i = 0; i < 1000; ++i) {
            const Vec x = random_unit(rng, d);
            ASSERT_NEAR(support(S, x), m_support(M, K, L, x), 1e-9) << "trial " << trial;
        }
    }
}

TEST(MAdd, ProjectionAndLinearCovariance) {
    Rng rng = make_stream(7, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 3 + trial % 2;
        const QuadrantPolytope M = random_quadrant_polygon(rng);
        const ConvexPolytope K = random_polytope(rng, d, 6);
        const ConvexPolytope L = random_polytope(rng, d, 6);
        const SubspaceBasis V = random_subspace(rng, d, 1 + trial % (d - 1));
        EXPECT_TRUE(same_body(project(m_add(M, K, L), V), m_add(M, project(K, V), project(L, V))));
        Mat A = Mat::Random(d, d) + 2.0 * Mat::Identity(d, d);
        EXPECT_TRUE(same_body(gl_apply(A, m_add(M, K, L)), m_add(M, gl_apply(A, K), gl_apply(A, L)), 1e-8));
    }
}

TEST(LpMSet, InscribedWithinTolerance) {
    for (double p : {1.5, 2.0, 3.0, 8.0}) {
        for (double tol : {1e-3, 1e-6}) {
            const QuadrantPolytope M = lp_m_set(p, tol);
            const double q = p / (p - 1.0);
            // Vertices on the q-curve or the origin.
            for (Eigen::Index i = 0; i < M.vertices().cols(); ++i) {
                const double a = M.vertices()(0, i);
                const double b = M.vertices()(1, i);
                if (a == 0.0 && b == 0.0)
                    continue;
                EXPECT_NEAR(std::pow(a, q) + std::pow(b, q), 1.0, 1e-12);
            }
            // The set's support is the p-norm of the positive parts.
            const Mat dirs = direction_grid(2, 20000);
            double gap = 0.0;
            for (Eigen::Index i = 0; i < dirs.cols(); ++i) {
                const double s = dirs(0, i);
                const double t = dirs(1, i);
                const double exact = std::pow(std::pow(std::max(s, 0.0), p) + std::pow(std::max(t, 0.0), p), 1.0 / p);
                const double h = M.reflected_support(s, t);
                EXPECT_LE(h, exact + 1e-12);
                gap = std::max(gap, exact - h);
            }
            EXPECT_LE(gap, tol) << "p=" << p << " tol=" << tol;
        }
    }
}

TEST(LpMSet, VertexCountGrowsLikeInverseSqrtTol) {
    const double n1 = lp_m_set(2.0, 1e-4).vertices().cols();
    const double n2 = lp_m_set(2.0, 1e-8).vertices().cols();
    // 1/sqrt(tol) scaling: a factor 100 in count for a factor 1e4 in tol.
    EXPECT_GT(n2 / n1, 50.0);
    EXPECT_LT(n2 / n1, 200.0);
    EXPECT_LT(n2, 20000);
}

TEST(LpMSet, RejectsBadArguments) {
    EXPECT_THROW(lp_m_set(1.0, 1e-3), Error);
    EXPECT_THROW(lp_m_set(2.0, 0.0), Error);
    EXPECT_THROW(lp_m_set(std::numeric_limits<double>::infinity(), 1e-3), Error);
}

TEST(Project, Examples) {
    Mat b(3, 2);
    b << 1, 0, 0, 1, 0, 0;
    EXPECT_TRUE(same_body(project(ConvexPolytope::cube(3), SubspaceBasis(b)), ConvexPolytope::cube(2)));
    const ConvexPolytope K = ConvexPolytope::cross_polytope(3);
    EXPECT_TRUE(same_body(project(K, SubspaceBasis::full(3)), K));
    const ConvexPolytope seg(pts({{-1, -1}, {1, 1}}));
    EXPECT_TRUE(same_body(project(seg, SubspaceBasis(Mat(Vec::Unit(2, 0)))), ConvexPolytope(pts({{-1}, {1}}))));
    const ConvexPolytope zero = project(K, SubspaceBasis(Mat(3, 0)));
    EXPECT_EQ(zero.dim(), 0);
    EXPECT_EQ(zero.size(), 1);
}

TEST(GlApply, ExamplesAndSingular) {
    const ConvexPolytope sq = ConvexPolytope::cube(2);
    EXPECT_TRUE(same_body(gl_apply(Mat::Identity(2, 2), sq), sq));
    EXPECT_TRUE(same_body(gl_apply(2.0 * Mat::Identity(2, 2), sq), ConvexPolytope::cube(2, 0, 2)));
    EXPECT_THROW(gl_apply(Mat::Zero(2, 2), sq), Error);
}

TEST(MinNormPoint, Examples) {
    const ConvexPolytope sq = ConvexPolytope::cross_polytope(2);
    EXPECT_LT((min_norm_point(vec({0.1, 0.2}), sq) - vec({0.1, 0.2})).norm(), 1e-15);
    EXPECT_LT((min_norm_point(vec({2, 0}), sq) - vec({1, 0})).norm(), 1e-15);
    const ConvexPolytope seg(pts({{1, 0}, {0, 1}}));
    EXPECT_LT((min_norm_point(vec({1, 1}), seg) - vec({0.5, 0.5})).norm(), 1e-15);
}

TEST(Hausdorff, Examples) {
    const ConvexPolytope sq = ConvexPolytope::cube(2);
    EXPECT_DOUBLE_EQ(hausdorff(sq, sq), 0.0);
    EXPECT_NEAR(hausdorff(sq, sq.translated(vec({0.3, 0}))), 0.3, 1e-15);
    EXPECT_NEAR(hausdorff(ConvexPolytope::point(Vec::Zero(2)), ConvexPolytope(pts({{0, 0}, {1, 0}}))), 1.0, 1e-15);
}

TEST(Hausdorff, MetricAxiomsAndSupportGap) {
    Rng rng = make_stream(8, 0);
    const Mat dirs2 = direction_grid(2, 4096);
    const Mat dirs3 = direction_grid(3, 4096);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + trial % 2;
        const ConvexPolytope A = random_polytope(rng, d, 6, 0.5);
        const ConvexPolytope B = random_polytope(rng, d, 6, 0.5);
        const ConvexPolytope C = random_polytope(rng, d, 6, 0.5);
        EXPECT_EQ(hausdorff(A, B), hausdorff(B, A));
        EXPECT_LE(hausdorff(A, C), hausdorff(A, B) + hausdorff(B, C) + 1e-9);
        EXPECT_GT(hausdorff(A, B), 0.0);
        const double sampled = sampled_support_gap(A, B, d == 2 ? dirs2 : dirs3);
        const double exact = hausdorff(A, B);
        EXPECT_LE(sampled, exact + 1e-12);
        // Grid spacing 2 pi/4096 in R^2 gives a gap below diameter * spacing.
        // The Fibonacci grid in R^3 has covering radius ~0.035, and at a
        // facet-normal maximizer the support difference decays linearly.
        EXPECT_LE(exact - sampled, d == 2 ? 1e-2 : 0.05);
    }
}

TEST(Hausdorff, SampledGapInR3ShrinksWithDirections) {
    const Mat coarse = direction_grid(3, 4096);
    const Mat fine = direction_grid(3, 65536);
    double gap_coarse = 0.0;
    double gap_fine = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng = make_stream(81, static_cast<std::uint64_t>(trial));
        const ConvexPolytope A = random_polytope(rng, 3, 8, 2.0);
        const ConvexPolytope B = random_polytope(rng, 3, 8, 2.0);
        const double exact = hausdorff(A, B);
        const double c = exact - sampled_support_gap(A, B, coarse);
        const double f = exact - sampled_support_gap(A, B, fine);
        EXPECT_GE(c, -1e-12);
        EXPECT_GE(f, -1e-12);
        gap_coarse = std::max(gap_coarse, c);
        gap_fine = std::max(gap_fine, f);
    }
    // Covering radius drops by about 4x; the sup of a Lipschitz gap follows.
    EXPECT_LT(gap_fine, 0.5 * gap_coarse);
}

TEST(Support, SubadditiveAndHomogeneous) {
    Rng rng = make_stream(9, 0);
    const ConvexPolytope K = random_polytope(rng, 3, 12);
    for (int i = 0; i < 500; ++i) {
        const Vec x = random_unit(rng, 3) * uniform(rng, 0, 3);
        const Vec y = random_unit(rng, 3) * uniform(rng, 0, 3);
        const double s = uniform(rng, 0, 5);
        EXPECT_LE(support(K, x + y), support(K, x) + support(K, y) + 1e-12);
        EXPECT_NEAR(support(K, s * x), s * support(K, x), 1e-12 * (1 + s));
    }
}

TEST(PolarRadial, CrossPolytopeGivesCube) {
    const RadialMap r = polar_radial(ConvexPolytope::cross_polytope(3));
    Rng rng = make_stream(10, 0);
    for (int i = 0; i < 100; ++i) {
        const Vec v = random_unit(rng, 3);
        EXPECT_NEAR(r.radial(v), 1.0 / v.cwiseAbs().maxCoeff(), 1e-14);
    }
}

TEST(PolarRadial, ScalingAndPrecondition) {
    const RadialMap r1 = polar_radial(ConvexPolytope::cube(2, -1, 1));
    const RadialMap r2 = polar_radial(ConvexPolytope::cube(2, -2, 2));
    const Vec v = vec({0.6, 0.8});
    EXPECT_NEAR(r2.radial(v), 0.5 * r1.radial(v), 1e-15);
    EXPECT_THROW(polar_radial(ConvexPolytope::cube(2, 0, 1)), Error);
    EXPECT_THROW(polar_radial(ConvexPolytope::cube(3, 0.1, 1)), Error);
}

TEST(PolarRadial, MatchesRayShootingOnPolarPolytope) {
    Rng rng = make_stream(12, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + trial % 2;
        const ConvexPolytope K = random_body_around_origin(rng, d);
        const RadialMap r = polar_radial(K);
        const ConvexPolytope P = polar_polytope(K);
        for (int i = 0; i < 100; ++i) {
            const Vec v = random_unit(rng, d);
            EXPECT_NEAR(r.radial(v), ray_shoot(P, v), 1e-9);
        }
        // Bipolar: (K*)* = K.
        EXPECT_TRUE(same_body(polar_polytope(P), K, 1e-9));
    }
}

TEST(BodyFromSupport, RecoversPolytopeOnFacetNormals) {
    const ConvexPolytope sq = ConvexPolytope::cube(2, -1, 1);
    const ConvexPolytope r = body_from_support([&](const Vec& x) { return support(sq, x); }, direction_grid(2, 64));
    EXPECT_TRUE(same_body(r, sq, 1e-10));
}

TEST(M4Op, Examples) {
    Rng rng = make_stream(13, 0);
    const ConvexPolytope K = random_polytope(rng, 3, 5);
    const ConvexPolytope L = random_polytope(rng, 3, 5);
    const SupportFun4 first = SupportFun4::of_points({{0, 1, 0, 0}});
    const SupportFun4 mink = SupportFun4::of_points({{0, 1, 0, 1}});
    for (int i = 0; i < 50; ++i) {
        const Vec x = random_unit(rng, 3);
        EXPECT_NEAR(m4_op(first, K, L, x), support(K, x), 1e-15);
        EXPECT_NEAR(m4_op(mink, K, L, x), support(K, x) + support(L, x), 1e-14);
    }
    SupportFun4 inf;
    inf.eval = [](const SupportFun4::Args&) { return std::numeric_limits<double>::infinity(); };
    EXPECT_THROW(m4_op(inf, K, L, Vec::Unit(3, 0)), Error);
}

TEST(M4Op, LpFunctionalSubadditive) {
    const SupportFun4 f = SupportFun4::lp(2.0);
    Rng rng = make_stream(14, 0);
    for (int i = 0; i < 500; ++i) {
        SupportFun4::Args a{}, b{}, s{};
        for (int k = 0; k < 4; ++k) {
            a[k] = uniform(rng, -1, 1);
            b[k] = uniform(rng, -1, 1);
            s[k] = a[k] + b[k];
        }
        EXPECT_LE(f.eval(s), f.eval(a) + f.eval(b) + 1e-12);
        SupportFun4::Args a2 = a;
        for (double& v : a2)
            v *= 3.0;
        EXPECT_NEAR(f.eval(a2), 3.0 * f.eval(a), 1e-12);
    }
}
