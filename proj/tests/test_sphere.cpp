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
#include "sphereconv/core/gnomonic.hpp"
#include "sphereconv/core/random.hpp"
#include "sphereconv/core/sphere.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace sphereconv;

namespace {

constexpr double kPi = std::numbers::pi;

Vec vec(std::initializer_list<double> v) {
    Vec out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v)
        out(i++) = x;
    return out;
}

Mat cols(std::initializer_list<Vec> vs) {
    Mat m(vs.begin()->size(), static_cast<Eigen::Index>(vs.size()));
    Eigen::Index c = 0;
    for (const Vec& v : vs)
        m.col(c++) = v;
    return m;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorCode::Io;
}

// Generators of a body on S^2 in cyclic order around its center.
std::vector<Vec> cyclic(const SpherePolytope& K) {
    const Mat t = tangent_basis(K.center());
    std::vector<std::pair<double, Vec>> items;
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        const Vec g = K.generators().col(i);
        items.push_back({std::atan2(t.col(1).dot(g), t.col(0).dot(g)), g});
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Vec> out;
    for (auto& it : items)
        out.push_back(it.second);
    return out;
}

double arc_distance(const Vec& x, const Vec& a, const Vec& b) {
    const Eigen::Vector3d a3 = a, b3 = b, x3 = x;
    Eigen::Vector3d n = a3.cross(b3);
    double best = std::min(angle_between(x, a), angle_between(x, b));
    if (n.norm() < 1e-15)
        return best;
    n.normalize();
    const Eigen::Vector3d p = x3 - x3.dot(n) * n;
    if (p.norm() < 1e-15)
        return best;
    if (a3.cross(p).dot(n) >= 0.0 && p.cross(b3).dot(n) >= 0.0)
        best = std::min(best, std::atan2(std::abs(x3.dot(n)), p.norm()));
    return best;
}

// Exact spherical distance from x to a polygon body on S^2.
double polygon_distance(const Vec& x, const SpherePolytope& K) {
    if (contains(K, x))
        return 0.0;
    const auto ring = cyclic(K);
    double best = kPi;
    for (size_t i = 0; i < ring.size(); ++i)
        best = std::min(best, arc_distance(x, ring[i], ring[(i + 1) % ring.size()]));
    return best;
}

// Dense boundary sampling of A against the exact distance to B.
double dense_directed(const SpherePolytope& A, const SpherePolytope& B, int points) {
    const auto ring = cyclic(A);
    const int per_edge = points / static_cast<int>(ring.size());
    double best = 0.0;
    for (size_t i = 0; i < ring.size(); ++i) {
        const Vec& a = ring[i];
        const Vec& b = ring[(i + 1) % ring.size()];
        for (int k = 0; k < per_edge; ++k) {
            const double t = static_cast<double>(k) / per_edge;
            best = std::max(best, polygon_distance(((1 - t) * a + t * b).normalized(), B));
        }
    }
    return best;
}

Mat rotation_about(const Vec& axis, double t) {
    const Eigen::Vector3d k = axis.normalized();
    return Eigen::AngleAxisd(t, k).toRotationMatrix();
}

} // namespace

TEST(SphDist, Examples) {
    const Vec u = vec({1, 0, 0});
    EXPECT_DOUBLE_EQ(sph_dist(u, u), 0.0);
    EXPECT_DOUBLE_EQ(sph_dist(u, -u), kPi);
    EXPECT_NEAR(sph_dist(u, vec({0, 1, 0})), kPi / 2, 1e-16);
    EXPECT_EQ(code_of([&] { sph_dist(u, vec({2, 0, 0})); }), ErrorCode::InvalidArgument);
}

TEST(HemisphereCenter, Examples) {
    const Vec e1 = vec({1, 0, 0});
    const auto c = hemisphere_center(Mat(e1));
    ASSERT_TRUE(c.has_value());
    EXPECT_LT((*c - e1).norm(), 1e-15);
    EXPECT_FALSE(hemisphere_center(cols({e1, -e1})).has_value());
}

TEST(HemisphereCenter, CapMarginAndGridOracle) {
    const Vec e3 = vec({0, 0, 1});
    Mat ring(3, 12);
    for (int k = 0; k < 12; ++k) {
        const double th = 2 * kPi * k / 12;
        ring.col(k) << std::sin(kPi / 4) * std::cos(th), std::sin(kPi / 4) * std::sin(th), std::cos(kPi / 4);
    }
    const auto c = hemisphere_center(ring);
    ASSERT_TRUE(c.has_value());
    EXPECT_GE((c->transpose() * ring).minCoeff(), std::cos(kPi / 4) - 1e-9);

    // No candidate center on a dense grid beats the returned margin.
    Rng rng = make_stream(21, 0);
    const Mat grid = direction_grid(3, 20000);
    for (int trial = 0; trial < 20; ++trial) {
        Mat p(3, 6);
        const Vec axis = random_unit(rng, 3);
        for (int i = 0; i < 6; ++i)
            p.col(i) = random_in_cap(rng, axis, 1.2);
        const HemisphereFit fit = fit_hemisphere(p);
        const double best_grid = (grid.transpose() * p).rowwise().minCoeff().maxCoeff();
        EXPECT_GE(fit.margin, best_grid - 1e-12);
        EXPECT_LE(fit.margin, best_grid + 2e-2);
    }
}

TEST(MakeBody, Examples) {
    const Vec e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    EXPECT_EQ(make_body(Mat(e1)).size(), 1);
    EXPECT_EQ(code_of([&] { make_body(cols({e2, -e2})); }), ErrorCode::Improper);
    const SpherePolytope tri = make_body(cols({e1, e2, e3}));
    EXPECT_EQ(tri.size(), 3);
    // A point inside the cone is not extreme.
    EXPECT_EQ(make_body(cols({e1, e2, e3, (e1 + e2 + e3).normalized()})).size(), 3);
    EXPECT_GT(tri.margin(), 0.5);
}

TEST(Contains, Examples) {
    const Vec e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    const SpherePolytope K = make_body(cols({e1, e2}));
    EXPECT_TRUE(contains(K, e1));
    EXPECT_TRUE(contains(K, e2));
    EXPECT_FALSE(contains(K, -K.center()));
    EXPECT_TRUE(contains(K, (e1 + e2).normalized()));
    EXPECT_FALSE(contains(K, e3));
    EXPECT_FALSE(contains(K, (e1 + e2 + 0.01 * e3).normalized()));
}

TEST(ConvUnion, ContainsAllGenerators) {
    Rng rng = make_stream(22, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec c = random_unit(rng, 3 + trial % 2);
        const SpherePolytope K = random_cap_body(rng, random_in_cap(rng, c, 0.3));
        const SpherePolytope L = random_cap_body(rng, random_in_cap(rng, c, 0.3));
        const SpherePolytope H = conv_union(K, L);
        for (Eigen::Index i = 0; i < K.size(); ++i)
            EXPECT_TRUE(contains(H, K.generators().col(i)));
        for (Eigen::Index i = 0; i < L.size(); ++i)
            EXPECT_TRUE(contains(H, L.generators().col(i)));
        EXPECT_TRUE(same_body(conv_union(K, L), conv_union(L, K)));
        EXPECT_TRUE(same_body(conv_union(K, K), K));
    }
}

TEST(ConvUnion, TwoPointsGiveGeodesicSegment) {
    const Vec v = vec({1, 0, 0}), w = vec({0.6, 0.8, 0});
    const SpherePolytope H = conv_union(make_body(Mat(v)), make_body(Mat(w)));
    EXPECT_EQ(H.size(), 2);
    EXPECT_TRUE(contains(H, (v + w).normalized()));
    EXPECT_EQ(code_of([&] { conv_union(make_body(Mat(v)), make_body(Mat(Vec(-v)))); }), ErrorCode::Improper);
}

TEST(Neg, Examples) {
    Rng rng = make_stream(23, 0);
    const SpherePolytope K = random_cap_body(rng, random_unit(rng, 3));
    EXPECT_TRUE(same_body(neg(neg(K)), K));
    EXPECT_LT((neg(K).center() + K.center()).norm(), 1e-15);
    const Vec u = vec({0, 1, 0});
    EXPECT_LT((neg(make_body(Mat(u))).generators().col(0) + u).norm(), 1e-15);
}

TEST(SphProject, Examples) {
    const Vec e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    const SubspaceBasis circle(cols({e1, e2}));
    const SpherePolytope K = make_body(cols({e1, (e1 + e2).normalized()}));
    EXPECT_TRUE(same_body(sph_project(K, circle), K));

    const Vec w = vec({0.6, 0.0, 0.64}).normalized();
    const SubspaceBasis xz(cols({e1, e3}));
    const SpherePolytope single = sph_project(make_body(Mat(Vec(vec({0.6, 0.48, 0.64}).normalized()))), xz);
    EXPECT_LT((single.generators().col(0) - w).norm(), 1e-15);

    // 0-sphere {u, -u}.
    Rng rng = make_stream(24, 0);
    const SpherePolytope R = random_cap_body(rng, e1, {5, 1.2});
    const SpherePolytope P = sph_project(R, SubspaceBasis(Mat(e1)));
    EXPECT_EQ(P.size(), 1);
    EXPECT_LT((P.generators().col(0) - e1).norm(), 1e-15);

    EXPECT_EQ(code_of([&] { sph_project(make_body(Mat(e1)), SubspaceBasis(cols({e2, e3}))); }),
              ErrorCode::Precondition);
}

TEST(SphProject, IdempotenceAndTower) {
    Rng rng = make_stream(25, 0);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 3 + trial % 3;
        const Vec c = random_unit(rng, d);
        const SpherePolytope K = random_cap_body(rng, c);
        const SubspaceBasis S = random_subspace_through(rng, K.center(), d - 1);
        const SpherePolytope KS = sph_project(K, S);
        EXPECT_TRUE(same_body(sph_project(KS, S), KS));
        // S' inside S, both through the center.
        const SubspaceBasis Sp(S.basis().leftCols(std::max(1, S.dim() - 1)));
        EXPECT_TRUE(same_body(sph_project(KS, Sp), sph_project(K, Sp)));
    }
}

TEST(SphSupport, Examples) {
    const Vec u = vec({0, 0, 1}), v = vec({1, 0, 0});
    EXPECT_DOUBLE_EQ(sph_support(u, make_body(Mat(u)), v), 0.0);
    const double beta = 0.7;
    const Vec w = u * std::cos(beta) + v * std::sin(beta);
    EXPECT_NEAR(sph_support(u, make_body(Mat(w)), v), beta, 1e-15);
    EXPECT_EQ(code_of([&] { sph_support(u, make_body(Mat(w)), w); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { sph_support(u, make_body(Mat(v)), vec({0, 1, 0})); }), ErrorCode::Precondition);
}

TEST(SphSupport, MonotoneUnderInclusion) {
    Rng rng = make_stream(26, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const Vec u = random_unit(rng, 3);
        const SpherePolytope K = random_cap_body(rng, random_in_cap(rng, u, 0.2), {4, 0.9});
        const SpherePolytope L = random_cap_body(rng, random_in_cap(rng, u, 0.2), {4, 0.9});
        const SpherePolytope H = conv_union(K, L);
        const Mat dirs = equator_directions(u, 256);
        for (Eigen::Index i = 0; i < dirs.cols(); ++i)
            EXPECT_LE(sph_support(u, K, dirs.col(i)), sph_support(u, H, dirs.col(i)) + 1e-15);
    }
}

TEST(Segment, ExamplesAndSupportValues) {
    const Vec u = vec({0, 0, 1}), w = vec({1, 0, 0});
    const SpherePolytope point = segment(u, w, 0, 0);
    EXPECT_EQ(point.size(), 1);
    EXPECT_LT((point.generators().col(0) - u).norm(), 1e-15);
    EXPECT_THROW(segment(u, w, 0.3, 0.2), Error);
    EXPECT_THROW(segment(u, w, -kPi / 2, 0.2), Error);

    Rng rng = make_stream(27, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec uu = random_unit(rng, 3);
        const Vec ww = random_orthogonal_unit(rng, uu);
        // v in the open hemisphere of u, orthogonal to w.
        Vec v = uu * uniform(rng, 0.2, 1.0) + random_unit(rng, 3) * 0.5;
        v -= ww.dot(v) * ww;
        v.normalize();
        if (uu.dot(v) < 0.1)
            continue;
        double a = uniform(rng, -1.4, 1.4), b = uniform(rng, -1.4, 1.4);
        if (a > b)
            std::swap(a, b);
        const SpherePolytope I = segment(uu, ww, a, b);
        EXPECT_NEAR(sph_support(uu, I, ww), b, 1e-12);
        EXPECT_NEAR(sph_support(uu, I, -ww), -a, 1e-12);
        EXPECT_NEAR(std::tan(sph_support(v, I, ww)), std::tan(b) / uu.dot(v), 1e-10 * (1 + std::abs(std::tan(b) / uu.dot(v))));
        EXPECT_NEAR(std::tan(sph_support(v, I, -ww)), -std::tan(a) / uu.dot(v), 1e-10 * (1 + std::abs(std::tan(a) / uu.dot(v))));
    }
}

TEST(DeltaS, Examples) {
    Rng rng = make_stream(28, 0);
    const SpherePolytope K = random_cap_body(rng, random_unit(rng, 3));
    EXPECT_DOUBLE_EQ(delta_s(K, K, 256), 0.0);
    const Vec v = vec({1, 0, 0}), w = vec({0.6, 0.8, 0});
    EXPECT_NEAR(delta_s(make_body(Mat(v)), make_body(Mat(w)), 16), sph_dist(v, w), 1e-15);
}

TEST(DeltaS, RotatedCapBodyAgainstDenseOracle) {
    Rng rng = make_stream(29, 0);
    for (int trial = 0; trial < 6; ++trial) {
        const Vec c = random_unit(rng, 3);
        const SpherePolytope K = random_cap_body(rng, c, {6, 0.6});
        const Vec axis = random_orthogonal_unit(rng, c);
        const double t = uniform(rng, 0.02, 0.4);
        const SpherePolytope R = make_body(rotation_about(axis, t) * K.generators());
        const double sampled = delta_s(K, R, 4096);
        const double oracle = std::max(dense_directed(K, R, 100000), dense_directed(R, K, 100000));
        EXPECT_NEAR(sampled, oracle, 2e-2);
        EXPECT_LE(sampled, t + 1e-9);
        EXPECT_NEAR(sampled, t, 2e-2) << "oracle " << oracle;
        EXPECT_LE(sampled, oracle + 1e-9);
    }
}

TEST(DeltaS, SymmetricAndTriangle) {
    Rng rng = make_stream(30, 0);
    for (int trial = 0; trial < 15; ++trial) {
        const Vec c = random_unit(rng, 3);
        const SpherePolytope A = random_cap_body(rng, random_in_cap(rng, c, 0.3), {4, 0.5});
        const SpherePolytope B = random_cap_body(rng, random_in_cap(rng, c, 0.3), {4, 0.5});
        const SpherePolytope C = random_cap_body(rng, random_in_cap(rng, c, 0.3), {4, 0.5});
        const double ab = delta_s(A, B, 2048), ba = delta_s(B, A, 2048);
        EXPECT_NEAR(ab, ba, 1e-12);
        // Sampling gap: edge samples are spaced well below 1e-2 at this count.
        EXPECT_LE(delta_s(A, C, 2048), ab + delta_s(B, C, 2048) + 1e-6 + 1e-2);
    }
}

TEST(GammaU, SingletonsAgainstBruteForce) {
    Rng rng = make_stream(31, 0);
    for (int d : {3, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Vec u = random_unit(rng, d);
            const Vec w = random_in_cap(rng, u, 1.3);
            const SpherePolytope U = make_body(Mat(u));
            const SpherePolytope W = make_body(Mat(w));
            const double value = gamma_u(u, U, W, 4096);
            // Brute force over a dense grid of S_u.
            const Mat dense = tangent_basis(u) * direction_grid(d - 1, 100000);
            double brute = 0.0;
            for (Eigen::Index i = 0; i < dense.cols(); ++i)
                brute = std::max(brute, std::abs(std::atan(dense.col(i).dot(w) / u.dot(w))));
            EXPECT_NEAR(brute, sph_dist(u, w), 1e-3);
            EXPECT_NEAR(value, sph_dist(u, w), 1e-3);
            EXPECT_NEAR(gamma_u(u, U, W, 512), gamma_u(u, W, U, 512), 1e-15);
            EXPECT_DOUBLE_EQ(gamma_u(u, W, W, 512), 0.0);
        }
    }
}

TEST(SphPolar, OrthantAndInvolution) {
    const Vec e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    const SpherePolytope orthant = make_body(cols({e1, e2, e3}));
    EXPECT_TRUE(same_body(sph_polar(orthant), make_body(cols({-e1, -e2, -e3}))));

    Rng rng = make_stream(32, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 3 + trial % 2;
        const SpherePolytope K = random_cap_body(rng, random_unit(rng, d), {6, 0.9});
        if (K.size() < d)
            continue;
        EXPECT_TRUE(same_body(sph_polar(sph_polar(K)), K, 1e-9));
    }
}

TEST(SphPolar, SimplexAroundUIsInHemisphereOfMinusU) {
    const Vec u = vec({1, 1, 1}).normalized();
    Mat g(3, 3);
    for (int i = 0; i < 3; ++i)
        g.col(i) = (u + 0.5 * Vec::Unit(3, i)).normalized();
    const SpherePolytope K = make_body(g);
    ASSERT_TRUE(contains(K, u));
    const SpherePolytope P = sph_polar(K);
    EXPECT_GT((-u.transpose() * P.generators()).minCoeff(), 0.0);
    EXPECT_TRUE(contains(P, -u));
}

TEST(SphPolar, Errors) {
    EXPECT_EQ(code_of([] { sph_polar(make_body(Mat(Vec::Unit(5, 0)))); }), ErrorCode::UnsupportedDim);
    Mat g(3, 2);
    g << 1, 0, 0, 1, 0, 0;
    EXPECT_EQ(code_of([&] { sph_polar(make_body(g)); }), ErrorCode::Degenerate);
}

// Gnomonic chart.

TEST(Gnomonic, Examples) {
    const Vec u = vec({0, 0, 1});
    const HemisphereChart chart = HemisphereChart::at(u);
    EXPECT_LT(gproj(chart, u).norm(), 1e-15);
    const Vec e = chart.basis.col(0);
    EXPECT_LT((chart.to_ambient(gproj(chart, (u + e).normalized())) - e).norm(), 1e-15);
    const double th = 0.9;
    EXPECT_LT((chart.to_ambient(gproj(chart, u * std::cos(th) + e * std::sin(th))) - std::tan(th) * e).norm(), 1e-14);
    EXPECT_EQ(code_of([&] { gproj(chart, e); }), ErrorCode::OutOfChart);
    EXPECT_LT((gproj_inv(chart, Vec::Zero(2)) - u).norm(), 1e-15);
    EXPECT_LT((gproj_inv(chart, Vec::Unit(2, 0)) - (u + e).normalized()).norm(), 1e-15);
}

TEST(Gnomonic, ChartIsOrthonormalAndDeterministic) {
    Rng rng = make_stream(33, 0);
    for (int d : {2, 3, 4, 6}) {
        const Vec u = random_unit(rng, d);
        const HemisphereChart a = HemisphereChart::at(u);
        EXPECT_TRUE(is_orthonormal(a.basis));
        EXPECT_LT((a.basis.transpose() * u).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_EQ(a.basis, HemisphereChart::at(u).basis);
    }
    EXPECT_THROW(HemisphereChart::from_parts(vec({1, 0, 0}), cols({vec({1, 0, 0}), vec({0, 1, 0})})), Error);
}

TEST(Gnomonic, RoundTrip) {
    Rng rng = make_stream(34, 0);
    const Vec u = random_unit(rng, 4);
    const HemisphereChart chart = HemisphereChart::at(u);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec x(3);
        for (int k = 0; k < 3; ++k)
            x(k) = uniform(rng, -3, 3);
        worst = std::max(worst, (gproj(chart, gproj_inv(chart, x)) - x).norm());
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Gnomonic, MapBodyExamples) {
    const Vec u = vec({0, 0, 1});
    const HemisphereChart chart = HemisphereChart::at(u);
    const ConvexPolytope origin = map_body(chart, make_body(Mat(u)));
    EXPECT_EQ(origin.size(), 1);
    EXPECT_LT(origin.vertices().norm(), 1e-15);
    const Vec w = chart.basis.col(1);
    const ConvexPolytope seg = map_body(chart, segment(u, w, 0, kPi / 4));
    Mat expected(2, 2);
    expected << 0, 0, 0, 1;
    EXPECT_TRUE(same_body(seg, ConvexPolytope(expected), 1e-15));
}

TEST(Gnomonic, BijectionOnBodies) {
    Rng rng = make_stream(35, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 3 + trial % 2;
        const Vec u = random_unit(rng, d);
        const HemisphereChart chart = HemisphereChart::at(u);
        const SpherePolytope K = random_cap_body(rng, random_in_cap(rng, u, 0.3), {6, 1.0});
        const ConvexPolytope Kbar = map_body(chart, K);
        EXPECT_EQ(Kbar.size(), K.size());
        EXPECT_TRUE(same_body(map_body_inv(chart, Kbar), K));
        const ConvexPolytope P = random_polytope(rng, d - 1, 7);
        EXPECT_TRUE(same_body(map_body(chart, map_body_inv(chart, P)), P, 1e-12));
    }
}

TEST(Gnomonic, SubsphereToSubspace) {
    const Vec u = vec({0, 0, 1});
    const HemisphereChart chart = HemisphereChart::at(u);
    EXPECT_EQ(subsphere_to_subspace(chart, SubspaceBasis::full(3)).dim(), 2);
    const Vec w = chart.basis.col(0);
    const SubspaceBasis V = subsphere_to_subspace(chart, SubspaceBasis(cols({u, w})));
    ASSERT_EQ(V.dim(), 1);
    EXPECT_NEAR(std::abs(V.basis()(0, 0)), 1.0, 1e-15);
    EXPECT_EQ(subsphere_to_subspace(chart, SubspaceBasis(Mat(u))).dim(), 0);
    EXPECT_EQ(code_of([&] { subsphere_to_subspace(chart, SubspaceBasis(cols({w, chart.basis.col(1)}))); }),
              ErrorCode::Precondition);
}

TEST(Gnomonic, ProjectionIntertwining) {
    Rng rng = make_stream(36, 0);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 3 + trial % 3;
        const Vec u = random_unit(rng, d);
        const HemisphereChart chart = HemisphereChart::at(u);
        const SpherePolytope K = random_cap_body(rng, random_in_cap(rng, u, 0.3), {6, 1.0});
        const SubspaceBasis S = random_subspace_through(rng, u, 1 + trial % (d - 1));
        const ConvexPolytope lhs = map_body(chart, sph_project(K, S));
        const ConvexPolytope rhs = project(map_body(chart, K), subsphere_to_subspace(chart, S));
        // Both sides in plane coordinates of different bases; compare through
        // the ambient embedding.
        const SubspaceBasis V = subsphere_to_subspace(chart, S);
        const ConvexPolytope lhs_v = project(lhs, V);
        EXPECT_TRUE(same_body(lhs_v, rhs, 1e-9));
        EXPECT_LE(hausdorff(lhs, ConvexPolytope(Mat(V.basis() * rhs.vertices()))), 1e-9);
    }
}

TEST(Gnomonic, SupportBridge) {
    Rng rng = make_stream(37, 0);
    for (int d : {3, 4}) {
        for (int trial = 0; trial < 50; ++trial) {
            const Vec u = random_unit(rng, d);
            const HemisphereChart chart = HemisphereChart::at(u);
            const SpherePolytope K = random_cap_body(rng, random_in_cap(rng, u, 0.3));
            for (int i = 0; i < 100; ++i) {
                const Vec v = random_orthogonal_unit(rng, u);
                const auto [lhs, rhs] = support_bridge(chart, K, v);
                EXPECT_NEAR(lhs, rhs, 1e-9);
            }
        }
    }
    const Vec u = vec({0, 0, 1});
    const HemisphereChart chart = HemisphereChart::at(u);
    const Vec w = chart.basis.col(0);
    const auto [a, b] = support_bridge(chart, segment(u, w, -0.2, 0.6), w);
    EXPECT_NEAR(a, std::tan(0.6), 1e-15);
    EXPECT_NEAR(b, std::tan(0.6), 1e-15);
}

TEST(Gnomonic, ConvergenceIsCoMonotone) {
    Rng rng = make_stream(38, 0);
    const Vec u = random_unit(rng, 3);
    const HemisphereChart chart = HemisphereChart::at(u);
    const SpherePolytope K = random_cap_body(rng, u, {6, 0.8});
    const Vec axis = random_orthogonal_unit(rng, u);
    double prev_gamma = kPi, prev_haus = 1e300;
    for (double t : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
        const SpherePolytope Ki = make_body(rotation_about(axis, t) * K.generators());
        const double g = gamma_u(u, Ki, K, 1024);
        const double h = hausdorff(map_body(chart, Ki), map_body(chart, K));
        EXPECT_LT(g, prev_gamma);
        EXPECT_LT(h, prev_haus);
        prev_gamma = g;
        prev_haus = h;
    }
    EXPECT_LT(prev_gamma, 0.05);
    EXPECT_LT(prev_haus, 0.05);
}
