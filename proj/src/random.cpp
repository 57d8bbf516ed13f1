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
#include "sphereconv/core/random.hpp"

#include "sphereconv/core/errors.hpp"

#include <cmath>
#include <numbers>

namespace sphereconv {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec random_unit(Rng& rng, int dim) {
    std::normal_distribution<double> normal;
    Vec v(dim);
    do {
        for (int i = 0; i < dim; ++i)
            v(i) = normal(rng);
    } while (v.norm() < 1e-8);
    return v.normalized();
}

Vec random_orthogonal_unit(Rng& rng, const Vec& u) {
    for (;;) {
        Vec v = random_unit(rng, static_cast<int>(u.size()));
        v -= u.dot(v) * u;
        v -= u.dot(v) * u;
        if (v.norm() > 1e-3)
            return v.normalized();
    }
}

Vec random_in_cap(Rng& rng, const Vec& c, double theta_max) {
    if (!(theta_max >= 0.0 && theta_max <= std::numbers::pi / 2.0))
        fail(ErrorCode::InvalidArgument, "cap radius must lie in [0, pi/2]");
    const int n = static_cast<int>(c.size()) - 1;
    // Polar angle density on S^n is proportional to sin^(n-1); sin is
    // increasing on [0, pi/2], so sin(theta_max) bounds it.
    double theta = 0.0;
    const double top = std::pow(std::sin(theta_max), n - 1);
    for (;;) {
        theta = uniform(rng, 0.0, theta_max);
        if (n <= 1 || uniform(rng, 0.0, top) <= std::pow(std::sin(theta), n - 1))
            break;
    }
    if (n == 0)
        return c;
    const Vec t = random_orthogonal_unit(rng, c);
    return (c * std::cos(theta) + t * std::sin(theta)).normalized();
}

SpherePolytope random_cap_body(Rng& rng, const Vec& center, const CapBodyParams& params) {
    if (params.generators < 1)
        fail(ErrorCode::InvalidArgument, "a random body needs at least one generator");
    Mat g(center.size(), params.generators);
    for (int i = 0; i < params.generators; ++i)
        g.col(i) = random_in_cap(rng, center, params.theta_max);
    return make_body(g);
}

SubspaceBasis random_subspace_through(Rng& rng, const Vec& x, int dim) {
    const int ambient = static_cast<int>(x.size());
    if (dim < 1 || dim > ambient)
        fail(ErrorCode::InvalidArgument, "subspace dimension out of range");
    Mat seeds(ambient, ambient + 1);
    seeds.col(0) = x;
    for (int i = 1; i <= ambient; ++i)
        seeds.col(i) = random_unit(rng, ambient);
    Mat q = gram_schmidt(seeds, 1e-6, dim);
    return SubspaceBasis(q);
}

SubspaceBasis random_subspace(Rng& rng, int ambient, int dim) {
    if (dim == 0)
        return SubspaceBasis(Mat(ambient, 0));
    return random_subspace_through(rng, random_unit(rng, ambient), dim);
}

ConvexPolytope random_polytope(Rng& rng, int dim, int points, double radius) {
    if (points < 1)
        fail(ErrorCode::InvalidArgument, "a random polytope needs at least one point");
    std::normal_distribution<double> normal;
    Mat p(dim, points);
    for (int j = 0; j < points; ++j) {
        for (int i = 0; i < dim; ++i)
            p(i, j) = radius * normal(rng);
    }
    return ConvexPolytope(p);
}

QuadrantPolytope random_quadrant_polygon(Rng& rng) {
    const int count = std::uniform_int_distribution<int>(1, 6)(rng);
    const int s1 = uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1;
    const int s2 = uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1;
    Mat v(2, count);
    for (int i = 0; i < count; ++i) {
        v(0, i) = s1 * uniform(rng, 0.0, 1.5);
        v(1, i) = s2 * uniform(rng, 0.0, 1.5);
    }
    return QuadrantPolytope(v, {s1, s2});
}

Mat random_rotation(Rng& rng, int dim) {
    std::normal_distribution<double> normal;
    Mat g(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i)
            g(i, j) = normal(rng);
    }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        if (r(i, i) < 0.0)
            q.col(i) *= -1.0;
    }
    if (q.determinant() < 0.0)
        q.col(0) *= -1.0;
    return q;
}

} // namespace sphereconv
