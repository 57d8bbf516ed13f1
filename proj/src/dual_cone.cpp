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
#include "sphereconv/core/dual_cone.hpp"

#include "sphereconv/core/errors.hpp"

#include <algorithm>
#include <vector>

namespace sphereconv {

namespace {

struct Ray {
    Vec dir;
    std::vector<int> zeros; // sorted indices of processed constraints tight at dir
};

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool includes(const std::vector<int>& super, const std::vector<int>& sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

} // namespace

Mat dual_cone_rays(const Mat& constraints, double tol) {
    const int m = static_cast<int>(constraints.rows());
    const int d = static_cast<int>(constraints.cols());
    if (d < 1 || m < 1)
        fail(ErrorCode::InvalidArgument, "dual_cone_rays needs a nonempty constraint matrix");

    Mat rows(m, d);
    for (int i = 0; i < m; ++i) {
        const double n = constraints.row(i).norm();
        if (!(n > 0.0))
            fail(ErrorCode::InvalidArgument, "zero constraint normal");
        rows.row(i) = constraints.row(i) / n;
    }

    // Greedy choice of d independent rows for the initial simplicial cone.
    std::vector<int> basis;
    Mat q(d, 0);
    for (int i = 0; i < m && static_cast<int>(basis.size()) < d; ++i) {
        Vec r = rows.row(i).transpose();
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < q.cols(); ++k)
                r -= q.col(k).dot(r) * q.col(k);
        if (r.norm() > 1e-9) {
            basis.push_back(i);
            q.conservativeResize(d, q.cols() + 1);
            q.col(q.cols() - 1) = r.normalized();
        }
    }
    if (static_cast<int>(basis.size()) < d)
        fail(ErrorCode::Degenerate, "constraint normals do not span the space; cone is not pointed");

    Mat ab(d, d);
    for (int k = 0; k < d; ++k)
        ab.row(k) = rows.row(basis[k]);
    const Mat inv = ab.fullPivLu().inverse();

    std::vector<Ray> rays;
    for (int j = 0; j < d; ++j) {
        Ray r;
        r.dir = (-inv.col(j)).normalized();
        for (int k = 0; k < d; ++k)
            if (k != j)
                r.zeros.push_back(basis[k]);
        std::sort(r.zeros.begin(), r.zeros.end());
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(m, false);
    for (int b : basis)
        processed[b] = true;

    for (int i = 0; i < m; ++i) {
        if (processed[i])
            continue;
        processed[i] = true;
        const Vec a = rows.row(i).transpose();

        std::vector<double> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            s[k] = a.dot(rays[k].dir);
            if (s[k] > tol)
                pos.push_back(k);
            else if (s[k] < -tol)
                neg.push_back(k);
            else
                rays[k].zeros.insert(
                    std::upper_bound(rays[k].zeros.begin(), rays[k].zeros.end(), i), i);
        }
        if (pos.empty())
            continue;

        std::vector<Ray> created;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                std::vector<int> common = intersect(rays[p].zeros, rays[n].zeros);
                if (static_cast<int>(common.size()) < d - 2)
                    continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == n)
                        continue;
                    if (includes(rays[k].zeros, common))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                Ray r;
                r.dir = (s[p] * rays[n].dir - s[n] * rays[p].dir).normalized();
                r.zeros = std::move(common);
                r.zeros.insert(std::upper_bound(r.zeros.begin(), r.zeros.end(), i), i);
                created.push_back(std::move(r));
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size() - pos.size() + created.size());
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (s[k] <= tol)
                next.push_back(std::move(rays[k]));
        for (Ray& r : created)
            next.push_back(std::move(r));
        rays = std::move(next);
    }

    Mat out(d, static_cast<Eigen::Index>(rays.size()));
    for (std::size_t k = 0; k < rays.size(); ++k)
        out.col(static_cast<Eigen::Index>(k)) = rays[k].dir;
    return out;
}

} // namespace sphereconv
