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
#include "sphereconv/core/min_norm.hpp"

#include "sphereconv/core/errors.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace sphereconv {

namespace {

// Affine minimizer of |sum_i v_i p_i| subject to sum_i v_i = 1 over the
// corral columns. Parametrized relative to the first column so the least
// squares problem stays well conditioned.
Vec affine_minimizer(const Mat& corral) {
    const Eigen::Index k = corral.cols();
    Vec v(k);
    if (k == 1) {
        v(0) = 1.0;
        return v;
    }
    Mat diffs(corral.rows(), k - 1);
    for (Eigen::Index i = 1; i < k; ++i)
        diffs.col(i - 1) = corral.col(i) - corral.col(0);
    const Vec t = diffs.completeOrthogonalDecomposition().solve(-corral.col(0));
    v(0) = 1.0 - t.sum();
    v.tail(k - 1) = t;
    return v;
}

} // namespace

MinNormResult min_norm_point(const Mat& points, double tol) {
    const Eigen::Index m = points.cols();
    if (m == 0)
        fail(ErrorCode::InvalidArgument, "min_norm_point needs at least one point");

    const Vec sq = points.colwise().squaredNorm();
    const double scale = std::max(sq.maxCoeff(), std::numeric_limits<double>::min());
    Eigen::Index start = 0;
    sq.minCoeff(&start);

    std::vector<Eigen::Index> corral{start};
    Vec weights = Vec::Ones(1);
    Vec x = points.col(start);

    MinNormResult result;
    const int max_major = static_cast<int>(50 * (m + points.rows()) + 100);
    for (int major = 0; major < max_major; ++major) {
        ++result.iterations;
        const Vec dots = points.transpose() * x;
        Eigen::Index j = 0;
        const double best = dots.minCoeff(&j);
        const double xx = x.squaredNorm();
        if (xx - best <= tol * scale)
            break;
        if (std::find(corral.begin(), corral.end(), j) != corral.end())
            break; // rounding stall: the best vertex is already in the corral

        const std::vector<Eigen::Index> prev_corral = corral;
        const Vec prev_weights = weights;
        corral.push_back(j);
        weights.conservativeResize(weights.size() + 1);
        weights(weights.size() - 1) = 0.0;

        // Minor cycles: move toward the affine minimizer until it lies in
        // the relative interior of the corral's simplex.
        for (std::size_t minor = 0; minor <= corral.size() + 1; ++minor) {
            Mat c(points.rows(), static_cast<Eigen::Index>(corral.size()));
            for (std::size_t i = 0; i < corral.size(); ++i)
                c.col(static_cast<Eigen::Index>(i)) = points.col(corral[i]);
            const Vec v = affine_minimizer(c);
            if ((v.array() > 1e-14).all()) {
                weights = v;
                break;
            }
            double theta = 1.0;
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                if (v(i) <= 1e-14) {
                    const double denom = weights(i) - v(i);
                    if (denom > 0.0)
                        theta = std::min(theta, weights(i) / denom);
                }
            }
            weights = theta * v + (1.0 - theta) * weights;
            std::vector<Eigen::Index> kept;
            std::vector<double> kept_w;
            for (Eigen::Index i = 0; i < weights.size(); ++i) {
                if (weights(i) > 1e-14) {
                    kept.push_back(corral[static_cast<std::size_t>(i)]);
                    kept_w.push_back(weights(i));
                }
            }
            if (kept.empty()) {
                Eigen::Index best_i = 0;
                weights.maxCoeff(&best_i);
                kept.push_back(corral[static_cast<std::size_t>(best_i)]);
                kept_w.push_back(1.0);
            }
            corral = std::move(kept);
            weights = Eigen::Map<Vec>(kept_w.data(), static_cast<Eigen::Index>(kept_w.size()));
            weights /= weights.sum();
        }

        Vec next = Vec::Zero(points.rows());
        for (std::size_t i = 0; i < corral.size(); ++i)
            next += weights(static_cast<Eigen::Index>(i)) * points.col(corral[i]);
        if (next.squaredNorm() >= xx) {
            // No progress under rounding: keep the previous corral.
            corral = prev_corral;
            weights = prev_weights;
            break;
        }
        x = next;
    }

    result.weights = Vec::Zero(m);
    for (std::size_t i = 0; i < corral.size(); ++i)
        result.weights(corral[i]) += weights(static_cast<Eigen::Index>(i));
    result.point = points * result.weights;
    return result;
}

MinNormResult nearest_in_hull(const Mat& points, const Vec& x, double tol) {
    require_same_dim(points.rows(), x.size(), "nearest_in_hull");
    MinNormResult r = min_norm_point(points.colwise() - x, tol);
    r.point += x;
    return r;
}

double distance_to_hull(const Mat& points, const Vec& x, double tol) {
    return (nearest_in_hull(points, x, tol).point - x).norm();
}

} // namespace sphereconv
