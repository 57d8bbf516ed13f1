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

namespace sphereconv {

/// Result of a min-norm-point query over conv(points).
struct MinNormResult {
    Vec point;    // the minimizer
    Vec weights;  // convex weights over the input columns (sparse support)
    int iterations = 0;
};

/// Tolerance on the Wolfe criterion |x|^2 - min_j x.p_j <= tol * max_j |p_j|^2.
inline constexpr double kWolfeTolerance = 1e-12;

/// Rounding-level criterion for membership and distance queries that need
/// the exact corral rather than a certified gap.
inline constexpr double kWolfeTight = 1e-15;

/// Wolfe's min-norm-point algorithm: the point of conv(columns of `points`)
/// closest to the origin. Works in any dimension; `points` must have at least
/// one column.
MinNormResult min_norm_point(const Mat& points, double tol = kWolfeTolerance);

/// Nearest point of conv(points) to `x`.
MinNormResult nearest_in_hull(const Mat& points, const Vec& x, double tol = kWolfeTolerance);

/// Euclidean distance from `x` to conv(points).
double distance_to_hull(const Mat& points, const Vec& x, double tol = kWolfeTight);

} // namespace sphereconv
