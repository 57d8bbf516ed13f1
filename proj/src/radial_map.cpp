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
#include "sphereconv/core/radial_map.hpp"

#include "sphereconv/core/errors.hpp"

#include <cmath>

namespace sphereconv {

RadialMap RadialMap::from_function(int dim, std::function<double(const Vec&)> f) {
    if (dim < 1)
        fail(ErrorCode::InvalidArgument, "radial map dimension must be positive");
    RadialMap r;
    r.dim = dim;
    r.eval = std::move(f);
    return r;
}

RadialMap RadialMap::from_samples(Mat grid, Vec values) {
    if (grid.cols() != values.size() || grid.cols() == 0)
        fail(ErrorCode::InvalidArgument, "radial samples need one value per grid direction");
    for (Eigen::Index i = 0; i < grid.cols(); ++i) {
        if (std::abs(grid.col(i).norm() - 1.0) > 1e-9)
            fail(ErrorCode::InvalidArgument, "radial sample grid must consist of unit directions");
        if (!(values(i) >= 0.0) || !std::isfinite(values(i)))
            fail(ErrorCode::InvalidArgument, "radial sample values must be finite and nonnegative");
    }
    RadialMap r;
    r.dim = static_cast<int>(grid.rows());
    r.samples = Samples{grid, values};
    // Nearest grid direction by maximal dot product.
    r.eval = [grid = std::move(grid), values = std::move(values)](const Vec& v) {
        Eigen::Index best = 0;
        (grid.transpose() * v).maxCoeff(&best);
        return values(best);
    };
    return r;
}

RadialMap RadialMap::ball(int dim, double radius) {
    if (!(radius >= 0.0))
        fail(ErrorCode::InvalidArgument, "ball radius must be nonnegative");
    return from_function(dim, [radius](const Vec&) { return radius; });
}

double RadialMap::radial(const Vec& x) const {
    require_same_dim(x.size(), dim, "radial");
    const double n = x.norm();
    if (!(n > 0.0))
        fail(ErrorCode::InvalidArgument, "radial function is undefined at the origin");
    const double value = eval(x / n);
    if (!(value >= 0.0))
        fail(ErrorCode::Domain, "radial function returned a negative value");
    return value / n;
}

Vec RadialMap::sample(const Mat& grid) const {
    Vec out(grid.cols());
    for (Eigen::Index i = 0; i < grid.cols(); ++i)
        out(i) = radial(grid.col(i).normalized());
    return out;
}

} // namespace sphereconv
