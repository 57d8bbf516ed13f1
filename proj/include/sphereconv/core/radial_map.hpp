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

#include <functional>
#include <optional>

namespace sphereconv {

/// A star set in R^dim described by its radial function on unit directions.
/// `eval` receives unit vectors; `radial()` extends it -1-homogeneously.
/// Maps built from samples carry the grid and pick the nearest grid value.
struct RadialMap {
    struct Samples {
        Mat grid;   // unit directions, one per column
        Vec values; // radial values on the grid
    };

    int dim = 0;
    std::function<double(const Vec&)> eval;
    std::optional<Samples> samples;

    static RadialMap from_function(int dim, std::function<double(const Vec&)> f);
    static RadialMap from_samples(Mat grid, Vec values);
    static RadialMap ball(int dim, double radius);

    /// rho(L, x) = eval(x/|x|)/|x|. Throws InvalidArgument for x = 0 and
    /// Domain when eval returns a negative value.
    double radial(const Vec& x) const;

    /// Values of the map on the directions of the grid columns.
    Vec sample(const Mat& grid) const;
};

} // namespace sphereconv
