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

#include <optional>
#include <vector>

namespace sphereconv::detail {

/// Quickhull in R^3. Returns the sorted indices of hull vertices, dropping
/// points within `eps` of a face, or nullopt when the set is within `eps` of
/// a plane.
std::optional<std::vector<Eigen::Index>> quickhull_3d(const Mat& points, double eps);

} // namespace sphereconv::detail
