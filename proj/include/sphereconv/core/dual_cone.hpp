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

/// Extreme rays of the pointed polyhedral cone {y : A y <= 0}, where the rows
/// of `constraints` are the normals a_i. Computed by the double description
/// method (incremental constraint insertion with the combinatorial adjacency
/// test). Rays are returned as unit columns.
///
/// Throws Degenerate when the rows do not span the space (the cone then has
/// a lineality space and is not pointed).
Mat dual_cone_rays(const Mat& constraints, double tol = 1e-10);

} // namespace sphereconv
