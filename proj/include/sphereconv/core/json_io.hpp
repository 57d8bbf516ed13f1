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

#include "sphereconv/core/euclid.hpp"
#include "sphereconv/core/gnomonic.hpp"
#include "sphereconv/core/sphere.hpp"
#include "sphereconv/core/sphere_ops.hpp"
#include "sphereconv/core/star.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace sphereconv {

using Json = nlohmann::ordered_json;

Json vec_to_json(const Vec& v);
/// Columns of `m` as a list of points.
Json columns_to_json(const Mat& m);
Vec vec_from_json(const Json& j, const char* what);
/// List of equal-length points as matrix columns; `dim` < 0 infers it.
Mat columns_from_json(const Json& j, int dim, const char* what);

Json to_json(const ConvexPolytope& K);
ConvexPolytope euclid_from_json(const Json& j);

Json to_json(const SpherePolytope& K);
/// Canonicalizes through make_body; a given "center" must certify the
/// generators (Improper otherwise) but the canonical center is stored.
SpherePolytope sphere_from_json(const Json& j);

Json to_json(const HemisphereChart& chart);
HemisphereChart chart_from_json(const Json& j);

Json to_json(const SubspaceBasis& S);
SubspaceBasis subspace_from_json(const Json& j);

Json to_json(const QuadrantPolytope& M);

/// Sampled radial map record on the given grid (unit columns).
Json radial_to_json(const RadialMap& L, const Mat& grid);
RadialMap radial_from_json(const Json& j);

/// Spherical radial record: grid of directions in S_u (ambient coordinates).
Json sph_star_to_json(const SphStarMap& S, const Mat& grid);
SphStarMap sph_star_from_json(const Json& j);

Json to_json(const CovarianceReport& r);
Json to_json(const SectionReport& r);
Json to_json(const DiscontinuityRow& r);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace sphereconv
