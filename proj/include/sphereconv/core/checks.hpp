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

#include "sphereconv/core/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sphereconv {

struct RunConfig {
    std::uint64_t seed = 1;
    int trials = 200;
    int samples = 512;
    double tol = 1e-8; // covariance tolerance
    int ambient_dim = 3;
    std::string output_path;

    /// InvalidArgument unless trials, samples >= 1, tol > 0, ambient_dim >= 3.
    void validate() const;
};

Json to_json(const RunConfig& c);

struct Assertion {
    std::string name;
    std::string anchor; // the identity being checked, as a formula
    double value = 0.0;
    double bound = 0.0;
    bool lower = false; // true: value must exceed bound
    bool passed = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<Assertion> assertions;
    Json data = Json::object();

    bool passed() const;
    /// Report record; `timestamp` is the only nondeterministic field.
    Json to_json(const std::string& timestamp) const;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite. InvalidArgument for unknown names.
SuiteResult run_suite(const std::string& name, const RunConfig& config);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

} // namespace sphereconv
