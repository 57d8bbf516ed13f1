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

#include <stdexcept>
#include <string>

namespace sphereconv {

enum class ErrorCode {
    DimensionMismatch,
    InvalidArgument,
    Improper,      // no open hemisphere contains the generators
    ImproperPair,  // a pair of bodies shares no open hemisphere
    Precondition,
    OutOfChart,
    Domain,
    UnsupportedDim,
    Degenerate,
    Io,
    Parse,
};

const char* to_string(ErrorCode code);

/// Exception type used throughout the core. The C API maps `code()` onto
/// `sc_status` values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace sphereconv
