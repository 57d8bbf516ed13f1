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

#include <Eigen/Dense>

#include <cstddef>

namespace sphereconv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Orthonormal basis of a linear subspace, stored as matrix columns.
/// An empty basis (zero columns) describes the zero subspace.
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    /// Validates orthonormality within 1e-12 (throws InvalidArgument).
    SubspaceBasis(Mat basis);

    /// Orthonormalizes arbitrary spanning columns (throws Degenerate when
    /// they are linearly dependent).
    static SubspaceBasis from_spanning(const Mat& columns);

    /// The full space R^dim with the standard basis.
    static SubspaceBasis full(int dim);

    int ambient_dim() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Mat& basis() const { return basis_; }

    /// Orthogonal projector B B^T in ambient coordinates.
    Mat projector() const { return basis_ * basis_.transpose(); }

    /// Distance of x from the subspace.
    double distance(const Vec& x) const;

private:
    Mat basis_;
};

/// True when the columns are pairwise orthogonal and unit within `tol`.
bool is_orthonormal(const Mat& columns, double tol = 1e-12);

/// Modified Gram-Schmidt (two passes) over `seeds` in order. Columns whose
/// residual norm falls below `drop_tol` are skipped; at most `max_count`
/// vectors are kept.
Mat gram_schmidt(const Mat& seeds, double drop_tol, int max_count);

/// Deterministic quasi-uniform unit directions in R^dim, one per column.
/// dim 1: {+1, -1}; dim 2: equally spaced on the circle; dim 3: Fibonacci
/// lattice; higher dims: a fixed-seed Gaussian sample.
Mat direction_grid(int dim, int count);

Vec normalized(const Vec& x);

/// Angle between two nonzero vectors, accurate near 0 and pi.
double angle_between(const Vec& a, const Vec& b);

void require_same_dim(std::ptrdiff_t a, std::ptrdiff_t b, const char* what);

} // namespace sphereconv
