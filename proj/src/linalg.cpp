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
#include "sphereconv/core/linalg.hpp"

#include "sphereconv/core/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace sphereconv {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Improper: return "IMPROPER";
    case ErrorCode::ImproperPair: return "IMPROPER_PAIR";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::OutOfChart: return "OUT_OF_CHART";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::UnsupportedDim: return "UNSUPPORTED_DIM";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::Io: return "IO";
    case ErrorCode::Parse: return "PARSE";
    }
    return "UNKNOWN";
}

SubspaceBasis::SubspaceBasis(Mat basis) : basis_(std::move(basis)) {
    if (basis_.cols() > basis_.rows())
        fail(ErrorCode::InvalidArgument, "subspace basis has more vectors than the ambient dimension");
    if (!is_orthonormal(basis_))
        fail(ErrorCode::InvalidArgument, "subspace basis is not orthonormal within 1e-12");
}

SubspaceBasis SubspaceBasis::from_spanning(const Mat& columns) {
    Mat q = gram_schmidt(columns, 1e-10, static_cast<int>(columns.rows()));
    if (q.cols() != columns.cols())
        fail(ErrorCode::Degenerate, "spanning vectors are linearly dependent");
    return SubspaceBasis(std::move(q));
}

SubspaceBasis SubspaceBasis::full(int dim) {
    return SubspaceBasis(Mat::Identity(dim, dim));
}

double SubspaceBasis::distance(const Vec& x) const {
    require_same_dim(x.size(), basis_.rows(), "SubspaceBasis::distance");
    if (basis_.cols() == 0)
        return x.norm();
    return (x - basis_ * (basis_.transpose() * x)).norm();
}

bool is_orthonormal(const Mat& columns, double tol) {
    const Mat gram = columns.transpose() * columns;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(gram(i, j) - target) > tol)
                return false;
        }
    }
    return true;
}

Mat gram_schmidt(const Mat& seeds, double drop_tol, int max_count) {
    const Eigen::Index n = seeds.rows();
    Mat out(n, 0);
    for (Eigen::Index c = 0; c < seeds.cols() && out.cols() < max_count; ++c) {
        Vec v = seeds.col(c);
        const double original = v.norm();
        if (original == 0.0)
            continue;
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < out.cols(); ++k)
                v -= out.col(k).dot(v) * out.col(k);
        }
        const double residual = v.norm();
        if (residual <= drop_tol * original)
            continue;
        out.conservativeResize(n, out.cols() + 1);
        out.col(out.cols() - 1) = v / residual;
    }
    return out;
}

Mat direction_grid(int dim, int count) {
    if (dim < 1 || count < 1)
        fail(ErrorCode::InvalidArgument, "direction_grid needs dim >= 1 and count >= 1");
    if (dim == 1) {
        Mat g(1, 2);
        g << 1.0, -1.0;
        return g;
    }
    Mat g(dim, count);
    if (dim == 2) {
        for (int i = 0; i < count; ++i) {
            const double t = 2.0 * std::numbers::pi * i / count;
            g(0, i) = std::cos(t);
            g(1, i) = std::sin(t);
        }
        return g;
    }
    if (dim == 3) {
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < count; ++i) {
            const double z = 1.0 - (2.0 * i + 1.0) / count;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double phi = golden * i;
            g(0, i) = r * std::cos(phi);
            g(1, i) = r * std::sin(phi);
            g(2, i) = z;
        }
        return g;
    }
    std::mt19937_64 rng(0x5eed'd1f0ULL + static_cast<unsigned>(dim));
    std::normal_distribution<double> normal;
    for (int i = 0; i < count; ++i) {
        Vec v(dim);
        do {
            for (int k = 0; k < dim; ++k)
                v(k) = normal(rng);
        } while (v.norm() < 1e-6);
        g.col(i) = v.normalized();
    }
    return g;
}

Vec normalized(const Vec& x) {
    const double n = x.norm();
    if (!(n > 0.0))
        fail(ErrorCode::InvalidArgument, "cannot normalize a zero vector");
    return x / n;
}

double angle_between(const Vec& a, const Vec& b) {
    const Vec ua = normalized(a);
    const Vec ub = normalized(b);
    return 2.0 * std::atan2((ua - ub).norm(), (ua + ub).norm());
}

void require_same_dim(std::ptrdiff_t a, std::ptrdiff_t b, const char* what) {
    if (a != b) {
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                 std::to_string(b) + ")");
    }
}

} // namespace sphereconv
