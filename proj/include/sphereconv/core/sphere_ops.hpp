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
#include "sphereconv/core/random.hpp"
#include "sphereconv/core/sphere.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sphereconv {

enum class OpKind {
    TrivialK,
    TrivialNegK,
    TrivialL,
    TrivialNegL,
    ConvUnion,
    NegConvUnion,
    Transport,  // M-addition through the gnomonic chart
    Transport4, // support functional on R^4 through the gnomonic chart
};

enum class ChartPolicy {
    PairCenter, // margin-maximizing center of the union of generators
    Fixed,
};

const char* to_string(OpKind kind);

struct SphereOpSpec {
    OpKind kind = OpKind::ConvUnion;
    QuadrantPolytope M;
    SupportFun4 Mbar;
    ChartPolicy policy = ChartPolicy::PairCenter;
    Vec fixed_center;
    std::string name;
    int transport4_directions = 1024;

    static SphereOpSpec trivial(OpKind kind);
    static SphereOpSpec conv();
    static SphereOpSpec neg_conv();
    static SphereOpSpec transport(QuadrantPolytope M, std::string name);
    static SphereOpSpec transport4(SupportFun4 Mbar);

    SphereOpSpec with_fixed_center(const Vec& u) const;
    bool is_transport() const { return kind == OpKind::Transport || kind == OpKind::Transport4; }
};

struct ApplyResult {
    SpherePolytope body;
    Vec chart_center;        // empty for non-transport kinds
    double support_gap = 0.0; // Transport4 only: sampled |h_P - h| in the chart
};

/// Margin-maximizing center of the union; ImproperPair when none exists.
Vec pair_center(const SpherePolytope& K, const SpherePolytope& L);

ApplyResult apply_detailed(const SphereOpSpec& spec, const SpherePolytope& K, const SpherePolytope& L);

SpherePolytope apply(const SphereOpSpec& spec, const SpherePolytope& K, const SpherePolytope& L);

/// Every generator of `body` lies in conv(K u L).
bool contained_in_conv(const SpherePolytope& body, const SpherePolytope& K, const SpherePolytope& L);

/// Support of E = {(l2, l1+l2, l3, 1-l1+l3) : l1 in [0,1], l2 <= 0, l3 <= 0}:
/// max{b, d} when a+b >= 0 and c+d >= 0 (slack 1e-12), Domain otherwise.
double h_E(double a, double b, double c, double d);

/// h_E as a functional that returns +inf outside its domain.
SupportFun4 e_set_functional();

/// max over `dirs` directions v in S_u of
/// |tan h_u(conv(K u L), v) - h_E(h_{-K}, h_K, h_{-L}, h_L)| on the chart images.
double conv_via_E(const Vec& u, const SpherePolytope& K, const SpherePolytope& L, int dirs);

enum class CovarianceMode { URestricted, Full };

struct CovarianceConfig {
    CovarianceMode mode = CovarianceMode::Full;
    Vec u; // URestricted: the fixed center (defaults to e_1)
    int trials = 200;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    int ambient_dim = 3;
    CapBodyParams bodies;
    int gamma_samples = 512;
};

struct CovarianceWitness {
    int trial = 0;
    SpherePolytope K;
    SpherePolytope L;
    SubspaceBasis S;
    Vec chart_point;
    std::optional<SpherePolytope> lhs;
    std::optional<SpherePolytope> rhs;
    double deviation = 0.0;
    std::string error;
};

struct CovarianceReport {
    std::string spec;
    CovarianceMode mode = CovarianceMode::Full;
    Vec u;
    int trials = 0;
    double max_dev = 0.0;
    int violations = 0;
    std::optional<CovarianceWitness> witness;
    std::uint64_t seed = 0;
    int ambient_dim = 0;
};

/// Deviation of two bodies inside the subspace S, measured at the chart point
/// x in S (or -x): max of gamma over directions of S tangent at the point and
/// of the generator-wise cone distance. pi/2 when no common chart exists.
double subsphere_deviation(const SpherePolytope& lhs, const SpherePolytope& rhs, const Vec& x,
                           const SubspaceBasis& S, int samples);

/// (K|S) * (L|S) against (K*L)|S on random bodies and subspheres.
CovarianceReport proj_covariance_check(const SphereOpSpec& spec, const CovarianceConfig& config);

struct DiscontinuityRow {
    double eps = 0.0;
    double max_angle = 0.0; // largest angle between generators of conv(K u L_eps)
    double expected = 0.0;  // pi - eps
    double margin = 0.0;    // hemisphere margin of conv(K u L_eps)
    double delta_to_limit = 0.0; // delta_s(L_eps, L_0)
};

/// K = conv{u, -v}, L_eps = I_u^v(0, pi/2 - eps) with u = e_1, v = e_2 on S^2.
std::vector<DiscontinuityRow> discontinuity_demo(const std::vector<double>& eps_list, int samples = 1024);

double max_generator_angle(const SpherePolytope& K);

} // namespace sphereconv
