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
#include "sphereconv/core/sphere_ops.hpp"

#include "sphereconv/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sphereconv {

const char* to_string(OpKind kind) {
    switch (kind) {
    case OpKind::TrivialK: return "TRIVIAL_K";
    case OpKind::TrivialNegK: return "TRIVIAL_NEGK";
    case OpKind::TrivialL: return "TRIVIAL_L";
    case OpKind::TrivialNegL: return "TRIVIAL_NEGL";
    case OpKind::ConvUnion: return "CONV_UNION";
    case OpKind::NegConvUnion: return "NEG_CONV_UNION";
    case OpKind::Transport: return "TRANSPORT";
    case OpKind::Transport4: return "TRANSPORT4";
    }
    return "UNKNOWN";
}

SphereOpSpec SphereOpSpec::trivial(OpKind kind) {
    if (kind != OpKind::TrivialK && kind != OpKind::TrivialNegK && kind != OpKind::TrivialL &&
        kind != OpKind::TrivialNegL)
        fail(ErrorCode::InvalidArgument, "not a trivial operation kind");
    SphereOpSpec s;
    s.kind = kind;
    s.name = to_string(kind);
    return s;
}

SphereOpSpec SphereOpSpec::conv() {
    SphereOpSpec s;
    s.kind = OpKind::ConvUnion;
    s.name = to_string(s.kind);
    return s;
}

SphereOpSpec SphereOpSpec::neg_conv() {
    SphereOpSpec s;
    s.kind = OpKind::NegConvUnion;
    s.name = to_string(s.kind);
    return s;
}

SphereOpSpec SphereOpSpec::transport(QuadrantPolytope M, std::string name) {
    if (M.empty())
        fail(ErrorCode::InvalidArgument, "transport needs a nonempty combining set");
    SphereOpSpec s;
    s.kind = OpKind::Transport;
    s.M = std::move(M);
    s.name = "TRANSPORT(" + name + ")";
    return s;
}

SphereOpSpec SphereOpSpec::transport4(SupportFun4 Mbar) {
    if (!Mbar.eval)
        fail(ErrorCode::InvalidArgument, "transport4 needs a support functional");
    SphereOpSpec s;
    s.kind = OpKind::Transport4;
    s.name = "TRANSPORT4(" + Mbar.name + ")";
    s.Mbar = std::move(Mbar);
    return s;
}

SphereOpSpec SphereOpSpec::with_fixed_center(const Vec& u) const {
    require_unit(u, "with_fixed_center");
    SphereOpSpec s = *this;
    s.policy = ChartPolicy::Fixed;
    s.fixed_center = u.normalized();
    return s;
}

Vec pair_center(const SpherePolytope& K, const SpherePolytope& L) {
    require_same_dim(K.ambient_dim(), L.ambient_dim(), "pair_center");
    Mat g(K.ambient_dim(), K.size() + L.size());
    g << K.generators(), L.generators();
    const auto c = hemisphere_center(g);
    if (!c)
        fail(ErrorCode::ImproperPair, "the pair of bodies shares no open hemisphere");
    return *c;
}

namespace {

SpherePolytope conv_pair(const SpherePolytope& K, const SpherePolytope& L) {
    try {
        return conv_union(K, L);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Improper)
            fail(ErrorCode::ImproperPair, "the pair of bodies shares no open hemisphere");
        throw;
    }
}

} // namespace

ApplyResult apply_detailed(const SphereOpSpec& spec, const SpherePolytope& K, const SpherePolytope& L) {
    require_same_dim(K.ambient_dim(), L.ambient_dim(), "apply");
    switch (spec.kind) {
    case OpKind::TrivialK: return {K, Vec(), 0.0};
    case OpKind::TrivialNegK: return {neg(K), Vec(), 0.0};
    case OpKind::TrivialL: return {L, Vec(), 0.0};
    case OpKind::TrivialNegL: return {neg(L), Vec(), 0.0};
    case OpKind::ConvUnion: return {conv_pair(K, L), Vec(), 0.0};
    case OpKind::NegConvUnion: return {neg(conv_pair(K, L)), Vec(), 0.0};
    case OpKind::Transport:
    case OpKind::Transport4: break;
    }

    Vec u;
    if (spec.policy == ChartPolicy::Fixed) {
        require_same_dim(spec.fixed_center.size(), K.ambient_dim(), "apply");
        u = spec.fixed_center;
    } else {
        u = pair_center(K, L);
    }
    const HemisphereChart chart = HemisphereChart::at(u);
    const ConvexPolytope Kbar = map_body(chart, K);
    const ConvexPolytope Lbar = map_body(chart, L);
    if (spec.kind == OpKind::Transport)
        return {map_body_inv(chart, m_add(spec.M, Kbar, Lbar)), u, 0.0};

    const int n = chart.plane_dim();
    auto h = [&](const Vec& x) { return m4_op(spec.Mbar, Kbar, Lbar, x); };
    const ConvexPolytope P = body_from_support(h, direction_grid(n, spec.transport4_directions));
    const Mat probe = direction_grid(n, 4 * spec.transport4_directions + 3);
    double gap = 0.0;
    for (Eigen::Index i = 0; i < probe.cols(); ++i)
        gap = std::max(gap, std::abs(support(P, probe.col(i)) - h(probe.col(i))));
    return {map_body_inv(chart, P), u, gap};
}

SpherePolytope apply(const SphereOpSpec& spec, const SpherePolytope& K, const SpherePolytope& L) {
    return apply_detailed(spec, K, L).body;
}

bool contained_in_conv(const SpherePolytope& body, const SpherePolytope& K, const SpherePolytope& L) {
    const SpherePolytope hull = conv_pair(K, L);
    for (Eigen::Index i = 0; i < body.size(); ++i) {
        if (!contains(hull, body.generators().col(i)))
            return false;
    }
    return true;
}

double h_E(double a, double b, double c, double d) {
    if (a + b < -1e-12 || c + d < -1e-12)
        fail(ErrorCode::Domain, "h_E is infinite outside a+b >= 0, c+d >= 0");
    return std::max(b, d);
}

SupportFun4 e_set_functional() {
    SupportFun4 f;
    f.name = "E";
    f.eval = [](const SupportFun4::Args& x) {
        if (x[0] + x[1] < -1e-12 || x[2] + x[3] < -1e-12)
            return std::numeric_limits<double>::infinity();
        return std::max(x[1], x[3]);
    };
    return f;
}

double conv_via_E(const Vec& u, const SpherePolytope& K, const SpherePolytope& L, int dirs) {
    const HemisphereChart chart = HemisphereChart::at(u);
    const ConvexPolytope Kbar = map_body(chart, K);
    const ConvexPolytope Lbar = map_body(chart, L);
    const SpherePolytope hull = conv_pair(K, L);
    const Mat v = equator_directions(u, dirs);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
        const Vec x = chart.to_plane(v.col(i));
        const double lhs = std::tan(sph_support(u, hull, v.col(i)));
        const double rhs = h_E(support(Kbar, -x), support(Kbar, x), support(Lbar, -x), support(Lbar, x));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

namespace {

bool in_open_hemisphere(const Vec& x, const SpherePolytope& K, double slack) {
    return (x.transpose() * K.generators()).minCoeff() > slack;
}

} // namespace

double subsphere_deviation(const SpherePolytope& lhs, const SpherePolytope& rhs, const Vec& x,
                           const SubspaceBasis& S, int samples) {
    Vec y;
    if (in_open_hemisphere(x, lhs, 1e-12) && in_open_hemisphere(x, rhs, 1e-12))
        y = x;
    else if (in_open_hemisphere(-x, lhs, 1e-12) && in_open_hemisphere(-x, rhs, 1e-12))
        y = -x;
    else
        return std::numbers::pi / 2.0;

    double dev = body_gap(lhs, rhs);
    Mat seeds(S.ambient_dim(), S.dim() + 1);
    seeds << y, S.basis();
    const Mat tangent = gram_schmidt(seeds, 1e-8, S.dim()).rightCols(S.dim() - 1);
    if (tangent.cols() > 0) {
        const Mat dirs = tangent * direction_grid(static_cast<int>(tangent.cols()), samples);
        for (Eigen::Index i = 0; i < dirs.cols(); ++i) {
            const Vec v = dirs.col(i);
            dev = std::max(dev, std::abs(sph_support(y, lhs, v) - sph_support(y, rhs, v)));
        }
    }
    return dev;
}

namespace {

bool is_center(const Vec& x, const SpherePolytope& K) {
    return in_open_hemisphere(x, K, 1e-6);
}

struct TrialBodies {
    SpherePolytope K;
    SpherePolytope L;
    SubspaceBasis S;
    Vec x;
};

TrialBodies draw_trial(Rng& rng, const SphereOpSpec& spec, const CovarianceConfig& cfg) {
    const int d = cfg.ambient_dim;
    const double spread = std::numbers::pi / 8.0;
    for (;;) {
        const Vec c0 = cfg.mode == CovarianceMode::URestricted ? cfg.u : random_unit(rng, d);
        TrialBodies t;
        t.K = random_cap_body(rng, random_in_cap(rng, c0, spread), cfg.bodies);
        t.L = random_cap_body(rng, random_in_cap(rng, c0, spread), cfg.bodies);
        const int dim_v = std::uniform_int_distribution<int>(1, d - 1)(rng);
        if (cfg.mode == CovarianceMode::URestricted) {
            t.x = cfg.u;
            t.S = random_subspace_through(rng, cfg.u, dim_v);
            return t;
        }
        // Chart point of the subsphere: a random common center of K, L and
        // K*L (or of -(K*L)), drawn near the pair center with a shrinking radius.
        const Vec c = pair_center(t.K, t.L);
        const SpherePolytope KL = apply(spec, t.K, t.L);
        double radius = std::numbers::pi / 4.0;
        for (int attempt = 0; attempt < 64; ++attempt, radius *= 0.85) {
            const Vec x = random_in_cap(rng, c, radius);
            if (is_center(x, t.K) && is_center(x, t.L) && (is_center(x, KL) || is_center(-x, KL))) {
                t.x = x;
                t.S = random_subspace_through(rng, x, dim_v);
                return t;
            }
        }
    }
}

} // namespace

CovarianceReport proj_covariance_check(const SphereOpSpec& spec_in, const CovarianceConfig& config) {
    if (config.trials < 1)
        fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    if (config.ambient_dim < 3)
        fail(ErrorCode::InvalidArgument, "covariance checks need ambient dimension >= 3");
    CovarianceConfig cfg = config;
    SphereOpSpec spec = spec_in;
    if (cfg.mode == CovarianceMode::URestricted) {
        if (cfg.u.size() == 0)
            cfg.u = Vec::Unit(cfg.ambient_dim, 0);
        require_same_dim(cfg.u.size(), cfg.ambient_dim, "proj_covariance_check");
        require_unit(cfg.u, "proj_covariance_check");
        cfg.u.normalize();
        if (spec.is_transport())
            spec = spec.with_fixed_center(cfg.u);
    }

    CovarianceReport report;
    report.spec = spec_in.name;
    report.mode = cfg.mode;
    report.u = cfg.u;
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    report.ambient_dim = cfg.ambient_dim;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = make_stream(cfg.seed, static_cast<std::uint64_t>(trial));
        const TrialBodies t = draw_trial(rng, spec, cfg);
        CovarianceWitness w;
        w.trial = trial;
        w.K = t.K;
        w.L = t.L;
        w.S = t.S;
        w.chart_point = t.x;
        try {
            w.lhs = apply(spec, sph_project(t.K, t.S), sph_project(t.L, t.S));
            w.rhs = sph_project(apply(spec, t.K, t.L), t.S);
            w.deviation = subsphere_deviation(*w.lhs, *w.rhs, t.x, t.S, cfg.gamma_samples);
        } catch (const Error& e) {
            w.deviation = std::numbers::pi / 2.0;
            w.error = std::string(to_string(e.code())) + ": " + e.what();
        }
        report.max_dev = std::max(report.max_dev, w.deviation);
        if (w.deviation > cfg.tol) {
            ++report.violations;
            if (!report.witness)
                report.witness = std::move(w);
        }
    }
    return report;
}

double max_generator_angle(const SpherePolytope& K) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < K.size(); ++i) {
        for (Eigen::Index j = i + 1; j < K.size(); ++j)
            best = std::max(best, angle_between(K.generators().col(i), K.generators().col(j)));
    }
    return best;
}

std::vector<DiscontinuityRow> discontinuity_demo(const std::vector<double>& eps_list, int samples) {
    const Vec u = Vec::Unit(3, 0);
    const Vec v = Vec::Unit(3, 1);
    Mat kg(3, 2);
    kg << u, -v;
    const SpherePolytope K = make_body(kg);
    Mat l0(3, 2);
    l0 << u, v;
    const SpherePolytope L0 = make_body(l0);

    std::vector<DiscontinuityRow> rows;
    for (double eps : eps_list) {
        if (!(eps > 0.0 && eps <= std::numbers::pi / 4.0))
            fail(ErrorCode::InvalidArgument, "discontinuity demo needs eps in (0, pi/4]");
        const SpherePolytope Le = segment(u, v, 0.0, std::numbers::pi / 2.0 - eps);
        const SpherePolytope hull = conv_union(K, Le);
        DiscontinuityRow row;
        row.eps = eps;
        row.max_angle = max_generator_angle(hull);
        row.expected = std::numbers::pi - eps;
        row.margin = hull.margin();
        row.delta_to_limit = delta_s(Le, L0, samples);
        rows.push_back(row);
    }
    return rows;
}

} // namespace sphereconv
