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
#include "sphereconv/core/checks.hpp"

#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>
#include <numbers>

namespace sphereconv {

namespace {

constexpr double kPi = std::numbers::pi;

// Independent stream per (suite part, index).
Rng stream(const RunConfig& c, std::uint64_t part, std::uint64_t index) {
    return make_stream(c.seed, (part << 32) | index);
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void expect_at_most(SuiteResult& r, std::string name, std::string anchor, double value, double bound,
                    std::string note = {}) {
    r.assertions.push_back({std::move(name), std::move(anchor), value, bound, false, value <= bound, std::move(note)});
}

void expect_above(SuiteResult& r, std::string name, std::string anchor, double value, double bound,
                  std::string note = {}) {
    r.assertions.push_back({std::move(name), std::move(anchor), value, bound, true, value > bound, std::move(note)});
}

// Proper body on a cap about a point near u, inside the open hemisphere of u.
SpherePolytope body_near(Rng& rng, const Vec& u, const CapBodyParams& p = {}) {
    return random_cap_body(rng, random_in_cap(rng, u, 0.3), p);
}

SphereOpSpec minkowski_spec() { return SphereOpSpec::transport(QuadrantPolytope::singleton(1, 1), "minkowski"); }
SphereOpSpec hull_spec() { return SphereOpSpec::transport(QuadrantPolytope::hull_segment(), "hull"); }

// Combining-set tolerance of the transported L2 sum: fine on S^2, coarser
// above, where M-sums have tens of thousands of extreme points.
double l2_tol(int ambient_dim) { return ambient_dim <= 3 ? 1e-8 : 1e-6; }
SphereOpSpec l2_spec(int ambient_dim) {
    return SphereOpSpec::transport(lp_m_set(2, l2_tol(ambient_dim)), "L2");
}

CovarianceConfig covariance_config(const RunConfig& c, CovarianceMode mode) {
    CovarianceConfig cc;
    cc.mode = mode;
    cc.trials = c.trials;
    cc.tol = c.tol;
    cc.seed = c.seed;
    cc.ambient_dim = c.ambient_dim;
    cc.gamma_samples = c.samples;
    return cc;
}

SuiteResult suite_bridge(const RunConfig& c) {
    SuiteResult r{"bridge", {}, Json::object()};

    double dev = 0.0;
    int part = 0;
    for (int d : {c.ambient_dim, c.ambient_dim + 1}) {
        for (int t = 0; t < c.trials; ++t) {
            Rng rng = stream(c, static_cast<std::uint64_t>(part), static_cast<std::uint64_t>(t));
            const Vec u = random_unit(rng, d);
            const HemisphereChart chart = HemisphereChart::at(u);
            const SpherePolytope K = body_near(rng, u);
            for (int i = 0; i < 100; ++i) {
                const auto [lhs, rhs] = support_bridge(chart, K, random_orthogonal_unit(rng, u));
                dev = std::max(dev, std::abs(lhs - rhs));
            }
        }
        ++part;
    }
    expect_at_most(r, "support bridge", "h(g_u(K),v) = tan h_u(K,v)", dev, 1e-9);

    double seg = 0.0;
    for (int t = 0; t < c.trials; ++t) {
        Rng rng = stream(c, 10, static_cast<std::uint64_t>(t));
        const Vec u = random_unit(rng, c.ambient_dim);
        const Vec w = random_orthogonal_unit(rng, u);
        Vec v;
        do {
            v = random_unit(rng, c.ambient_dim);
            v -= w.dot(v) * w;
            v.normalize();
        } while (u.dot(v) < 0.2);
        double a = uniform(rng, -1.4, 1.4);
        double b = uniform(rng, -1.4, 1.4);
        if (a > b)
            std::swap(a, b);
        const SpherePolytope I = segment(u, w, a, b);
        seg = std::max(seg, std::abs(std::tan(sph_support(v, I, w)) - std::tan(b) / u.dot(v)));
        seg = std::max(seg, std::abs(std::tan(sph_support(v, I, -w)) + std::tan(a) / u.dot(v)));
    }
    expect_at_most(r, "segment support values", "tan h_v(I_u^w(a,b), +-w) = tan b / u.v, -tan a / u.v", seg, 1e-10);

    double star = 0.0;
    double inter = 0.0;
    for (int t = 0; t < std::min(c.trials, 50); ++t) {
        Rng rng = stream(c, 20, static_cast<std::uint64_t>(t));
        const int d = c.ambient_dim + t % 2;
        const Vec u = random_unit(rng, d);
        const HemisphereChart chart = HemisphereChart::at(u);
        const double alpha = uniform(rng, 0.0, 1.4);
        const Mat grid = direction_grid(d - 1, 64);
        const RadialMap ball = star_bridge(chart, SphStarMap::cap(u, alpha));
        star = std::max(star, (ball.sample(grid).array() - std::tan(alpha)).abs().maxCoeff());
        const SphStarMap K = random_star_map(rng, u);
        const SphStarMap L = random_star_map(rng, u);
        const RadialMap lhs = star_bridge(chart, f_op(lp_star_combiner(2), K, L));
        const RadialMap rhs = lp_radial_sum(2, star_bridge(chart, K), star_bridge(chart, L));
        star = std::max(star, (lhs.sample(grid) - rhs.sample(grid)).cwiseAbs().maxCoeff());

        const SpherePolytope B = body_near(rng, u);
        const SubspaceBasis S = random_subspace_through(rng, u, 1 + t % (d - 1));
        const SubspaceBasis V = subsphere_to_subspace(chart, S);
        inter = std::max(inter, hausdorff(project(map_body(chart, sph_project(B, S)), V),
                                          project(map_body(chart, B), V)));
    }
    expect_at_most(r, "star bridge", "rho(g_u(L),v) = tan rho_u(L,v)", star, 1e-12);
    expect_at_most(r, "projection intertwining", "g_u(K|S) = g_u(K)|V", inter, 1e-9);
    return r;
}

SuiteResult suite_madd(const RunConfig& c) {
    SuiteResult r{"madd", {}, Json::object()};
    const QuadrantPolytope lp = lp_m_set(2, 1e-8);
    double exact = 0.0;
    double approx = 0.0;
    for (int t = 0; t < c.trials; ++t) {
        Rng rng = stream(c, 0, static_cast<std::uint64_t>(t));
        QuadrantPolytope M;
        switch (t % 4) {
        case 0: M = QuadrantPolytope::singleton(1, 1); break;
        case 1: M = QuadrantPolytope::hull_segment(); break;
        case 2: M = lp; break;
        default: M = random_quadrant_polygon(rng); break;
        }
        const int dim = t % 4 == 2 ? 2 : 2 + (t / 4) % 2;
        const ConvexPolytope K = random_polytope(rng, dim, 6);
        const ConvexPolytope L = random_polytope(rng, dim, 6);
        const ConvexPolytope sum = m_add(M, K, L);
        double dev = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec x = random_unit(rng, dim);
            dev = std::max(dev, std::abs(support(sum, x) - m_support(M, K, L, x)));
        }
        (t % 4 == 2 ? approx : exact) = std::max(t % 4 == 2 ? approx : exact, dev);
    }
    const char* law = "h(K +_M L, x) = h_{M+}(h(e1 K, x), h(e2 L, x))";
    expect_at_most(r, "M-sum support law", law, exact, 1e-9);
    expect_at_most(r, "M-sum support law, lp combining set", law, approx, 1e-6);

    const double vec_err = std::abs(h_E(0, 1, 0, 1) - 1) + std::abs(h_E(1, 0, 1, 0)) + std::abs(h_E(-1, 1, 1, -1) - 1);
    expect_at_most(r, "E-set test vectors", "h_E(0,1,0,1) = 1, h_E(1,0,1,0) = 0, h_E(-1,1,1,-1) = 1", vec_err, 0.0);

    double e_dev = 0.0;
    std::string note;
    for (int t = 0; t < std::min(c.trials, 100); ++t) {
        Rng rng = stream(c, 1, static_cast<std::uint64_t>(t));
        const Vec u = random_unit(rng, c.ambient_dim);
        const SpherePolytope K = body_near(rng, u, {5, 1.0});
        const SpherePolytope L = body_near(rng, u, {5, 1.0});
        try {
            e_dev = std::max(e_dev, conv_via_E(u, K, L, c.samples));
        } catch (const Error& e) {
            e_dev = std::numeric_limits<double>::infinity();
            note = e.what();
        }
    }
    expect_at_most(r, "E-set identity", "h_E(h_{-K}, h_K, h_{-L}, h_L) = h_{conv(K u L)}", e_dev, 1e-9, note);
    return r;
}

SuiteResult suite_covariance(const RunConfig& c) {
    SuiteResult r{"covariance", {}, Json::object()};
    const char* anchor = "(K|S) * (L|S) = (K*L)|S";
    Json reports = Json::array();
    auto run = [&](const SphereOpSpec& spec, CovarianceMode mode) {
        const CovarianceReport rep = proj_covariance_check(spec, covariance_config(c, mode));
        const std::string mode_name = mode == CovarianceMode::Full ? "FULL" : "U_RESTRICTED";
        expect_at_most(r, spec.name + " " + mode_name + " violations", anchor, rep.violations, 0.0,
                       "max_dev " + fmt(rep.max_dev));
        reports.push_back(to_json(rep));
    };
    run(SphereOpSpec::conv(), CovarianceMode::Full);
    run(minkowski_spec(), CovarianceMode::URestricted);
    run(hull_spec(), CovarianceMode::URestricted);
    run(l2_spec(c.ambient_dim), CovarianceMode::URestricted);
    r.data["lp_tolerance"] = l2_tol(c.ambient_dim);
    r.data["reports"] = reports;
    return r;
}

SuiteResult suite_dichotomy(const RunConfig& c) {
    SuiteResult r{"dichotomy", {}, Json::object()};
    const char* anchor = "K*L in {K, -K, L, -L, conv(K u L), -conv(K u L)}";
    Json reports = Json::array();
    for (const SphereOpSpec& spec :
         {SphereOpSpec::trivial(OpKind::TrivialK), SphereOpSpec::trivial(OpKind::TrivialNegK),
          SphereOpSpec::trivial(OpKind::TrivialL), SphereOpSpec::trivial(OpKind::TrivialNegL), SphereOpSpec::conv(),
          SphereOpSpec::neg_conv()}) {
        const CovarianceReport rep = proj_covariance_check(spec, covariance_config(c, CovarianceMode::Full));
        expect_at_most(r, spec.name + " passes full covariance", anchor, rep.max_dev, c.tol);
        reports.push_back(to_json(rep));
    }
    for (const SphereOpSpec& spec : {minkowski_spec(), l2_spec(c.ambient_dim)}) {
        CovarianceConfig cc = covariance_config(c, CovarianceMode::Full);
        cc.trials = std::min(c.trials, 100);
        cc.tol = 1e-3; // the witness is the first trial above this
        const CovarianceReport rep = proj_covariance_check(spec, cc);
        expect_above(r, spec.name + " falsified", anchor, rep.witness ? rep.witness->deviation : 0.0, 1e-3,
                     rep.witness ? "trial " + std::to_string(rep.witness->trial) : "no witness");
        reports.push_back(to_json(rep));
    }
    r.data["reports"] = reports;
    return r;
}

SuiteResult suite_metrics(const RunConfig& c) {
    SuiteResult r{"metrics", {}, Json::object()};
    const Mat dirs2 = direction_grid(2, 4096);
    const Mat dirs3 = direction_grid(3, 4096);
    double gap2 = 0.0;
    double gap3 = 0.0;
    for (int t = 0; t < std::min(c.trials, 100); ++t) {
        Rng rng = stream(c, 0, static_cast<std::uint64_t>(t));
        for (int d : {2, 3}) {
            // Diameter at most 4: vertices within radius 2 of the origin.
            auto body = [&] {
                const ConvexPolytope P = random_polytope(rng, d, 8);
                return P.scaled(2.0 / P.vertices().colwise().norm().maxCoeff());
            };
            const ConvexPolytope K = body();
            const ConvexPolytope L = body();
            const double g = std::abs(hausdorff(K, L) - sampled_support_gap(K, L, d == 2 ? dirs2 : dirs3));
            (d == 2 ? gap2 : gap3) = std::max(d == 2 ? gap2 : gap3, g);
        }
    }
    const char* haus = "d_H(K,L) = ||h(K,.) - h(L,.)||_inf";
    expect_at_most(r, "sampled support gap in R^2, 4096 directions", haus, gap2, 1e-2);
    r.data["sampled_gap_r3_4096"] = gap3;

    double gamma = 0.0;
    for (int t = 0; t < std::min(c.trials, 20); ++t) {
        Rng rng = stream(c, 1, static_cast<std::uint64_t>(t));
        const int d = c.ambient_dim + t % 2;
        const Vec u = random_unit(rng, d);
        const Vec w = random_in_cap(rng, u, 1.3);
        const double value = gamma_u(u, make_body(Mat(u)), make_body(Mat(w)), 4096);
        const Mat dense = tangent_basis(u) * direction_grid(d - 1, 100000);
        double brute = 0.0;
        for (Eigen::Index i = 0; i < dense.cols(); ++i)
            brute = std::max(brute, std::abs(std::atan(dense.col(i).dot(w) / u.dot(w))));
        gamma = std::max({gamma, std::abs(value - sph_dist(u, w)), std::abs(brute - sph_dist(u, w))});
    }
    expect_at_most(r, "gamma of singletons", "gamma_u({u},{w}) = d(u,w)", gamma, 1e-3);

    double sym = 0.0;
    int misses = 0;
    for (int t = 0; t < std::min(c.trials, 50); ++t) {
        Rng rng = stream(c, 2, static_cast<std::uint64_t>(t));
        const Vec u = random_unit(rng, c.ambient_dim);
        const SpherePolytope A = body_near(rng, u, {4, 0.6});
        const SpherePolytope B = body_near(rng, u, {4, 0.6});
        sym = std::max({sym, std::abs(delta_s(A, B, c.samples) - delta_s(B, A, c.samples)), delta_s(A, A, c.samples),
                        std::abs(gamma_u(u, A, B, c.samples) - gamma_u(u, B, A, c.samples))});
        const SpherePolytope H = conv_union(A, B);
        for (const SpherePolytope* P : {&A, &B}) {
            for (Eigen::Index i = 0; i < P->size(); ++i)
                misses += contains(H, P->generators().col(i)) ? 0 : 1;
        }
    }
    expect_at_most(r, "metric symmetry and identity", "delta_s(A,B) = delta_s(B,A), delta_s(A,A) = 0", sym, 1e-12);
    expect_at_most(r, "hull contains both bodies", "K u L in conv(K u L)", misses, 0.0);
    return r;
}

SuiteResult suite_star(const RunConfig& c) {
    SuiteResult r{"star", {}, Json::object()};
    const char* anchor = "(K n S) * (L n S) = (K*L) n S";
    auto lp = [](const Vec&) -> StarOp {
        return [](const SphStarMap& K, const SphStarMap& L) { return f_op(lp_star_combiner(2), K, L); };
    };
    auto trivial = [](const Vec&) -> StarOp { return [](const SphStarMap& K, const SphStarMap&) { return K; }; };
    auto broken = [](const Vec& u) -> StarOp { return broken_star_op(u, tangent_basis(u).col(0)); };

    const SectionReport rl = section_covariance_check(lp, c.trials, 1e-9, c.seed, c.ambient_dim);
    expect_at_most(r, "transported L2 radial sum is section covariant", anchor, rl.max_dev, 1e-9);
    const SectionReport rt = section_covariance_check(trivial, c.trials, 1e-9, c.seed, c.ambient_dim);
    expect_at_most(r, "trivial op is section covariant", anchor, rt.max_dev, 1e-9);
    const SectionReport rb = section_covariance_check(broken, 50, 1e-9, c.seed, c.ambient_dim);
    expect_above(r, "op reading a fixed external direction is falsified", anchor, rb.violations, 0.0,
                 "first violation at trial " + std::to_string(rb.first_violation));
    r.data["lp"] = to_json(rl);
    r.data["broken"] = to_json(rb);

    double nat = 0.0;
    double assoc = 0.0;
    for (int t = 0; t < std::min(c.trials, 50); ++t) {
        Rng rng = stream(c, 1, static_cast<std::uint64_t>(t));
        const int d = c.ambient_dim + t % 2;
        const Vec u = random_unit(rng, d);
        const HemisphereChart chart = HemisphereChart::at(u);
        const SphStarMap K = random_star_map(rng, u);
        const SubspaceBasis S = random_subspace_through(rng, u, 2 + t % (d - 1));
        const SubspaceBasis V = subsphere_to_subspace(chart, S);
        const RadialMap lhs = star_bridge(chart, sph_section(K, S));
        const RadialMap rhs = section(star_bridge(chart, K), V);
        const Mat grid = direction_grid(V.dim(), 64);
        for (Eigen::Index i = 0; i < grid.cols(); ++i)
            nat = std::max(nat, std::abs(lhs.radial(V.basis() * grid.col(i)) - rhs.radial(grid.col(i))));

        const RadialMap A = star_bridge(chart, K);
        const RadialMap B = star_bridge(chart, random_star_map(rng, u));
        const RadialMap C = star_bridge(chart, random_star_map(rng, u));
        const Mat g = direction_grid(d - 1, 64);
        const Vec x = lp_radial_sum(2, lp_radial_sum(2, A, B), C).sample(g);
        const Vec y = lp_radial_sum(2, A, lp_radial_sum(2, C, B)).sample(g);
        assoc = std::max(assoc, (x - y).cwiseAbs().maxCoeff());
    }
    expect_at_most(r, "bridge commutes with sections", "rho(g_u(L n S), v) = rho(g_u(L) n V, v)", nat, 1e-12);
    expect_at_most(r, "L_p radial sum associative and commutative", "(K +p L) +p M = K +p (M +p L)", assoc, 1e-12);
    return r;
}

SuiteResult suite_polar(const RunConfig& c) {
    SuiteResult r{"polar", {}, Json::object()};
    const char* relation = "h_u(K,v) + rho_{-u}(K°,v) = pi/2";
    const char* bridge = "g_u(K)* = g_{-u}(K°)";

    const Vec u3 = Vec::Ones(3).normalized();
    const PolarReport orth = polar_relations_check(HemisphereChart::at(u3), make_body(Mat::Identity(3, 3)), c.samples);
    expect_at_most(r, "orthant polar relation", relation, orth.relation_dev, 1e-9);
    expect_at_most(r, "orthant polar bridge", bridge, orth.bridge_dev, 1e-9);

    double rel = 0.0;
    double brg = 0.0;
    int used = 0;
    for (int t = 0; t < std::min(c.trials, 40); ++t) {
        Rng rng = stream(c, 0, static_cast<std::uint64_t>(t));
        const int d = 3 + t % 2;
        const Vec u = random_unit(rng, d);
        const SpherePolytope K = random_cap_body(rng, u, {10, 1.0});
        const HemisphereChart chart = HemisphereChart::at(u);
        if (interior_margin(map_body(chart, K)) < 1e-3)
            continue;
        const PolarReport p = polar_relations_check(chart, K, 128);
        rel = std::max(rel, p.relation_dev);
        brg = std::max(brg, p.bridge_dev);
        ++used;
    }
    expect_at_most(r, "random body polar relation", relation, rel, 1e-9, std::to_string(used) + " bodies");
    expect_at_most(r, "random body polar bridge", bridge, brg, 1e-9, std::to_string(used) + " bodies");

    const Vec u = Vec::Unit(3, 2);
    const double alpha = 0.6;
    Json rows = Json::array();
    double prev = 0.0;
    double over = 0.0;
    double ratio = 0.0;
    for (int m : {8, 16, 32}) {
        const PolarReport p = polar_relations_check(HemisphereChart::at(u), cap_ring(u, alpha, m), 4 * c.samples);
        const double dev = (p.rho_polar.array() - (kPi / 2 - alpha)).abs().maxCoeff();
        const double bound = alpha - std::atan(std::tan(alpha) * std::cos(kPi / m));
        over = std::max(over, dev - bound);
        if (m > 8)
            ratio = std::max(ratio, dev / prev);
        prev = dev;
        rows.push_back({{"m", m}, {"deviation", dev}, {"bound", bound}, {"relation_dev", p.relation_dev}});
    }
    expect_at_most(r, "cap ring polar within discretization bound",
                   "rho_{-u}(cap(u,a)°, v) = pi/2 - a", over, 1e-12);
    expect_at_most(r, "cap ring deviation at least halves per doubling", "rho_{-u}(cap(u,a)°, v) = pi/2 - a", ratio,
                   0.5);
    r.data["cap_rings"] = rows;
    r.data["alpha"] = alpha;
    return r;
}

SuiteResult suite_discontinuity(const RunConfig& c) {
    SuiteResult r{"discontinuity", {}, Json::object()};
    const char* anchor = "conv(K u L_eps) leaves every proper class as eps -> 0";
    const auto rows = discontinuity_demo({0.2, 0.1, 0.05, 0.01}, c.samples);
    double angle = 0.0;
    double limit = 0.0;
    int non_monotone = 0;
    Json table = Json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
        angle = std::max(angle, std::abs(rows[i].max_angle - rows[i].expected));
        limit = std::max(limit, rows[i].delta_to_limit - rows[i].eps);
        if (i > 0 && !(rows[i].margin < rows[i - 1].margin))
            ++non_monotone;
        table.push_back(to_json(rows[i]));
    }
    expect_at_most(r, "max generator angle equals pi - eps", anchor, angle, 1e-12);
    expect_at_most(r, "properness margin decreases monotonically", anchor, non_monotone, 0.0);
    expect_at_most(r, "L_eps converges to L_0", "delta_s(L_eps, L_0) <= eps", limit, 1e-12);
    r.data["table"] = table;
    return r;
}

using SuiteFn = std::function<SuiteResult(const RunConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> suites = {
        {"bridge", suite_bridge},     {"madd", suite_madd},   {"covariance", suite_covariance},
        {"dichotomy", suite_dichotomy}, {"metrics", suite_metrics}, {"star", suite_star},
        {"polar", suite_polar},       {"discontinuity", suite_discontinuity},
    };
    return suites;
}

} // namespace

void RunConfig::validate() const {
    if (trials < 1)
        fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    if (samples < 1)
        fail(ErrorCode::InvalidArgument, "samples must be >= 1");
    if (!(tol > 0.0))
        fail(ErrorCode::InvalidArgument, "tol must be positive");
    if (ambient_dim < 3)
        fail(ErrorCode::InvalidArgument, "ambient dimension must be >= 3");
}

Json to_json(const RunConfig& c) {
    return {{"seed", c.seed}, {"trials", c.trials}, {"samples", c.samples}, {"tol", c.tol},
            {"ambient_dim", c.ambient_dim}};
}

bool SuiteResult::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

Json SuiteResult::to_json(const std::string& timestamp) const {
    Json list = Json::array();
    for (const Assertion& a : assertions) {
        Json j = {{"name", a.name},   {"anchor", a.anchor},          {"value", a.value},
                  {"bound", a.bound}, {"relation", a.lower ? ">" : "<="}, {"passed", a.passed}};
        if (!a.note.empty())
            j["note"] = a.note;
        list.push_back(std::move(j));
    }
    return {{"suite", suite}, {"passed", passed()}, {"timestamp", timestamp}, {"assertions", list}, {"data", data}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
    config.validate();
    const auto it = registry().find(name);
    if (it == registry().end())
        fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
    return it->second(config);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace sphereconv
