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
#include "sphereconv/sphereconv.h"

#include "sphereconv/core/checks.hpp"
#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/json_io.hpp"
#include "sphereconv/core/random.hpp"

#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>

using namespace sphereconv;

struct sc_sphere_body {
    SpherePolytope body;
};

struct sc_polytope {
    ConvexPolytope poly;
};

struct sc_op_spec {
    SphereOpSpec spec;
};

namespace {

thread_local std::string g_last_error;

template <class F>
sc_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return SC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<sc_status>(static_cast<int>(e.code()) + 1);
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return SC_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SC_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr)
        fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const Json& j, char** out) {
    require(out, "out");
    *out = dup_string(j.dump());
}

Mat point_matrix(int dim, size_t count, const double* points) {
    if (dim < 1 || count < 1)
        fail(ErrorCode::InvalidArgument, "need at least one point of positive dimension");
    require(points, "points");
    return Eigen::Map<const Mat>(points, dim, static_cast<Eigen::Index>(count));
}

Vec vector_of(int dim, const double* x) {
    require(x, "vector");
    return Eigen::Map<const Vec>(x, dim);
}

Json parse_optional(const char* text) {
    if (text == nullptr || *text == '\0')
        return Json::object();
    Json j = parse_json(text);
    if (!j.is_object())
        fail(ErrorCode::Parse, "parameters must be a JSON object");
    return j;
}

// Reloading recomputes the center from the canonical generators; emit that
// form so a written body survives a round trip byte for byte.
Json canonical_json(const SpherePolytope& K) {
    return to_json(sphere_from_json(to_json(K)));
}

QuadrantPolytope combining_set(const Json& j, std::string& name) {
    const Json& m = j.at("M");
    if (m.is_string()) {
        const std::string preset = m.get<std::string>();
        if (preset == "minkowski") {
            name = "minkowski";
            return QuadrantPolytope::singleton(1, 1);
        }
        if (preset == "hull") {
            name = "hull";
            return QuadrantPolytope::hull_segment();
        }
        if (preset == "lp") {
            const double p = j.value("p", 2.0);
            name = "L" + Json(p).dump();
            return lp_m_set(p, j.value("tol", 1e-8));
        }
        fail(ErrorCode::InvalidArgument, "unknown combining set preset: " + preset);
    }
    name = "custom";
    return QuadrantPolytope::infer(columns_from_json(m, 2, "M"));
}

SphereOpSpec spec_from_json(const Json& j) {
    const std::string op = j.at("op").get<std::string>();
    SphereOpSpec spec;
    if (op == "trivial_k") {
        spec = SphereOpSpec::trivial(OpKind::TrivialK);
    } else if (op == "trivial_negk") {
        spec = SphereOpSpec::trivial(OpKind::TrivialNegK);
    } else if (op == "trivial_l") {
        spec = SphereOpSpec::trivial(OpKind::TrivialL);
    } else if (op == "trivial_negl") {
        spec = SphereOpSpec::trivial(OpKind::TrivialNegL);
    } else if (op == "conv_union") {
        spec = SphereOpSpec::conv();
    } else if (op == "neg_conv_union") {
        spec = SphereOpSpec::neg_conv();
    } else if (op == "transport") {
        std::string name;
        QuadrantPolytope M = combining_set(j, name);
        spec = SphereOpSpec::transport(std::move(M), j.value("name", name));
    } else if (op == "transport4") {
        const std::string f = j.value("functional", "e_set");
        if (f == "e_set") {
            spec = SphereOpSpec::transport4(e_set_functional());
        } else if (f == "plus") {
            spec = SphereOpSpec::transport4(SupportFun4::of_points({{0, 1, 0, 1}}, "plus"));
        } else if (f == "lp") {
            spec = SphereOpSpec::transport4(SupportFun4::lp(j.value("p", 2.0)));
        } else {
            fail(ErrorCode::InvalidArgument, "unknown functional: " + f);
        }
        spec.transport4_directions = j.value("directions", spec.transport4_directions);
    } else {
        fail(ErrorCode::InvalidArgument, "unknown op: " + op);
    }
    if (j.contains("center")) {
        if (!spec.is_transport())
            fail(ErrorCode::InvalidArgument, "a chart center only applies to transported ops");
        spec = spec.with_fixed_center(normalized(vec_from_json(j.at("center"), "center")));
    }
    return spec;
}

Json gen(const std::string& kind, const Json& p, std::uint64_t seed) {
    Rng rng = make_stream(seed, 0);
    if (kind == "sphere") {
        const int d = p.contains("center") ? p.value("ambient_dim", static_cast<int>(p.at("center").size()))
                                           : p.value("ambient_dim", 3);
        CapBodyParams params;
        params.generators = p.value("m", params.generators);
        params.theta_max = p.value("theta_max", params.theta_max);
        const Vec center = p.contains("center") ? normalized(vec_from_json(p.at("center"), "center"))
                                                : random_unit(rng, d);
        if (center.size() != d)
            fail(ErrorCode::DimensionMismatch, "center does not match ambient_dim");
        // make_body drops interior draws; redraw so the file has exactly m generators.
        for (int attempt = 0; attempt < 1000; ++attempt) {
            SpherePolytope K = random_cap_body(rng, center, params);
            if (K.size() == params.generators || !p.value("exact", true))
                return canonical_json(K);
        }
        fail(ErrorCode::Degenerate, "could not draw a body with the requested number of extreme generators");
    }
    if (kind == "euclid") {
        const std::string shape = p.value("shape", "random");
        const int d = p.value("dim", 3);
        if (shape == "cube")
            return to_json(ConvexPolytope::cube(d, p.value("lo", 0.0), p.value("hi", 1.0)));
        if (shape == "cross")
            return to_json(ConvexPolytope::cross_polytope(d, p.value("radius", 1.0)));
        if (shape == "random")
            return to_json(random_polytope(rng, d, p.value("points", 8), p.value("radius", 1.0)));
        fail(ErrorCode::InvalidArgument, "unknown euclid shape: " + shape);
    }
    if (kind == "star") {
        const std::string shape = p.value("shape", "ball");
        const int samples = p.value("samples", 4096);
        if (shape == "ball") {
            const int d = p.value("dim", 3);
            return radial_to_json(RadialMap::ball(d, p.value("r", 1.0)), direction_grid(d, samples));
        }
        const int d = p.value("ambient_dim", 3);
        const Vec u = p.contains("u") ? normalized(vec_from_json(p.at("u"), "u")) : random_unit(rng, d);
        if (shape == "cap")
            return sph_star_to_json(SphStarMap::cap(u, p.value("alpha", 0.5)), equator_directions(u, samples));
        if (shape == "random")
            return sph_star_to_json(random_star_map(rng, u), equator_directions(u, samples));
        fail(ErrorCode::InvalidArgument, "unknown star shape: " + shape);
    }
    if (kind == "subspace") {
        const int d = p.value("ambient_dim", 3);
        const int k = p.value("dim", 2);
        if (p.contains("through"))
            return to_json(random_subspace_through(rng, normalized(vec_from_json(p.at("through"), "through")), k));
        return to_json(random_subspace(rng, d, k));
    }
    fail(ErrorCode::InvalidArgument, "unknown kind: " + kind);
}

Json apply_sphere(const Json& spec_json, const Json& kj, const Json& lj) {
    const SphereOpSpec spec = spec_from_json(spec_json);
    const SpherePolytope K = sphere_from_json(kj);
    const SpherePolytope L = sphere_from_json(lj);
    const ApplyResult r = apply_detailed(spec, K, L);
    Json out;
    out["spec"] = spec.name;
    out["kind"] = to_string(spec.kind);
    out["result"] = canonical_json(r.body);
    out["chart_center"] = r.chart_center.size() ? vec_to_json(r.chart_center) : Json();
    bool contained = false;
    try {
        contained = contained_in_conv(r.body, K, L);
    } catch (const Error&) {
        // No common hemisphere: conv(K u L) is undefined.
    }
    out["contained_in_conv"] = contained;
    if (spec.kind == OpKind::Transport4)
        out["support_gap"] = r.support_gap;
    return out;
}

Json apply_euclid(const Json& spec_json, const Json& kj, const Json& lj) {
    const std::string op = spec_json.at("op").get<std::string>();
    if (op != "m_add")
        fail(ErrorCode::InvalidArgument, "euclid bodies support op m_add");
    std::string name;
    const QuadrantPolytope M = combining_set(spec_json, name);
    Json out;
    out["spec"] = "M_ADD(" + name + ")";
    out["result"] = to_json(m_add(M, euclid_from_json(kj), euclid_from_json(lj)));
    return out;
}

Json apply_radial(const Json& spec_json, const Json& kj, const Json& lj) {
    const std::string op = spec_json.at("op").get<std::string>();
    if (op != "lp_radial_sum")
        fail(ErrorCode::InvalidArgument, "radial maps support op lp_radial_sum");
    const double p = spec_json.value("p", 1.0);
    Json out;
    out["spec"] = "LP_RADIAL_SUM(" + Json(p).dump() + ")";
    if (kj.contains("u")) {
        const SphStarMap K = sph_star_from_json(kj);
        const SphStarMap L = sph_star_from_json(lj);
        out["result"] = sph_star_to_json(f_op(lp_star_combiner(p), K, L), columns_from_json(kj.at("grid"), -1, "grid"));
    } else {
        const RadialMap K = radial_from_json(kj);
        const RadialMap L = radial_from_json(lj);
        out["result"] = radial_to_json(lp_radial_sum(p, K, L), K.samples->grid);
    }
    return out;
}

RunConfig run_config(const Json& j) {
    RunConfig c;
    c.seed = j.value("seed", c.seed);
    c.trials = j.value("trials", c.trials);
    c.samples = j.value("samples", c.samples);
    c.tol = j.value("tol", c.tol);
    c.ambient_dim = j.value("ambient_dim", c.ambient_dim);
    c.validate();
    return c;
}

Json demo(const std::string& name, const Json& p) {
    if (name == "discontinuity") {
        const std::vector<double> eps = p.value("eps", std::vector<double>{0.2, 0.1, 0.05, 0.01});
        Json rows = Json::array();
        for (const DiscontinuityRow& r : discontinuity_demo(eps, p.value("samples", 1024)))
            rows.push_back(to_json(r));
        return {{"demo", name}, {"rows", rows}};
    }
    if (name == "covariance") {
        CovarianceConfig c;
        const std::string mode = p.value("mode", "full");
        if (mode == "full")
            c.mode = CovarianceMode::Full;
        else if (mode == "u_restricted")
            c.mode = CovarianceMode::URestricted;
        else
            fail(ErrorCode::InvalidArgument, "mode must be full or u_restricted");
        c.trials = p.value("trials", c.trials);
        c.tol = p.value("tol", c.tol);
        c.seed = p.value("seed", c.seed);
        c.ambient_dim = p.value("ambient_dim", c.ambient_dim);
        c.gamma_samples = p.value("samples", c.gamma_samples);
        if (p.contains("u"))
            c.u = normalized(vec_from_json(p.at("u"), "u"));
        const Json spec = p.value("spec", Json{{"op", "conv_union"}});
        return to_json(proj_covariance_check(spec_from_json(spec), c));
    }
    if (name == "section") {
        const std::string op = p.value("op", "lp");
        const double power = p.value("p", 2.0);
        std::function<StarOp(const Vec&)> make;
        if (op == "lp") {
            make = [power](const Vec&) -> StarOp {
                return [power](const SphStarMap& K, const SphStarMap& L) { return f_op(lp_star_combiner(power), K, L); };
            };
        } else if (op == "broken") {
            make = [](const Vec& u) -> StarOp { return broken_star_op(u, tangent_basis(u).col(0)); };
        } else {
            fail(ErrorCode::InvalidArgument, "section op must be lp or broken");
        }
        return to_json(section_covariance_check(make, p.value("trials", 200), p.value("tol", 1e-9), p.value("seed", 1),
                                                p.value("ambient_dim", 3), p.value("samples", 64)));
    }
    if (name == "polar") {
        const double alpha = p.value("alpha", 0.6);
        const Vec u = Vec::Unit(3, 2);
        Json rows = Json::array();
        for (int m : p.value("m", std::vector<int>{8, 16, 32})) {
            const PolarReport r = polar_relations_check(HemisphereChart::at(u), cap_ring(u, alpha, m),
                                                        p.value("samples", 2048));
            const double dev = (r.rho_polar.array() - (std::numbers::pi / 2 - alpha)).abs().maxCoeff();
            rows.push_back({{"m", m},
                            {"deviation", dev},
                            {"bound", alpha - std::atan(std::tan(alpha) * std::cos(std::numbers::pi / m))},
                            {"relation_dev", r.relation_dev},
                            {"bridge_dev", r.bridge_dev}});
        }
        return {{"demo", name}, {"alpha", alpha}, {"rows", rows}};
    }
    fail(ErrorCode::InvalidArgument, "unknown demo: " + name);
}

} // namespace

extern "C" {

const char* sc_version(void) {
    return "0.1.0";
}

const char* sc_status_name(sc_status status) {
    if (status == SC_OK)
        return "OK";
    if (status == SC_ERR_INTERNAL)
        return "INTERNAL";
    const int code = static_cast<int>(status) - 1;
    if (code < 0 || code > static_cast<int>(ErrorCode::Parse))
        return "UNKNOWN";
    return to_string(static_cast<ErrorCode>(code));
}

const char* sc_last_error(void) {
    return g_last_error.c_str();
}

void sc_string_free(char* s) {
    std::free(s);
}

sc_status sc_sphere_body_create(int dim, size_t count, const double* points, sc_sphere_body** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sc_sphere_body{make_body(point_matrix(dim, count, points))};
    });
}

sc_status sc_sphere_body_from_json(const char* json, sc_sphere_body** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new sc_sphere_body{sphere_from_json(parse_json(json))};
    });
}

sc_status sc_sphere_body_to_json(const sc_sphere_body* body, char** out) {
    return guarded([&] {
        require(body, "body");
        emit(to_json(body->body), out);
    });
}

void sc_sphere_body_free(sc_sphere_body* body) {
    delete body;
}

int sc_sphere_body_dim(const sc_sphere_body* body) {
    return body ? body->body.ambient_dim() : 0;
}

size_t sc_sphere_body_size(const sc_sphere_body* body) {
    return body ? static_cast<size_t>(body->body.size()) : 0;
}

sc_status sc_sphere_body_generators(const sc_sphere_body* body, double* out) {
    return guarded([&] {
        require(body, "body");
        require(out, "out");
        Eigen::Map<Mat>(out, body->body.ambient_dim(), body->body.size()) = body->body.generators();
    });
}

sc_status sc_sphere_body_center(const sc_sphere_body* body, double* out) {
    return guarded([&] {
        require(body, "body");
        require(out, "out");
        Eigen::Map<Vec>(out, body->body.ambient_dim()) = body->body.center();
    });
}

sc_status sc_sphere_contains(const sc_sphere_body* body, const double* x, int* out) {
    return guarded([&] {
        require(body, "body");
        require(out, "out");
        *out = contains(body->body, vector_of(body->body.ambient_dim(), x)) ? 1 : 0;
    });
}

sc_status sc_sphere_support(const double* u, const sc_sphere_body* body, const double* v, double* out) {
    return guarded([&] {
        require(body, "body");
        require(out, "out");
        const int d = body->body.ambient_dim();
        *out = sph_support(vector_of(d, u), body->body, vector_of(d, v));
    });
}

sc_status sc_sphere_project(const sc_sphere_body* body, size_t k, const double* basis, sc_sphere_body** out) {
    return guarded([&] {
        require(body, "body");
        require(out, "out");
        const SubspaceBasis S(point_matrix(body->body.ambient_dim(), k, basis));
        *out = new sc_sphere_body{sph_project(body->body, S)};
    });
}

sc_status sc_sphere_conv_union(const sc_sphere_body* a, const sc_sphere_body* b, sc_sphere_body** out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        // Through apply so a pair without a common hemisphere reports IMPROPER_PAIR.
        *out = new sc_sphere_body{apply(SphereOpSpec::conv(), a->body, b->body)};
    });
}

sc_status sc_sphere_polar(const sc_sphere_body* body, sc_sphere_body** out) {
    return guarded([&] {
        require(body, "body");
        require(out, "out");
        *out = new sc_sphere_body{sph_polar(body->body)};
    });
}

sc_status sc_delta_s(const sc_sphere_body* a, const sc_sphere_body* b, int samples, double* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = delta_s(a->body, b->body, samples);
    });
}

sc_status sc_gamma_u(const double* u, const sc_sphere_body* a, const sc_sphere_body* b, int samples, double* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = gamma_u(vector_of(a->body.ambient_dim(), u), a->body, b->body, samples);
    });
}

sc_status sc_op_spec_from_json(const char* json, sc_op_spec** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new sc_op_spec{spec_from_json(parse_json(json))};
    });
}

void sc_op_spec_free(sc_op_spec* spec) {
    delete spec;
}

sc_status sc_apply(const sc_op_spec* spec, const sc_sphere_body* k, const sc_sphere_body* l, sc_sphere_body** out) {
    return guarded([&] {
        require(spec, "spec");
        require(k, "k");
        require(l, "l");
        require(out, "out");
        *out = new sc_sphere_body{apply(spec->spec, k->body, l->body)};
    });
}

sc_status sc_polytope_create(int dim, size_t count, const double* points, sc_polytope** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sc_polytope{ConvexPolytope(point_matrix(dim, count, points))};
    });
}

sc_status sc_polytope_from_json(const char* json, sc_polytope** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new sc_polytope{euclid_from_json(parse_json(json))};
    });
}

sc_status sc_polytope_to_json(const sc_polytope* p, char** out) {
    return guarded([&] {
        require(p, "polytope");
        emit(to_json(p->poly), out);
    });
}

void sc_polytope_free(sc_polytope* p) {
    delete p;
}

int sc_polytope_dim(const sc_polytope* p) {
    return p ? p->poly.dim() : 0;
}

size_t sc_polytope_size(const sc_polytope* p) {
    return p ? static_cast<size_t>(p->poly.size()) : 0;
}

sc_status sc_polytope_vertices(const sc_polytope* p, double* out) {
    return guarded([&] {
        require(p, "polytope");
        require(out, "out");
        Eigen::Map<Mat>(out, p->poly.dim(), p->poly.size()) = p->poly.vertices();
    });
}

sc_status sc_polytope_support(const sc_polytope* p, const double* x, double* out) {
    return guarded([&] {
        require(p, "polytope");
        require(out, "out");
        *out = support(p->poly, vector_of(p->poly.dim(), x));
    });
}

sc_status sc_m_add(size_t m_count, const double* m_points, const sc_polytope* k, const sc_polytope* l,
                   sc_polytope** out) {
    return guarded([&] {
        require(k, "k");
        require(l, "l");
        require(out, "out");
        const QuadrantPolytope M = QuadrantPolytope::infer(point_matrix(2, m_count, m_points));
        *out = new sc_polytope{m_add(M, k->poly, l->poly)};
    });
}

sc_status sc_hausdorff(const sc_polytope* a, const sc_polytope* b, double* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = hausdorff(a->poly, b->poly);
    });
}

sc_status sc_gen_json(const char* kind, const char* params_json, uint64_t seed, char** out) {
    return guarded([&] {
        require(kind, "kind");
        emit(gen(kind, parse_optional(params_json), seed), out);
    });
}

sc_status sc_apply_json(const char* spec_json, const char* k_json, const char* l_json, char** out) {
    return guarded([&] {
        require(spec_json, "spec");
        require(k_json, "k");
        require(l_json, "l");
        const Json spec = parse_optional(spec_json);
        const Json kj = parse_json(k_json);
        const Json lj = parse_json(l_json);
        const std::string space = kj.at("space").get<std::string>();
        if (lj.at("space").get<std::string>() != space)
            fail(ErrorCode::InvalidArgument, "inputs live in different spaces");
        if (space == "sphere")
            emit(apply_sphere(spec, kj, lj), out);
        else if (space == "euclid")
            emit(apply_euclid(spec, kj, lj), out);
        else if (space == "radial")
            emit(apply_radial(spec, kj, lj), out);
        else
            fail(ErrorCode::Parse, "unknown space: " + space);
    });
}

sc_status sc_project_json(const char* body_json, const char* subspace_json, char** out) {
    return guarded([&] {
        require(body_json, "body");
        require(subspace_json, "subspace");
        const Json bj = parse_json(body_json);
        const SubspaceBasis S = subspace_from_json(parse_json(subspace_json));
        const std::string space = bj.at("space").get<std::string>();
        Json result;
        if (space == "sphere")
            result = to_json(sph_project(sphere_from_json(bj), S));
        else if (space == "euclid")
            result = to_json(project(euclid_from_json(bj), S));
        else
            fail(ErrorCode::InvalidArgument, "project supports sphere and euclid bodies");
        emit({{"op", "project"}, {"subspace", to_json(S)}, {"result", result}}, out);
    });
}

sc_status sc_metric_json(const char* name, const char* a_json, const char* b_json, const char* params_json,
                         char** out) {
    return guarded([&] {
        require(name, "name");
        const std::string metric = name;
        const Json p = parse_optional(params_json);
        const int samples = p.value("samples", 4096);
        Json result = {{"metric", metric}};
        if (metric == "sph_dist") {
            result["value"] = sph_dist(vec_from_json(p.at("u"), "u"), vec_from_json(p.at("v"), "v"));
            emit(result, out);
            return;
        }
        require(a_json, "a");
        require(b_json, "b");
        const Json aj = parse_json(a_json);
        const Json bj = parse_json(b_json);
        if (metric == "delta_s" || metric == "gamma_u") {
            const SpherePolytope A = sphere_from_json(aj);
            const SpherePolytope B = sphere_from_json(bj);
            if (metric == "delta_s") {
                result["value"] = delta_s(A, B, samples);
            } else {
                const Vec u = p.contains("u") ? normalized(vec_from_json(p.at("u"), "u")) : pair_center(A, B);
                result["u"] = vec_to_json(u);
                result["value"] = gamma_u(u, A, B, samples);
            }
        } else if (metric == "hausdorff" || metric == "support_gap") {
            const ConvexPolytope A = euclid_from_json(aj);
            const ConvexPolytope B = euclid_from_json(bj);
            result["value"] = metric == "hausdorff" ? hausdorff(A, B)
                                                    : sampled_support_gap(A, B, direction_grid(A.dim(), samples));
        } else {
            fail(ErrorCode::InvalidArgument, "unknown metric: " + metric);
        }
        if (metric != "hausdorff")
            result["samples"] = samples;
        emit(result, out);
    });
}

sc_status sc_check_json(const char* suite, const char* config_json, char** out, int* passed) {
    return guarded([&] {
        require(suite, "suite");
        require(passed, "passed");
        const RunConfig config = run_config(parse_optional(config_json));
        const SuiteResult r = run_suite(suite, config);
        Json report = r.to_json(utc_timestamp());
        Json ordered = {{"suite", report["suite"]}, {"passed", report["passed"]}, {"timestamp", report["timestamp"]},
                        {"config", to_json(config)}};
        ordered["assertions"] = report["assertions"];
        ordered["data"] = report["data"];
        *passed = r.passed() ? 1 : 0;
        emit(ordered, out);
    });
}

sc_status sc_suite_names_json(char** out) {
    return guarded([&] { emit(Json(suite_names()), out); });
}

sc_status sc_demo_json(const char* name, const char* config_json, char** out) {
    return guarded([&] {
        require(name, "name");
        emit(demo(name, parse_optional(config_json)), out);
    });
}

} // extern "C"
