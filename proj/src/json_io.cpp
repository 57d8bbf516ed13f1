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
#include "sphereconv/core/json_io.hpp"

#include "sphereconv/core/errors.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace sphereconv {

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v(i));
    return out;
}

Json columns_to_json(const Mat& m) {
    Json out = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        out.push_back(vec_to_json(m.col(c)));
    return out;
}

Vec vec_from_json(const Json& j, const char* what) {
    if (!j.is_array())
        fail(ErrorCode::Parse, std::string(what) + ": expected an array of numbers");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            fail(ErrorCode::Parse, std::string(what) + ": expected a number");
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

Mat columns_from_json(const Json& j, int dim, const char* what) {
    if (!j.is_array())
        fail(ErrorCode::Parse, std::string(what) + ": expected a list of points");
    if (dim < 0)
        dim = j.empty() ? 0 : static_cast<int>(j[0].size());
    Mat m(dim, static_cast<Eigen::Index>(j.size()));
    for (size_t c = 0; c < j.size(); ++c) {
        const Vec v = vec_from_json(j[c], what);
        if (v.size() != dim)
            fail(ErrorCode::DimensionMismatch, std::string(what) + ": point has the wrong dimension");
        m.col(static_cast<Eigen::Index>(c)) = v;
    }
    return m;
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& f = field(j, key);
    if (!f.is_number_integer())
        fail(ErrorCode::Parse, std::string("field \"") + key + "\" must be an integer");
    return f.get<int>();
}

void expect_space(const Json& j, const char* space) {
    const Json& s = field(j, "space");
    if (!s.is_string() || s.get<std::string>() != space)
        fail(ErrorCode::Parse, std::string("expected a record with \"space\": \"") + space + "\"");
}

} // namespace

Json to_json(const ConvexPolytope& K) {
    Json j;
    j["space"] = "euclid";
    j["dim"] = K.dim();
    j["vertices"] = columns_to_json(K.vertices());
    return j;
}

ConvexPolytope euclid_from_json(const Json& j) {
    expect_space(j, "euclid");
    const int dim = int_field(j, "dim");
    const Mat v = columns_from_json(field(j, "vertices"), dim, "vertices");
    if (v.cols() == 0)
        fail(ErrorCode::Parse, "euclid body needs at least one vertex");
    return ConvexPolytope(v);
}

Json to_json(const SpherePolytope& K) {
    Json j;
    j["space"] = "sphere";
    j["ambient_dim"] = K.ambient_dim();
    j["generators"] = columns_to_json(K.generators());
    j["center"] = vec_to_json(K.center());
    return j;
}

SpherePolytope sphere_from_json(const Json& j) {
    expect_space(j, "sphere");
    const int dim = int_field(j, "ambient_dim");
    const Mat g = columns_from_json(field(j, "generators"), dim, "generators");
    if (g.cols() == 0)
        fail(ErrorCode::Parse, "sphere body needs at least one generator");
    if (j.contains("center")) {
        const Vec c = vec_from_json(j.at("center"), "center");
        require_same_dim(c.size(), dim, "center");
        Mat unit = g;
        for (Eigen::Index i = 0; i < unit.cols(); ++i)
            unit.col(i).normalize();
        if (!((c.normalized().transpose() * unit).minCoeff() > 1e-9))
            fail(ErrorCode::Improper, "stored center does not certify the generators");
    }
    return make_body(g);
}

Json to_json(const HemisphereChart& chart) {
    Json j;
    j["u"] = vec_to_json(chart.u);
    j["basis"] = columns_to_json(chart.basis);
    return j;
}

HemisphereChart chart_from_json(const Json& j) {
    const Vec u = vec_from_json(field(j, "u"), "u");
    return HemisphereChart::from_parts(u, columns_from_json(field(j, "basis"), static_cast<int>(u.size()), "basis"));
}

Json to_json(const SubspaceBasis& S) {
    Json j;
    j["ambient_dim"] = S.ambient_dim();
    j["basis"] = columns_to_json(S.basis());
    return j;
}

SubspaceBasis subspace_from_json(const Json& j) {
    const int dim = int_field(j, "ambient_dim");
    return SubspaceBasis(columns_from_json(field(j, "basis"), dim, "basis"));
}

Json to_json(const QuadrantPolytope& M) {
    Json j;
    j["vertices"] = columns_to_json(M.vertices());
    j["signs"] = {M.signs()[0], M.signs()[1]};
    return j;
}

Json radial_to_json(const RadialMap& L, const Mat& grid) {
    Json j;
    j["space"] = "radial";
    j["dim"] = L.dim;
    j["grid"] = columns_to_json(grid);
    j["values"] = vec_to_json(L.sample(grid));
    return j;
}

RadialMap radial_from_json(const Json& j) {
    expect_space(j, "radial");
    if (j.contains("u"))
        fail(ErrorCode::Parse, "record is a spherical radial map");
    const int dim = int_field(j, "dim");
    Mat grid = columns_from_json(field(j, "grid"), dim, "grid");
    Vec values = vec_from_json(field(j, "values"), "values");
    try {
        return RadialMap::from_samples(std::move(grid), std::move(values));
    } catch (const Error& e) {
        fail(ErrorCode::Parse, e.what());
    }
}

Json sph_star_to_json(const SphStarMap& S, const Mat& grid) {
    Json j;
    j["space"] = "radial";
    j["dim"] = static_cast<int>(S.u.size());
    j["u"] = vec_to_json(S.u);
    j["grid"] = columns_to_json(grid);
    Json values = Json::array();
    for (Eigen::Index i = 0; i < grid.cols(); ++i)
        values.push_back(sph_radial(S, grid.col(i)));
    j["values"] = values;
    return j;
}

SphStarMap sph_star_from_json(const Json& j) {
    expect_space(j, "radial");
    const int dim = int_field(j, "dim");
    const Vec u = vec_from_json(field(j, "u"), "u");
    require_same_dim(u.size(), dim, "u");
    const Mat grid = columns_from_json(field(j, "grid"), dim, "grid");
    const Vec values = vec_from_json(field(j, "values"), "values");
    if (grid.cols() == 0 || grid.cols() != values.size())
        fail(ErrorCode::Parse, "spherical radial record needs one value per direction");
    for (Eigen::Index i = 0; i < grid.cols(); ++i) {
        if (std::abs(grid.col(i).norm() - 1.0) > 1e-9 || std::abs(grid.col(i).dot(u)) > 1e-9)
            fail(ErrorCode::Parse, "spherical radial grid must be unit directions orthogonal to u");
        if (!(values(i) >= 0.0 && values(i) < std::numbers::pi / 2.0))
            fail(ErrorCode::Parse, "spherical radial values must lie in [0, pi/2)");
    }
    return SphStarMap::from_function(u, [grid, values](const Vec& v) {
        Eigen::Index best = 0;
        (grid.transpose() * v).maxCoeff(&best);
        return values(best);
    });
}

namespace {

const char* mode_name(CovarianceMode m) {
    return m == CovarianceMode::Full ? "FULL" : "U_RESTRICTED";
}

} // namespace

Json to_json(const CovarianceReport& r) {
    Json j;
    j["spec"] = r.spec;
    j["mode"] = mode_name(r.mode);
    if (r.mode == CovarianceMode::URestricted)
        j["u"] = vec_to_json(r.u);
    j["ambient_dim"] = r.ambient_dim;
    j["trials"] = r.trials;
    j["max_dev"] = r.max_dev;
    j["violations"] = r.violations;
    if (r.witness) {
        const CovarianceWitness& w = *r.witness;
        Json wj;
        wj["trial"] = w.trial;
        wj["bodies"] = {to_json(w.K), to_json(w.L)};
        wj["subsphere"] = to_json(w.S);
        wj["chart_point"] = vec_to_json(w.chart_point);
        wj["lhs"] = w.lhs ? to_json(*w.lhs) : Json(nullptr);
        wj["rhs"] = w.rhs ? to_json(*w.rhs) : Json(nullptr);
        wj["deviation"] = w.deviation;
        if (!w.error.empty())
            wj["error"] = w.error;
        j["witness"] = wj;
    } else {
        j["witness"] = nullptr;
    }
    j["seed"] = r.seed;
    return j;
}

Json to_json(const SectionReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["max_dev"] = r.max_dev;
    j["violations"] = r.violations;
    j["first_violation"] = r.first_violation;
    j["seed"] = r.seed;
    return j;
}

Json to_json(const DiscontinuityRow& r) {
    Json j;
    j["eps"] = r.eps;
    j["max_angle"] = r.max_angle;
    j["expected"] = r.expected;
    j["margin"] = r.margin;
    j["delta_s_to_limit"] = r.delta_to_limit;
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        fail(ErrorCode::Io, "cannot write " + path);
    out << text;
    if (!out)
        fail(ErrorCode::Io, "write failed for " + path);
}

} // namespace sphereconv
