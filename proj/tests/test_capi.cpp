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

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

std::string take(char* s) {
    std::string out(s);
    sc_string_free(s);
    return out;
}

sc_sphere_body* body(const std::vector<double>& pts, int dim = 3) {
    sc_sphere_body* b = nullptr;
    EXPECT_EQ(sc_sphere_body_create(dim, pts.size() / dim, pts.data(), &b), SC_OK) << sc_last_error();
    return b;
}

} // namespace

TEST(CApi, StatusNames) {
    EXPECT_STREQ(sc_status_name(SC_OK), "OK");
    EXPECT_STREQ(sc_status_name(SC_ERR_IMPROPER_PAIR), "IMPROPER_PAIR");
    EXPECT_STREQ(sc_status_name(SC_ERR_PARSE), "PARSE");
    EXPECT_STREQ(sc_status_name(SC_ERR_INTERNAL), "INTERNAL");
}

TEST(CApi, BodyAccessors) {
    sc_sphere_body* K = body({1, 0, 0, 0, 1, 0, 0, 0, 1});
    ASSERT_NE(K, nullptr);
    EXPECT_EQ(sc_sphere_body_dim(K), 3);
    EXPECT_EQ(sc_sphere_body_size(K), 3u);
    std::vector<double> c(3);
    ASSERT_EQ(sc_sphere_body_center(K, c.data()), SC_OK);
    for (double x : c)
        EXPECT_NEAR(x, 1 / std::sqrt(3.0), 1e-12);
    const double inside[3] = {0.6, 0.8, 0};
    const double outside[3] = {-0.6, 0.8, 0};
    int in = -1;
    ASSERT_EQ(sc_sphere_contains(K, inside, &in), SC_OK);
    EXPECT_EQ(in, 1);
    ASSERT_EQ(sc_sphere_contains(K, outside, &in), SC_OK);
    EXPECT_EQ(in, 0);
    sc_sphere_body_free(K);
}

TEST(CApi, ErrorsCarryCodeAndMessage) {
    const double antipodal[6] = {0, 0, 1, 0, 0, -1};
    sc_sphere_body* K = nullptr;
    EXPECT_EQ(sc_sphere_body_create(3, 2, antipodal, &K), SC_ERR_IMPROPER);
    EXPECT_EQ(K, nullptr);
    EXPECT_STRNE(sc_last_error(), "");
    EXPECT_EQ(sc_sphere_body_from_json("{not json", &K), SC_ERR_PARSE);
    EXPECT_EQ(sc_sphere_body_create(3, 1, nullptr, &K), SC_ERR_INVALID_ARGUMENT);
    char* out = nullptr;
    EXPECT_EQ(sc_check_json("nosuch", nullptr, &out, nullptr), SC_ERR_INVALID_ARGUMENT);
    int passed = 0;
    EXPECT_EQ(sc_check_json("nosuch", nullptr, &out, &passed), SC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(out, nullptr);
}

TEST(CApi, ConvUnionOfSingletonsIsASegment) {
    sc_sphere_body* a = body({1, 0, 0});
    sc_sphere_body* b = body({0, 1, 0});
    sc_sphere_body* c = nullptr;
    ASSERT_EQ(sc_sphere_conv_union(a, b, &c), SC_OK);
    EXPECT_EQ(sc_sphere_body_size(c), 2u);
    double d = 0;
    ASSERT_EQ(sc_delta_s(c, c, 256, &d), SC_OK);
    EXPECT_EQ(d, 0.0);
    sc_sphere_body* far = body({-1, 0, 0});
    sc_sphere_body* bad = nullptr;
    EXPECT_EQ(sc_sphere_conv_union(a, far, &bad), SC_ERR_IMPROPER_PAIR);
    for (sc_sphere_body* x : {a, b, c, far})
        sc_sphere_body_free(x);
}

TEST(CApi, SpecApplyMatchesConvUnion) {
    sc_op_spec* spec = nullptr;
    ASSERT_EQ(sc_op_spec_from_json(R"({"op":"conv_union"})", &spec), SC_OK);
    sc_sphere_body* a = body({1, 0, 0, 0, 0.6, 0.8});
    sc_sphere_body* b = body({0, 1, 0});
    sc_sphere_body* r1 = nullptr;
    sc_sphere_body* r2 = nullptr;
    ASSERT_EQ(sc_apply(spec, a, b, &r1), SC_OK);
    ASSERT_EQ(sc_sphere_conv_union(a, b, &r2), SC_OK);
    EXPECT_EQ(take([&] { char* s = nullptr; sc_sphere_body_to_json(r1, &s); return s; }()),
              take([&] { char* s = nullptr; sc_sphere_body_to_json(r2, &s); return s; }()));
    sc_op_spec* broken = nullptr;
    EXPECT_EQ(sc_op_spec_from_json(R"({"op":"nope"})", &broken), SC_ERR_INVALID_ARGUMENT);
    for (sc_sphere_body* x : {a, b, r1, r2})
        sc_sphere_body_free(x);
    sc_op_spec_free(spec);
}

TEST(CApi, SupportOfOrthantEdge) {
    const double s = 1 / std::sqrt(3.0);
    sc_sphere_body* K = body({1, 0, 0, 0, 1, 0, 0, 0, 1});
    const double u[3] = {s, s, s};
    const double v[3] = {2 / std::sqrt(6.0), -1 / std::sqrt(6.0), -1 / std::sqrt(6.0)};
    double h = 0;
    ASSERT_EQ(sc_sphere_support(u, K, v, &h), SC_OK);
    // Gnomonic image of e1 sits at distance sqrt(2) from the chart origin along v.
    EXPECT_NEAR(std::tan(h), std::sqrt(2.0), 1e-12);
    sc_sphere_body_free(K);
}

TEST(CApi, PolytopesAndMAddition) {
    const double sq[8] = {0, 0, 1, 0, 0, 1, 1, 1};
    const double seg[4] = {0, 0, 1, 1};
    sc_polytope* K = nullptr;
    sc_polytope* L = nullptr;
    ASSERT_EQ(sc_polytope_create(2, 4, sq, &K), SC_OK);
    ASSERT_EQ(sc_polytope_create(2, 2, seg, &L), SC_OK);
    const double M[2] = {1, 1};
    sc_polytope* S = nullptr;
    ASSERT_EQ(sc_m_add(1, M, K, L, &S), SC_OK);
    EXPECT_EQ(sc_polytope_size(S), 6u);
    const double x[2] = {1, 1};
    double h = 0;
    ASSERT_EQ(sc_polytope_support(S, x, &h), SC_OK);
    EXPECT_DOUBLE_EQ(h, 4.0);
    double d = -1;
    ASSERT_EQ(sc_hausdorff(K, K, &d), SC_OK);
    EXPECT_EQ(d, 0.0);
    for (sc_polytope* p : {K, L, S})
        sc_polytope_free(p);
}

TEST(CApi, GenIsDeterministic) {
    char* a = nullptr;
    char* b = nullptr;
    const char* params = R"({"m":5,"theta_max":1.0471975511965976})";
    ASSERT_EQ(sc_gen_json("sphere", params, 1, &a), SC_OK);
    ASSERT_EQ(sc_gen_json("sphere", params, 1, &b), SC_OK);
    const std::string sa = take(a);
    EXPECT_EQ(sa, take(b));
    const Json j = Json::parse(sa);
    ASSERT_EQ(j["generators"].size(), 5u);
    for (const Json& g : j["generators"]) {
        double n = 0;
        for (double x : g)
            n += x * x;
        EXPECT_NEAR(n, 1.0, 1e-14);
    }
    sc_sphere_body* K = nullptr;
    ASSERT_EQ(sc_sphere_body_from_json(sa.c_str(), &K), SC_OK);
    std::vector<double> gen(15), c(3);
    sc_sphere_body_generators(K, gen.data());
    sc_sphere_body_center(K, c.data());
    for (int i = 0; i < 5; ++i)
        EXPECT_GT(gen[3 * i] * c[0] + gen[3 * i + 1] * c[1] + gen[3 * i + 2] * c[2], 0.0);
    sc_sphere_body_free(K);
}

TEST(CApi, ApplyJsonTrivialKReproducesInput) {
    char* k = nullptr;
    char* l = nullptr;
    ASSERT_EQ(sc_gen_json("sphere", "{}", 3, &k), SC_OK);
    ASSERT_EQ(sc_gen_json("sphere", "{}", 4, &l), SC_OK);
    const std::string ks = take(k);
    const std::string ls = take(l);
    char* out = nullptr;
    ASSERT_EQ(sc_apply_json(R"({"op":"trivial_k"})", ks.c_str(), ls.c_str(), &out), SC_OK);
    const Json r = Json::parse(take(out));
    EXPECT_EQ(r["result"].dump(), Json::parse(ks).dump());
    EXPECT_TRUE(r["contained_in_conv"].is_boolean());
}

TEST(CApi, CheckSuiteReport) {
    char* out = nullptr;
    int passed = 0;
    ASSERT_EQ(sc_check_json("discontinuity", R"({"seed":5})", &out, &passed), SC_OK);
    EXPECT_EQ(passed, 1);
    const Json r = Json::parse(take(out));
    EXPECT_EQ(r["suite"], "discontinuity");
    EXPECT_EQ(r["config"]["seed"], 5);
    EXPECT_FALSE(r["assertions"].empty());
    for (const Json& a : r["assertions"])
        EXPECT_FALSE(a["anchor"].get<std::string>().empty());
}

TEST(CApi, InvalidConfigIsRejected) {
    char* out = nullptr;
    int passed = 0;
    EXPECT_EQ(sc_check_json("bridge", R"({"trials":0})", &out, &passed), SC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(sc_check_json("bridge", R"({"ambient_dim":2})", &out, &passed), SC_ERR_INVALID_ARGUMENT);
}
