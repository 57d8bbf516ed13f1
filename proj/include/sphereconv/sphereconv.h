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
#ifndef SPHERECONV_SPHERECONV_H
#define SPHERECONV_SPHERECONV_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPHERECONV_BUILDING_LIBRARY)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_DIMENSION_MISMATCH = 1,
    SC_ERR_INVALID_ARGUMENT = 2,
    SC_ERR_IMPROPER = 3,
    SC_ERR_IMPROPER_PAIR = 4,
    SC_ERR_PRECONDITION = 5,
    SC_ERR_OUT_OF_CHART = 6,
    SC_ERR_DOMAIN = 7,
    SC_ERR_UNSUPPORTED_DIM = 8,
    SC_ERR_DEGENERATE = 9,
    SC_ERR_IO = 10,
    SC_ERR_PARSE = 11,
    SC_ERR_INTERNAL = 12
} sc_status;

typedef struct sc_sphere_body sc_sphere_body;
typedef struct sc_polytope sc_polytope;
typedef struct sc_op_spec sc_op_spec;

SC_API const char* sc_version(void);
/* Upper-case name of a status, e.g. "IMPROPER_PAIR". */
SC_API const char* sc_status_name(sc_status status);
/* Message of the last failed call on this thread; empty after success. */
SC_API const char* sc_last_error(void);
/* Frees strings returned through char** out-parameters. */
SC_API void sc_string_free(char* s);

/* Spherical polytopes. Point arrays are `count` points of `dim` doubles each,
   stored point after point. */
SC_API sc_status sc_sphere_body_create(int dim, size_t count, const double* points, sc_sphere_body** out);
SC_API sc_status sc_sphere_body_from_json(const char* json, sc_sphere_body** out);
SC_API sc_status sc_sphere_body_to_json(const sc_sphere_body* body, char** out);
SC_API void sc_sphere_body_free(sc_sphere_body* body);
SC_API int sc_sphere_body_dim(const sc_sphere_body* body);
SC_API size_t sc_sphere_body_size(const sc_sphere_body* body);
/* Copies size*dim doubles. */
SC_API sc_status sc_sphere_body_generators(const sc_sphere_body* body, double* out);
/* Copies dim doubles. */
SC_API sc_status sc_sphere_body_center(const sc_sphere_body* body, double* out);

SC_API sc_status sc_sphere_contains(const sc_sphere_body* body, const double* x, int* out);
SC_API sc_status sc_sphere_support(const double* u, const sc_sphere_body* body, const double* v, double* out);
/* Projection onto the subsphere spanned by `k` orthonormal vectors. */
SC_API sc_status sc_sphere_project(const sc_sphere_body* body, size_t k, const double* basis, sc_sphere_body** out);
SC_API sc_status sc_sphere_conv_union(const sc_sphere_body* a, const sc_sphere_body* b, sc_sphere_body** out);
SC_API sc_status sc_sphere_polar(const sc_sphere_body* body, sc_sphere_body** out);
SC_API sc_status sc_delta_s(const sc_sphere_body* a, const sc_sphere_body* b, int samples, double* out);
SC_API sc_status sc_gamma_u(const double* u, const sc_sphere_body* a, const sc_sphere_body* b, int samples,
                            double* out);

/* Operation specs, from JSON such as {"op":"conv_union"},
   {"op":"transport","M":"lp","p":2,"tol":1e-8} or
   {"op":"transport","M":[[1,1]],"center":[0,0,1]}. */
SC_API sc_status sc_op_spec_from_json(const char* json, sc_op_spec** out);
SC_API void sc_op_spec_free(sc_op_spec* spec);
SC_API sc_status sc_apply(const sc_op_spec* spec, const sc_sphere_body* k, const sc_sphere_body* l,
                          sc_sphere_body** out);

/* Euclidean polytopes. */
SC_API sc_status sc_polytope_create(int dim, size_t count, const double* points, sc_polytope** out);
SC_API sc_status sc_polytope_from_json(const char* json, sc_polytope** out);
SC_API sc_status sc_polytope_to_json(const sc_polytope* p, char** out);
SC_API void sc_polytope_free(sc_polytope* p);
SC_API int sc_polytope_dim(const sc_polytope* p);
SC_API size_t sc_polytope_size(const sc_polytope* p);
SC_API sc_status sc_polytope_vertices(const sc_polytope* p, double* out);
SC_API sc_status sc_polytope_support(const sc_polytope* p, const double* x, double* out);
/* M-sum with M given by `m_count` points (a, b) in one closed quadrant. */
SC_API sc_status sc_m_add(size_t m_count, const double* m_points, const sc_polytope* k, const sc_polytope* l,
                          sc_polytope** out);
SC_API sc_status sc_hausdorff(const sc_polytope* a, const sc_polytope* b, double* out);

/* JSON-level entry points used by the command-line tool. Every JSON result
   is returned through `out` and must be released with sc_string_free. */

/* kind: "sphere", "euclid", "star", "subspace". */
SC_API sc_status sc_gen_json(const char* kind, const char* params_json, uint64_t seed, char** out);
/* Dispatches on the "space" of the inputs: sphere, euclid or radial. */
SC_API sc_status sc_apply_json(const char* spec_json, const char* k_json, const char* l_json, char** out);
SC_API sc_status sc_project_json(const char* body_json, const char* subspace_json, char** out);
/* name: "delta_s", "gamma_u", "hausdorff", "support_gap", "sph_dist". */
SC_API sc_status sc_metric_json(const char* name, const char* a_json, const char* b_json, const char* params_json,
                                char** out);
/* Suite report; *passed is 1 when every assertion holds. */
SC_API sc_status sc_check_json(const char* suite, const char* config_json, char** out, int* passed);
/* JSON array of suite names. */
SC_API sc_status sc_suite_names_json(char** out);
/* name: "discontinuity", "covariance", "section", "polar". */
SC_API sc_status sc_demo_json(const char* name, const char* config_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
