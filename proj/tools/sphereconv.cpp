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
// sphereconv command line. Talks to the library only through the C API.

#include "sphereconv/sphereconv.h"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 2;
constexpr int kExitError = 3;

struct CliError : std::runtime_error {
    CliError(std::string code, const std::string& msg) : std::runtime_error(msg), code(std::move(code)) {}
    std::string code;
};

struct Globals {
    std::uint64_t seed = 1;
    std::optional<int> trials;
    std::optional<int> samples;
    std::optional<double> tol;
    std::optional<int> ambient_dim;
    std::string out;
};

void check(sc_status s) {
    if (s != SC_OK)
        throw CliError(sc_status_name(s), sc_last_error());
}

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out(s);
    sc_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CliError("IO", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON if it looks like JSON, else a path.
std::string json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return arg;
    return read_file(arg);
}

// key=value pairs; values are JSON when they parse, strings otherwise.
Json params_from(const std::vector<std::string>& kv, const std::string& json) {
    Json p = json.empty() ? Json::object() : Json::parse(json_arg(json));
    for (const std::string& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CliError("INVALID_ARGUMENT", "expected key=value, got " + item);
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        Json v = Json::parse(value, nullptr, false);
        p[key] = v.is_discarded() ? Json(value) : v;
    }
    return p;
}

void write_output(const Globals& g, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f || !(f << text))
        throw CliError("IO", "cannot write " + g.out);
}

void fill_config(const Globals& g, Json& c) {
    c["seed"] = g.seed;
    if (g.trials)
        c["trials"] = *g.trials;
    if (g.samples)
        c["samples"] = *g.samples;
    if (g.tol)
        c["tol"] = *g.tol;
    if (g.ambient_dim)
        c["ambient_dim"] = *g.ambient_dim;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("SPHERECONV_SEED");
    if (env == nullptr || *env == '\0')
        return 1;
    try {
        size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size())
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw CliError("INVALID_ARGUMENT", std::string("SPHERECONV_SEED is not an unsigned integer: ") + env);
    }
}

int report_error(const std::string& code, const std::string& message) {
    Json err = {{"error", code}, {"message", message}};
    std::cerr << err.dump() << "\n";
    return kExitError;
}

} // namespace

int main(int argc, char** argv) {
    Globals g;
    try {
        g.seed = default_seed();
    } catch (const CliError& e) {
        return report_error(e.code, e.what());
    }

    CLI::App app{"Convex bodies on the sphere and their gnomonic images"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", sc_version());
    app.add_option("--seed", g.seed, "RNG seed (default: $SPHERECONV_SEED or 1)");
    app.add_option("--trials", g.trials, "Trials per check")->check(CLI::PositiveNumber);
    app.add_option("--samples", g.samples, "Sample count")->check(CLI::PositiveNumber);
    app.add_option("--tol", g.tol, "Tolerance")->check(CLI::PositiveNumber);
    app.add_option("--ambient-dim", g.ambient_dim, "Ambient dimension n+1")->check(CLI::Range(3, 16));
    app.add_option("--out", g.out, "Output file (default: stdout)");

    std::vector<std::string> kv;
    std::string params_json;
    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("-p,--param", kv, "Parameter key=value (repeatable)");
        cmd->add_option("--params", params_json, "Parameters as a JSON object or file");
    };

    int exit_code = kExitOk;

    std::string gen_kind;
    auto* gen = app.add_subcommand("gen", "Generate a body, star map or subspace");
    gen->add_option("kind", gen_kind, "sphere | euclid | star | subspace")->required();
    add_params(gen);
    gen->callback([&] {
        Json p = params_from(kv, params_json);
        if (g.ambient_dim && !p.contains("ambient_dim"))
            p["ambient_dim"] = *g.ambient_dim;
        if (g.samples && !p.contains("samples"))
            p["samples"] = *g.samples;
        char* out = nullptr;
        check(sc_gen_json(gen_kind.c_str(), p.dump().c_str(), g.seed, &out));
        Json j = Json::parse(take(out));
        write_output(g, j);
    });

    std::string spec_arg, k_arg, l_arg;
    auto* apply = app.add_subcommand("apply", "Apply a binary operation to two bodies");
    apply->add_option("spec", spec_arg, "Operation spec: JSON object, file, or bare op name")->required();
    apply->add_option("K", k_arg, "First body file")->required();
    apply->add_option("L", l_arg, "Second body file")->required();
    add_params(apply);
    apply->callback([&] {
        Json spec;
        const auto first = spec_arg.find_first_not_of(" \t\n");
        if (first != std::string::npos && spec_arg[first] == '{')
            spec = Json::parse(spec_arg);
        else if (std::ifstream(spec_arg).good())
            spec = Json::parse(read_file(spec_arg));
        else
            spec = {{"op", spec_arg}};
        const Json extra = params_from(kv, params_json);
        for (const auto& [key, value] : extra.items())
            spec[key] = value;
        char* out = nullptr;
        check(sc_apply_json(spec.dump().c_str(), read_file(k_arg).c_str(), read_file(l_arg).c_str(), &out));
        Json j = Json::parse(take(out));
        j["seed"] = g.seed;
        write_output(g, j);
    });

    std::string body_arg, subspace_arg;
    auto* project = app.add_subcommand("project", "Project a body onto a subspace");
    project->add_option("body", body_arg, "Body file")->required();
    project->add_option("subspace", subspace_arg, "Subspace: JSON object or file")->required();
    project->callback([&] {
        char* out = nullptr;
        check(sc_project_json(read_file(body_arg).c_str(), json_arg(subspace_arg).c_str(), &out));
        write_output(g, Json::parse(take(out)));
    });

    std::string metric_name, a_arg, b_arg;
    auto* metric = app.add_subcommand("metric", "Distance between two bodies");
    metric->add_option("name", metric_name, "delta_s | gamma_u | hausdorff | support_gap | sph_dist")->required();
    metric->add_option("A", a_arg, "First body file");
    metric->add_option("B", b_arg, "Second body file");
    add_params(metric);
    metric->callback([&] {
        Json p = params_from(kv, params_json);
        if (g.samples && !p.contains("samples"))
            p["samples"] = *g.samples;
        const std::string a = a_arg.empty() ? std::string() : read_file(a_arg);
        const std::string b = b_arg.empty() ? std::string() : read_file(b_arg);
        char* out = nullptr;
        check(sc_metric_json(metric_name.c_str(), a_arg.empty() ? nullptr : a.c_str(),
                             b_arg.empty() ? nullptr : b.c_str(), p.dump().c_str(), &out));
        write_output(g, Json::parse(take(out)));
    });

    std::string suite;
    auto* chk = app.add_subcommand("check", "Run a named check suite (or 'all')");
    chk->add_option("suite", suite, "Suite name")->required();
    chk->callback([&] {
        Json config = Json::object();
        fill_config(g, config);
        std::vector<std::string> names;
        if (suite == "all") {
            char* out = nullptr;
            check(sc_suite_names_json(&out));
            names = Json::parse(take(out)).get<std::vector<std::string>>();
        } else {
            names.push_back(suite);
        }
        Json reports = Json::array();
        bool all_passed = true;
        for (const std::string& name : names) {
            char* out = nullptr;
            int passed = 0;
            check(sc_check_json(name.c_str(), config.dump().c_str(), &out, &passed));
            reports.push_back(Json::parse(take(out)));
            all_passed = all_passed && passed != 0;
            std::cerr << (passed ? "PASS " : "FAIL ") << name << "\n";
        }
        write_output(g, suite == "all" ? Json{{"passed", all_passed}, {"reports", reports}} : reports.front());
        if (!all_passed)
            exit_code = kExitAssertion;
    });

    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "Print a demonstration table");
    demo->add_option("name", demo_name, "discontinuity | covariance | section | polar")->required();
    add_params(demo);
    demo->callback([&] {
        Json p = params_from(kv, params_json);
        fill_config(g, p);
        char* out = nullptr;
        check(sc_demo_json(demo_name.c_str(), p.dump().c_str(), &out));
        write_output(g, Json::parse(take(out)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const CliError& e) {
        return report_error(e.code, e.what());
    } catch (const Json::exception& e) {
        return report_error("PARSE", e.what());
    } catch (const std::exception& e) {
        return report_error("INTERNAL", e.what());
    }
    return exit_code;
}
