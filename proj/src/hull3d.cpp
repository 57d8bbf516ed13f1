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
#include "hull3d.hpp"

#include "sphereconv/core/errors.hpp"
#include "sphereconv/core/min_norm.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace sphereconv::detail {

namespace {

using V3 = Eigen::Vector3d;

struct Face {
    std::array<int, 3> v;
    V3 normal;
    double offset = 0.0;
    std::vector<int> outside;
    bool alive = true;
};

class Hull {
public:
    Hull(const Mat& points, double eps) : p_(points), eps_(eps) {}

    bool build() {
        const auto simplex = initial_simplex();
        if (!simplex)
            return false;
        const auto [a, b, c, d] = *simplex;
        interior_ = (pt(a) + pt(b) + pt(c) + pt(d)) / 4.0;
        add_face(a, b, c);
        add_face(a, c, d);
        add_face(a, d, b);
        add_face(b, d, c);
        std::vector<int> rest;
        for (int i = 0; i < static_cast<int>(p_.cols()); ++i) {
            if (i != a && i != b && i != c && i != d)
                rest.push_back(i);
        }
        assign(rest, {0, 1, 2, 3});

        std::deque<int> queue = {0, 1, 2, 3};
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            if (!faces_[f].alive || faces_[f].outside.empty())
                continue;
            for (int g : expand(f))
                queue.push_back(g);
        }
        return true;
    }

    std::vector<Eigen::Index> vertices() const {
        std::vector<std::vector<int>> link(static_cast<size_t>(p_.cols()));
        for (const Face& f : faces_) {
            if (!f.alive)
                continue;
            for (int k = 0; k < 3; ++k) {
                auto& l = link[static_cast<size_t>(f.v[k])];
                l.push_back(f.v[(k + 1) % 3]);
                l.push_back(f.v[(k + 2) % 3]);
            }
        }
        std::vector<Eigen::Index> out;
        for (size_t i = 0; i < link.size(); ++i) {
            auto& l = link[i];
            if (l.empty())
                continue;
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            // A vertex within eps of the hull of its neighbours is not extreme.
            Mat nb(3, static_cast<Eigen::Index>(l.size()));
            for (size_t k = 0; k < l.size(); ++k)
                nb.col(static_cast<Eigen::Index>(k)) = p_.col(l[k]);
            if (distance_to_hull(nb, p_.col(static_cast<Eigen::Index>(i))) > eps_)
                out.push_back(static_cast<Eigen::Index>(i));
        }
        return out;
    }

private:
    V3 pt(int i) const { return p_.col(i); }

    static std::uint64_t key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }

    double dist(const Face& f, int i) const { return f.normal.dot(pt(i)) - f.offset; }

    std::optional<std::array<int, 4>> initial_simplex() const {
        const int n = static_cast<int>(p_.cols());
        if (n < 4)
            return std::nullopt;
        int a = 0;
        int b = 0;
        double spread = -1.0;
        for (int r = 0; r < 3; ++r) {
            Eigen::Index lo = 0;
            Eigen::Index hi = 0;
            p_.row(r).minCoeff(&lo);
            p_.row(r).maxCoeff(&hi);
            if (p_(r, hi) - p_(r, lo) > spread) {
                spread = p_(r, hi) - p_(r, lo);
                a = static_cast<int>(lo);
                b = static_cast<int>(hi);
            }
        }
        const V3 ab = pt(b) - pt(a);
        if (ab.norm() <= eps_)
            return std::nullopt;
        int c = -1;
        double best = eps_;
        for (int i = 0; i < n; ++i) {
            const double d = ab.cross(pt(i) - pt(a)).norm() / ab.norm();
            if (d > best) {
                best = d;
                c = i;
            }
        }
        if (c < 0)
            return std::nullopt;
        const V3 normal = ab.cross(pt(c) - pt(a)).normalized();
        int d = -1;
        best = eps_;
        for (int i = 0; i < n; ++i) {
            const double h = std::abs(normal.dot(pt(i) - pt(a)));
            if (h > best) {
                best = h;
                d = i;
            }
        }
        if (d < 0)
            return std::nullopt;
        // Orient abc so that d is below it.
        if (normal.dot(pt(d) - pt(a)) > 0.0)
            std::swap(b, c);
        return std::array<int, 4>{a, b, c, d};
    }

    int add_face(int a, int b, int c) {
        Face f;
        f.v = {a, b, c};
        V3 n = (pt(b) - pt(a)).cross(pt(c) - pt(a));
        const double len = n.norm();
        if (len > 0.0) {
            n /= len;
        } else {
            // Degenerate sliver: point it away from the interior.
            n = (pt(a) - interior_).normalized();
        }
        f.normal = n;
        f.offset = n.dot(pt(a));
        const int id = static_cast<int>(faces_.size());
        faces_.push_back(std::move(f));
        edges_[key(a, b)] = id;
        edges_[key(b, c)] = id;
        edges_[key(c, a)] = id;
        return id;
    }

    void assign(const std::vector<int>& pts, const std::vector<int>& candidates) {
        for (int i : pts) {
            for (int f : candidates) {
                if (dist(faces_[f], i) > eps_) {
                    faces_[f].outside.push_back(i);
                    break;
                }
            }
        }
    }

    std::vector<int> expand(int start) {
        const Face& sf = faces_[start];
        int apex = sf.outside.front();
        double far = dist(sf, apex);
        for (int i : sf.outside) {
            const double d = dist(sf, i);
            if (d > far) {
                far = d;
                apex = i;
            }
        }

        std::vector<int> visible = {start};
        std::unordered_map<int, bool> seen = {{start, true}};
        for (size_t k = 0; k < visible.size(); ++k) {
            const Face& f = faces_[visible[k]];
            for (int e = 0; e < 3; ++e) {
                const int g = edges_.at(key(f.v[(e + 1) % 3], f.v[e]));
                if (seen.count(g))
                    continue;
                const bool vis = dist(faces_[g], apex) > eps_;
                seen[g] = vis;
                if (vis)
                    visible.push_back(g);
            }
        }

        std::vector<std::pair<int, int>> horizon;
        std::vector<int> orphans;
        for (int id : visible) {
            Face& f = faces_[id];
            for (int e = 0; e < 3; ++e) {
                const int a = f.v[e];
                const int b = f.v[(e + 1) % 3];
                const int g = edges_.at(key(b, a));
                if (!seen.at(g))
                    horizon.push_back({a, b});
            }
            for (int i : f.outside) {
                if (i != apex)
                    orphans.push_back(i);
            }
            f.outside.clear();
            f.alive = false;
        }
        for (int id : visible) {
            const Face& f = faces_[id];
            for (int e = 0; e < 3; ++e)
                edges_.erase(key(f.v[e], f.v[(e + 1) % 3]));
        }

        std::vector<int> created;
        for (const auto& [a, b] : horizon)
            created.push_back(add_face(a, b, apex));
        assign(orphans, created);
        return created;
    }

    const Mat& p_;
    double eps_;
    V3 interior_ = V3::Zero();
    std::vector<Face> faces_;
    std::unordered_map<std::uint64_t, int> edges_;
};

} // namespace

std::optional<std::vector<Eigen::Index>> quickhull_3d(const Mat& points, double eps) {
    if (points.rows() != 3)
        fail(ErrorCode::DimensionMismatch, "quickhull_3d needs points of R^3");
    Hull hull(points, eps);
    if (!hull.build())
        return std::nullopt;
    return hull.vertices();
}

} // namespace sphereconv::detail
