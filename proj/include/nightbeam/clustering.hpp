// Copyright 2026 the Nightbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nightbeam/detector_config.hpp"
#include "nightbeam/frame.hpp"
#include "nightbeam/geometry.hpp"

namespace nightbeam {

/// Indices into the owning frame's point list. Non-empty, sorted ascending.
struct Cluster {
    std::vector<int> point_indices;
};

namespace detail {

struct CellKey {
    std::int64_t x;
    std::int64_t y;
    std::int64_t z;
    bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const noexcept {
        // standard spatial-hash primes
        std::uint64_t h = static_cast<std::uint64_t>(k.x) * 73856093ULL ^
                          static_cast<std::uint64_t>(k.y) * 19349663ULL ^
                          static_cast<std::uint64_t>(k.z) * 83492791ULL;
        return static_cast<std::size_t>(h);
    }
};

inline CellKey cell_of(const Point3& p, double cell_size) noexcept {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_size)),
            static_cast<std::int64_t>(std::floor(p.y / cell_size)),
            static_cast<std::int64_t>(std::floor(p.z / cell_size))};
}

}  // namespace detail

/**
 * Groups points into connected components of the graph that links every pair
 * at Euclidean distance <= cluster_radius. Components smaller than
 * min_cluster_points are discarded as noise.
 *
 * Neighbor lookups go through a uniform grid with cell size = cluster_radius;
 * candidate pairs are still distance-checked exactly, so the result equals the
 * brute-force radius graph. Clusters are ordered by their smallest point
 * index and indices inside a cluster are ascending.
 */
inline std::vector<Cluster> euclidean_cluster(const PointCloudFrame& frame,
                                              const DetectorConfig& cfg) {
    cfg.validate();
    const auto n = static_cast<int>(frame.points.size());
    if (n == 0) return {};

    const double radius = cfg.cluster_radius;
    const double radius_sq = radius * radius;

    std::unordered_map<detail::CellKey, std::vector<int>, detail::CellKeyHash> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[detail::cell_of(frame.points[i], radius)].push_back(i);
    }

    std::vector<Cluster> clusters;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int seed = 0; seed < n; ++seed) {
        if (visited[static_cast<std::size_t>(seed)]) continue;
        Cluster cluster;
        stack.assign(1, seed);
        visited[static_cast<std::size_t>(seed)] = 1;
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            cluster.point_indices.push_back(i);
            const Point3& p = frame.points[static_cast<std::size_t>(i)];
            const detail::CellKey base = detail::cell_of(p, radius);
            for (std::int64_t dx = -1; dx <= 1; ++dx) {
                for (std::int64_t dy = -1; dy <= 1; ++dy) {
                    for (std::int64_t dz = -1; dz <= 1; ++dz) {
                        const auto it = grid.find({base.x + dx, base.y + dy, base.z + dz});
                        if (it == grid.end()) continue;
                        for (const int j : it->second) {
                            if (visited[static_cast<std::size_t>(j)]) continue;
                            const Vec3 d = frame.points[static_cast<std::size_t>(j)] - p;
                            if (d.x * d.x + d.y * d.y + d.z * d.z <= radius_sq) {
                                visited[static_cast<std::size_t>(j)] = 1;
                                stack.push_back(j);
                            }
                        }
                    }
                }
            }
        }
        if (static_cast<int>(cluster.point_indices.size()) >= cfg.min_cluster_points) {
            std::sort(cluster.point_indices.begin(), cluster.point_indices.end());
            clusters.push_back(std::move(cluster));
        }
    }
    // seeds run in ascending order, so clusters already sort by min index
    return clusters;
}

/// Tight axis-aligned box around a cluster: componentwise extrema of its
/// points, stamped with the frame time.
inline BoundingBox3D fit_bounding_box(const PointCloudFrame& frame, const Cluster& cluster,
                                      int box_id = 0) {
    if (cluster.point_indices.empty()) {
        throw std::invalid_argument("fit_bounding_box: empty cluster");
    }
    Point3 lo = frame.points.at(static_cast<std::size_t>(cluster.point_indices.front()));
    Point3 hi = lo;
    for (const int idx : cluster.point_indices) {
        const Point3& p = frame.points.at(static_cast<std::size_t>(idx));
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        lo.z = std::min(lo.z, p.z);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
        hi.z = std::max(hi.z, p.z);
    }
    return BoundingBox3D(lo, hi, frame.timestamp, box_id);
}

}  // namespace nightbeam
