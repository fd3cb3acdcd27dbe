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

#include <limits>
#include <utility>
#include <vector>

#include "nightbeam/detector_config.hpp"
#include "nightbeam/geometry.hpp"

namespace nightbeam {

/// Cost assigned to forbidden and padding cells of the assignment matrix.
/// Any real pairing is cheaper, so the solver drops a match only when no
/// feasible pairing exists.
constexpr double kForbiddenCost = 1e9;

/**
 * Minimum-cost perfect assignment on a square cost matrix (Hungarian method
 * with row/column potentials, O(n^3)). Returns col_of_row: the column picked
 * for each row.
 */
inline std::vector<int> solve_min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return {};
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // 1-indexed potentials; p[j] = row currently matched to column j
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            double delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                                   u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) {
        const int row = p[static_cast<std::size_t>(j)];
        if (row > 0) col_of_row[static_cast<std::size_t>(row - 1)] = j - 1;
    }
    return col_of_row;
}

struct AssociationResult {
    std::vector<std::pair<int, int>> matches;  // (prev index, curr index), prev ascending
    std::vector<int> unmatched_prev;
    std::vector<int> unmatched_curr;
};

/// Pairwise association cost: weighted center displacement plus weighted
/// IOU complement.
inline double association_cost(const BoundingBox3D& prev, const BoundingBox3D& curr,
                               const DetectorConfig& cfg) noexcept {
    const double displacement = (curr.center() - prev.center()).norm();
    return cfg.cost_weight_displacement * displacement +
           cfg.cost_weight_iou * (1.0 - iou_3d(prev, curr));
}

/**
 * Frame-to-frame box matching. Pairs whose center displacement exceeds
 * max_match_displacement are forbidden; among the remaining pairings the
 * result maximizes the number of matches and, within that, minimizes the
 * summed association cost. Each box appears in at most one match.
 */
inline AssociationResult associate(const std::vector<BoundingBox3D>& prev,
                                   const std::vector<BoundingBox3D>& curr,
                                   const DetectorConfig& cfg) {
    cfg.validate();
    AssociationResult result;
    const int np = static_cast<int>(prev.size());
    const int nc = static_cast<int>(curr.size());
    if (np == 0 || nc == 0) {
        for (int i = 0; i < np; ++i) result.unmatched_prev.push_back(i);
        for (int j = 0; j < nc; ++j) result.unmatched_curr.push_back(j);
        return result;
    }

    const int n = std::max(np, nc);
    std::vector feasible(static_cast<std::size_t>(np), std::vector<char>(static_cast<std::size_t>(nc), 0));
    std::vector cost(static_cast<std::size_t>(n),
                     std::vector<double>(static_cast<std::size_t>(n), kForbiddenCost));
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < nc; ++j) {
            const double displacement = (curr[static_cast<std::size_t>(j)].center() -
                                         prev[static_cast<std::size_t>(i)].center()).norm();
            if (displacement <= cfg.max_match_displacement) {
                feasible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    association_cost(prev[static_cast<std::size_t>(i)], curr[static_cast<std::size_t>(j)], cfg);
            }
        }
    }

    const std::vector<int> col_of_row = solve_min_cost_assignment(cost);
    std::vector<char> curr_matched(static_cast<std::size_t>(nc), 0);
    for (int i = 0; i < np; ++i) {
        const int j = col_of_row[static_cast<std::size_t>(i)];
        if (j >= 0 && j < nc && feasible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
            result.matches.emplace_back(i, j);
            curr_matched[static_cast<std::size_t>(j)] = 1;
        } else {
            result.unmatched_prev.push_back(i);
        }
    }
    for (int j = 0; j < nc; ++j) {
        if (!curr_matched[static_cast<std::size_t>(j)]) result.unmatched_curr.push_back(j);
    }
    return result;
}

}  // namespace nightbeam
