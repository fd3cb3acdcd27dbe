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

// Reference implementations the tests check the library against. Everything
// here is deliberately naive (quadratic scans, permutation enumeration,
// scalar recursions) and shares no code with the implementations under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "nightbeam/frame.hpp"
#include "nightbeam/geometry.hpp"

namespace oracles {

/// Connected components of the radius graph, by pairwise union-find over all
/// point pairs. Components below min_points are dropped. Returned components
/// are sorted internally and ordered by smallest member.
inline std::vector<std::vector<int>> radius_graph_components(
    const std::vector<nightbeam::Point3>& points, double radius, int min_points) {
    const int n = static_cast<int>(points.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    const double r2 = radius * radius;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const nightbeam::Vec3 d = points[static_cast<std::size_t>(j)] - points[static_cast<std::size_t>(i)];
            if (d.x * d.x + d.y * d.y + d.z * d.z <= r2) {
                parent[static_cast<std::size_t>(find(i))] = find(j);
            }
        }
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_root[static_cast<std::size_t>(find(i))].push_back(i);
    std::vector<std::vector<int>> components;
    for (auto& c : by_root) {
        if (static_cast<int>(c.size()) >= min_points) {
            std::sort(c.begin(), c.end());
            components.push_back(std::move(c));
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

/// Best assignment by trying every injective mapping of rows to columns.
/// Maximizes the number of feasible pairs first, then minimizes total cost.
/// cost[i][j] = infinity marks a forbidden pair.
struct AssignmentOracle {
    int best_matches{0};
    double best_cost{0.0};
};

inline AssignmentOracle enumerate_assignments(const std::vector<std::vector<double>>& cost) {
    const int rows = static_cast<int>(cost.size());
    const int cols = rows > 0 ? static_cast<int>(cost[0].size()) : 0;
    AssignmentOracle best;
    best.best_cost = std::numeric_limits<double>::infinity();

    std::vector<int> cols_order(static_cast<std::size_t>(cols));
    std::iota(cols_order.begin(), cols_order.end(), 0);
    // Iterate over column permutations; row i pairs with the i-th permuted
    // column (rows beyond cols stay unmatched, and vice versa).
    do {
        int matches = 0;
        double total = 0.0;
        for (int i = 0; i < std::min(rows, cols); ++i) {
            const double c = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols_order[static_cast<std::size_t>(i)])];
            if (std::isfinite(c)) {
                ++matches;
                total += c;
            }
        }
        if (matches > best.best_matches ||
            (matches == best.best_matches && total < best.best_cost)) {
            best.best_matches = matches;
            best.best_cost = total;
        }
    } while (std::next_permutation(cols_order.begin(), cols_order.end()));
    if (best.best_matches == 0) best.best_cost = 0.0;
    return best;
}

/// Scalar constant-velocity Kalman recursion for one axis, two states
/// (position, velocity), identity measurement of both. Plain arrays, no
/// linear-algebra library involved.
struct ScalarCv {
    double p{0.0}, v{0.0};
    double ppp{0.0}, ppv{0.0}, pvv{0.0};  // covariance entries P_pp, P_pv, P_vv

    void predict(double dt, double q) {
        const double npp = ppp + 2.0 * dt * ppv + dt * dt * pvv + q;
        const double npv = ppv + dt * pvv;
        const double nvv = pvv + q;
        p += v * dt;
        ppp = npp;
        ppv = npv;
        pvv = nvv;
    }

    void update(double zp, double zv, double rp, double rv) {
        // K = P (P + R)^-1 with R = diag(rp, rv), via the 2x2 inverse
        const double s00 = ppp + rp, s01 = ppv, s11 = pvv + rv;
        const double det = s00 * s11 - s01 * s01;
        const double i00 = s11 / det, i01 = -s01 / det, i11 = s00 / det;
        const double k00 = ppp * i00 + ppv * i01;
        const double k01 = ppp * i01 + ppv * i11;
        const double k10 = ppv * i00 + pvv * i01;
        const double k11 = ppv * i01 + pvv * i11;
        const double yp = zp - p, yv = zv - v;
        p += k00 * yp + k01 * yv;
        v += k10 * yp + k11 * yv;
        // Joseph form: (I-K) P (I-K)^T + K R K^T
        const double a00 = 1.0 - k00, a01 = -k01, a10 = -k10, a11 = 1.0 - k11;
        const double t00 = a00 * ppp + a01 * ppv, t01 = a00 * ppv + a01 * pvv;
        const double t10 = a10 * ppp + a11 * ppv, t11 = a10 * ppv + a11 * pvv;
        const double npp = t00 * a00 + t01 * a01 + k00 * k00 * rp + k01 * k01 * rv;
        const double npv = t00 * a10 + t01 * a11 + k00 * k10 * rp + k01 * k11 * rv;
        const double nvv = t10 * a10 + t11 * a11 + k10 * k10 * rp + k11 * k11 * rv;
        ppp = npp;
        ppv = npv;
        pvv = nvv;
    }
};

inline double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (const double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double rmse(const std::vector<double>& errors) {
    double s = 0.0;
    for (const double e : errors) s += e * e;
    return std::sqrt(s / static_cast<double>(errors.size()));
}

struct SlopeFit {
    double slope{0.0};
    double stderr_slope{0.0};
};

/// Ordinary least squares of y on x, with the usual residual-based standard
/// error of the slope.
inline SlopeFit ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (intercept + slope * x[i]);
        ss_res += r * r;
    }
    const double sigma2 = ss_res / (n - 2.0);
    return {slope, std::sqrt(sigma2 / sxx)};
}

/// Upper chi-square quantile via the Wilson-Hilferty cube approximation;
/// plenty accurate for the degrees of freedom used in these tests.
inline double chi_square_quantile(double dof, double z_upper) {
    const double a = 2.0 / (9.0 * dof);
    const double c = 1.0 - a + z_upper * std::sqrt(a);
    return dof * c * c * c;
}

}  // namespace oracles
