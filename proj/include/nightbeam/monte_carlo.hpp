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
#include <vector>

#include "nightbeam/danger.hpp"
#include "nightbeam/rng.hpp"
#include "nightbeam/tracking.hpp"

namespace nightbeam {

/// Fraction of the full circle covered by a 150-degree facing window.
constexpr double kFacingWindowFraction = 150.0 / 360.0;

/**
 * Randomized danger-rate experiment: synthetic objects with integer distance
 * d ~ unif{1,n} m, speed s ~ unif{1,n} m/s, and yaw psi ~ unif{1,360} deg are
 * fed straight into the danger detector (no tracking involved), sweeping the
 * number of objects per frame from 1 to max_load.
 */
struct McConfig {
    int n{60};              // upper bound of the distance/speed draws
    double alpha{1.0};      // allowed reaction time, seconds
    int max_load{100};      // highest number of boxes per trial
    int num_trials{1000};   // trials per load size
    std::uint64_t seed{42};

    void validate() const {
        if (n < 1) throw std::invalid_argument("McConfig: n must be >= 1");
        if (!(alpha > 0.0)) throw std::invalid_argument("McConfig: alpha must be > 0");
        if (max_load < 1) throw std::invalid_argument("McConfig: max_load must be >= 1");
        if (num_trials < 1) throw std::invalid_argument("McConfig: num_trials must be >= 1");
    }
};

struct McResult {
    std::vector<double> averages;  // mean dangerous fraction per load 1..max_load
    double grand_mean{0.0};
};

/**
 * One synthetic object. The box is placed on one of the exact axis rays
 * (+x, +y, -y), chosen uniformly, so its planar range is the drawn integer d
 * with no rounding; every facing window spans the same 150 degrees, so the
 * danger probability does not depend on which ray (hence section) is used.
 * Draw order: d, s, psi, ray.
 */
inline TrackedObject generate_random_box(Rng& rng, int n) {
    if (n < 1) throw std::invalid_argument("generate_random_box: n must be >= 1");
    const auto d = static_cast<double>(rng.uniform_int(1, n));
    const auto s = static_cast<double>(rng.uniform_int(1, n));
    const auto psi = static_cast<double>(rng.uniform_int(1, 360));
    const std::int64_t ray = rng.uniform_int(0, 2);

    TrackedObject obj;
    switch (ray) {
        case 0: obj.position = {d, 0.0, 0.0}; break;
        case 1: obj.position = {0.0, d, 0.0}; break;
        default: obj.position = {0.0, -d, 0.0}; break;
    }
    const double psi_rad = psi / kDegPerRad;
    obj.velocity = {s * std::cos(psi_rad), s * std::sin(psi_rad), 0.0};
    obj.speed = s;
    obj.yaw = YawDegrees(psi);
    obj.age_frames = 1;
    obj.box = BoundingBox3D({obj.position.x - 0.25, obj.position.y - 0.25, 0.0},
                            {obj.position.x + 0.25, obj.position.y + 0.25, 0.5}, 0.0, 0);
    return obj;
}

/// P(E1) of the closed form: probability that an integer distance drawn from
/// unif{1,n} is no greater than an independent integer speed from the same
/// range (one second of travel).
inline double analytic_p_within_reaction(int n) {
    if (n < 1) throw std::invalid_argument("analytic_p_within_reaction: n must be >= 1");
    return 0.5 + 1.0 / (2.0 * static_cast<double>(n));
}

/// Closed-form danger probability (150/360) * (1/2 + 1/2n). Only valid for
/// alpha = 1, where distance <= alpha * speed reduces to d <= s; for other
/// alphas use brute_force_p_danger.
inline double analytic_p_danger(int n, double alpha) {
    if (alpha != 1.0) {
        throw std::invalid_argument(
            "analytic_p_danger: closed form holds for alpha == 1; use brute_force_p_danger");
    }
    return kFacingWindowFraction * analytic_p_within_reaction(n);
}

/**
 * Exact enumeration oracle over all (d, s, psi) in {1..n}^2 x {1..360}:
 * the fraction with d <= alpha*s and psi inside the closed 150-degree facing
 * window of its section. The psi loop is hoisted: every section's window
 * holds the same number of integer headings (verified below), so the count
 * factors into (pairs within reach) x (headings facing). All counting is in
 * 64-bit integers; the single final division rounds once.
 */
inline double brute_force_p_danger(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("brute_force_p_danger: n must be >= 1");
    if (n > 10000) {
        throw std::invalid_argument("brute_force_p_danger: n > 10000 not tractable");
    }
    if (!(alpha > 0.0)) throw std::invalid_argument("brute_force_p_danger: alpha must be > 0");

    // Closed windows per section, written out independently of the detector.
    std::int64_t left = 0, right = 0, front = 0;
    for (int psi = 1; psi <= 360; ++psi) {
        if (psi >= 195 && psi <= 345) ++left;
        if (psi >= 15 && psi <= 165) ++right;
        if (psi >= 105 && psi <= 255) ++front;
    }
    if (left != right || right != front) {
        throw std::logic_error("facing windows must span equally many integer headings");
    }
    const std::int64_t facing = front;

    std::int64_t pairs = 0;  // (d, s) with d <= alpha * s, double compare as the detector does
    for (int s = 1; s <= n; ++s) {
        const double threshold = alpha * static_cast<double>(s);
        auto d_max = static_cast<std::int64_t>(std::floor(threshold));
        while (d_max + 1 <= n && static_cast<double>(d_max + 1) <= threshold) ++d_max;
        while (d_max >= 1 && static_cast<double>(d_max) > threshold) --d_max;
        pairs += std::clamp<std::int64_t>(d_max, 0, n);
    }
    const std::int64_t numerator = pairs * facing;
    const std::int64_t denominator =
        static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n) * 360;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

/**
 * The full sweep: for each load 1..max_load run num_trials trials, each
 * generating that many boxes and recording the fraction the danger detector
 * labels dangerous. Every trial draws from a substream keyed by (load, trial),
 * so results do not depend on execution order.
 */
inline McResult run_simulation(const McConfig& cfg, DangerPolicy policy = DangerPolicy::Current) {
    cfg.validate();
    DangerConfig danger_cfg;
    danger_cfg.reaction_time_s = cfg.alpha;
    danger_cfg.policy = policy;

    const Rng root(cfg.seed);
    McResult result;
    result.averages.reserve(static_cast<std::size_t>(cfg.max_load));
    std::vector<TrackedObject> boxes;
    for (int load = 1; load <= cfg.max_load; ++load) {
        double sum = 0.0;
        for (int trial = 0; trial < cfg.num_trials; ++trial) {
            Rng rng = root.child(static_cast<std::uint64_t>(load),
                                 static_cast<std::uint64_t>(trial));
            boxes.clear();
            for (int b = 0; b < load; ++b) boxes.push_back(generate_random_box(rng, cfg.n));
            const std::vector<DangerVerdict> verdicts = detect_danger(boxes, danger_cfg);
            int dangerous = 0;
            for (const DangerVerdict& v : verdicts) dangerous += v.dangerous ? 1 : 0;
            sum += static_cast<double>(dangerous) / static_cast<double>(load);
        }
        result.averages.push_back(sum / static_cast<double>(cfg.num_trials));
    }
    double total = 0.0;
    for (const double a : result.averages) total += a;
    result.grand_mean = total / static_cast<double>(result.averages.size());
    return result;
}

}  // namespace nightbeam
