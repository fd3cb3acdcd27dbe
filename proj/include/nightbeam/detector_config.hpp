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

#include <stdexcept>

namespace nightbeam {

/// Tuning constants for the obstacle detector stages (clustering,
/// frame-to-frame association, and state filtering).
struct DetectorConfig {
    double cluster_radius{0.5};            // meters; chain-connectivity radius
    int min_cluster_points{4};             // clusters smaller than this are noise
    double max_match_displacement{3.0};    // meters; association gate
    double cost_weight_displacement{1.0};
    double cost_weight_iou{1.0};
    double process_noise{0.1};             // variance added per predict step
    double measurement_noise_pos{0.5};     // variance of measured centers
    double measurement_noise_vel{1.0};     // variance of differenced velocity
    double ego_sign{1.0};                  // +1 adds ego translation to object motion

    void validate() const {
        if (!(cluster_radius > 0.0)) {
            throw std::invalid_argument("DetectorConfig: cluster_radius must be > 0");
        }
        if (min_cluster_points < 1) {
            throw std::invalid_argument("DetectorConfig: min_cluster_points must be >= 1");
        }
        if (max_match_displacement < 0.0) {
            throw std::invalid_argument("DetectorConfig: max_match_displacement must be >= 0");
        }
        if (cost_weight_displacement < 0.0 || cost_weight_iou < 0.0 ||
            (cost_weight_displacement == 0.0 && cost_weight_iou == 0.0)) {
            throw std::invalid_argument(
                "DetectorConfig: cost weights must be >= 0 and not both zero");
        }
        if (process_noise < 0.0 || measurement_noise_pos < 0.0 || measurement_noise_vel < 0.0) {
            throw std::invalid_argument("DetectorConfig: noise variances must be >= 0");
        }
    }
};

}  // namespace nightbeam
