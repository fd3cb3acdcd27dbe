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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nightbeam/geometry.hpp"
#include "nightbeam/tracking.hpp"

namespace nightbeam {

/// Which frontal zone an object occupies relative to the vehicle.
enum class Section { Left, Front, Right };

[[nodiscard]] constexpr const char* to_string(Section s) noexcept {
    switch (s) {
        case Section::Left: return "left";
        case Section::Front: return "front";
        case Section::Right: return "right";
    }
    return "front";
}

/// Current: lateral corridors of half-width w with 150-degree facing windows.
/// Legacy: 45/90/45-degree bearing wedges, side windows of 180 degrees, and
/// no orientation check at all in the front wedge. Kept for comparison runs;
/// it over-reports parallel movers.
enum class DangerPolicy { Current, Legacy };

struct DangerConfig {
    double reaction_time_s{3.0};
    double vehicle_width_w{2.0};
    DangerPolicy policy{DangerPolicy::Current};

    void validate() const {
        if (!(reaction_time_s > 0.0)) {
            throw std::invalid_argument("DangerConfig: reaction_time_s must be > 0");
        }
        if (!(vehicle_width_w > 0.0)) {
            throw std::invalid_argument("DangerConfig: vehicle_width_w must be > 0");
        }
    }
};

struct DangerVerdict {
    std::int64_t track_id{0};
    bool dangerous{false};
    Section section{Section::Front};
    double distance_m{0.0};
    double threshold_m{0.0};
    bool facing{false};
};

/// Corridor split: the direct path is -w < y < w, everything at y >= w is
/// Left and everything at y <= -w is Right (boundaries belong to the sides).
/// Callers are expected to filter objects behind the vehicle (x < 0).
inline Section classify_section(const Point3& center, const DangerConfig& cfg) noexcept {
    if (center.y >= cfg.vehicle_width_w) return Section::Left;
    if (center.y <= -cfg.vehicle_width_w) return Section::Right;
    return Section::Front;
}

/// Bearing split used by the legacy policy: |bearing| <= 45 deg is Front
/// (ties included), beyond that Left or Right by sign.
inline Section classify_section_legacy(const Point3& center) noexcept {
    const double bearing = std::atan2(center.y, center.x) * kDegPerRad;
    if (bearing > 45.0) return Section::Left;
    if (bearing < -45.0) return Section::Right;
    return Section::Front;
}

/// Facing test: is this heading pointed at the vehicle, given the section the
/// object sits in? Windows are closed intervals of yaw in degrees.
inline bool is_facing_vehicle(const YawDegrees& yaw, Section section, DangerPolicy policy) noexcept {
    const double psi = yaw.value();
    if (policy == DangerPolicy::Current) {
        switch (section) {
            case Section::Left: return psi >= 195.0 && psi <= 345.0;
            case Section::Right: return psi >= 15.0 && psi <= 165.0;
            case Section::Front: return psi >= 105.0 && psi <= 255.0;
        }
    } else {
        switch (section) {
            case Section::Left: return psi >= 180.0;  // [180, 360) after normalization
            case Section::Right: return psi >= 0.0 && psi <= 180.0;
            case Section::Front: return true;         // orientation disregarded
        }
    }
    return false;
}

/// Distance an object covers within the allowed reaction time.
inline double danger_threshold(double speed, const DangerConfig& cfg) {
    cfg.validate();
    if (speed < 0.0) {
        throw std::invalid_argument("danger_threshold: speed must be >= 0");
    }
    return speed * cfg.reaction_time_s;
}

/**
 * Labels every track: dangerous when it is ahead of the vehicle, closer than
 * the distance it covers in the reaction time, and facing the vehicle.
 * Distance is the planar range of the filtered center. Objects that have not
 * moved yet are conservatively treated as facing; objects behind the vehicle
 * (x < 0) are never dangerous. One verdict per input track, in input order.
 */
inline std::vector<DangerVerdict> detect_danger(const std::vector<TrackedObject>& tracks,
                                                const DangerConfig& cfg) {
    cfg.validate();
    std::vector<DangerVerdict> verdicts;
    verdicts.reserve(tracks.size());
    for (const TrackedObject& t : tracks) {
        DangerVerdict v;
        v.track_id = t.track_id;
        v.section = cfg.policy == DangerPolicy::Current ? classify_section(t.position, cfg)
                                                        : classify_section_legacy(t.position);
        v.distance_m = t.position.planar_range();
        v.threshold_m = danger_threshold(t.speed, cfg);
        const bool frontal = t.position.x >= 0.0;
        v.facing = frontal && (!t.yaw || is_facing_vehicle(*t.yaw, v.section, cfg.policy));
        v.dangerous = v.facing && v.distance_m <= v.threshold_m;
        verdicts.push_back(v);
    }
    return verdicts;
}

}  // namespace nightbeam
