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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nightbeam/danger.hpp"
#include "nightbeam/frame.hpp"
#include "nightbeam/geometry.hpp"
#include "nightbeam/rng.hpp"

namespace nightbeam {

/// Scripted ground-truth state of one actor in one frame.
struct TruthObject {
    std::string label;
    Point3 pos;        // exact scripted position, sensor frame
    bool dangerous{false};

    [[nodiscard]] bool operator==(const TruthObject&) const = default;
};

struct TruthFrame {
    std::int64_t frame_id{0};
    std::vector<TruthObject> objects;

    [[nodiscard]] bool operator==(const TruthFrame&) const = default;
};

/// A generated or loaded scene: point-cloud frames plus per-frame scripted
/// truth. Frame timestamps are frame_id / frame_rate_hz by construction.
struct Scenario {
    std::string name;
    double frame_rate_hz{10.0};
    double vehicle_width_m{2.0};
    std::uint64_t seed{0};
    std::vector<PointCloudFrame> frames;
    std::vector<TruthFrame> truth;

    [[nodiscard]] double duration_s() const noexcept {
        return frame_rate_hz > 0.0 ? static_cast<double>(frames.size()) / frame_rate_hz : 0.0;
    }
    [[nodiscard]] bool operator==(const Scenario&) const = default;
};

/**
 * One scripted actor. Rendered per frame as point_density Gaussian-scattered
 * points around its pose; velocity is over ground, so under a moving ego the
 * sensor-frame drift is velocity - ego_velocity.
 */
struct ActorScript {
    std::string label;
    Point3 start;                 // sensor-frame position at appear_t
    Vec3 velocity;                // m/s over ground
    int point_density{24};        // points rendered per frame
    double noise_sigma_m{0.05};   // per-axis scatter of rendered points
    double appear_t{0.0};
    double disappear_t{std::numeric_limits<double>::infinity()};

    [[nodiscard]] Point3 position_at(double t, const Vec2& ego_velocity) const noexcept {
        const double dt = t - appear_t;
        return {start.x + (velocity.x - ego_velocity.x) * dt,
                start.y + (velocity.y - ego_velocity.y) * dt, start.z + velocity.z * dt};
    }
};

struct ScenarioSpec {
    std::string name{"scenario"};
    double duration_s{5.0};
    double frame_rate_hz{10.0};
    double vehicle_width_m{2.0};
    double truth_reaction_time_s{3.0};
    Vec2 ego_velocity{};          // vehicle ground velocity, constant
    std::uint64_t seed{1};
    std::vector<ActorScript> actors;
};

inline void validate_spec(const ScenarioSpec& spec) {
    if (!(spec.frame_rate_hz > 0.0)) {
        throw std::invalid_argument("spec.frame_rate_hz: must be > 0");
    }
    if (!(spec.duration_s >= 0.0)) {
        throw std::invalid_argument("spec.duration_s: must be >= 0");
    }
    if (!(spec.vehicle_width_m > 0.0)) {
        throw std::invalid_argument("spec.vehicle_width_m: must be > 0");
    }
    if (!(spec.truth_reaction_time_s > 0.0)) {
        throw std::invalid_argument("spec.truth_reaction_time_s: must be > 0");
    }
    for (std::size_t i = 0; i < spec.actors.size(); ++i) {
        const ActorScript& a = spec.actors[i];
        const std::string where = "spec.actors[" + std::to_string(i) + "]";
        if (a.label.empty()) throw std::invalid_argument(where + ".label: must be non-empty");
        if (a.point_density < 1) {
            throw std::invalid_argument(where + ".point_density: must be >= 1");
        }
        if (a.noise_sigma_m < 0.0) {
            throw std::invalid_argument(where + ".noise_sigma_m: must be >= 0");
        }
        if (!(a.disappear_t > a.appear_t)) {
            throw std::invalid_argument(where + ".disappear_t: must be > appear_t");
        }
        if (!a.start.finite()) throw std::invalid_argument(where + ".start: must be finite");
    }
}

/// Scripted truth label, computed from the script alone (never from pipeline
/// output): an actor is dangerous in a frame when it is ahead of the vehicle,
/// its scripted distance is within speed x reaction time, and its ground
/// heading points at the vehicle for the corridor it occupies.
inline bool scripted_danger(const Point3& pos, const Vec3& ground_velocity,
                            double reaction_time_s, double vehicle_width_m) {
    if (pos.x < 0.0) return false;
    const double speed = ground_velocity.planar().norm();
    if (pos.planar_range() > speed * reaction_time_s) return false;
    const DangerConfig cfg{reaction_time_s, vehicle_width_m, DangerPolicy::Current};
    const std::optional<YawDegrees> yaw = heading_to_yaw(ground_velocity.planar());
    if (!yaw) return true;  // stationary at zero range; conservative
    return is_facing_vehicle(*yaw, classify_section(pos, cfg), DangerPolicy::Current);
}

/// Renders the scripted actors into frames and truth records. Deterministic:
/// the same spec and seed reproduce the scenario bit for bit.
inline Scenario generate_scenario(const ScenarioSpec& spec) {
    validate_spec(spec);
    Scenario scenario;
    scenario.name = spec.name;
    scenario.frame_rate_hz = spec.frame_rate_hz;
    scenario.vehicle_width_m = spec.vehicle_width_m;
    scenario.seed = spec.seed;

    const Rng root(spec.seed);
    const auto frame_count =
        static_cast<std::int64_t>(std::llround(spec.duration_s * spec.frame_rate_hz));
    const double dt = 1.0 / spec.frame_rate_hz;

    for (std::int64_t fid = 0; fid < frame_count; ++fid) {
        const double t = static_cast<double>(fid) / spec.frame_rate_hz;
        PointCloudFrame frame;
        frame.frame_id = fid;
        frame.timestamp = t;
        frame.ego_translation = fid == 0 ? Vec2{} : spec.ego_velocity * dt;
        TruthFrame truth;
        truth.frame_id = fid;

        for (std::size_t ai = 0; ai < spec.actors.size(); ++ai) {
            const ActorScript& actor = spec.actors[ai];
            if (t < actor.appear_t || t >= actor.disappear_t) continue;
            const Point3 pos = actor.position_at(t, spec.ego_velocity);
            Rng rng = root.child(static_cast<std::uint64_t>(fid), ai);
            for (int k = 0; k < actor.point_density; ++k) {
                frame.points.push_back({rng.gaussian(pos.x, actor.noise_sigma_m),
                                        rng.gaussian(pos.y, actor.noise_sigma_m),
                                        rng.gaussian(pos.z, actor.noise_sigma_m)});
            }
            truth.objects.push_back({actor.label, pos,
                                     scripted_danger(pos, actor.velocity,
                                                     spec.truth_reaction_time_s,
                                                     spec.vehicle_width_m)});
        }
        scenario.frames.push_back(std::move(frame));
        scenario.truth.push_back(std::move(truth));
    }
    return scenario;
}

/**
 * Canned single-purpose scenes:
 *   approach       pedestrian 12 m ahead walking straight in at 2 m/s;
 *                  becomes truly dangerous once within 6 m (3 s to react)
 *   away           object ahead receding at 1.5 m/s; never dangerous
 *   perpendicular  crosser far left moving +y at fixed x; never dangerous
 *   parallel       walker on the left moving parallel to the vehicle axis;
 *                  never dangerous (the legacy policy disagrees)
 *   pulses         47 isolated 0.6 s dashes, 8 s apart; with tau = 3 s the
 *                  lamp should burn 141 s total
 *   mixed          approach + away + perpendicular + parallel together
 */
inline ScenarioSpec scenario_preset(const std::string& name, std::uint64_t seed = 1) {
    ScenarioSpec spec;
    spec.name = name;
    spec.seed = seed;
    if (name == "approach") {
        spec.duration_s = 5.0;
        spec.actors = {{"ped-approach", {12.0, 0.0, 0.2}, {-2.0, 0.0, 0.0}, 24, 0.05}};
    } else if (name == "away") {
        spec.duration_s = 5.0;
        spec.actors = {{"ped-away", {4.0, 0.0, 0.2}, {1.5, 0.0, 0.0}, 24, 0.05}};
    } else if (name == "perpendicular") {
        spec.duration_s = 5.0;
        spec.actors = {{"crosser", {8.0, 4.0, 0.2}, {0.0, 2.0, 0.0}, 24, 0.05}};
    } else if (name == "parallel") {
        spec.duration_s = 6.0;
        spec.actors = {{"walker-parallel", {6.5, 3.5, 0.2}, {-1.8, 0.0, 0.0}, 24, 0.02}};
    } else if (name == "pulses") {
        spec.duration_s = 380.0;
        for (int k = 0; k < 47; ++k) {
            ActorScript a;
            a.label = "pulse-" + std::to_string(k);
            a.start = {2.5, 0.0, 0.2};
            a.velocity = {-1.5, 0.0, 0.0};
            a.point_density = 16;
            a.noise_sigma_m = 0.02;
            a.appear_t = 8.0 * k;
            a.disappear_t = 8.0 * k + 0.6;
            spec.actors.push_back(std::move(a));
        }
    } else if (name == "mixed") {
        spec.duration_s = 6.0;
        spec.actors = {
            {"ped-approach", {12.0, 0.0, 0.2}, {-2.0, 0.0, 0.0}, 24, 0.05},
            {"ped-away", {4.0, -1.0, 0.2}, {1.5, 0.0, 0.0}, 24, 0.05},
            {"crosser", {8.0, 6.0, 0.2}, {0.0, 1.5, 0.0}, 24, 0.05},
            {"walker-parallel", {6.5, 3.5, 0.2}, {-1.8, 0.0, 0.0}, 24, 0.02},
        };
    } else {
        throw std::invalid_argument("unknown scenario preset: " + name);
    }
    return spec;
}

inline const std::vector<std::string>& scenario_preset_names() {
    static const std::vector<std::string> names = {"approach",  "away",   "perpendicular",
                                                   "parallel",  "pulses", "mixed"};
    return names;
}

}  // namespace nightbeam
