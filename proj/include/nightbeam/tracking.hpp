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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nightbeam/assignment.hpp"
#include "nightbeam/clustering.hpp"
#include "nightbeam/detector_config.hpp"
#include "nightbeam/frame.hpp"
#include "nightbeam/geometry.hpp"
#include "nightbeam/kalman.hpp"

namespace nightbeam {

/// Displacements below this are treated as "did not move" when deriving a
/// heading; the object keeps its previous yaw.
constexpr double kStationaryDisplacement = 1e-6;  // meters

/// One tracked obstacle as handed to the danger stage: filtered kinematics
/// plus the raw fitted box. yaw is empty while the object has not moved.
struct TrackedObject {
    std::int64_t track_id{0};
    BoundingBox3D box;
    Point3 position;                  // filtered center
    Vec3 velocity;                    // filtered, m/s
    double speed{0.0};                // planar norm of velocity
    std::optional<YawDegrees> yaw;    // empty = stationary
    int age_frames{0};
};

/// Object velocity between two sightings of the same object. Ego translation
/// is added to the sensor-frame displacement so the result reflects motion
/// relative to the (possibly moving) vehicle's previous pose.
inline Vec3 estimate_velocity(const BoundingBox3D& prev, const BoundingBox3D& curr,
                              const Vec2& ego_translation) {
    const double dt = curr.timestamp - prev.timestamp;
    if (!(dt > 0.0)) {
        throw std::invalid_argument("estimate_velocity: timestamps must increase");
    }
    const Vec3 displacement = curr.center() - prev.center();
    return {(displacement.x + ego_translation.x) / dt, (displacement.y + ego_translation.y) / dt,
            displacement.z / dt};
}

/// Heading of the frame-to-frame displacement (ego motion applied), as a
/// full-circle yaw. Empty when the object moved less than the stationary
/// threshold.
inline std::optional<YawDegrees> estimate_orientation(const BoundingBox3D& prev,
                                                      const BoundingBox3D& curr,
                                                      const Vec2& ego_translation) {
    const double dt = curr.timestamp - prev.timestamp;
    if (!(dt > 0.0)) {
        throw std::invalid_argument("estimate_orientation: timestamps must increase");
    }
    const Vec3 d3 = curr.center() - prev.center();
    const Vec2 displacement{d3.x + ego_translation.x, d3.y + ego_translation.y};
    if (displacement.norm() < kStationaryDisplacement) return std::nullopt;
    return heading_to_yaw(displacement);
}

/**
 * Frame-by-frame obstacle tracker: cluster, fit boxes, associate against the
 * previous frame, difference velocities, and filter. Single owner, one frame
 * at a time; frames must arrive in timestamp order.
 *
 * Track lifecycle: an unmatched detection starts a track (age 1, zero
 * velocity, stationary yaw); a track unmatched for one frame is retired and
 * never revived. The first match re-seeds the filter from the measured
 * velocity, since the initial zero-velocity guess carries no information.
 */
class ObstacleTracker {
public:
    explicit ObstacleTracker(const DetectorConfig& cfg = {}) : cfg_(cfg) { cfg_.validate(); }

    [[nodiscard]] const DetectorConfig& config() const noexcept { return cfg_; }

    std::vector<TrackedObject> process_frame(const PointCloudFrame& frame) {
        if (last_timestamp_ && frame.timestamp <= *last_timestamp_) {
            throw std::invalid_argument("process_frame: out-of-order frame timestamp");
        }
        if (last_frame_id_ && frame.frame_id <= *last_frame_id_) {
            throw std::invalid_argument("process_frame: out-of-order frame id");
        }

        const std::vector<Cluster> clusters = euclidean_cluster(frame, cfg_);
        std::vector<BoundingBox3D> boxes;
        boxes.reserve(clusters.size());
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            boxes.push_back(fit_bounding_box(frame, clusters[i], static_cast<int>(i)));
        }

        std::vector<BoundingBox3D> prev_boxes;
        prev_boxes.reserve(tracks_.size());
        for (const Track& t : tracks_) prev_boxes.push_back(t.box);

        const AssociationResult assoc = associate(prev_boxes, boxes, cfg_);
        const Vec2 ego = frame.ego_translation * cfg_.ego_sign;

        std::vector<Track> next;
        next.reserve(assoc.matches.size() + assoc.unmatched_curr.size());
        for (const auto& [pi, ci] : assoc.matches) {
            Track t = tracks_[static_cast<std::size_t>(pi)];
            const BoundingBox3D& curr = boxes[static_cast<std::size_t>(ci)];
            const Vec3 measured_velocity = estimate_velocity(t.box, curr, ego);
            const double dt = curr.timestamp - t.box.timestamp;
            if (t.age == 1) {
                t.filter = kalman_init(curr.center(), measured_velocity, cfg_);
            } else {
                t.filter = kalman_predict(t.filter, dt, cfg_);
                t.filter = kalman_update(t.filter, curr.center(), measured_velocity, cfg_);
            }
            t.box = curr;
            t.age += 1;
            const Vec2 planar_velocity = t.filter.velocity().planar();
            if (planar_velocity.norm() >= kStationaryDisplacement) {
                t.yaw = heading_to_yaw(planar_velocity);
            }
            next.push_back(std::move(t));
        }
        for (const int ci : assoc.unmatched_curr) {
            const BoundingBox3D& curr = boxes[static_cast<std::size_t>(ci)];
            Track t;
            t.id = next_track_id_++;
            t.box = curr;
            t.filter = kalman_init(curr.center(), Vec3{}, cfg_);
            t.age = 1;
            next.push_back(std::move(t));
        }
        std::sort(next.begin(), next.end(),
                  [](const Track& a, const Track& b) { return a.id < b.id; });
        tracks_ = std::move(next);
        last_timestamp_ = frame.timestamp;
        last_frame_id_ = frame.frame_id;

        std::vector<TrackedObject> out;
        out.reserve(tracks_.size());
        for (const Track& t : tracks_) {
            TrackedObject obj;
            obj.track_id = t.id;
            obj.box = t.box;
            obj.position = t.filter.position();
            obj.velocity = t.filter.velocity();
            obj.speed = obj.velocity.planar().norm();
            obj.yaw = t.yaw;
            obj.age_frames = t.age;
            out.push_back(std::move(obj));
        }
        return out;
    }

private:
    struct Track {
        std::int64_t id{0};
        BoundingBox3D box;
        KalmanState filter;
        std::optional<YawDegrees> yaw;
        int age{0};
    };

    DetectorConfig cfg_;
    std::vector<Track> tracks_;
    std::int64_t next_track_id_{1};
    std::optional<double> last_timestamp_;
    std::optional<std::int64_t> last_frame_id_;
};

}  // namespace nightbeam
