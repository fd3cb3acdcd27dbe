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
#include <stdexcept>

#include <Eigen/Dense>

#include "nightbeam/detector_config.hpp"
#include "nightbeam/geometry.hpp"

namespace nightbeam {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

/**
 * Constant-velocity filter state: [px, py, pz, vx, vy, vz] with a full 6x6
 * covariance. Both measured positions and differenced velocities are observed
 * directly, so the measurement map is the identity.
 */
struct KalmanState {
    Vector6d state_vector{Vector6d::Zero()};
    Matrix6d covariance{Matrix6d::Identity()};

    [[nodiscard]] Point3 position() const noexcept {
        return {state_vector(0), state_vector(1), state_vector(2)};
    }
    [[nodiscard]] Vec3 velocity() const noexcept {
        return {state_vector(3), state_vector(4), state_vector(5)};
    }
};

namespace detail {

inline Matrix6d measurement_noise(const DetectorConfig& cfg) noexcept {
    Matrix6d r = Matrix6d::Zero();
    r.topLeftCorner<3, 3>() = cfg.measurement_noise_pos * Eigen::Matrix3d::Identity();
    r.bottomRightCorner<3, 3>() = cfg.measurement_noise_vel * Eigen::Matrix3d::Identity();
    return r;
}

inline void symmetrize(Matrix6d& m) noexcept { m = 0.5 * (m + m.transpose()).eval(); }

}  // namespace detail

/// Fresh state pinned to a measurement; covariance starts at the measurement
/// noise since that is all we know about it.
inline KalmanState kalman_init(const Point3& position, const Vec3& velocity,
                               const DetectorConfig& cfg) {
    KalmanState s;
    s.state_vector << position.x, position.y, position.z, velocity.x, velocity.y, velocity.z;
    s.covariance = detail::measurement_noise(cfg);
    return s;
}

/// Constant-velocity propagation over dt seconds; process noise inflates the
/// covariance diagonal.
inline KalmanState kalman_predict(const KalmanState& state, double dt, const DetectorConfig& cfg) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("kalman_predict: dt must be > 0");
    }
    Matrix6d f = Matrix6d::Identity();
    f.topRightCorner<3, 3>() = dt * Eigen::Matrix3d::Identity();

    KalmanState out;
    out.state_vector = f * state.state_vector;
    out.covariance = f * state.covariance * f.transpose() + cfg.process_noise * Matrix6d::Identity();
    detail::symmetrize(out.covariance);
    return out;
}

/// Measurement update with the 6-vector [position, velocity]. Joseph-form
/// covariance update keeps the result symmetric positive-semidefinite.
inline KalmanState kalman_update(const KalmanState& state, const Point3& measured_position,
                                 const Vec3& measured_velocity, const DetectorConfig& cfg) {
    Vector6d z;
    z << measured_position.x, measured_position.y, measured_position.z, measured_velocity.x,
        measured_velocity.y, measured_velocity.z;
    if (!z.allFinite()) {
        throw std::invalid_argument("kalman_update: non-finite measurement");
    }

    const Matrix6d r = detail::measurement_noise(cfg);
    const Matrix6d s = state.covariance + r;
    // K = P S^-1; S is symmetric positive definite whenever R is nonzero
    const Matrix6d k = s.ldlt().solve(state.covariance).transpose();

    KalmanState out;
    out.state_vector = state.state_vector + k * (z - state.state_vector);
    const Matrix6d ik = Matrix6d::Identity() - k;
    out.covariance = ik * state.covariance * ik.transpose() + k * r * k.transpose();
    detail::symmetrize(out.covariance);
    return out;
}

}  // namespace nightbeam
