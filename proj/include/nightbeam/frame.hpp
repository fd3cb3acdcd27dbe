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

#include <cstdint>
#include <vector>

#include "nightbeam/geometry.hpp"

namespace nightbeam {

/// One LiDAR sweep on the virtual clock. Frames in a scenario carry strictly
/// increasing frame_id and timestamp.
struct PointCloudFrame {
    std::int64_t frame_id{0};
    double timestamp{0.0};        // virtual seconds
    std::vector<Point3> points;
    Vec2 ego_translation{};       // vehicle displacement since previous frame

    [[nodiscard]] bool operator==(const PointCloudFrame&) const = default;
};

}  // namespace nightbeam
