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

#include "nightbeam/assignment.hpp"
#include "nightbeam/clustering.hpp"
#include "nightbeam/danger.hpp"
#include "nightbeam/detector_config.hpp"
#include "nightbeam/energy.hpp"
#include "nightbeam/frame.hpp"
#include "nightbeam/geometry.hpp"
#include "nightbeam/io.hpp"
#include "nightbeam/kalman.hpp"
#include "nightbeam/light_controller.hpp"
#include "nightbeam/metrics.hpp"
#include "nightbeam/monte_carlo.hpp"
#include "nightbeam/pipeline.hpp"
#include "nightbeam/rng.hpp"
#include "nightbeam/scenario.hpp"
#include "nightbeam/tracking.hpp"
