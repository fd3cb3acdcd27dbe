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
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nightbeam/danger.hpp"
#include "nightbeam/light_controller.hpp"
#include "nightbeam/metrics.hpp"
#include "nightbeam/scenario.hpp"
#include "nightbeam/tracking.hpp"

namespace nightbeam {

/// Everything the pipeline produced for one input frame.
struct TraceFrame {
    std::int64_t frame_id{0};
    double timestamp{0.0};
    std::vector<TrackedObject> tracks;
    std::vector<DangerVerdict> verdicts;
    bool light_on{false};
};

struct ScenarioTrace {
    std::string scenario_name;
    double frame_rate_hz{0.0};
    double duration_s{0.0};
    std::vector<TraceFrame> frames;
    std::vector<LightTransition> light_transitions;
    double light_on_time_s{0.0};  // lit seconds within [0, duration_s]
};

/**
 * Plays a scenario through detector -> danger -> light in frame order and
 * records every intermediate product. Deterministic for a fixed scenario and
 * configuration. The lamp's final cycle is allowed to run out past the last
 * frame but on-time is clipped to the scenario window.
 */
inline ScenarioTrace run_pipeline(const Scenario& scenario, const DetectorConfig& detector_cfg,
                                  const DangerConfig& danger_cfg, double tau_s) {
    detector_cfg.validate();
    danger_cfg.validate();
    ScenarioTrace trace;
    trace.scenario_name = scenario.name;
    trace.frame_rate_hz = scenario.frame_rate_hz;
    trace.duration_s = scenario.duration_s();

    ObstacleTracker tracker(detector_cfg);
    LightController light(tau_s);
    for (const PointCloudFrame& frame : scenario.frames) {
        TraceFrame record;
        record.frame_id = frame.frame_id;
        record.timestamp = frame.timestamp;
        record.tracks = tracker.process_frame(frame);
        record.verdicts = detect_danger(record.tracks, danger_cfg);
        const bool danger = std::any_of(record.verdicts.begin(), record.verdicts.end(),
                                        [](const DangerVerdict& v) { return v.dangerous; });
        record.light_on = light.tick(frame.timestamp, danger);
        trace.frames.push_back(std::move(record));
    }
    trace.light_transitions = light.transitions();

    // Integrate lit intervals over the scenario window. A cycle still running
    // at the last tick contributes its natural run-out, clipped at the end.
    const double end = trace.duration_s;
    double lit = 0.0;
    double current_on_start = -1.0;
    for (const LightTransition& tr : trace.light_transitions) {
        if (tr.on) {
            current_on_start = tr.timestamp;
        } else if (current_on_start >= 0.0) {
            lit += std::clamp(tr.timestamp, 0.0, end) - std::clamp(current_on_start, 0.0, end);
            current_on_start = -1.0;
        }
    }
    if (current_on_start >= 0.0) {
        const double natural_off = light.last_tick() + light.timer_s();
        lit += std::clamp(natural_off, 0.0, end) - std::clamp(current_on_start, 0.0, end);
    }
    trace.light_on_time_s = lit;
    return trace;
}

/**
 * Confusion matrix over ground-truth episodes (one episode = one scripted
 * object in one scenario):
 *
 *   TP  episode ever truly dangerous and some dangerous verdict fell within
 *       matching_radius of its scripted position in some frame
 *   FN  ever truly dangerous, never flagged
 *   FP  never truly dangerous but flagged; plus one per spurious track that
 *       was flagged dangerous while matching no scripted object at all
 *   TN  never dangerous, never flagged, but tracked at least once
 *
 * Scripted objects that were never tracked and never dangerous contribute
 * nothing (the detector neither saw nor judged them).
 */
inline ConfusionMatrix score_trace(const ScenarioTrace& trace, const Scenario& scenario,
                                   double matching_radius = 1.0) {
    if (!(matching_radius > 0.0)) {
        throw std::invalid_argument("score_trace: matching_radius must be > 0");
    }
    struct Episode {
        bool truth_danger{false};
        bool predicted_danger{false};
        bool tracked{false};
    };
    std::map<std::string, Episode> episodes;
    std::set<std::int64_t> ghost_tracks;

    std::map<std::int64_t, const TruthFrame*> truth_by_frame;
    for (const TruthFrame& tf : scenario.truth) truth_by_frame[tf.frame_id] = &tf;

    for (const TraceFrame& frame : trace.frames) {
        const auto it = truth_by_frame.find(frame.frame_id);
        const TruthFrame* truth = it != truth_by_frame.end() ? it->second : nullptr;
        if (truth) {
            for (const TruthObject& obj : truth->objects) {
                episodes[obj.label].truth_danger |= obj.dangerous;
            }
        }

        std::map<std::int64_t, Point3> track_center;
        for (const TrackedObject& t : frame.tracks) track_center[t.track_id] = t.position;

        for (const DangerVerdict& v : frame.verdicts) {
            const auto center_it = track_center.find(v.track_id);
            if (center_it == track_center.end()) continue;
            const Point3& center = center_it->second;
            bool matched_any = false;
            if (truth) {
                for (const TruthObject& obj : truth->objects) {
                    if (center.distance_to(obj.pos) <= matching_radius) {
                        matched_any = true;
                        Episode& ep = episodes[obj.label];
                        ep.tracked = true;
                        if (v.dangerous) ep.predicted_danger = true;
                    }
                }
            }
            if (v.dangerous && !matched_any) ghost_tracks.insert(v.track_id);
        }
    }

    ConfusionMatrix cm;
    for (const auto& [label, ep] : episodes) {
        if (ep.truth_danger && ep.predicted_danger) {
            ++cm.tp;
        } else if (ep.truth_danger) {
            ++cm.fn;
        } else if (ep.predicted_danger) {
            ++cm.fp;
        } else if (ep.tracked) {
            ++cm.tn;
        }
    }
    cm.fp += static_cast<std::int64_t>(ghost_tracks.size());
    return cm;
}

}  // namespace nightbeam
