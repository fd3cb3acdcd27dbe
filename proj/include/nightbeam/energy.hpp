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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nightbeam {

enum class BeamSetting { Low, High };

/// Nameplate wattages for the headlight types the energy report covers. The
/// tactical flashlight used on the test robot has no low-beam mode.
struct HeadlightSpec {
    std::string name;
    std::optional<double> low_beam_w;
    double high_beam_w{0.0};
};

struct EnergyModel {
    std::vector<HeadlightSpec> headlights;

    [[nodiscard]] static EnergyModel standard() {
        return EnergyModel{{
            {"goreit-flashlight", std::nullopt, 1.5},
            {"led", 15.0, 25.0},
            {"halogen", 55.0, 65.0},
        }};
    }
};

/// Per headlight: energy at the observed duty cycle vs. leaving the lamp on
/// for the whole window. Empty when the lamp lacks the requested beam mode.
struct EnergyRow {
    std::string headlight;
    std::optional<double> watts;
    std::optional<double> on_wh;        // watts x on-time
    std::optional<double> baseline_wh;  // watts x total time (always-on)
};

struct EnergyReport {
    std::vector<EnergyRow> rows;
    double on_time_s{0.0};
    double total_time_s{0.0};
    double fraction_saved{0.0};  // 1 - on/total; identical for every lamp
};

inline EnergyReport energy_report(double on_time_s, double total_time_s, const EnergyModel& model,
                                  BeamSetting beam) {
    if (on_time_s < 0.0 || total_time_s < 0.0) {
        throw std::invalid_argument("energy_report: times must be >= 0");
    }
    if (on_time_s > total_time_s) {
        throw std::invalid_argument("energy_report: on_time exceeds total_time");
    }
    EnergyReport report;
    report.on_time_s = on_time_s;
    report.total_time_s = total_time_s;
    report.fraction_saved = total_time_s > 0.0 ? 1.0 - on_time_s / total_time_s : 0.0;
    const double on_h = on_time_s / 3600.0;
    const double total_h = total_time_s / 3600.0;
    for (const HeadlightSpec& spec : model.headlights) {
        EnergyRow row;
        row.headlight = spec.name;
        std::optional<double> watts =
            beam == BeamSetting::High ? std::optional<double>(spec.high_beam_w) : spec.low_beam_w;
        if (watts) {
            row.watts = watts;
            row.on_wh = *watts * on_h;
            row.baseline_wh = *watts * total_h;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Reference duty-cycle scenarios for a 22-minute night drive (0.366 h).
/// worst: lamp on the whole drive. average: on 21% of the time, the duty
/// cycle a random-object model predicts, i.e. 0.077 h. best: 47 isolated
/// sightings x 3 s = 141 s, rounded to 0.039 h.
struct EnergyScenario {
    std::string name;
    double on_h{0.0};
    double total_h{0.366};
};

inline const std::vector<EnergyScenario>& energy_scenarios() {
    static const std::vector<EnergyScenario> scenarios = {
        {"worst", 0.366, 0.366},
        {"average", 0.077, 0.366},
        {"best", 0.039, 0.366},
    };
    return scenarios;
}

inline const EnergyScenario& energy_scenario(const std::string& name) {
    for (const EnergyScenario& s : energy_scenarios()) {
        if (s.name == name) return s;
    }
    throw std::invalid_argument("unknown energy scenario: " + name);
}

}  // namespace nightbeam
