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
#include <stdexcept>
#include <utility>
#include <vector>

namespace nightbeam {

/// One on/off edge of the headlight, at an exact virtual time. Off edges fall
/// where the countdown actually hit zero, which may be between ticks.
struct LightTransition {
    double timestamp{0.0};
    bool on{false};
};

/**
 * Two-state headlight machine driven by danger messages on a virtual clock.
 *
 * Off + danger        -> On, countdown starts at tau seconds.
 * On, countdown > 1 s -> danger messages are ignored (no retrigger).
 * On, countdown <= 1s -> a danger message rearms a full tau cycle.
 * Countdown hits 0    -> Off until the next danger message.
 *
 * The machine is tick-driven: call tick() once per frame (or event) with the
 * current virtual time and whether any danger was reported. Ticks must not go
 * backward. No wall-clock timers are involved, so replaying the same tick
 * stream reproduces identical transitions.
 */
class LightController {
public:
    explicit LightController(double tau_s) : tau_s_(tau_s) {
        if (!(tau_s > 0.0)) {
            throw std::invalid_argument("LightController: tau must be > 0");
        }
    }

    /// Advances the countdown to `now`, applies the message, and returns the
    /// post-transition light state.
    bool tick(double now, bool danger_message_present) {
        if (now < last_tick_) {
            throw std::invalid_argument("LightController::tick: time went backward");
        }
        const double elapsed = now - last_tick_;
        if (light_on_) {
            const double consumed = std::min(elapsed, timer_s_);
            lit_accum_s_ += consumed;
            if (timer_s_ <= elapsed) {
                transitions_.push_back({last_tick_ + timer_s_, false});
                timer_s_ = 0.0;
                light_on_ = false;
            } else {
                timer_s_ -= elapsed;
            }
        }
        if (danger_message_present) {
            if (!light_on_) {
                light_on_ = true;
                timer_s_ = tau_s_;
                transitions_.push_back({now, true});
            } else if (timer_s_ <= 1.0) {
                timer_s_ = tau_s_;  // accepted: new cycle, no edge recorded
            }
            // else: ignored while the countdown is above one second
        }
        last_tick_ = now;
        return light_on_;
    }

    [[nodiscard]] bool light_on() const noexcept { return light_on_; }
    [[nodiscard]] double timer_s() const noexcept { return timer_s_; }
    [[nodiscard]] double tau_s() const noexcept { return tau_s_; }
    [[nodiscard]] double last_tick() const noexcept { return last_tick_; }
    [[nodiscard]] const std::vector<LightTransition>& transitions() const noexcept {
        return transitions_;
    }

    /// Seconds lit so far, counting the still-running countdown. After the
    /// final tick this is the total the lamp will have been on once the
    /// current cycle (if any) runs out.
    [[nodiscard]] double total_on_time_s() const noexcept { return lit_accum_s_ + timer_s_; }

private:
    double tau_s_;
    double timer_s_{0.0};
    bool light_on_{false};
    double last_tick_{0.0};
    double lit_accum_s_{0.0};
    std::vector<LightTransition> transitions_;
};

/// Total seconds lit for a (timestamp, danger) message trace, replayed
/// through the controller; includes the run-out of the final cycle.
inline double on_duration(const std::vector<std::pair<double, bool>>& trace, double tau_s) {
    LightController controller(tau_s);
    for (const auto& [t, danger] : trace) {
        controller.tick(t, danger);
    }
    return controller.total_on_time_s();
}

}  // namespace nightbeam
