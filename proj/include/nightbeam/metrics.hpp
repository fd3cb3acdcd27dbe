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
#include <optional>
#include <stdexcept>

namespace nightbeam {

struct ConfusionMatrix {
    std::int64_t tp{0};
    std::int64_t fp{0};
    std::int64_t fn{0};
    std::int64_t tn{0};

    [[nodiscard]] std::int64_t total() const noexcept { return tp + fp + fn + tn; }
};

/// Classification ratios in [0, 1]. A field is empty when its denominator is
/// zero (e.g. precision with no positive predictions).
struct MetricsReport {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> accuracy;
    std::optional<double> f1;
};

inline MetricsReport compute_metrics(const ConfusionMatrix& cm) {
    if (cm.tp < 0 || cm.fp < 0 || cm.fn < 0 || cm.tn < 0) {
        throw std::invalid_argument("compute_metrics: counts must be >= 0");
    }
    MetricsReport report;
    if (cm.tp + cm.fp > 0) {
        report.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    }
    if (cm.tp + cm.fn > 0) {
        report.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    }
    if (cm.total() > 0) {
        report.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
    }
    if (2 * cm.tp + cm.fp + cm.fn > 0) {
        report.f1 = static_cast<double>(2 * cm.tp) / static_cast<double>(2 * cm.tp + cm.fp + cm.fn);
    }
    return report;
}

}  // namespace nightbeam
