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

namespace nightbeam {

/**
 * Seeded splitmix64 generator.
 *
 * Hand-rolled instead of <random> distributions because the standard leaves
 * distribution algorithms implementation-defined; this stream is bit-identical
 * on every platform, which the replay and trace-diff tooling relies on.
 * Child generators derived from (seed, key...) give independent substreams so
 * trials can run in any order, or in parallel, with identical results.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], both ends inclusive. Mask-and-reject, so
    /// every value is exactly equiprobable.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept {
        const auto range = static_cast<std::uint64_t>(hi - lo);
        if (range == 0) return lo;
        std::uint64_t mask = range;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t draw;
        do {
            draw = next_u64() & mask;
        } while (draw > range);
        return lo + static_cast<std::int64_t>(draw);
    }

    double uniform_real(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    /// Gaussian sample, Box-Muller form. Consumes two uniforms per call.
    double gaussian(double mean, double stddev) noexcept {
        const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * M_PI * u2);
    }

    /// Independent substream keyed by up to three indices. Derivation uses
    /// only the original seed, never the current state.
    [[nodiscard]] Rng child(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const noexcept {
        std::uint64_t s = mix(seed_ ^ 0xA3EC4E9F0B1C2D37ULL);
        s = mix(s ^ mix(a + 0x9E3779B97F4A7C15ULL));
        s = mix(s ^ mix(b + 0xBF58476D1CE4E5B9ULL));
        s = mix(s ^ mix(c + 0x94D049BB133111EBULL));
        return Rng(s);
    }

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace nightbeam
