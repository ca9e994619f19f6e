// Copyright 2026 The ffcirc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Model parameters and the three discrete sign/angle conventions that the
 * builder resolves numerically.
 */
#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffc {

/// Factor applied to the Bogoliubov angle inside the B gate.
enum class AngleConvention { Full, Half };
/// Sign of the two string boundary terms of the chain Hamiltonian.
enum class BoundarySign { AsWritten, Flipped };
/// Whether |1> on a mode line adds +eps or -eps to the energy.
enum class OccupationSign { Plus, Minus };

struct ConventionChoice {
    AngleConvention angle = AngleConvention::Half;
    BoundarySign boundary = BoundarySign::AsWritten;
    OccupationSign occupation = OccupationSign::Plus;

    friend bool operator==(const ConventionChoice &,
                           const ConventionChoice &) = default;

    [[nodiscard]] double angle_factor() const {
        return angle == AngleConvention::Half ? 0.5 : 1.0;
    }
    [[nodiscard]] double boundary_factor() const {
        return boundary == BoundarySign::AsWritten ? 1.0 : -1.0;
    }
    [[nodiscard]] double occupation_factor() const {
        return occupation == OccupationSign::Plus ? 1.0 : -1.0;
    }
};

/// All eight candidates, in a fixed order.
inline std::array<ConventionChoice, 8> all_conventions() {
    std::array<ConventionChoice, 8> out{};
    std::size_t i = 0;
    for (auto b : {BoundarySign::AsWritten, BoundarySign::Flipped}) {
        for (auto a : {AngleConvention::Full, AngleConvention::Half}) {
            for (auto o : {OccupationSign::Plus, OccupationSign::Minus}) {
                out[i++] = ConventionChoice{a, b, o};
            }
        }
    }
    return out;
}

inline std::string to_string(AngleConvention a) {
    return a == AngleConvention::Full ? "FULL" : "HALF";
}
inline std::string to_string(BoundarySign b) {
    return b == BoundarySign::AsWritten ? "AS_WRITTEN" : "FLIPPED";
}
inline std::string to_string(OccupationSign o) {
    return o == OccupationSign::Plus ? "PLUS" : "MINUS";
}
inline std::string to_string(const ConventionChoice &c) {
    return to_string(c.angle) + "/" + to_string(c.boundary) + "/" +
           to_string(c.occupation);
}

inline AngleConvention angle_from_string(std::string_view s) {
    if (s == "FULL") {
        return AngleConvention::Full;
    }
    if (s == "HALF") {
        return AngleConvention::Half;
    }
    throw std::invalid_argument("unknown angle convention: " + std::string(s));
}
inline BoundarySign boundary_from_string(std::string_view s) {
    if (s == "AS_WRITTEN") {
        return BoundarySign::AsWritten;
    }
    if (s == "FLIPPED") {
        return BoundarySign::Flipped;
    }
    throw std::invalid_argument("unknown boundary sign: " + std::string(s));
}
inline OccupationSign occupation_from_string(std::string_view s) {
    if (s == "PLUS") {
        return OccupationSign::Plus;
    }
    if (s == "MINUS") {
        return OccupationSign::Minus;
    }
    throw std::invalid_argument("unknown occupation sign: " + std::string(s));
}

inline bool is_power_of_two(long long n) {
    return n > 0 && std::has_single_bit(static_cast<unsigned long long>(n));
}

/**
 * @brief Chain length and couplings. n must be 2^k with k >= 1.
 */
struct ModelParams {
    int n = 4;
    double lambda = 0.0;
    double gamma = 1.0;

    void validate() const {
        if (n < 2 || !is_power_of_two(n)) {
            throw std::invalid_argument("n must be a power of two");
        }
        if (!std::isfinite(lambda) || !std::isfinite(gamma)) {
            throw std::invalid_argument("lambda and gamma must be finite");
        }
    }
};

} // namespace ffc
