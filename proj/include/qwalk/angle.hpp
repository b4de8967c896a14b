// Copyright 2026 The qwalk Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string_view>

namespace qwalk {

struct Angle {
    double radians = 0.0; ///< in [0, 2pi)
    /// Set when the angle is an exact multiple of pi/2 (value in 0..3), so that
    /// cos and sin are exactly 0 or +-1.
    std::optional<int> quarter_turns;
};

/**
 * Parses a float literal ("1.25") or a rational multiple of pi ("pi",
 * "pi/2", "3pi/2", "-2*pi/3"). The result is reduced to [0, 2pi).
 * Throws std::invalid_argument on malformed input.
 */
Angle parse_angle(std::string_view text);

/// (cos, sin) of k quarter turns.
struct ExactTrig {
    int cos;
    int sin;
};
ExactTrig quarter_turn_trig(int quarter_turns);

} // namespace qwalk
