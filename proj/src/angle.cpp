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

#include "qwalk/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/coin.hpp"

namespace qwalk {

namespace {

[[noreturn]] void malformed(std::string_view text) {
    throw std::invalid_argument("malformed angle '" + std::string(text) +
                                "' (expected a number or k*pi/d)");
}

long parse_positive_int(std::string_view digits, std::string_view whole) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value <= 0) {
        malformed(whole);
    }
    return value;
}

} // namespace

Angle parse_angle(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        malformed(whole);
    }

    const auto pi_at = text.find("pi");
    if (pi_at == std::string_view::npos) {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
            malformed(whole);
        }
        Angle a;
        a.radians = normalize_angle(value);
        if (a.radians == 0.0) {
            a.quarter_turns = 0;
        }
        return a;
    }

    bool negative = false;
    std::string_view coef = text.substr(0, pi_at);
    if (!coef.empty() && (coef.front() == '-' || coef.front() == '+')) {
        negative = coef.front() == '-';
        coef.remove_prefix(1);
    }
    if (!coef.empty() && coef.back() == '*') {
        coef.remove_suffix(1);
    }
    const long numerator = coef.empty() ? 1 : parse_positive_int(coef, whole);

    std::string_view rest = text.substr(pi_at + 2);
    long denominator = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            malformed(whole);
        }
        denominator = parse_positive_int(rest.substr(1), whole);
    }

    const long signed_num = negative ? -numerator : numerator;
    Angle a;
    a.radians = normalize_angle(static_cast<double>(signed_num) * std::numbers::pi /
                                static_cast<double>(denominator));
    // k pi / d is a whole number of quarter turns iff d divides 2k
    if ((2 * signed_num) % denominator == 0) {
        const long quarters = ((2 * signed_num / denominator) % 4 + 4) % 4;
        a.quarter_turns = static_cast<int>(quarters);
        a.radians = static_cast<double>(quarters) * std::numbers::pi / 2.0;
    }
    return a;
}

ExactTrig quarter_turn_trig(int quarter_turns) {
    switch (((quarter_turns % 4) + 4) % 4) {
    case 0:
        return {1, 0};
    case 1:
        return {0, 1};
    case 2:
        return {-1, 0};
    default:
        return {0, -1};
    }
}

} // namespace qwalk
