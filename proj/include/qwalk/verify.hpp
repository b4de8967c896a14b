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
/**
 * @file
 * Self-check registry: every engine cross-check and closed-form identity,
 * each reporting the largest error it observed.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

struct VerifyOptions {
    /// Replaces every check's nominal tolerance when set.
    std::optional<double> tolerance;
    /// Added to the (0,0) entry of the origin coin of the walk under test,
    /// which breaks unitarity by about this much.
    double coin_perturbation = 0.0;
};

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

} // namespace qwalk
