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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qwalk/generating_functions.hpp"
#include "qwalk/theory.hpp"

namespace qwalk {

std::vector<Vector2cd> excursion_amplitudes(double omega, int max_half_time) {
    if (max_half_time < 0) {
        throw std::invalid_argument("excursion_amplitudes: half time must be nonnegative");
    }
    using cd = std::complex<double>;
    const double inv_root2 = 1.0 / std::sqrt(2.0);
    const auto n_max = static_cast<std::size_t>(max_half_time);

    std::vector<Vector2cd> out(n_max + 1, Vector2cd::Zero());
    out[0] << cd(inv_root2, 0.0), cd(0.0, inv_root2);
    if (max_half_time == 0) {
        return out;
    }

    // x_a = r*_{2a-1}: the weight of one excursion of length 2a
    const Series<Rational> r_star = r_star_series(2 * max_half_time - 1);
    std::vector<double> x(n_max + 1, 0.0);
    for (std::size_t a = 1; a <= n_max; ++a) {
        x[a] = to_double(r_star[static_cast<int>(2 * a - 1)]);
    }

    const TheoryParams<double> t = params(omega);
    const cd u_plus = t.gamma_plus / 2.0;
    const cd u_minus = t.gamma_minus / 2.0;
    cd u_plus_k(1.0, 0.0), u_minus_k(1.0, 0.0);

    // compositions[n] = sum over compositions of n into k parts of prod x_{a_j}
    std::vector<double> compositions = x;
    for (std::size_t k = 1; k <= n_max; ++k) {
        u_plus_k *= u_plus;
        u_minus_k *= u_minus;
        // (M/2)^k phi*
        const cd left = inv_root2 * (t.left_weight_plus() * u_plus_k +
                                     t.left_weight_minus() * u_minus_k);
        const cd right = cd(0.0, -inv_root2) * (t.right_weight_plus() * u_plus_k +
                                                 t.right_weight_minus() * u_minus_k);
        for (std::size_t n = k; n <= n_max; ++n) {
            out[n](0) += compositions[n] * left;
            out[n](1) += compositions[n] * right;
        }
        if (k == n_max) {
            break;
        }
        std::vector<double> next(n_max + 1, 0.0);
        for (std::size_t n = k + 1; n <= n_max; ++n) {
            double acc = 0.0;
            for (std::size_t a = 1; a + k <= n; ++a) {
                acc += x[a] * compositions[n - a];
            }
            next[n] = acc;
        }
        compositions = std::move(next);
    }
    return out;
}

Vector2cd excursion_amplitude(double omega, int half_time) {
    if (half_time < 1) {
        throw std::invalid_argument("excursion_amplitude: half time must be >= 1");
    }
    return excursion_amplitudes(omega, half_time)[static_cast<std::size_t>(half_time)];
}

} // namespace qwalk
