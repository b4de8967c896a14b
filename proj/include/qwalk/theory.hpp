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
 * Closed-form scalars of the off-diagonal defect walk: excursion eigen-data,
 * the localization constant c(w), the oscillating large-time amplitudes, and
 * the decay laws of the comparison walks.
 */

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qwalk/coin.hpp"

namespace qwalk {

/// theta0 kept as its (sin, cos) pair.
template <class Scalar = double> struct ThetaZero {
    Scalar sin;
    Scalar cos;

    Scalar angle() const { return std::atan2(sin, cos); }
};

/**
 * Eigen-data of the excursion matrix M = [[-e^{-iw}, 1], [-1, -e^{iw}]]:
 * eigenvalues gamma_pm = -cos w +- i sqrt(1 + sin^2 w), with mu_pm and C_pm
 * giving the weights of phi* on the two eigen-directions.
 */
template <class Scalar = double> struct TheoryParams {
    Scalar omega;
    Complex<Scalar> gamma_plus;
    Complex<Scalar> gamma_minus;
    Scalar mu_plus;
    Scalar mu_minus;
    Scalar c_plus; ///< C_+, positive
    Scalar c_minus; ///< C_-, positive
    Scalar localization; ///< c(w)
    ThetaZero<Scalar> theta0;
    /// true when c(w) = 0, i.e. w = 0; the oscillating asymptotics are empty there.
    bool degenerate;

    /// (1 - mu_pm) / C_pm^2; the two weights sum to 1.
    Scalar left_weight_plus() const { return (1 - mu_plus) / (c_plus * c_plus); }
    Scalar left_weight_minus() const { return (1 - mu_minus) / (c_minus * c_minus); }
    /// mu_pm (1 - mu_pm) / C_pm^2; the two weights sum to -1.
    Scalar right_weight_plus() const { return mu_plus * left_weight_plus(); }
    Scalar right_weight_minus() const { return mu_minus * left_weight_minus(); }
};

/// (2(1 - cos w) / (3 - 2 cos w))^2
template <class Scalar = double> Scalar localization_constant(Scalar omega) {
    const Scalar c = std::cos(omega);
    const Scalar r = Scalar(2) * (Scalar(1) - c) / (Scalar(3) - Scalar(2) * c);
    return r * r;
}

template <class Scalar = double> TheoryParams<Scalar> params(Scalar omega) {
    omega = normalize_angle(omega);
    const Scalar c = std::cos(omega);
    const Scalar s = std::sin(omega);
    const Scalar root = std::sqrt(Scalar(1) + s * s);

    TheoryParams<Scalar> t{};
    t.omega = omega;
    t.gamma_plus = Complex<Scalar>(-c, root);
    t.gamma_minus = Complex<Scalar>(-c, -root);
    t.mu_plus = s - root;
    t.mu_minus = s + root;
    const Scalar cp2 = Scalar(2) * ((Scalar(1) + s * s) - s * root);
    const Scalar cm2 = Scalar(2) * ((Scalar(1) + s * s) + s * root);
    // (1 + s^2) -+ s sqrt(1 + s^2) = sqrt(1 + s^2) (sqrt(1 + s^2) -+ s) > 0 for real w
    if (!(cp2 > Scalar(0)) || !(cm2 > Scalar(0))) {
        throw std::domain_error("params: C_pm^2 must be positive");
    }
    t.c_plus = std::sqrt(cp2);
    t.c_minus = std::sqrt(cm2);
    t.localization = localization_constant(omega);
    // Roots w = z^2 of (3-2c) w^2 + 2(1-c)^2 w + (3-2c) lie at e^{+-i theta0}.
    const Scalar den = Scalar(3) - Scalar(2) * c;
    t.theta0.cos = -(Scalar(1) - c) * (Scalar(1) - c) / den;
    t.theta0.sin = (Scalar(2) - c) * root / den;
    t.degenerate = (Scalar(1) - c) == Scalar(0);
    return t;
}

/// Closed-form mean of c(w) for w uniform on [0, 2pi): (25 - 7 sqrt5) / 25.
template <class Scalar = double> Scalar expected_localization_uniform() {
    return (Scalar(25) - Scalar(7) * std::sqrt(Scalar(5))) / Scalar(25);
}

/// Periodic trapezoid rule for (1/2pi) int_0^{2pi} c(w) dw on `points` nodes.
template <class Scalar = double> Scalar expected_localization_trapezoid(int points) {
    if (points < 1) {
        throw std::invalid_argument("quadrature needs at least one node");
    }
    const Scalar h = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(points);
    Scalar sum(0);
    for (int j = 0; j < points; ++j) {
        sum += localization_constant(h * Scalar(j));
    }
    return sum / Scalar(points);
}

/// Large-n predictions for the real and imaginary parts of Psi_{2n}(0).
template <class Scalar = double> struct AmplitudePrediction {
    Scalar left_real;
    Scalar left_imag;
    Scalar right_real;
    Scalar right_imag;

    Scalar squared_sum() const {
        return left_real * left_real + left_imag * left_imag + right_real * right_real +
               right_imag * right_imag;
    }
};

template <class Scalar = double>
AmplitudePrediction<Scalar> asymptotic_amplitudes(Scalar omega, long half_time) {
    const TheoryParams<Scalar> t = params(omega);
    if (t.degenerate) {
        throw std::domain_error(
            "asymptotic_amplitudes: no oscillating regime at w = 0 (return probability decays)");
    }
    const Scalar c = std::cos(t.omega);
    const Scalar s = std::sin(t.omega);
    const Scalar root = std::sqrt(Scalar(1) + s * s);
    const Scalar a = std::sqrt(Scalar(2)) * (Scalar(1) - c) / (Scalar(3) - Scalar(2) * c);
    const Scalar phase = Scalar(half_time) * t.theta0.angle();
    AmplitudePrediction<Scalar> p{};
    p.left_real = a * std::cos(phase);
    p.right_imag = p.left_real;
    p.left_imag = -a * (Scalar(1) + s) / root * std::sin(phase);
    p.right_real = a * (Scalar(1) - s) / root * std::sin(phase);
    return p;
}

/// 1 / (pi n): decay of p_{2n}(0) for the Hadamard walk.
template <class Scalar = double> Scalar hadamard_asymptote(long half_time) {
    if (half_time < 1) {
        throw std::invalid_argument("hadamard_asymptote: n must be >= 1");
    }
    return Scalar(1) / (std::numbers::pi_v<Scalar> * Scalar(half_time));
}

/**
 * (2 / K) (4pq)^n / sqrt(pi n), K = p0/p + q0/q, for the classical walk with
 * left probability p0 at the origin and p elsewhere.
 *
 * Valid for K <= 2. For K > 2 the origin binds the walker and the return
 * probability decays slower than (4pq)^n.
 */
template <class Scalar = double>
Scalar classical_asymptote(Scalar p0, Scalar q0, Scalar p, Scalar q, long half_time) {
    if (!(p > 0 && p < 1 && q > 0 && q < 1)) {
        throw std::invalid_argument("classical_asymptote: p, q must lie in (0, 1)");
    }
    if (half_time < 1) {
        throw std::invalid_argument("classical_asymptote: n must be >= 1");
    }
    const Scalar k = p0 / p + q0 / q;
    const Scalar n = Scalar(half_time);
    return Scalar(2) / k * std::pow(Scalar(4) * p * q, n) / std::sqrt(std::numbers::pi_v<Scalar> * n);
}

} // namespace qwalk
