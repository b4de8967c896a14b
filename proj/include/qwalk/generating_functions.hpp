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
 * Generating functions of the walk, expanded as truncated series.
 *
 * Everything that does not depend on w is built in exact rational
 * arithmetic. The w-dependent combinations are templated on the scalar: use
 * Rational when cos w and sin w are rational (w a multiple of pi/2) to get
 * the return-probability tables bit-exactly, double otherwise.
 */

#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/series.hpp"

namespace qwalk {

/// (1 + z^4)^{1/2}; the z^{4m} coefficient is binom(1/2, m).
inline Series<Rational> sqrt_one_plus_z4(int order) {
    Series<Rational> s = Series<Rational>::constant(Rational(1), order);
    if (order >= 4) {
        s.set(4, Rational(1));
    }
    return sqrt(s);
}

/// Z = -1 - z^2 + sqrt(1 + z^4): generating function of a single excursion
/// from the origin, in the variable z over half-times (sum_a r*_{2a-1} z^{2a}).
inline Series<Rational> excursion_series(int order) {
    return sqrt_one_plus_z4(order) - Series<Rational>::monomial(Rational(1), 2, order) -
           Rational(1);
}

/// sum_n r*_n z^n = (-1 - z^2 + sqrt(1 + z^4)) / z.
inline Series<Rational> r_star_series(int order) {
    if (order < 1) {
        throw std::invalid_argument("r_star_series: order must be >= 1");
    }
    return excursion_series(order + 1).shifted_down(1);
}

/// sqrt2 * lambda_+ = (-1 + z^2 + sqrt(1 + z^4)) / z, a genuine power series.
inline RootTwoScaled<Series<Rational>> lambda_plus_series(int order) {
    const Series<Rational> num = sqrt_one_plus_z4(order + 1) +
                                 Series<Rational>::monomial(Rational(1), 2, order + 1) -
                                 Rational(1);
    return {num.shifted_down(1), 1};
}

/// lambda_- = (-1 + z^2 - sqrt(1 + z^4)) / (sqrt2 z) has a pole at z = 0.
[[noreturn]] inline void lambda_minus_series(int /*order*/) {
    throw std::domain_error("lambda_minus has a pole at z = 0 and no power series; use "
                            "1/lambda_- = -lambda_+ instead");
}

/// First-passage generating functions in the {P, Q, R, S} basis; each
/// component is body / sqrt2^power.
struct FirstPassageSeries {
    RootTwoScaled<Series<Rational>> p;
    RootTwoScaled<Series<Rational>> q;
    RootTwoScaled<Series<Rational>> r;
    RootTwoScaled<Series<Rational>> s;
};

/**
 * Hadamard walk absorbed at 0, started from m.
 *
 * m >= 1: p = z lambda_+^{m-1}, r = ((-1 + sqrt(1+z^4)) / z) lambda_+^{m-1}, q = s = 0.
 * m <= -1: q = z lambda_-^{m+1}, s = ((1 - sqrt(1+z^4)) / z) lambda_-^{m+1}, p = r = 0,
 *          evaluated through lambda_-^{-1} = -lambda_+.
 */
inline FirstPassageSeries first_passage_gf(Position m, int order) {
    if (m == 0) {
        throw std::invalid_argument("first_passage_gf: start must be nonzero");
    }
    const long hops = m > 0 ? static_cast<long>(m - 1) : static_cast<long>(-m - 1);
    Series<Rational> lam = lambda_plus_series(order).body;
    if (m < 0) {
        lam = -lam;
    }
    const Series<Rational> lam_pow = lam.pow(static_cast<int>(hops));
    const Series<Rational> z = Series<Rational>::monomial(Rational(1), 1, order);
    Series<Rational> reflect = (sqrt_one_plus_z4(order + 1) - Rational(1)).shifted_down(1);
    if (m < 0) {
        reflect = -reflect;
    }
    const int power = static_cast<int>(hops);
    const RootTwoScaled<Series<Rational>> zero{Series<Rational>(order), 0};
    FirstPassageSeries out{zero, zero, zero, zero};
    if (m > 0) {
        out.p = {z * lam_pow, power};
        out.r = {reflect * lam_pow, power};
    } else {
        out.q = {z * lam_pow, power};
        out.s = {reflect * lam_pow, power};
    }
    return out;
}

/**
 * The four origin-amplitude series, each multiplied by sqrt2:
 * left_real[n] = sqrt2 Re Psi_n^L(0), and so on.
 */
template <class Scalar> struct AmplitudeSeries {
    Series<Scalar> left_real;
    Series<Scalar> left_imag;
    Series<Scalar> right_real;
    Series<Scalar> right_imag;

    int order() const { return left_real.order(); }

    /// p_n(0) = (1/2) sum of the four squared coefficients.
    Scalar return_probability(int n) const {
        const Scalar a = left_real[n], b = left_imag[n], c = right_real[n], d = right_imag[n];
        return (a * a + b * b + c * c + d * d) / Scalar(2);
    }

    Vector2cd amplitude(int n) const {
        const double s = 1.0 / std::sqrt(2.0);
        Vector2cd v;
        v << std::complex<double>(to_double(left_real[n]) * s, to_double(left_imag[n]) * s),
            std::complex<double>(to_double(right_real[n]) * s, to_double(right_imag[n]) * s);
        return v;
    }
};

namespace detail {
template <class Scalar> Series<Scalar> lift(const Series<Rational>& s) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return s;
    } else {
        return s.template cast<Scalar>(
            [](const Rational& q) { return static_cast<Scalar>(q.convert_to<Scalar>()); });
    }
}
} // namespace detail

/**
 * Origin amplitudes of the off-diagonal defect walk by series division:
 *   sqrt2 Re Psi^L = sqrt2 Im Psi^R = (2 + Z cos w) / D,
 *   sqrt2 Im Psi^L = (1 + sin w) Z / D,  sqrt2 Re Psi^R = -(1 - sin w) Z / D,
 * with D = 2 + 2 Z cos w + Z^2 and Z = excursion_series.
 */
template <class Scalar>
AmplitudeSeries<Scalar> origin_gf(const Scalar& cos_omega, const Scalar& sin_omega, int order) {
    const Series<Scalar> z = detail::lift<Scalar>(excursion_series(order));
    const Series<Scalar> den = Scalar(2) + Scalar(2) * cos_omega * z + z * z;
    AmplitudeSeries<Scalar> out{
        (Scalar(2) + cos_omega * z) / den,
        ((Scalar(1) + sin_omega) * z) / den,
        (-(Scalar(1) - sin_omega) * z) / den,
        Series<Scalar>(order),
    };
    out.right_imag = out.left_real;
    return out;
}

inline AmplitudeSeries<double> origin_gf(double omega, int order) {
    return origin_gf<double>(std::cos(omega), std::sin(omega), order);
}

/**
 * Same four series from the rationalized closed forms, with s = sqrt(1+z^4)
 * and E = 3 - 2c + 2(1-c)^2 z^2 + (3-2c) z^4:
 *   sqrt2 Re Psi^L = (4 - 3c + 2(1-c)^2 z^2 + (2-c) z^4 + (2-c)(1+z^2) s) / (2E)
 *   sqrt2 Im Psi^L = -(1 + sin w) F / (2E),  sqrt2 Re Psi^R = (1 - sin w) F / (2E),
 *   F = 1 + 2(1-c) z^2 + z^4 + (z^2 - 1) s.
 */
template <class Scalar>
AmplitudeSeries<Scalar> origin_gf_rationalized(const Scalar& cos_omega, const Scalar& sin_omega,
                                               int order) {
    using S = Series<Scalar>;
    const Scalar c = cos_omega;
    const Scalar one(1), two(2);
    const S root = detail::lift<Scalar>(sqrt_one_plus_z4(order));
    const S z2 = S::monomial(one, 2, order);
    const S z4 = S::monomial(one, 4, order);
    const Scalar omc = one - c;
    const S e = two * (S::constant(Scalar(3) - two * c, order) + two * omc * omc * z2 +
                       (Scalar(3) - two * c) * z4);
    const S real_num = S::constant(Scalar(4) - Scalar(3) * c, order) + two * omc * omc * z2 +
                       (two - c) * z4 + (two - c) * ((z2 + one) * root);
    const S f = S::constant(one, order) + two * omc * z2 + z4 + (z2 - one) * root;
    AmplitudeSeries<Scalar> out{real_num / e, (-(one + sin_omega) * f) / e,
                                ((one - sin_omega) * f) / e, S(order)};
    out.right_imag = out.left_real;
    return out;
}

/**
 * Return-probability series of the classical walk (left with probability
 * p0 at the origin, p elsewhere):
 *   f(z) = 1 / (1 - K (1 - sqrt(1 - 4pq z^2)) / 2),  K = p0/p + q0/q.
 */
template <class Scalar>
Series<Scalar> classical_gf(const Scalar& p0, const Scalar& q0, const Scalar& p, const Scalar& q,
                            int order) {
    const Scalar zero(0), one(1);
    auto near = [](const Scalar& a, const Scalar& b) {
        if constexpr (std::is_same_v<Scalar, Rational>) {
            return a == b;
        } else {
            return std::abs(a - b) <= Scalar(1e-12);
        }
    };
    if (!(p > zero && p < one && q > zero && q < one)) {
        throw std::invalid_argument("classical_gf: p and q must lie strictly inside (0, 1)");
    }
    if (!near(p + q, one) || !near(p0 + q0, one) || p0 < zero || q0 < zero) {
        throw std::invalid_argument("classical_gf: probabilities must sum to 1");
    }
    using S = Series<Scalar>;
    const Scalar k = p0 / p + q0 / q;
    const S inner = S::constant(one, order) - Scalar(4) * p * q * S::monomial(one, 2, order);
    const S first_return = (one - sqrt(inner)) * (k / Scalar(2));
    return S::constant(one, order) / (S::constant(one, order) - first_return);
}

/**
 * Psi_{2n}(0) for n = 0..max_half_time as a sum over compositions
 * (a_1..a_k) of n of prod_j r*_{2a_j - 1} times (M/2)^k phi*, where
 * M = [[-e^{-iw}, 1], [-1, -e^{iw}]]. The k-fold composition sums are built
 * by repeated convolution, and (M/2)^k phi* is taken from the eigen-expansion
 * of M in TheoryParams.
 */
std::vector<Vector2cd> excursion_amplitudes(double omega, int max_half_time);

/// Psi_{2n}(0) for a single n >= 1.
Vector2cd excursion_amplitude(double omega, int half_time);

} // namespace qwalk
