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
 * Brute-force path sums. Exponential in the number of steps; this is the
 * ground truth the polynomial engines are checked against, so it shares no
 * code with them beyond the coin definitions.
 *
 * Products are written newest step on the left: "QP0" means P0 first, then Q.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qwalk/coin.hpp"
#include "qwalk/series.hpp"

namespace qwalk {

inline constexpr int kMaxEnumerationSteps = 14;

/// Sum of path products with the number of left and right steps it was built from.
struct PathMatrix {
    Matrix2cd value = Matrix2cd::Zero();
    int steps = 0;
    int left_steps = 0;
    int right_steps = 0;
};

/// Xi_n(l, n - l): all paths from the origin with `left_steps` left moves in n steps.
PathMatrix xi(int steps, int left_steps, const CoinField<double>& field);

/// xi(steps, l, field) for every l = 0..steps in one enumeration.
std::vector<PathMatrix> xi_all(int steps, const CoinField<double>& field);

using IntMatrix2 = Eigen::Matrix<long long, 2, 2>;

/// Hadamard-coin first-passage sum, exact: value = sum.body / sqrt2^sum.power.
struct FirstPassageSum {
    RootTwoScaled<IntMatrix2> sum{IntMatrix2::Zero(), 0};
    /// One word per path, e.g. "PPQPQ" (leftmost letter = final step).
    std::vector<std::string> words;

    Matrix2cd value() const;
};

/**
 * Paths of the Hadamard walk started at m >= 1 that stay in {1, 2, ...} and
 * first reach 0 at exactly `steps`. No paths (zero sum) when steps < m or the
 * parities disagree.
 */
FirstPassageSum first_passage_plus(int steps, Position start);

/// Mirror image: start m <= -1, stay in {..., -2, -1}, first reach 0 at `steps`.
FirstPassageSum first_passage_minus(int steps, Position start);

inline Matrix2cd xi_first_passage_plus(int steps, Position start) {
    return first_passage_plus(steps, start).value();
}
inline Matrix2cd xi_first_passage_minus(int steps, Position start) {
    return first_passage_minus(steps, start).value();
}

/// The Hadamard split P, Q and its complements R, S; together an orthonormal
/// basis of 2x2 complex matrices under <A|B> = tr(A^dagger B).
struct HadamardBasis {
    Matrix2cd p, q, r, s;
};
const HadamardBasis& hadamard_basis();

/// Same basis with the 1/sqrt2 stripped: integer matrices.
struct IntegerHadamardBasis {
    IntMatrix2 p, q, r, s;
};
const IntegerHadamardBasis& integer_hadamard_basis();

template <class T> struct BasisCoefficients {
    T p, q, r, s;
};

/// (<P|M>, <Q|M>, <R|M>, <S|M>)
BasisCoefficients<std::complex<double>> basis_expand(const Matrix2cd& m);
Matrix2cd basis_reconstruct(const BasisCoefficients<std::complex<double>>& c);

/// Exact expansion of body / sqrt2^k: each coefficient is integer / sqrt2^{k+1}.
BasisCoefficients<RootTwoScaled<Rational>> basis_expand(const RootTwoScaled<IntMatrix2>& m);

/// Coefficient sequences of the first-passage sums from `start`, n = 0..max_steps.
struct FirstPassageCoeffs {
    std::vector<RootTwoScaled<Rational>> p, q, r, s;
};
FirstPassageCoeffs first_passage_coefficients(Position start, int max_steps);

enum class PathShape {
    LeftThenLeft,  ///< "P...P": first step left
    RightThenLeft, ///< "P...Q": first step right
    Other,
};
PathShape classify_path(const std::string& word);

/// Xi*_n = Xi_{n-1}^{(1)} Q0 + Xi_{n-1}^{(-1)} P0 by enumeration: paths from
/// the origin returning to it for the first time at time n. Zero for odd n.
PathMatrix xi_star(int steps, double omega);

/// (r / 2) [[-e^{-iw}, 1], [-1, -e^{iw}]] with r = r*_{n-1}.
Matrix2cd xi_star_closed_form(double r_star_previous, double omega);

/// Psi_{2n}(0) from sum over compositions of n of prod_j Xi*_{2 a_j} phi*,
/// every Xi* taken from enumeration.
Vector2cd excursion_decomposition_amplitude(int half_time, double omega);

} // namespace qwalk
