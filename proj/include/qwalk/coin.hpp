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
 * Two-state coin operators on the integer line and their left/right split.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace qwalk {

using Position = std::int64_t;

template <class Scalar> using Complex = std::complex<Scalar>;
template <class Scalar> using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <class Scalar> using Vector2c = Eigen::Matrix<Complex<Scalar>, 2, 1>;

/// A coin is any 2x2 unitary acting on the chirality space.
template <class Scalar> using CoinMatrix = Matrix2c<Scalar>;

using Matrix2cd = Matrix2c<double>;
using Vector2cd = Vector2c<double>;

enum class Chirality { Left, Right };

/// Left is [1,0]^T, Right is [0,1]^T.
template <class Scalar = double>
Vector2c<Scalar> basis_vector(Chirality chirality) {
    Vector2c<Scalar> v = Vector2c<Scalar>::Zero();
    v(chirality == Chirality::Left ? 0 : 1) = Scalar(1);
    return v;
}

/// Reduces an angle to [0, 2pi).
template <class Scalar> Scalar normalize_angle(Scalar omega) {
    constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    Scalar r = std::fmod(omega, two_pi);
    if (r < Scalar(0)) {
        r += two_pi;
    }
    // fmod of a value just below a multiple of 2pi can round up to 2pi itself
    if (r >= two_pi) {
        r = Scalar(0);
    }
    return r;
}

/// (a, b) ~ (1/sqrt2, 1/sqrt2) with b = sqrt(1 - a^2): a^2 + b^2 = 1 to well
/// under one ulp, so repeated steps do not drift the norm systematically.
template <class Scalar> struct UnitPair {
    Scalar a;
    Scalar b;
};
template <class Scalar> UnitPair<Scalar> unit_pair() {
    const Scalar a = Scalar(1) / std::sqrt(Scalar(2));
    return {a, std::sqrt(Scalar(1) - a * a)};
}

/// [[a, b], [b, -a]]
template <class Scalar = double> CoinMatrix<Scalar> hadamard() {
    const auto [a, b] = unit_pair<Scalar>();
    CoinMatrix<Scalar> h;
    h << a, b, b, -a;
    return h;
}

/// e^{iw}, exact (0 or +-1 parts) when w is a double-rounded multiple of pi/2.
template <class Scalar> Complex<Scalar> unit_phase(Scalar omega) {
    omega = normalize_angle(omega);
    const Scalar quarter = std::numbers::pi_v<Scalar> / Scalar(2);
    const Scalar one(1), zero(0);
    if (omega == zero) {
        return {one, zero};
    }
    if (omega == quarter) {
        return {zero, one};
    }
    if (omega == Scalar(2) * quarter) {
        return {-one, zero};
    }
    if (omega == Scalar(3) * quarter) {
        return {zero, -one};
    }
    return std::polar(one, omega);
}

/// sqrt2 times the off-diagonal phase coin: [[1, e^{iw}], [e^{-iw}, -1]].
template <class Scalar> CoinMatrix<Scalar> off_diagonal_phase_body(Scalar omega) {
    const Complex<Scalar> phase = unit_phase(omega);
    CoinMatrix<Scalar> u;
    u << Complex<Scalar>(1), phase, std::conj(phase), Complex<Scalar>(-1);
    return u;
}

/// sqrt2 times the diagonal phase coin: [[e^{iw}, 1], [1, -e^{-iw}]].
template <class Scalar> CoinMatrix<Scalar> diagonal_phase_body(Scalar omega) {
    const Complex<Scalar> phase = unit_phase(omega);
    CoinMatrix<Scalar> u;
    u << phase, Complex<Scalar>(1), Complex<Scalar>(1), -std::conj(phase);
    return u;
}

/// (1/sqrt2) [[1, e^{iw}], [e^{-iw}, -1]]: phase on the off-diagonal.
/// Equals the Hadamard gate at w = 0.
template <class Scalar>
CoinMatrix<Scalar> off_diagonal_phase_coin(Scalar omega) {
    omega = normalize_angle(omega);
    const auto [a, b] = unit_pair<Scalar>();
    const Complex<Scalar> phase = unit_phase(omega);
    CoinMatrix<Scalar> u;
    u << Complex<Scalar>(a), b * phase, b * std::conj(phase), Complex<Scalar>(-a);
    return u;
}

/// (1/sqrt2) [[e^{iw}, 1], [1, -e^{-iw}]]: phase on the diagonal.
template <class Scalar> CoinMatrix<Scalar> diagonal_phase_coin(Scalar omega) {
    omega = normalize_angle(omega);
    const auto [a, b] = unit_pair<Scalar>();
    const Complex<Scalar> phase = unit_phase(omega);
    CoinMatrix<Scalar> u;
    u << a * phase, Complex<Scalar>(b), Complex<Scalar>(b), -a * std::conj(phase);
    return u;
}

/// Largest entry of |U U^dagger - I|.
template <class Scalar> Scalar unitarity_defect(const CoinMatrix<Scalar>& u) {
    return (u * u.adjoint() - CoinMatrix<Scalar>::Identity()).cwiseAbs().maxCoeff();
}

template <class Scalar>
bool is_unitary(const CoinMatrix<Scalar>& u, Scalar tolerance = Scalar(1e-12)) {
    return unitarity_defect(u) <= tolerance;
}

/// U = P + Q where P keeps the top row (move left) and Q the bottom row (move right).
template <class Scalar> struct CoinSplit {
    Matrix2c<Scalar> p_part;
    Matrix2c<Scalar> q_part;
};

template <class Scalar> CoinSplit<Scalar> split(const CoinMatrix<Scalar>& coin) {
    CoinSplit<Scalar> s{Matrix2c<Scalar>::Zero(), Matrix2c<Scalar>::Zero()};
    s.p_part.row(0) = coin.row(0);
    s.q_part.row(1) = coin.row(1);
    return s;
}

enum class CoinModel {
    OffDiagonalDefect, ///< off_diagonal_phase_coin(w) at the origin, Hadamard elsewhere
    DiagonalDefect,    ///< diagonal_phase_coin(w) at the origin, Hadamard elsewhere
    Hadamard,
    Custom,
};

/**
 * Position-indexed coin family. Immutable once built.
 *
 * A custom field holds explicit coins for a set of positions and optionally
 * a background coin for every other position; without a background, asking
 * for an unlisted position throws std::out_of_range.
 */
template <class Scalar = double> class CoinField {
  public:
    static CoinField off_diagonal_defect(Scalar omega) {
        return CoinField(CoinModel::OffDiagonalDefect, normalize_angle(omega),
                         off_diagonal_phase_coin(omega));
    }
    static CoinField diagonal_defect(Scalar omega) {
        return CoinField(CoinModel::DiagonalDefect, normalize_angle(omega),
                         diagonal_phase_coin(omega));
    }
    static CoinField homogeneous_hadamard() {
        return CoinField(CoinModel::Hadamard, Scalar(0), hadamard<Scalar>());
    }
    static CoinField custom(std::map<Position, CoinMatrix<Scalar>> coins) {
        CoinField f(CoinModel::Custom, Scalar(0), hadamard<Scalar>());
        f.custom_ = std::move(coins);
        f.has_background_ = false;
        return f;
    }
    static CoinField custom(std::map<Position, CoinMatrix<Scalar>> coins,
                            const CoinMatrix<Scalar>& background) {
        CoinField f(CoinModel::Custom, Scalar(0), hadamard<Scalar>());
        f.custom_ = std::move(coins);
        f.background_ = background;
        return f;
    }

    CoinModel model() const { return model_; }
    Scalar omega() const { return omega_; }

    CoinMatrix<Scalar> coin_at(Position x) const {
        if (model_ == CoinModel::Custom) {
            if (auto it = custom_.find(x); it != custom_.end()) {
                return it->second;
            }
            if (!has_background_) {
                throw std::out_of_range("custom coin field has no coin at position " +
                                        std::to_string(x));
            }
            return background_;
        }
        return x == 0 ? origin_ : background_;
    }

    /// True for every built-in model: each coin is (1/sqrt2) times a matrix of
    /// unit-modulus entries, available from body_at.
    bool root_two_scaled() const { return model_ != CoinModel::Custom; }

    /// sqrt2 * coin_at(x) for a root-two-scaled field.
    CoinMatrix<Scalar> body_at(Position x) const {
        if (!root_two_scaled()) {
            throw std::logic_error("custom coin fields carry no root-two body");
        }
        if (x != 0 || model_ == CoinModel::Hadamard) {
            CoinMatrix<Scalar> h;
            h << 1, 1, 1, -1;
            return h;
        }
        return model_ == CoinModel::OffDiagonalDefect ? off_diagonal_phase_body(omega_)
                                                      : diagonal_phase_body(omega_);
    }

  private:
    CoinField(CoinModel model, Scalar omega, const CoinMatrix<Scalar>& origin)
        : model_(model), omega_(omega), origin_(origin), background_(hadamard<Scalar>()) {}

    CoinModel model_;
    Scalar omega_;
    CoinMatrix<Scalar> origin_;
    CoinMatrix<Scalar> background_;
    bool has_background_ = true;
    std::map<Position, CoinMatrix<Scalar>> custom_;
};

} // namespace qwalk
