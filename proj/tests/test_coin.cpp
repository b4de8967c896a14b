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

#include <doctest.h>

#include <numbers>

#include "qwalk/coin.hpp"

using namespace qwalk;
using cd = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
const double kS = 1.0 / std::sqrt(2.0);

double max_diff(const Matrix2cd& a, const Matrix2cd& b) { return (a - b).cwiseAbs().maxCoeff(); }
} // namespace

TEST_CASE("chirality basis vectors") {
    CHECK(basis_vector(Chirality::Left) == Vector2cd(1, 0));
    CHECK(basis_vector(Chirality::Right) == Vector2cd(0, 1));
}

TEST_CASE("normalize_angle reduces into [0, 2pi)") {
    CHECK(normalize_angle(0.0) == 0.0);
    CHECK(normalize_angle(2 * kPi) == doctest::Approx(0.0));
    CHECK(normalize_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
    CHECK(normalize_angle(5 * kPi) == doctest::Approx(kPi));
    for (double w : {-1e-18, -7.0, 1e3, std::nextafter(2 * kPi, 0.0)}) {
        const double r = normalize_angle(w);
        CHECK(r >= 0.0);
        CHECK(r < 2 * kPi);
    }
}

TEST_CASE("off-diagonal phase coin") {
    SUBCASE("w = 0 is the Hadamard gate") {
        CHECK(max_diff(off_diagonal_phase_coin(0.0), hadamard()) == 0.0);
    }
    SUBCASE("w = pi") {
        Matrix2cd expected;
        expected << kS, -kS, -kS, -kS;
        CHECK(max_diff(off_diagonal_phase_coin(kPi), expected) < 1e-15);
    }
    SUBCASE("unitary on a 64-point grid") {
        for (int j = 0; j < 64; ++j) {
            CHECK(is_unitary(off_diagonal_phase_coin(2 * kPi * j / 64)));
        }
    }
}

TEST_CASE("diagonal phase coin") {
    CHECK(max_diff(diagonal_phase_coin(0.0), hadamard()) == 0.0);
    Matrix2cd expected;
    expected << cd(0, kS), kS, kS, cd(0, kS);
    CHECK(max_diff(diagonal_phase_coin(kPi / 2), expected) < 1e-15);
    for (int j = 0; j < 64; ++j) {
        CHECK(is_unitary(diagonal_phase_coin(2 * kPi * j / 64)));
    }
}

TEST_CASE("unitarity_defect detects a perturbed coin") {
    Matrix2cd u = hadamard();
    u(0, 0) += 1e-3;
    CHECK_FALSE(is_unitary(u));
    CHECK(unitarity_defect(u) > 1e-4);
}

TEST_CASE("split") {
    SUBCASE("Hadamard gives P and Q") {
        const auto s = split(hadamard());
        Matrix2cd p, q;
        p << kS, kS, 0, 0;
        q << 0, 0, kS, -kS;
        CHECK(max_diff(s.p_part, p) < 1e-15);
        CHECK(max_diff(s.q_part, q) < 1e-15);
    }
    SUBCASE("origin coin gives P0 and Q0") {
        const double w = 0.7;
        const auto s = split(off_diagonal_phase_coin(w));
        Matrix2cd p0, q0;
        p0 << kS, kS * std::polar(1.0, w), 0, 0;
        q0 << 0, 0, kS * std::polar(1.0, -w), -kS;
        CHECK(max_diff(s.p_part, p0) < 1e-15);
        CHECK(max_diff(s.q_part, q0) < 1e-15);
    }
    SUBCASE("parts are zero-padded and reconstruct exactly") {
        for (int j = 0; j < 64; ++j) {
            for (const auto& u : {off_diagonal_phase_coin(2 * kPi * j / 64),
                                  diagonal_phase_coin(2 * kPi * j / 64)}) {
                const auto s = split(u);
                CHECK(s.p_part + s.q_part == u);
                CHECK(s.p_part.row(1).isZero(0.0));
                CHECK(s.q_part.row(0).isZero(0.0));
            }
        }
    }
}

TEST_CASE("coin_at") {
    const auto field = CoinField<double>::off_diagonal_defect(kPi);
    CHECK(field.model() == CoinModel::OffDiagonalDefect);
    CHECK(field.coin_at(0) == off_diagonal_phase_coin(kPi));
    CHECK(field.coin_at(5) == hadamard());
    CHECK(field.coin_at(-3) == hadamard());

    for (int j = 0; j < 32; ++j) {
        const auto f = CoinField<double>::off_diagonal_defect(2 * kPi * j / 32);
        for (Position x : {-7, -1, 1, 2, 100}) {
            CHECK(f.coin_at(x) == hadamard());
        }
    }

    const auto plain = CoinField<double>::homogeneous_hadamard();
    for (Position x = -3; x <= 3; ++x) {
        CHECK(plain.coin_at(x) == hadamard());
    }
    const auto zero = CoinField<double>::off_diagonal_defect(0.0);
    for (Position x = -3; x <= 3; ++x) {
        CHECK(zero.coin_at(x) == plain.coin_at(x));
    }

    const auto diag = CoinField<double>::diagonal_defect(kPi / 3);
    CHECK(diag.coin_at(0) == diagonal_phase_coin(kPi / 3));
    CHECK(diag.coin_at(2) == hadamard());
}

TEST_CASE("custom fields") {
    const Matrix2cd x_gate = (Matrix2cd() << 0, 1, 1, 0).finished();
    const auto sparse = CoinField<double>::custom({{0, x_gate}, {1, hadamard()}});
    CHECK(sparse.coin_at(0) == x_gate);
    CHECK(sparse.coin_at(1) == hadamard());
    CHECK_THROWS_AS(sparse.coin_at(2), std::out_of_range);

    const auto backed = CoinField<double>::custom({{0, x_gate}}, hadamard());
    CHECK(backed.coin_at(0) == x_gate);
    CHECK(backed.coin_at(-9) == hadamard());
}
