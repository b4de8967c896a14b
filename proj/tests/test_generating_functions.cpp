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

#include "qwalk/classical.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/generating_functions.hpp"

using namespace qwalk;
using RS = Series<Rational>;

namespace {
constexpr double kPi = std::numbers::pi;
const double kGrid8[] = {0.0, 0.4, 1.1, kPi / 2, 2.5, kPi, 4.2, 5.7};

RS z_pow(int k, int order) { return RS::monomial(Rational(1), k, order); }
} // namespace

TEST_CASE("r* fixtures") {
    const RS r = r_star_series(11);
    CHECK(r[1] == -1);
    CHECK(r[3] == Rational(1, 2));
    CHECK(r[7] == Rational(-1, 8));
    CHECK(r[11] == Rational(1, 16));
    CHECK(r[0] == 0);
    CHECK_THROWS_AS(r_star_series(0), std::invalid_argument);
}

TEST_CASE("r* satisfies (z r* + 1 + z^2)^2 = 1 + z^4") {
    const int order = 60;
    const RS r = r_star_series(order);
    const RS w = r.shifted_up(1) + z_pow(2, order) + Rational(1);
    CHECK(w * w == RS::constant(Rational(1), order) + z_pow(4, order));
}

TEST_CASE("r* vanishes off n = 1 and n = 4m - 1") {
    const RS r = r_star_series(200);
    for (int n = 0; n <= 200; ++n) {
        const bool allowed = n == 1 || (n + 1) % 4 == 0;
        CAPTURE(n);
        CHECK((r[n] != 0) == allowed);
    }
}

TEST_CASE("lambda_+ solves z L^2 - 2(z^2 - 1) L - 2z = 0") {
    const int order = 30;
    const RS l = lambda_plus_series(order).body;
    CHECK(lambda_plus_series(order).power == 1);
    const RS z = z_pow(1, order);
    const RS lhs = z * l * l - Rational(2) * (z * z - Rational(1)) * l - Rational(2) * z;
    CHECK(lhs == RS(order));
    CHECK(l[0] == 0);
    CHECK(l[1] == 1);
    CHECK_THROWS_AS(lambda_minus_series(order), std::domain_error);
}

TEST_CASE("first-passage series at m = 1") {
    const auto fp = first_passage_gf(1, 12);
    CHECK(fp.p.body == z_pow(1, 12));
    CHECK(fp.q.body == RS(12));
    CHECK(fp.s.body == RS(12));
    CHECK(fp.r.body[3] == Rational(1, 2));
    const auto minus = first_passage_gf(-1, 12);
    CHECK(minus.q.body == z_pow(1, 12));
    CHECK(minus.s.body == -fp.r.body);
    CHECK_THROWS_AS(first_passage_gf(0, 12), std::invalid_argument);
}

TEST_CASE("excursion DP matches evolution for n <= 100") {
    for (double w : kGrid8) {
        const auto evo = origin_amplitudes(CoinField<double>::off_diagonal_defect(w), 200);
        const auto dp = excursion_amplitudes(w, 100);
        double worst = 0.0;
        for (int n = 0; n <= 100; ++n) {
            worst = std::max(worst, (dp[static_cast<std::size_t>(n)] -
                                     evo[static_cast<std::size_t>(2 * n)])
                                        .cwiseAbs()
                                        .maxCoeff());
        }
        CAPTURE(w);
        CHECK(worst < 1e-10);
    }
    CHECK_THROWS_AS(excursion_amplitude(1.0, 0), std::invalid_argument);
    CHECK((excursion_amplitude(1.0, 7) - excursion_amplitudes(1.0, 7)[7]).isZero(0.0));
}

TEST_CASE("origin series match evolution coefficient by coefficient") {
    for (double w : kGrid8) {
        const auto evo = origin_amplitudes(CoinField<double>::off_diagonal_defect(w), 200);
        const auto gf = origin_gf(w, 200);
        double worst = 0.0;
        for (int t = 0; t <= 200; ++t) {
            worst = std::max(worst, (gf.amplitude(t) - evo[static_cast<std::size_t>(t)])
                                        .cwiseAbs()
                                        .maxCoeff());
        }
        CAPTURE(w);
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("division and rationalized forms agree exactly at quarter turns") {
    const int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& [c, s] : cs) {
        const auto a = origin_gf<Rational>(Rational(c), Rational(s), 40);
        const auto b = origin_gf_rationalized<Rational>(Rational(c), Rational(s), 40);
        CHECK(a.left_real == b.left_real);
        CHECK(a.left_imag == b.left_imag);
        CHECK(a.right_real == b.right_real);
        CHECK(a.right_imag == b.right_imag);
    }
}

TEST_CASE("division and rationalized forms agree in double") {
    for (double w : kGrid8) {
        const auto a = origin_gf(w, 120);
        const auto b = origin_gf_rationalized<double>(std::cos(w), std::sin(w), 120);
        for (int t = 0; t <= 120; ++t) {
            CHECK((a.amplitude(t) - b.amplitude(t)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("w = 0 left real part is (1 + (1 + z^2) / sqrt(1 + z^4)) / 2") {
    const int order = 40;
    const auto gf = origin_gf<Rational>(Rational(1), Rational(0), order);
    const RS closed = (RS::constant(Rational(1), order) +
                       (z_pow(2, order) + Rational(1)) / sqrt_one_plus_z4(order)) *
                      Rational(1, 2);
    CHECK(gf.left_real == closed);
}

TEST_CASE("exact return-probability tables") {
    const long inhom[] = {2, 10, 40, 170, 680, 2600};
    const long hadamard[] = {2, 2, 8, 18, 72, 200};
    const auto pi_gf = origin_gf<Rational>(Rational(-1), Rational(0), 12);
    const auto zero_gf = origin_gf<Rational>(Rational(1), Rational(0), 12);
    for (int j = 0; j < 6; ++j) {
        const int t = 2 * (j + 1);
        const Rational den = Rational(BigInt(1) << t);
        CHECK(pi_gf.return_probability(t) == Rational(inhom[j]) / den);
        CHECK(zero_gf.return_probability(t) == Rational(hadamard[j]) / den);
    }
}

TEST_CASE("constant terms give phi* and odd terms vanish") {
    const auto gf = origin_gf<Rational>(Rational(0), Rational(1), 30);
    CHECK(gf.left_real[0] == 1);
    CHECK(gf.left_imag[0] == 0);
    CHECK(gf.right_real[0] == 0);
    CHECK(gf.right_imag[0] == 1);
    CHECK(gf.return_probability(0) == 1);
    for (int t = 1; t <= 30; t += 2) {
        CHECK(gf.return_probability(t) == 0);
    }
}

TEST_CASE("classical series: unbiased walk gives binom(2n, n) / 4^n") {
    const Rational half(1, 2);
    const auto f = classical_gf<Rational>(half, half, half, half, 40);
    BigInt binom = 1;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) {
            binom = binom * (2 * n) * (2 * n - 1) / (n * n);
        }
        CHECK(f[2 * n] == Rational(binom, BigInt(1) << (2 * n)));
        CHECK(f[2 * n + 1] == 0);
    }
}

TEST_CASE("classical series matches the DP for n <= 100") {
    for (double p0 : {0.1, 0.35, 0.5, 0.8, 1.0}) {
        for (double p : {0.2, 0.5, 0.6, 0.9}) {
            const auto f = classical_gf<double>(p0, 1 - p0, p, 1 - p, 200);
            const auto dp = classical_returns(ClassicalField<double>::from_left(p0, p), 200);
            double worst = 0.0;
            for (int t = 0; t <= 200; ++t) {
                worst = std::max(worst, std::abs(f[t] - dp[static_cast<std::size_t>(t)]));
            }
            CAPTURE(p0);
            CAPTURE(p);
            CHECK(worst < 1e-12);
        }
    }
}

TEST_CASE("classical series rejects bad probabilities") {
    CHECK_THROWS_AS(classical_gf<double>(0.5, 0.5, 0.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(classical_gf<double>(0.5, 0.5, 0.6, 0.6, 4), std::invalid_argument);
    CHECK_THROWS_AS(classical_gf<double>(0.7, 0.7, 0.5, 0.5, 4), std::invalid_argument);
    CHECK_THROWS_AS(classical_gf<double>(-0.1, 1.1, 0.5, 0.5, 4), std::invalid_argument);
}
