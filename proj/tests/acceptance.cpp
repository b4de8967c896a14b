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


// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/classical.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/generating_functions.hpp"
#include "qwalk/path_oracle.hpp"
#include "qwalk/theory.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances and budgets.
constexpr double kTableTol = 1e-12;
constexpr double kTableBudget = 1.0;
constexpr double kLimitTol = 5e-3;
constexpr double kLimitBudget = 30.0;
constexpr double kHadamardDecayTol = 0.05;
constexpr double kHadamardBudget = 60.0;
constexpr double kDiagonalTol = 1e-10;
constexpr double kEngineTol = 1e-10;
constexpr double kOracleTol = 1e-12;
constexpr double kSymmetryTol = 1e-14;
constexpr double kMeanTol = 1e-8;
constexpr double kClassicalTol = 1e-12;
constexpr double kUnbiasedLow = 0.95;
constexpr double kUnbiasedHigh = 1.05;
constexpr double kEnvelopeBound = 2.0;

struct Verdict {
    bool passed;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = body();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0.0 && seconds >= budget) {
        v.passed = false;
        v.detail += fmt(", over budget %.0f s", budget);
    }
    std::printf("%s [%d] %s: %s (%.3f s)\n", v.passed ? "PASS" : "FAIL", id, title,
                v.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += v.passed ? 0 : 1;
}

Verdict table(const CoinField<double>& field, const double (&numerators)[6]) {
    const auto p = return_probabilities(field, 12);
    double worst = 0.0;
    for (int j = 0; j < 6; ++j) {
        const double exact = numerators[j] / std::ldexp(1.0, 2 * (j + 1));
        worst = std::max(worst, std::abs(p[static_cast<std::size_t>(2 * j + 2)] - exact));
    }
    return {worst <= kTableTol, fmt("max error %.3g, tolerance %.0e", worst, kTableTol)};
}

std::vector<double> grid(int points) {
    std::vector<double> g;
    for (int j = 0; j < points; ++j) {
        g.push_back(2 * kPi * j / points);
    }
    return g;
}

} // namespace

int main() {
    criterion(1, "inhomogeneous table at w = pi", kTableBudget, [] {
        const double n[6] = {2, 10, 40, 170, 680, 2600};
        return table(CoinField<double>::off_diagonal_defect(kPi), n);
    });

    criterion(2, "Hadamard table", kTableBudget, [] {
        const double n[6] = {2, 2, 8, 18, 72, 200};
        return table(CoinField<double>::homogeneous_hadamard(), n);
    });

    criterion(3, "localization limit, mean over n in [900, 1000]", kLimitBudget, [] {
        double worst = 0.0;
        for (double w : {kPi / 2, kPi, 3 * kPi / 2}) {
            const auto p = return_probabilities(CoinField<double>::off_diagonal_defect(w), 2000);
            double sum = 0.0;
            for (int n = 900; n <= 1000; ++n) {
                sum += p[static_cast<std::size_t>(2 * n)];
            }
            worst = std::max(worst, std::abs(sum / 101 - localization_constant(w)));
        }
        return Verdict{worst <= kLimitTol,
                       fmt("max |mean - c(w)| %.3g, tolerance %.0e", worst, kLimitTol)};
    });

    criterion(4, "Hadamard decay at n = 2000", kHadamardBudget, [] {
        const auto p = return_probabilities(CoinField<double>::homogeneous_hadamard(), 4000);
        const double err = std::abs(2000 * kPi * p[4000] - 1.0);
        return Verdict{err <= kHadamardDecayTol,
                       fmt("|n pi p - 1| = %.3g, tolerance %.2f", err, kHadamardDecayTol)};
    });

    criterion(5, "diagonal defect returns like Hadamard, n <= 200", 0.0, [] {
        const auto h = return_probabilities(CoinField<double>::homogeneous_hadamard(), 400);
        double worst = 0.0;
        for (double w : {kPi / 3, kPi, 5 * kPi / 3}) {
            const auto p = return_probabilities(CoinField<double>::diagonal_defect(w), 400);
            for (std::size_t t = 0; t <= 400; t += 2) {
                worst = std::max(worst, std::abs(p[t] - h[t]));
            }
        }
        return Verdict{worst <= kDiagonalTol,
                       fmt("max error %.3g, tolerance %.0e", worst, kDiagonalTol)};
    });

    criterion(6, "r* fixtures through n = 11, exact", 0.0, [] {
        const Rational expected[11] = {Rational(-1), 0, Rational(1, 2), 0, 0, 0,
                                       Rational(-1, 8), 0, 0, 0, Rational(1, 16)};
        const auto r = r_star_series(11);
        int mismatches = 0;
        for (int n = 1; n <= 11; ++n) {
            mismatches += r[n] == expected[n - 1] ? 0 : 1;
        }
        // (z r* + 1 + z^2)^2 = 1 + z^4
        const int order = 12;
        const auto rr = r_star_series(order);
        const auto w = rr.shifted_up(1) + Series<Rational>::monomial(Rational(1), 2, order) +
                       Rational(1);
        const bool squares = w * w == Series<Rational>::constant(Rational(1), order) +
                                          Series<Rational>::monomial(Rational(1), 4, order);
        return Verdict{mismatches == 0 && squares,
                       fmt("%.0f mismatches, squaring oracle ", mismatches) +
                           (squares ? "holds" : "fails")};
    });

    criterion(7, "three engines agree, n <= 200, 8-point grid", 0.0, [] {
        double worst = 0.0;
        for (double w : grid(8)) {
            const auto evo = origin_amplitudes(CoinField<double>::off_diagonal_defect(w), 400);
            const auto dp = excursion_amplitudes(w, 200);
            const auto gf = origin_gf(w, 400);
            for (int n = 0; n <= 200; ++n) {
                const Vector2cd e = evo[static_cast<std::size_t>(2 * n)];
                const Vector2cd d = dp[static_cast<std::size_t>(n)];
                const Vector2cd g = gf.amplitude(2 * n);
                worst = std::max({worst, (e - d).cwiseAbs().maxCoeff(),
                                  (e - g).cwiseAbs().maxCoeff(), (d - g).cwiseAbs().maxCoeff()});
            }
        }
        return Verdict{worst <= kEngineTol, fmt("max error %.3g, tolerance %.0e", worst, kEngineTol)};
    });

    criterion(8, "brute-force path oracle", 0.0, [] {
        double worst = 0.0;
        Vector2cd phi = initial_state().amplitude(0);
        for (double w : {0.0, kPi / 4, kPi / 2, kPi, 3 * kPi / 2}) {
            const auto field = CoinField<double>::off_diagonal_defect(w);
            for (int n = 0; n <= 12; ++n) {
                const auto state = run(field, n);
                const auto sums = xi_all(n, field);
                for (int l = 0; l <= n; ++l) {
                    const Vector2cd a = sums[static_cast<std::size_t>(l)].value * phi;
                    worst = std::max(worst, (a - state.amplitude(n - 2 * l)).cwiseAbs().maxCoeff());
                }
            }
        }
        const auto plus = first_passage_coefficients(1, 13);
        const auto minus = first_passage_coefficients(-1, 13);
        int violations = 0;
        for (std::size_t n = 0; n <= 13; ++n) {
            violations += plus.q[n].body != 0 || plus.s[n].body != 0;
            const Rational sum_rs = plus.r[n].body + minus.s[n].body;
            violations += plus.r[n].power != minus.s[n].power || sum_rs != 0;
        }
        return Verdict{worst <= kOracleTol && violations == 0,
                       fmt("max error %.3g, %.0f exact-identity violations", worst, violations)};
    });

    criterion(9, "c(w) symmetry, monotonicity, bounds and mean", 0.0, [] {
        double asym = 0.0;
        bool bounded = true;
        for (double w : grid(256)) {
            const double c = localization_constant(w);
            asym = std::max(asym, std::abs(c - localization_constant(2 * kPi - w)));
            bounded = bounded && c >= 0.0 && c <= 0.64 + 1e-15;
        }
        bool monotone = true;
        for (int j = 1; j <= 512; ++j) {
            monotone = monotone && localization_constant(kPi * j / 512) >
                                       localization_constant(kPi * (j - 1) / 512);
        }
        const double mean_err =
            std::abs(expected_localization_trapezoid(10000) - expected_localization_uniform());
        const bool ok = asym <= kSymmetryTol && bounded && monotone && mean_err <= kMeanTol;
        return Verdict{ok, fmt("asymmetry %.3g, mean error %.3g", asym, mean_err) +
                               (monotone ? ", monotone" : ", NOT monotone") +
                               (bounded ? ", within [0, 0.64]" : ", OUT of bounds")};
    });

    criterion(10, "classical comparator", 0.0, [] {
        double dp_gf = 0.0;
        for (double p0 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            for (double p : {0.2, 0.4, 0.5, 0.6, 0.8}) {
                const auto f = classical_gf<double>(p0, 1 - p0, p, 1 - p, 200);
                const auto dp = classical_returns(ClassicalField<double>::from_left(p0, p), 200);
                for (int t = 0; t <= 200; ++t) {
                    dp_gf = std::max(dp_gf, std::abs(f[t] - dp[static_cast<std::size_t>(t)]));
                }
            }
        }
        const double unbiased =
            std::sqrt(kPi * 2000) *
            classical_returns(ClassicalField<double>::from_left(0.5, 0.5), 4000)[4000];
        // The envelope holds for K = p0/p + q0/q <= 2, i.e. p0 >= p.
        double fitted = 0.0;
        for (double p0 : {0.6, 0.7, 0.8, 0.9}) {
            const auto r = classical_returns(ClassicalField<double>::from_left(p0, 0.6), 4000);
            for (int n = 0; n <= 2000; ++n) {
                fitted = std::max(fitted, r[static_cast<std::size_t>(2 * n)] / std::pow(0.96, n));
            }
        }
        const bool ok = dp_gf <= kClassicalTol && unbiased >= kUnbiasedLow &&
                        unbiased <= kUnbiasedHigh && fitted < kEnvelopeBound;
        return Verdict{ok, fmt("DP vs series %.3g, sqrt(pi n) p = %.5f", dp_gf, unbiased) +
                               fmt(", fitted C = %.4f (bound %.0f)", fitted, kEnvelopeBound)};
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
