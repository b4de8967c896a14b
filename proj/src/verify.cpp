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

#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qwalk/classical.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/generating_functions.hpp"
#include "qwalk/path_oracle.hpp"
#include "qwalk/theory.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

CoinField<double> field_under_test(double perturbation) {
    if (perturbation == 0.0) {
        return CoinField<double>::off_diagonal_defect(kPi);
    }
    CoinMatrix<double> origin = off_diagonal_phase_coin(kPi);
    origin(0, 0) += perturbation;
    return CoinField<double>::custom({{0, origin}}, hadamard<double>());
}

std::vector<double> omega_grid(int points) {
    std::vector<double> g;
    for (int j = 0; j < points; ++j) {
        g.push_back(2.0 * kPi * j / points);
    }
    return g;
}

double check_unitarity(const CoinField<double>& field) {
    double worst = 0.0;
    for (double w : omega_grid(64)) {
        worst = std::max({worst, unitarity_defect(off_diagonal_phase_coin(w)),
                          unitarity_defect(diagonal_phase_coin(w))});
    }
    for (Position x = -4; x <= 4; ++x) {
        worst = std::max(worst, unitarity_defect(field.coin_at(x)));
    }
    return worst;
}

double check_split() {
    double worst = 0.0;
    for (double w : omega_grid(16)) {
        for (const auto& u : {off_diagonal_phase_coin(w), diagonal_phase_coin(w)}) {
            const auto s = split(u);
            worst = std::max(worst, (s.p_part + s.q_part - u).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double check_norm(const CoinField<double>& field) {
    double worst = 0.0;
    WalkState<double> state = initial_state<double>();
    for (int t = 0; t < 2000; ++t) {
        state = step(state, field);
        worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
    }
    return worst;
}

double check_tables() {
    const double defect[] = {2.0 / 4, 10.0 / 16, 40.0 / 64, 170.0 / 256, 680.0 / 1024, 2600.0 / 4096};
    const double plain[] = {2.0 / 4, 2.0 / 16, 8.0 / 64, 18.0 / 256, 72.0 / 1024, 200.0 / 4096};
    const auto a = return_probabilities(CoinField<double>::off_diagonal_defect(kPi), 12);
    const auto b = return_probabilities(CoinField<double>::homogeneous_hadamard(), 12);
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
        worst = std::max({worst, std::abs(a[2 * k + 2] - defect[k]), std::abs(b[2 * k + 2] - plain[k])});
    }
    return worst;
}

double check_oracle_distribution() {
    double worst = 0.0;
    for (double w : {0.0, kPi / 4, kPi / 2, kPi, 3 * kPi / 2}) {
        const auto field = CoinField<double>::off_diagonal_defect(w);
        const Vector2cd phi = initial_state<double>().amplitude(0);
        for (int n = 0; n <= 10; ++n) {
            const auto state = run(field, n);
            const auto sums = xi_all(n, field);
            for (int l = 0; l <= n; ++l) {
                const Vector2cd oracle = sums[static_cast<std::size_t>(l)].value * phi;
                worst = std::max(worst, (oracle - state.amplitude(n - 2 * l)).cwiseAbs().maxCoeff());
            }
        }
    }
    return worst;
}

// Exact claims; the error is the number of violations.
double check_first_passage() {
    double violations = 0.0;
    const auto plus = first_passage_coefficients(1, 13);
    const auto minus = first_passage_coefficients(-1, 13);
    for (int n = 1; n <= 13; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (plus.q[i].body != 0 || plus.s[i].body != 0) {
            violations += 1;
        }
        if (minus.p[i].body != 0 || minus.r[i].body != 0) {
            violations += 1;
        }
        if (plus.r[i].body + minus.s[i].body != 0 || plus.r[i].power != minus.s[i].power) {
            violations += 1;
        }
    }
    return violations;
}

double check_series_sqrt() {
    double violations = 0.0;
    const int order = 64;
    Series<Rational> a = Series<Rational>::constant(Rational(1), order);
    a.set(4, Rational(1));
    Series<Rational> b = Series<Rational>::constant(Rational(1), order);
    b.set(2, Rational(-1));
    for (const auto& s : {a, b}) {
        const auto r = sqrt(s);
        if (!(r * r == s)) {
            violations += 1;
        }
    }
    return violations;
}

double check_r_star() {
    double violations = 0.0;
    const Rational expected[] = {Rational(-1), 0, Rational(1, 2), 0, 0, 0, Rational(-1, 8),
                                 0, 0, 0, Rational(1, 16)};
    const auto r = r_star_series(200);
    for (int n = 1; n <= 11; ++n) {
        if (r[n] != expected[n - 1]) {
            violations += 1;
        }
    }
    for (int n = 2; n <= 200; ++n) {
        if (r[n] != 0 && (n + 1) % 4 != 0) {
            violations += 1;
        }
    }
    const auto oracle = first_passage_coefficients(1, 13);
    const auto gf = first_passage_gf(1, 13);
    for (int n = 1; n <= 13; ++n) {
        if (!exactly_equal(oracle.r[static_cast<std::size_t>(n)], {gf.r.body[n], gf.r.power})) {
            violations += 1;
        }
    }
    return violations;
}

double check_three_engines() {
    double worst = 0.0;
    const int n_max = 200;
    for (double w : omega_grid(8)) {
        const auto evo = origin_amplitudes(CoinField<double>::off_diagonal_defect(w), 2 * n_max);
        const auto dp = excursion_amplitudes(w, n_max);
        const auto gf = origin_gf(w, 2 * n_max);
        for (int n = 0; n <= n_max; ++n) {
            const Vector2cd& a = evo[static_cast<std::size_t>(2 * n)];
            const Vector2cd& b = dp[static_cast<std::size_t>(n)];
            const Vector2cd c = gf.amplitude(2 * n);
            worst = std::max({worst, (a - b).cwiseAbs().maxCoeff(), (a - c).cwiseAbs().maxCoeff(),
                              (b - c).cwiseAbs().maxCoeff()});
        }
    }
    return worst;
}

double check_diagonal_defect() {
    double worst = 0.0;
    const auto plain = return_probabilities(CoinField<double>::homogeneous_hadamard(), 400);
    for (double w : {kPi / 3, kPi, 5 * kPi / 3}) {
        const auto p = return_probabilities(CoinField<double>::diagonal_defect(w), 400);
        for (std::size_t t = 0; t < p.size(); ++t) {
            worst = std::max(worst, std::abs(p[t] - plain[t]));
        }
    }
    return worst;
}

double check_theory_identities() {
    double worst = 0.0;
    for (double w : omega_grid(256)) {
        const auto t = params(w);
        worst = std::max({worst, std::abs(std::norm(t.gamma_plus) - 2.0),
                          std::abs(std::norm(t.gamma_minus) - 2.0),
                          std::abs(t.mu_plus * t.mu_minus + 1.0),
                          std::abs(t.theta0.sin * t.theta0.sin + t.theta0.cos * t.theta0.cos - 1.0),
                          std::abs(t.left_weight_plus() + t.left_weight_minus() - 1.0),
                          std::abs(t.right_weight_plus() + t.right_weight_minus() + 1.0),
                          std::abs(localization_constant(w) - localization_constant(2 * kPi - w))});
        if (t.localization < 0.0 || t.localization > 0.64 + 1e-15) {
            worst = std::max(worst, 1.0);
        }
    }
    // strictly increasing on [0, pi]
    for (int j = 0; j < 512; ++j) {
        if (!(localization_constant(kPi * (j + 1) / 512) > localization_constant(kPi * j / 512))) {
            worst = std::max(worst, 1.0);
        }
    }
    return worst;
}

double check_localization_mean() {
    return std::abs(expected_localization_trapezoid(10000) - expected_localization_uniform());
}

double check_classical() {
    double worst = 0.0;
    for (double p0 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double p : {0.3, 0.5, 0.6}) {
            const auto field = ClassicalField<double>::from_left(p0, p);
            const auto dp = classical_returns(field, 100);
            const auto gf = classical_gf(p0, 1.0 - p0, p, 1.0 - p, 100);
            for (int n = 0; n <= 100; ++n) {
                worst = std::max(worst, std::abs(dp[static_cast<std::size_t>(n)] - gf[n]));
            }
        }
    }
    return worst;
}

double check_limit() {
    const auto p = return_probabilities(CoinField<double>::off_diagonal_defect(kPi), 2000);
    double mean = 0.0;
    for (int n = 900; n <= 1000; ++n) {
        mean += p[static_cast<std::size_t>(2 * n)];
    }
    mean /= 101.0;
    return std::abs(mean - localization_constant(kPi));
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    const CoinField<double> field = field_under_test(options.coin_perturbation);
    struct Entry {
        const char* name;
        double nominal;
        std::function<double()> run;
    };
    const std::vector<Entry> checks = {
        {"coin.unitarity", 1e-12, [&] { return check_unitarity(field); }},
        {"coin.split", 0.0, check_split},
        {"evolution.norm", 1e-12, [&] { return check_norm(field); }},
        {"evolution.tables", 1e-12, check_tables},
        {"oracle.distribution", 1e-12, check_oracle_distribution},
        {"oracle.first_passage", 0.0, check_first_passage},
        {"series.sqrt", 0.0, check_series_sqrt},
        {"series.r_star", 0.0, check_r_star},
        {"engines.three_way", 1e-10, check_three_engines},
        {"model.diagonal_defect", 1e-10, check_diagonal_defect},
        {"theory.identities", 1e-12, check_theory_identities},
        {"theory.localization_mean", 1e-8, check_localization_mean},
        {"theory.limit", 5e-3, check_limit},
        {"classical.gf", 1e-12, check_classical},
    };
    std::vector<CheckResult> results;
    for (const auto& c : checks) {
        CheckResult r;
        r.name = c.name;
        r.tolerance = options.tolerance.value_or(c.nominal);
        r.max_error = c.run();
        r.passed = r.max_error <= r.tolerance;
        results.push_back(r);
    }
    return results;
}

} // namespace qwalk
