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

#include "qwalk/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "qwalk/angle.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/generating_functions.hpp"
#include "qwalk/theory.hpp"
#include "qwalk/verify.hpp"

namespace qwalk {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model = "eq22";
    std::string omega = "pi";
    long steps = 12;
    int grid = 257;
    std::string out_path;
    double tolerance = 0.0; // 0 = per-check default
    double perturb = 0.0;
    double p0 = 0.5;
    double p = 0.5;
};

std::string format(double v) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(15) << v;
    return s.str();
}

CoinField<double> quantum_field(const std::string& model, double omega) {
    if (model == "eq22") {
        return CoinField<double>::off_diagonal_defect(omega);
    }
    if (model == "eq21") {
        return CoinField<double>::diagonal_defect(omega);
    }
    if (model == "hadamard") {
        return CoinField<double>::homogeneous_hadamard();
    }
    throw UsageError("unknown quantum model '" + model + "'");
}

/// Large-time limit of p_{2n}(0): c(w) for the off-diagonal defect, 0 otherwise.
double model_limit(const std::string& model, double omega) {
    return model == "eq22" ? localization_constant(omega) : 0.0;
}

ClassicalField<double> classical_field(const RunConfig& cfg) {
    if (!(cfg.p > 0.0 && cfg.p < 1.0) || !(cfg.p0 >= 0.0 && cfg.p0 <= 1.0)) {
        throw UsageError("classical walk needs 0 <= p0 <= 1 and 0 < p < 1");
    }
    return ClassicalField<double>::from_left(cfg.p0, cfg.p);
}

Angle angle_of(const RunConfig& cfg) {
    try {
        return parse_angle(cfg.omega);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void simulate(const RunConfig& cfg, std::ostream& out) {
    out << "n,return_probability,limit,deviation\n";
    if (cfg.model == "classical") {
        const auto p = classical_returns(classical_field(cfg), cfg.steps);
        for (long n = 0; n <= cfg.steps; n += 2) {
            const double v = p[static_cast<std::size_t>(n)];
            out << n << ',' << format(v) << ',' << format(0.0) << ',' << format(v) << '\n';
        }
        return;
    }
    const double omega = angle_of(cfg).radians;
    const auto p = return_probabilities(quantum_field(cfg.model, omega), cfg.steps);
    const double limit = model_limit(cfg.model, omega);
    for (long n = 0; n <= cfg.steps; n += 2) {
        const double v = p[static_cast<std::size_t>(n)];
        out << n << ',' << format(v) << ',' << format(limit) << ',' << format(v - limit) << '\n';
    }
}

void sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.model != "eq22" && cfg.model != "eq21" && cfg.model != "hadamard") {
        throw UsageError("sweep runs quantum models only");
    }
    const long horizon = cfg.steps - cfg.steps % 2;
    const auto points = static_cast<std::size_t>(cfg.grid);
    std::vector<double> omegas(points), limits(points), returns(points);
    for (std::size_t j = 0; j < points; ++j) {
        omegas[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(points);
    }

    // rows are filled by index, so output order is the grid order
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < points; j = next++) {
            limits[j] = model_limit(cfg.model, omegas[j]);
            returns[j] = return_probability(run(quantum_field(cfg.model, omegas[j]), horizon));
        }
    };
    const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1U, 16U);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }

    out << "omega,c_omega,return_probability\n";
    for (std::size_t j = 0; j < points; ++j) {
        out << format(omegas[j]) << ',' << format(limits[j]) << ',' << format(returns[j]) << '\n';
    }
}

int verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions options;
    if (cfg.tolerance > 0.0) {
        options.tolerance = cfg.tolerance;
    }
    options.coin_perturbation = cfg.perturb;
    const auto results = run_verification(options);
    out << "check,status,max_error,tolerance\n";
    for (const auto& r : results) {
        out << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << format(r.max_error) << ','
            << format(r.tolerance) << '\n';
    }
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

void classical(const RunConfig& cfg, std::ostream& out) {
    const auto field = classical_field(cfg);
    const auto dp = classical_returns(field, cfg.steps);
    const auto gf = classical_gf(field.p0(), field.q0(), field.p(), field.q(), static_cast<int>(cfg.steps));
    out << "n,return_probability,series_coefficient,asymptote\n";
    for (long n = 0; n <= cfg.steps; n += 2) {
        out << n << ',' << format(dp[static_cast<std::size_t>(n)]) << ','
            << format(gf[static_cast<int>(n)]) << ',';
        if (n > 0) {
            out << format(classical_asymptote(field.p0(), field.q0(), field.p(), field.q(), n / 2));
        }
        out << '\n';
    }
}

void series(const RunConfig& cfg, std::ostream& out) {
    const int order = static_cast<int>(std::max(1L, cfg.steps));
    const Angle angle = angle_of(cfg);
    const auto r_star = r_star_series(order);
    const AmplitudeSeries<double> amps = origin_gf(angle.radians, order);
    std::optional<AmplitudeSeries<Rational>> exact;
    if (angle.quarter_turns) {
        const ExactTrig trig = quarter_turn_trig(*angle.quarter_turns);
        exact = origin_gf<Rational>(Rational(trig.cos), Rational(trig.sin), order);
    }
    out << "n,r_star,r_star_value,left_real,left_imag,right_real,right_imag,return_probability,"
           "return_probability_exact\n";
    for (int n = 0; n <= order; ++n) {
        const Vector2cd a = amps.amplitude(n);
        out << n << ',' << (n >= 1 ? to_string(r_star[n]) : std::string("0")) << ','
            << format(n >= 1 ? to_double(r_star[n]) : 0.0) << ',' << format(a(0).real()) << ','
            << format(a(0).imag()) << ',' << format(a(1).real()) << ',' << format(a(1).imag())
            << ',' << format(amps.return_probability(n)) << ',';
        if (exact) {
            out << to_string(exact->return_probability(n));
        }
        out << '\n';
    }
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--steps", cfg.steps, "number of time steps")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out_path, "write CSV to this file instead of stdout");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"qwalk: two-state quantum walk with a coin defect at the origin"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "return probabilities p_n(0) for even n");
    add_common(sim, cfg);
    sim->add_option("--model", cfg.model)
        ->check(CLI::IsMember({"eq22", "eq21", "hadamard", "classical"}));
    sim->add_option("--omega", cfg.omega, "defect phase, e.g. 1.2, pi, 3pi/2");
    sim->add_option("--p0", cfg.p0, "classical: left probability at the origin");
    sim->add_option("--p", cfg.p, "classical: left probability elsewhere");

    auto* swp = app.add_subcommand("sweep", "c(omega) and p_N(0) on a uniform grid over [0, 2pi)");
    add_common(swp, cfg);
    swp->add_option("--model", cfg.model)->check(CLI::IsMember({"eq22", "eq21", "hadamard"}));
    swp->add_option("--grid", cfg.grid, "number of grid points")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "run every engine cross-check");
    ver->add_option("--tolerance", cfg.tolerance, "override every check's tolerance")
        ->check(CLI::PositiveNumber);
    ver->add_option("--perturb", cfg.perturb, "add this to the origin coin (negative control)");
    ver->add_option("--out", cfg.out_path, "write report to this file instead of stdout");

    auto* cls = app.add_subcommand("classical", "classical walk: DP, series and asymptote");
    add_common(cls, cfg);
    cls->add_option("--p0", cfg.p0, "left probability at the origin");
    cls->add_option("--p", cfg.p, "left probability elsewhere");

    auto* ser = app.add_subcommand("series", "r*_n and origin generating-function coefficients");
    add_common(ser, cfg);
    ser->add_option("--omega", cfg.omega, "defect phase");

    std::vector<std::string> argv_storage{"qwalk"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "qwalk: cannot open " << cfg.out_path << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;

    try {
        if (sim->parsed()) {
            simulate(cfg, sink);
        } else if (swp->parsed()) {
            sweep(cfg, sink);
        } else if (ver->parsed()) {
            return verify(cfg, sink);
        } else if (cls->parsed()) {
            classical(cfg, sink);
        } else if (ser->parsed()) {
            series(cfg, sink);
        }
    } catch (const UsageError& e) {
        err << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "qwalk: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace qwalk
