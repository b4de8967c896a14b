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

#include "qwalk/path_oracle.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

void check_steps(int steps) {
    if (steps < 0 || steps > kMaxEnumerationSteps) {
        throw std::invalid_argument("path enumeration limited to 0.." +
                                    std::to_string(kMaxEnumerationSteps) + " steps");
    }
}

// Step sequences are bit strings: bit t set means a right move at time t.
Matrix2cd path_product(std::uint32_t bits, int steps, const CoinField<double>& field) {
    Matrix2cd product = Matrix2cd::Identity();
    Position x = 0;
    for (int t = 0; t < steps; ++t) {
        const CoinSplit<double> parts = split(field.coin_at(x));
        if (bits >> t & 1U) {
            product = parts.q_part * product;
            ++x;
        } else {
            product = parts.p_part * product;
            --x;
        }
    }
    return product;
}

// Depth-first walk of absorbed Hadamard paths. `sign` is +1 for the region
// {1, 2, ...} and -1 for its mirror.
void absorbed_paths(Position x, int remaining, int sign, const IntMatrix2& product,
                    const std::string& word, FirstPassageSum& out) {
    const auto& b = integer_hadamard_basis();
    if (x == 0) {
        if (remaining == 0) {
            out.sum.body += product;
            out.words.push_back(word);
        }
        return;
    }
    // distance to the boundary must be coverable
    if (remaining < sign * x) {
        return;
    }
    absorbed_paths(x - 1, remaining - 1, sign, b.p * product, "P" + word, out);
    absorbed_paths(x + 1, remaining - 1, sign, b.q * product, "Q" + word, out);
}

FirstPassageSum absorbed_sum(int steps, Position start, int sign) {
    check_steps(steps);
    FirstPassageSum out;
    out.sum.power = steps;
    const Position depth = sign * start;
    if (depth < 1) {
        throw std::invalid_argument("first passage: start lies on the wrong side of 0");
    }
    if (steps < depth || (steps - depth) % 2 != 0) {
        return out;
    }
    absorbed_paths(start, steps, sign, IntMatrix2::Identity(), "", out);
    return out;
}

RootTwoScaled<Rational> inner_product(const IntMatrix2& basis, const RootTwoScaled<IntMatrix2>& m) {
    // basis entries are real integers, so tr(B^dagger M) = sum B_ij M_ij
    const long long dot = basis.cwiseProduct(m.body).sum();
    return {Rational(dot), m.power + 1};
}

} // namespace

Matrix2cd FirstPassageSum::value() const {
    return sum.body.cast<std::complex<double>>() * RootTwoScaled<IntMatrix2>::factor(sum.power);
}

std::vector<PathMatrix> xi_all(int steps, const CoinField<double>& field) {
    check_steps(steps);
    std::vector<PathMatrix> out(static_cast<std::size_t>(steps) + 1);
    for (int l = 0; l <= steps; ++l) {
        out[static_cast<std::size_t>(l)].steps = steps;
        out[static_cast<std::size_t>(l)].left_steps = l;
        out[static_cast<std::size_t>(l)].right_steps = steps - l;
    }
    const std::uint32_t count = 1U << steps;
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        const int rights = __builtin_popcount(bits);
        out[static_cast<std::size_t>(steps - rights)].value += path_product(bits, steps, field);
    }
    return out;
}

PathMatrix xi(int steps, int left_steps, const CoinField<double>& field) {
    check_steps(steps);
    if (left_steps < 0 || left_steps > steps) {
        throw std::invalid_argument("xi: need 0 <= l <= n");
    }
    PathMatrix out;
    out.steps = steps;
    out.left_steps = left_steps;
    out.right_steps = steps - left_steps;
    const std::uint32_t count = 1U << steps;
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        if (steps - __builtin_popcount(bits) == left_steps) {
            out.value += path_product(bits, steps, field);
        }
    }
    return out;
}

FirstPassageSum first_passage_plus(int steps, Position start) {
    return absorbed_sum(steps, start, +1);
}

FirstPassageSum first_passage_minus(int steps, Position start) {
    return absorbed_sum(steps, start, -1);
}

const HadamardBasis& hadamard_basis() {
    static const HadamardBasis basis = [] {
        const auto& ib = integer_hadamard_basis();
        const double s = 1.0 / std::sqrt(2.0);
        return HadamardBasis{ib.p.cast<std::complex<double>>() * s,
                             ib.q.cast<std::complex<double>>() * s,
                             ib.r.cast<std::complex<double>>() * s,
                             ib.s.cast<std::complex<double>>() * s};
    }();
    return basis;
}

const IntegerHadamardBasis& integer_hadamard_basis() {
    static const IntegerHadamardBasis basis = [] {
        IntegerHadamardBasis b;
        b.p << 1, 1, 0, 0;
        b.q << 0, 0, 1, -1;
        b.r << 1, -1, 0, 0;
        b.s << 0, 0, 1, 1;
        return b;
    }();
    return basis;
}

BasisCoefficients<std::complex<double>> basis_expand(const Matrix2cd& m) {
    const auto& b = hadamard_basis();
    auto inner = [&m](const Matrix2cd& a) { return (a.adjoint() * m).trace(); };
    return {inner(b.p), inner(b.q), inner(b.r), inner(b.s)};
}

Matrix2cd basis_reconstruct(const BasisCoefficients<std::complex<double>>& c) {
    const auto& b = hadamard_basis();
    return c.p * b.p + c.q * b.q + c.r * b.r + c.s * b.s;
}

BasisCoefficients<RootTwoScaled<Rational>> basis_expand(const RootTwoScaled<IntMatrix2>& m) {
    const auto& b = integer_hadamard_basis();
    return {inner_product(b.p, m), inner_product(b.q, m), inner_product(b.r, m),
            inner_product(b.s, m)};
}

FirstPassageCoeffs first_passage_coefficients(Position start, int max_steps) {
    check_steps(max_steps);
    FirstPassageCoeffs out;
    for (int n = 0; n <= max_steps; ++n) {
        const FirstPassageSum sum =
            start > 0 ? first_passage_plus(n, start) : first_passage_minus(n, start);
        const auto c = basis_expand(sum.sum);
        out.p.push_back(c.p);
        out.q.push_back(c.q);
        out.r.push_back(c.r);
        out.s.push_back(c.s);
    }
    return out;
}

PathShape classify_path(const std::string& word) {
    if (word.empty() || word.front() != 'P') {
        return PathShape::Other;
    }
    if (word.back() == 'P') {
        return PathShape::LeftThenLeft;
    }
    if (word.back() == 'Q') {
        return PathShape::RightThenLeft;
    }
    return PathShape::Other;
}

PathMatrix xi_star(int steps, double omega) {
    check_steps(steps);
    PathMatrix out;
    out.steps = steps;
    out.left_steps = steps / 2;
    out.right_steps = steps / 2;
    if (steps < 2 || steps % 2 != 0) {
        return out;
    }
    const CoinSplit<double> origin = split(off_diagonal_phase_coin(omega));
    out.value = first_passage_plus(steps - 1, 1).value() * origin.q_part +
                first_passage_minus(steps - 1, -1).value() * origin.p_part;
    return out;
}

Matrix2cd xi_star_closed_form(double r_star_previous, double omega) {
    const std::complex<double> e = std::polar(1.0, omega);
    Matrix2cd m;
    m << -std::conj(e), 1.0, -1.0, -e;
    return (r_star_previous / 2.0) * m;
}

Vector2cd excursion_decomposition_amplitude(int half_time, double omega) {
    if (half_time < 1 || 2 * half_time > kMaxEnumerationSteps) {
        throw std::invalid_argument("excursion_decomposition_amplitude: half time out of range");
    }
    std::vector<Matrix2cd> excursions(static_cast<std::size_t>(half_time) + 1, Matrix2cd::Zero());
    for (int a = 1; a <= half_time; ++a) {
        excursions[static_cast<std::size_t>(a)] = xi_star(2 * a, omega).value;
    }
    Vector2cd phi;
    phi << std::complex<double>(1.0 / std::sqrt(2.0), 0.0),
        std::complex<double>(0.0, 1.0 / std::sqrt(2.0));

    // Every composition of n: recurse on the first part, newest excursion on the left.
    Vector2cd total = Vector2cd::Zero();
    std::function<void(int, const Matrix2cd&)> compose = [&](int left, const Matrix2cd& product) {
        if (left == 0) {
            total += product * phi;
            return;
        }
        for (int a = 1; a <= left; ++a) {
            compose(left - a, excursions[static_cast<std::size_t>(a)] * product);
        }
    };
    compose(half_time, Matrix2cd::Identity());
    return total;
}

} // namespace qwalk
