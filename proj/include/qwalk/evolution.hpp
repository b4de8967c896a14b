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
 * Exact state-vector evolution of the two-state walk on the line.
 *
 * A state at time n is stored densely on the window [-n, n]; slot x + n holds
 * the (Left, Right) amplitude pair at position x. Slots of the wrong parity
 * are present but never written, so they stay exactly zero.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

template <class Scalar = double> class WalkState {
  public:
    using Amplitude = Vector2c<Scalar>;

    WalkState(std::int64_t time, std::vector<Amplitude> amplitudes)
        : time_(time), amplitudes_(std::move(amplitudes)) {
        if (time_ < 0 || amplitudes_.size() != static_cast<std::size_t>(2 * time_ + 1)) {
            throw std::invalid_argument("WalkState window must have 2n+1 slots");
        }
    }

    std::int64_t time() const { return time_; }
    Position min_position() const { return -time_; }
    Position max_position() const { return time_; }

    /// Amplitude at x; zero outside the window.
    Amplitude amplitude(Position x) const {
        if (x < -time_ || x > time_) {
            return Amplitude::Zero();
        }
        return amplitudes_[static_cast<std::size_t>(x + time_)];
    }

    std::span<const Amplitude> window() const { return amplitudes_; }

    Scalar norm_squared() const {
        Scalar total(0);
        for (const auto& a : amplitudes_) {
            total += a.squaredNorm();
        }
        return total;
    }

  private:
    std::int64_t time_;
    std::vector<Amplitude> amplitudes_;
};

/// phi* = [1/sqrt2, i/sqrt2]^T at the origin, time 0.
template <class Scalar = double> WalkState<Scalar> initial_state() {
    const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
    typename WalkState<Scalar>::Amplitude phi;
    phi << Complex<Scalar>(s, 0), Complex<Scalar>(0, s);
    return WalkState<Scalar>(0, {phi});
}

namespace detail {

/// Coins (or root-two bodies) for positions [-radius, radius].
template <class Scalar>
std::vector<CoinMatrix<Scalar>> coin_window(const CoinField<Scalar>& field, std::int64_t radius,
                                            bool bodies = false) {
    std::vector<CoinMatrix<Scalar>> coins;
    coins.reserve(static_cast<std::size_t>(2 * radius + 1));
    for (Position x = -radius; x <= radius; ++x) {
        coins.push_back(bodies ? field.body_at(x) : field.coin_at(x));
    }
    return coins;
}

// Psi_{n+1}(x) = P_{x+1} Psi_n(x+1) + Q_{x-1} Psi_n(x-1), scaled by `factor`.
// Coins are read at the source position; each target slot gets exactly one
// Left and one Right term.
template <class Scalar>
WalkState<Scalar> advance(const WalkState<Scalar>& state,
                          std::span<const CoinMatrix<Scalar>> coins, std::int64_t coin_radius,
                          Scalar factor = Scalar(1)) {
    using Amplitude = Vector2c<Scalar>;
    const std::int64_t n = state.time();
    std::vector<Amplitude> next(static_cast<std::size_t>(2 * n + 3), Amplitude::Zero());
    const auto source = state.window();
    for (Position x = -n; x <= n; x += 2) {
        const Amplitude& psi = source[static_cast<std::size_t>(x + n)];
        const CoinMatrix<Scalar>& u = coins[static_cast<std::size_t>(x + coin_radius)];
        // new window index of position y is y + n + 1
        next[static_cast<std::size_t>(x + n)](0) = factor * (u(0, 0) * psi(0) + u(0, 1) * psi(1));
        next[static_cast<std::size_t>(x + n + 2)](1) =
            factor * (u(1, 0) * psi(0) + u(1, 1) * psi(1));
    }
    return WalkState<Scalar>(n + 1, std::move(next));
}

/**
 * Calls visit(state, e) for t = 0..steps with Psi_t = state / sqrt2^e.
 *
 * Root-two-scaled fields evolve the bodies and halve every second step, so
 * e alternates 1, 2 and the only roundings come from the coin phases;
 * at quarter-turn angles the arithmetic is exact. Other fields use e = 0.
 */
template <class Scalar, class Visit>
void propagate(const CoinField<Scalar>& field, std::int64_t steps, Visit&& visit) {
    if (steps < 0) {
        throw std::invalid_argument("steps must be nonnegative");
    }
    if (!field.root_two_scaled()) {
        const auto coins = coin_window(field, steps);
        WalkState<Scalar> state = initial_state<Scalar>();
        visit(state, 0);
        for (std::int64_t t = 0; t < steps; ++t) {
            state = advance<Scalar>(state, coins, steps);
            visit(state, 0);
        }
        return;
    }
    const auto bodies = coin_window(field, steps, true);
    typename WalkState<Scalar>::Amplitude phi;
    phi << Complex<Scalar>(1, 0), Complex<Scalar>(0, 1);
    WalkState<Scalar> state(0, {phi});
    int e = 1;
    visit(state, e);
    for (std::int64_t t = 0; t < steps; ++t) {
        const bool halve = e == 2;
        state = advance<Scalar>(state, bodies, steps, halve ? Scalar(0.5) : Scalar(1));
        e = halve ? 1 : 2;
        visit(state, e);
    }
}

/// 1 / sqrt2^e for e in {0, 1, 2}.
template <class Scalar> Scalar root_two_factor(int e) {
    return e == 0 ? Scalar(1) : e == 2 ? Scalar(0.5) : Scalar(1) / std::sqrt(Scalar(2));
}

} // namespace detail

/// One step of the walk; the input state is not modified.
template <class Scalar>
WalkState<Scalar> step(const WalkState<Scalar>& state, const CoinField<Scalar>& field) {
    const auto coins = detail::coin_window(field, state.time());
    return detail::advance<Scalar>(state, coins, state.time());
}

/// n steps from initial_state().
template <class Scalar>
WalkState<Scalar> run(const CoinField<Scalar>& field, std::int64_t steps) {
    WalkState<Scalar> last = initial_state<Scalar>();
    int exponent = 0;
    detail::propagate(field, steps, [&](const WalkState<Scalar>& s, int e) {
        if (s.time() == steps) {
            last = s;
            exponent = e;
        }
    });
    if (exponent == 0) {
        return last;
    }
    const Scalar f = detail::root_two_factor<Scalar>(exponent);
    std::vector<Vector2c<Scalar>> scaled(last.window().begin(), last.window().end());
    for (auto& a : scaled) {
        a *= f;
    }
    return WalkState<Scalar>(steps, std::move(scaled));
}

/// Psi_t(0) for t = 0..steps, from a single sweep.
template <class Scalar>
std::vector<Vector2c<Scalar>> origin_amplitudes(const CoinField<Scalar>& field,
                                                std::int64_t steps) {
    std::vector<Vector2c<Scalar>> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(steps, 0) + 1));
    detail::propagate(field, steps, [&](const WalkState<Scalar>& s, int e) {
        out.push_back(s.amplitude(0) * detail::root_two_factor<Scalar>(e));
    });
    return out;
}

template <class Scalar> Scalar return_probability(const WalkState<Scalar>& state) {
    return state.amplitude(0).squaredNorm();
}

/// p_t(0) for t = 0..steps. Exact at quarter-turn angles of the built-in models.
template <class Scalar>
std::vector<Scalar> return_probabilities(const CoinField<Scalar>& field, std::int64_t steps) {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(steps, 0) + 1));
    detail::propagate(field, steps, [&](const WalkState<Scalar>& s, int e) {
        out.push_back(std::ldexp(s.amplitude(0).squaredNorm(), -e));
    });
    return out;
}

template <class Scalar = double> struct Distribution {
    std::int64_t time = 0;
    std::vector<Scalar> probabilities; ///< index x + time

    Scalar at(Position x) const {
        if (x < -time || x > time) {
            return Scalar(0);
        }
        return probabilities[static_cast<std::size_t>(x + time)];
    }
    Scalar total() const {
        Scalar s(0);
        for (Scalar p : probabilities) {
            s += p;
        }
        return s;
    }
};

template <class Scalar> Distribution<Scalar> distribution(const WalkState<Scalar>& state) {
    Distribution<Scalar> d;
    d.time = state.time();
    d.probabilities.reserve(state.window().size());
    for (const auto& a : state.window()) {
        d.probabilities.push_back(a.squaredNorm());
    }
    return d;
}

} // namespace qwalk
