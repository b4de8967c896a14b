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
 * Classical random walk with a single defect site at the origin, evolved by
 * exact dynamic programming on the window [-n, n].
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Left with probability p0 (right q0) at the origin, p (q) elsewhere.
template <class Scalar = double> class ClassicalField {
  public:
    ClassicalField(Scalar p0, Scalar q0, Scalar p, Scalar q) : p0_(p0), q0_(q0), p_(p), q_(q) {
        auto valid = [](Scalar a, Scalar b) {
            return a >= Scalar(0) && b >= Scalar(0) && std::abs(a + b - Scalar(1)) <= Scalar(1e-12);
        };
        if (!valid(p0, q0) || !valid(p, q)) {
            throw std::invalid_argument("ClassicalField: probabilities must be in [0,1] and sum to 1");
        }
    }

    /// Convenience: q0 = 1 - p0, q = 1 - p.
    static ClassicalField from_left(Scalar p0, Scalar p) {
        return ClassicalField(p0, Scalar(1) - p0, p, Scalar(1) - p);
    }

    Scalar p0() const { return p0_; }
    Scalar q0() const { return q0_; }
    Scalar p() const { return p_; }
    Scalar q() const { return q_; }

    Scalar left_at(Position x) const { return x == 0 ? p0_ : p_; }
    Scalar right_at(Position x) const { return x == 0 ? q0_ : q_; }

  private:
    Scalar p0_, q0_, p_, q_;
};

template <class Scalar = double> struct ClassicalDistribution {
    std::int64_t time = 0;
    std::vector<Scalar> mass{Scalar(1)}; ///< index x + time

    Scalar at(Position x) const {
        if (x < -time || x > time) {
            return Scalar(0);
        }
        return mass[static_cast<std::size_t>(x + time)];
    }
    Scalar total() const {
        Scalar s(0);
        for (Scalar m : mass) {
            s += m;
        }
        return s;
    }
};

/// mass(x) <- p_{x+1} mass(x+1) + q_{x-1} mass(x-1)
template <class Scalar>
ClassicalDistribution<Scalar> classical_step(const ClassicalDistribution<Scalar>& dist,
                                             const ClassicalField<Scalar>& field) {
    const std::int64_t n = dist.time;
    ClassicalDistribution<Scalar> next;
    next.time = n + 1;
    next.mass.assign(static_cast<std::size_t>(2 * n + 3), Scalar(0));
    for (Position x = -n; x <= n; ++x) {
        const Scalar m = dist.mass[static_cast<std::size_t>(x + n)];
        if (m == Scalar(0)) {
            continue;
        }
        next.mass[static_cast<std::size_t>(x + n)] += field.left_at(x) * m;
        next.mass[static_cast<std::size_t>(x + n + 2)] += field.right_at(x) * m;
    }
    return next;
}

/// p^(c)_t(0) for t = 0..steps, from a delta at the origin.
template <class Scalar>
std::vector<Scalar> classical_returns(const ClassicalField<Scalar>& field, std::int64_t steps) {
    if (steps < 0) {
        throw std::invalid_argument("classical_returns: steps must be nonnegative");
    }
    ClassicalDistribution<Scalar> dist;
    std::vector<Scalar> out{dist.at(0)};
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t t = 0; t < steps; ++t) {
        dist = classical_step(dist, field);
        if (std::abs(dist.total() - Scalar(1)) > Scalar(1e-12)) {
            throw std::logic_error("classical_returns: mass not conserved");
        }
        out.push_back(dist.at(0));
    }
    return out;
}

template <class Scalar>
Scalar classical_return(const ClassicalField<Scalar>& field, std::int64_t steps) {
    return classical_returns(field, steps).back();
}

} // namespace qwalk
