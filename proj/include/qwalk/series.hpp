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
 * Truncated formal power series in one variable z.
 *
 * A Series<T> of order N carries the coefficients of z^0 .. z^N. Every
 * operation is exact up to z^N for an exact coefficient type; mixing two
 * orders truncates to the smaller one. T is either Rational (exact) or a
 * floating type.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// Square root of a rational that is a perfect square; throws std::domain_error otherwise.
inline Rational exact_sqrt(const Rational& q) {
    if (q < 0) {
        throw std::domain_error("exact_sqrt: negative argument");
    }
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt rn = boost::multiprecision::sqrt(num);
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) {
        throw std::domain_error("exact_sqrt: not a perfect square");
    }
    return Rational(rn, rd);
}

inline double exact_sqrt(double x) {
    if (x < 0) {
        throw std::domain_error("exact_sqrt: negative argument");
    }
    return std::sqrt(x);
}

inline std::string to_string(const Rational& q) { return q.str(); }

template <class T> class Series {
  public:
    explicit Series(int order = 0) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1, T(0)) {}

    Series(std::vector<T> coeffs, int order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(static_cast<std::size_t>(check_order(order)) + 1, T(0));
    }

    static Series constant(const T& value, int order) {
        Series s(order);
        s.coeffs_[0] = value;
        return s;
    }

    /// coeff * z^power
    static Series monomial(const T& coeff, int power, int order) {
        Series s(order);
        if (power >= 0 && power <= order) {
            s.coeffs_[static_cast<std::size_t>(power)] = coeff;
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^k; zero above the truncation order.
    T operator[](int k) const {
        if (k < 0 || k > order()) {
            return T(0);
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    void set(int k, const T& value) { coeffs_.at(static_cast<std::size_t>(k)) = value; }

    const std::vector<T>& coefficients() const { return coeffs_; }

    Series truncated(int order) const {
        return Series(std::vector<T>(coeffs_.begin(),
                                     coeffs_.begin() + std::min(order, this->order()) + 1),
                      order);
    }

    Series& operator+=(const Series& rhs) {
        shrink_to(rhs.order());
        for (int k = 0; k <= order(); ++k) {
            coeffs_[static_cast<std::size_t>(k)] += rhs[k];
        }
        return *this;
    }
    Series& operator-=(const Series& rhs) {
        shrink_to(rhs.order());
        for (int k = 0; k <= order(); ++k) {
            coeffs_[static_cast<std::size_t>(k)] -= rhs[k];
        }
        return *this;
    }
    Series& operator*=(const T& scalar) {
        for (auto& c : coeffs_) {
            c *= scalar;
        }
        return *this;
    }

    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator-(Series s) { return s *= T(-1); }
    friend Series operator*(Series s, const T& scalar) { return s *= scalar; }
    friend Series operator*(const T& scalar, Series s) { return s *= scalar; }

    friend Series operator+(Series lhs, const T& c) {
        lhs.coeffs_[0] += c;
        return lhs;
    }
    friend Series operator+(const T& c, Series rhs) { return std::move(rhs) + c; }
    friend Series operator-(Series lhs, const T& c) {
        lhs.coeffs_[0] -= c;
        return lhs;
    }
    friend Series operator-(const T& c, Series rhs) { return -std::move(rhs) + c; }

    /// Cauchy product truncated to min order.
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series out(n);
        for (int i = 0; i <= n; ++i) {
            const T& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai == T(0)) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                out.coeffs_[static_cast<std::size_t>(i + j)] +=
                    ai * b.coeffs_[static_cast<std::size_t>(j)];
            }
        }
        return out;
    }

    /// a / b by the recursion q_k = (a_k - sum_{j>=1} b_j q_{k-j}) / b_0.
    friend Series operator/(const Series& a, const Series& b) {
        if (b[0] == T(0)) {
            throw std::domain_error("series division: denominator has zero constant term");
        }
        const int n = std::min(a.order(), b.order());
        Series q(n);
        const T b0 = b[0];
        for (int k = 0; k <= n; ++k) {
            T acc = a[k];
            for (int j = 1; j <= k; ++j) {
                const T& bj = b.coeffs_[static_cast<std::size_t>(j)];
                if (bj != T(0)) {
                    acc -= bj * q.coeffs_[static_cast<std::size_t>(k - j)];
                }
            }
            q.coeffs_[static_cast<std::size_t>(k)] = acc / b0;
        }
        return q;
    }

    /// z^k * s at the same order.
    Series shifted_up(int k) const {
        Series out(order());
        for (int i = 0; i + k <= order(); ++i) {
            out.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
        }
        return out;
    }

    /// s / z^k; the low k coefficients must vanish. The order drops by k.
    Series shifted_down(int k) const {
        for (int i = 0; i < k && i <= order(); ++i) {
            if (coeffs_[static_cast<std::size_t>(i)] != T(0)) {
                throw std::domain_error("series shift: division by z^" + std::to_string(k) +
                                        " leaves a pole");
            }
        }
        if (k > order()) {
            throw std::domain_error("series shift: order exhausted");
        }
        return Series(std::vector<T>(coeffs_.begin() + k, coeffs_.end()), order() - k);
    }

    Series pow(int exponent) const {
        if (exponent < 0) {
            throw std::domain_error("series pow: negative exponent");
        }
        Series result = constant(T(1), order());
        Series base = *this;
        while (exponent > 0) {
            if (exponent & 1) {
                result = result * base;
            }
            exponent >>= 1;
            if (exponent > 0) {
                base = base * base;
            }
        }
        return result;
    }

    /// Coefficient-wise conversion, e.g. Rational -> double.
    template <class U> Series<U> cast(const std::function<U(const T&)>& convert) const {
        std::vector<U> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            out.push_back(convert(c));
        }
        return Series<U>(std::move(out), order());
    }

    friend bool operator==(const Series& a, const Series& b) = default;

  private:
    static int check_order(int order) {
        if (order < 0) {
            throw std::invalid_argument("series order must be nonnegative");
        }
        return order;
    }
    void shrink_to(int order) {
        if (order < this->order()) {
            coeffs_.resize(static_cast<std::size_t>(order) + 1);
        }
    }

    std::vector<T> coeffs_;
};

/// Square root with constant term sqrt(s_0), from the recursion 2 r_0 r_k = s_k - sum_{0<j<k} r_j r_{k-j}.
template <class T> Series<T> sqrt(const Series<T>& s) {
    const T r0 = exact_sqrt(s[0]);
    if (r0 == T(0)) {
        throw std::domain_error("series sqrt: zero constant term");
    }
    const int n = s.order();
    std::vector<T> r(static_cast<std::size_t>(n) + 1, T(0));
    r[0] = r0;
    const T two_r0 = T(2) * r0;
    for (int k = 1; k <= n; ++k) {
        T acc = s[k];
        for (int j = 1; j < k; ++j) {
            const T& rj = r[static_cast<std::size_t>(j)];
            if (rj != T(0)) {
                acc -= rj * r[static_cast<std::size_t>(k - j)];
            }
        }
        r[static_cast<std::size_t>(k)] = acc / two_r0;
    }
    return Series<T>(std::move(r), n);
}

inline Series<double> to_double(const Series<Rational>& s) {
    return s.cast<double>([](const Rational& q) { return to_double(q); });
}

/**
 * body * 2^{-power/2}. Used wherever 1/sqrt2 factors appear in otherwise
 * exact quantities (Hadamard path products, the lambda series).
 */
template <class T> struct RootTwoScaled {
    T body;
    int power = 0;

    static double factor(int power) { return std::pow(2.0, -0.5 * power); }
};

/// Exact equality of two rational root-two-scaled values; sqrt2 is irrational,
/// so values whose powers differ in parity are equal only when both vanish.
inline bool exactly_equal(const RootTwoScaled<Rational>& a, const RootTwoScaled<Rational>& b) {
    if ((a.power - b.power) % 2 != 0) {
        return a.body == 0 && b.body == 0;
    }
    const int k = std::max(a.power, b.power);
    const Rational sa = a.body * Rational(BigInt(1) << ((k - a.power) / 2));
    const Rational sb = b.body * Rational(BigInt(1) << ((k - b.power) / 2));
    return sa == sb;
}

inline double to_double(const RootTwoScaled<Rational>& v) {
    return to_double(v.body) * RootTwoScaled<Rational>::factor(v.power);
}

} // namespace qwalk
