#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

/// Truncated formal power series a_0 + a_1 w + ... + a_N w^N over a commutative
/// ring T. The precision N is the largest exponent whose coefficient is known
/// exactly; binary operations keep the smaller precision of their operands.
template <class T>
class PowerSeries {
public:
    PowerSeries() : coeffs_(1, T(0)) {}
    explicit PowerSeries(int precision) : coeffs_(static_cast<std::size_t>(check_precision(precision)) + 1, T(0)) {}
    explicit PowerSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("power series needs at least one coefficient");
        }
    }

    static PowerSeries constant(T c, int precision) {
        PowerSeries out(precision);
        out.coeffs_[0] = std::move(c);
        return out;
    }

    /// The series w itself.
    static PowerSeries variable(int precision) {
        PowerSeries out(precision);
        if (precision >= 1) {
            out.coeffs_[1] = T(1);
        }
        return out;
    }

    [[nodiscard]] int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<T>& coeffs() const { return coeffs_; }

    const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    [[nodiscard]] PowerSeries truncated(int precision) const {
        if (precision > this->precision()) {
            throw std::invalid_argument("cannot raise the precision of a truncated series");
        }
        return PowerSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + precision + 1));
    }

    /// Multiplication by w^k.
    [[nodiscard]] PowerSeries shifted_up(int k) const {
        std::vector<T> c(static_cast<std::size_t>(k), T(0));
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return PowerSeries(std::move(c));
    }

    /// Division by w^k; the first k coefficients must vanish.
    [[nodiscard]] PowerSeries shifted_down(int k) const {
        if (k > precision()) {
            throw std::invalid_argument("shift exceeds precision");
        }
        for (int i = 0; i < k; ++i) {
            if (!is_zero(coeffs_[static_cast<std::size_t>(i)])) {
                throw std::domain_error("series is not divisible by the requested power of w");
            }
        }
        return PowerSeries(std::vector<T>(coeffs_.begin() + k, coeffs_.end()));
    }

    PowerSeries& operator+=(const PowerSeries& o) {
        shrink_to(o.precision());
        for (int i = 0; i <= precision(); ++i) {
            coeffs_[static_cast<std::size_t>(i)] += o[i];
        }
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        shrink_to(o.precision());
        for (int i = 0; i <= precision(); ++i) {
            coeffs_[static_cast<std::size_t>(i)] -= o[i];
        }
        return *this;
    }
    PowerSeries& operator*=(const T& s) {
        for (auto& c : coeffs_) {
            c *= s;
        }
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator-(PowerSeries a) {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend PowerSeries operator*(PowerSeries a, const T& s) { return a *= s; }
    friend PowerSeries operator*(const T& s, PowerSeries a) { return a *= s; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const int n = std::min(a.precision(), b.precision());
        PowerSeries out(n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a[i])) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
            }
        }
        return out;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplicative inverse; the constant term must be invertible in T.
    [[nodiscard]] PowerSeries reciprocal() const {
        if (is_zero(coeffs_[0])) {
            throw std::domain_error("reciprocal of a series with zero constant term");
        }
        const int n = precision();
        PowerSeries out(n);
        const T inv0 = T(1) / coeffs_[0];
        out.coeffs_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            T acc(0);
            for (int j = 1; j <= k; ++j) {
                if (!is_zero(coeffs_[static_cast<std::size_t>(j)])) {
                    acc += coeffs_[static_cast<std::size_t>(j)] * out.coeffs_[static_cast<std::size_t>(k - j)];
                }
            }
            out.coeffs_[static_cast<std::size_t>(k)] = -(acc * inv0);
        }
        return out;
    }

    /// this(inner(w)); inner must have zero constant term.
    [[nodiscard]] PowerSeries compose(const PowerSeries& inner) const {
        if (!is_zero(inner[0])) {
            throw std::domain_error("composition requires an inner series without constant term");
        }
        const int n = std::min(precision(), inner.precision());
        const PowerSeries in = inner.truncated(n);
        PowerSeries out = constant(coeffs_[static_cast<std::size_t>(n)], n);
        for (int k = n - 1; k >= 0; --k) {
            out = out * in;
            out.coeffs_[0] += coeffs_[static_cast<std::size_t>(k)];
        }
        return out;
    }

    /// Compositional inverse g with this(g(w)) = w, solved coefficient by coefficient.
    [[nodiscard]] PowerSeries reversion() const {
        if (!is_zero(coeffs_[0])) {
            throw std::domain_error("reversion requires zero constant term");
        }
        const int n = precision();
        if (n < 1 || is_zero(coeffs_[1])) {
            throw std::domain_error("reversion requires an invertible linear coefficient");
        }
        const T inv1 = T(1) / coeffs_[1];
        PowerSeries g(n);
        g.coeffs_[1] = inv1;
        for (int k = 2; k <= n; ++k) {
            const PowerSeries fg = compose(g);
            g.coeffs_[static_cast<std::size_t>(k)] = -(fg[k] * inv1);
        }
        return g;
    }

    /// Formal derivative d/dw; precision drops by one.
    [[nodiscard]] PowerSeries derivative() const {
        if (precision() < 1) {
            throw std::domain_error("derivative needs precision at least 1");
        }
        PowerSeries out(precision() - 1);
        for (int k = 1; k <= precision(); ++k) {
            out.coeffs_[static_cast<std::size_t>(k - 1)] = coeffs_[static_cast<std::size_t>(k)] * T(k);
        }
        return out;
    }

private:
    static int check_precision(int p) {
        if (p < 0) {
            throw std::invalid_argument("negative series precision");
        }
        return p;
    }
    void shrink_to(int p) {
        if (p < precision()) {
            coeffs_.resize(static_cast<std::size_t>(p) + 1);
        }
    }

    std::vector<T> coeffs_;
};

}  // namespace ncprob
