#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

/// Dense univariate polynomial with exact rational coefficients. Used as the
/// coefficient ring for time-dependent series and for interpolation in N.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(Rational c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) {
            coeffs_.push_back(std::move(c));
        }
    }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(int degree, Rational c = Rational(1)) {
        std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Rational coefficient(int k) const {
        return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
    }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    [[nodiscard]] Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const {
        std::vector<Rational> v;
        for (int k = 1; k <= degree(); ++k) {
            v.push_back(coeffs_[static_cast<std::size_t>(k)] * Rational(k));
        }
        return Polynomial(std::move(v));
    }

    /// Antiderivative vanishing at 0.
    [[nodiscard]] Polynomial integral() const {
        std::vector<Rational> v(coeffs_.size() + 1);
        for (int k = 0; k <= degree(); ++k) {
            v[static_cast<std::size_t>(k) + 1] = coeffs_[static_cast<std::size_t>(k)] / Rational(k + 1);
        }
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(v));
    }
    /// Division by a constant polynomial only.
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        if (b.degree() != 0) {
            throw std::domain_error("polynomial division is only defined by nonzero constants");
        }
        std::vector<Rational> v = a.coeffs_;
        for (auto& c : v) {
            c /= b.coeffs_[0];
        }
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Unique polynomial of degree <= xs.size()-1 through the points (xs[i], ys[i]).
    static Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace ncprob
