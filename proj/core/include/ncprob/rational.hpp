#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ncprob {

// Expression templates are off so that `auto` never captures a lazy proxy.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p", "p/q" (optionally surrounded by blanks). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational binomial(std::int64_t n, std::int64_t k);
Rational factorial(std::int64_t n);

/// Generalised binomial coefficient C(a, k) for rational a.
Rational binomial(const Rational& a, std::int64_t k);

/// Exact complex rational, used for moment data of measures on the unit circle.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
    ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] ComplexRational conj() const { return {re, -im}; }
    [[nodiscard]] Rational norm() const { return re * re + im * im; }
    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z);
};

std::string to_string(const ComplexRational& z);

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }

}  // namespace ncprob
