#include "ncprob/rational.hpp"

#include <cctype>

#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    const boost::multiprecision::mpz_int p(n);
    const boost::multiprecision::mpz_int q{std::string(den)};
    if (q == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(p, q);
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) {
        return Rational(0);
    }
    Rational out(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= Rational(n - k + i);
        out /= Rational(i);
    }
    return out;
}

Rational binomial(const Rational& a, std::int64_t k) {
    if (k < 0) {
        return Rational(0);
    }
    Rational out(1);
    for (std::int64_t i = 0; i < k; ++i) {
        out *= (a - Rational(i));
        out /= Rational(i + 1);
    }
    return out;
}

Rational factorial(std::int64_t n) {
    Rational out(1);
    for (std::int64_t i = 2; i <= n; ++i) {
        out *= Rational(i);
    }
    return out;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    const Rational d = o.norm();
    if (d == 0) {
        throw std::domain_error("complex rational division by zero");
    }
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

std::string to_string(const ComplexRational& z) {
    if (z.im == 0) {
        return to_string(z.re);
    }
    std::string out = z.re == 0 ? std::string{} : to_string(z.re);
    if (z.im > 0 && !out.empty()) {
        out += '+';
    }
    out += to_string(z.im);
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << to_string(z); }

}  // namespace ncprob
