#include "ncprob/polynomial.hpp"

namespace ncprob {

Polynomial Polynomial::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("interpolation needs as many values as nodes");
    }
    Polynomial out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) {
            continue;
        }
        Polynomial basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) {
                continue;
            }
            if (xs[j] == xs[i]) {
                throw std::invalid_argument("interpolation nodes must be distinct");
            }
            basis *= Polynomial(std::vector<Rational>{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        out += basis * Polynomial(ys[i] / denom);
    }
    return out;
}

}  // namespace ncprob
