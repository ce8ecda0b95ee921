#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncprob/freeprod.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// Random rational p/q with q in 1..max_den and |p/q| <= bound.
inline Rational random_rational(std::mt19937_64& rng, int bound = 2, int max_den = 4) {
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-bound * q, bound * q);
    return Rational(num(rng), q);
}

/// Random functional with unit mapped to 1; positivity is not enforced.
inline MultiMomentFunctional random_functional(std::mt19937_64& rng, const std::string& alphabet, int truncation) {
    std::map<std::string, Rational> values;
    for (const auto& w : all_words(alphabet, truncation)) {
        values[w] = w.empty() ? Rational(1) : random_rational(rng);
    }
    return {alphabet, truncation, std::move(values)};
}

inline MomentSequence random_moments(std::mt19937_64& rng, int truncation) {
    std::vector<Rational> m(static_cast<std::size_t>(truncation) + 1);
    m[0] = 1;
    for (std::size_t k = 1; k < m.size(); ++k) {
        m[k] = random_rational(rng);
    }
    return MomentSequence(std::move(m));
}

inline StateTriple random_triple(std::mt19937_64& rng, const std::string& alphabet, int truncation) {
    return {random_functional(rng, alphabet, truncation), random_functional(rng, alphabet, truncation),
            random_functional(rng, alphabet, truncation)};
}

}  // namespace ncprob
