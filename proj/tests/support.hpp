#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncprob/freeprod.hpp"
#include "ncprob/rational.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) {
    std::ifstream in(std::string(NCPROB_FIXTURE_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline ncprob::Rational q(long long p, long long d = 1) { return ncprob::Rational(p, d); }

inline std::vector<ncprob::Rational> qs(std::initializer_list<ncprob::Rational> v) { return v; }

/// Encoded monomial -> word, merging neighbouring symbols of one factor into a letter.
inline ncprob::Word to_word(const ncprob::Monomial& m, const std::vector<std::string>& alphabets) {
    ncprob::Word w;
    for (char s : m) {
        const int f = ncprob::symbol_factor(s);
        const char g = alphabets.at(static_cast<std::size_t>(f)).at(static_cast<std::size_t>(ncprob::symbol_gen(s)));
        if (!w.empty() && w.back().factor == f) {
            w.back().gens.push_back(g);
        } else {
            w.push_back({f, std::string(1, g)});
        }
    }
    return w;
}

/// Every encoded monomial with 1..max_length symbols over the given factor alphabets.
inline std::vector<ncprob::Monomial> all_monomials(const std::vector<std::string>& alphabets, int max_length) {
    std::vector<ncprob::Monomial> out;
    std::vector<ncprob::Monomial> layer{""};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<ncprob::Monomial> next;
        for (const auto& m : layer) {
            for (std::size_t f = 0; f < alphabets.size(); ++f) {
                for (std::size_t g = 0; g < alphabets[f].size(); ++g) {
                    next.push_back(m + ncprob::encode_symbol(static_cast<int>(f), static_cast<int>(g)));
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace testing_support
