#include "ncprob/checks.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "ncprob/convolutions.hpp"
#include "ncprob/freeprod.hpp"
#include "ncprob/random.hpp"

namespace ncprob {

namespace {

std::string describe(const std::vector<Rational>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i == 0 ? "" : " ") << to_string(v[i]);
    }
    return out.str();
}

std::string describe(const std::vector<MomentSequence>& ms) {
    std::string out;
    for (const auto& m : ms) {
        out += "[" + describe(m.moments()) + "]";
    }
    return out;
}

std::string describe_monomial(const Monomial& m) {
    std::string out;
    for (char s : m) {
        out += std::to_string(symbol_factor(s)) + ":" + std::to_string(symbol_gen(s)) + " ";
    }
    return out;
}

MeasureTriple random_measure_triple(std::mt19937_64& rng, int degree) {
    return {random_moments(rng, degree), random_moments(rng, degree), random_moments(rng, degree)};
}

}  // namespace

CheckReport check_associativity(std::uint64_t seed, int trials, int max_length, const std::string& alphabet) {
    CheckReport report{"associativity", 0, {}};
    std::mt19937_64 rng(seed);
    const int gens = static_cast<int>(alphabet.size());
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<StateTriple> factors;
        for (int f = 0; f < 3; ++f) {
            factors.push_back(random_triple(rng, alphabet, max_length));
        }
        const IndentedProduct left(factors, Bracketing::Left);
        const IndentedProduct right(factors, Bracketing::Right);
        Monomial word;
        std::function<void()> walk = [&] {
            if (!word.empty()) {
                for (Component c : {Component::Phi, Component::Psi, Component::Theta}) {
                    ++report.checked;
                    const Rational l = left.eval_encoded(c, word);
                    const Rational r = right.eval_encoded(c, word);
                    if (l != r) {
                        report.failures.push_back("trial " + std::to_string(trial) + " " + to_string(c) + " word " +
                                                  describe_monomial(word) + ": " + to_string(l) + " vs " +
                                                  to_string(r));
                    }
                }
            }
            if (static_cast<int>(word.size()) == max_length) {
                return;
            }
            for (int f = 0; f < 3; ++f) {
                for (int g = 0; g < gens; ++g) {
                    word.push_back(encode_symbol(f, g));
                    walk();
                    word.pop_back();
                }
            }
        };
        walk();
    }
    return report;
}

CheckReport check_dual_route(std::uint64_t seed, int trials, int degree) {
    CheckReport report{"dual-route", 0, {}};
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        for (ProductKind kind : all_product_kinds()) {
            std::vector<std::vector<MomentSequence>> inputs(3);
            for (auto& factor : inputs) {
                for (int s = 0; s < state_count(kind); ++s) {
                    factor.push_back(random_moments(rng, degree));
                }
            }
            ++report.checked;
            const auto oracle = convolve_moments(kind, inputs, degree);
            const auto derived = derived_additive(kind, inputs);
            const auto direct = direct_additive(kind, inputs);
            const std::string tag = "trial " + std::to_string(trial) + " " + to_string(kind);
            if (derived != oracle) {
                report.failures.push_back(tag + " transform " + describe(derived) + " vs words " + describe(oracle));
            }
            if (direct != oracle) {
                report.failures.push_back(tag + " closed form " + describe(direct) + " vs words " + describe(oracle));
            }
        }
    }
    return report;
}

CheckReport check_convolution_associativity(std::uint64_t seed, int trials, int degree) {
    CheckReport report{"convolution-associativity", 0, {}};
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const MeasureTriple a = random_measure_triple(rng, degree);
        const MeasureTriple b = random_measure_triple(rng, degree);
        const MeasureTriple c = random_measure_triple(rng, degree);
        ++report.checked;
        if (indented_additive(indented_additive(a, b), c) != indented_additive(a, indented_additive(b, c))) {
            report.failures.push_back("trial " + std::to_string(trial) + " indented");
        }
        const MeasurePair p{a.mu, a.nu};
        const MeasurePair q{b.mu, b.nu};
        const MeasurePair r{c.mu, c.nu};
        ++report.checked;
        if (ofree_additive(ofree_additive(p, q), r) != ofree_additive(p, ofree_additive(q, r))) {
            report.failures.push_back("trial " + std::to_string(trial) + " o-free");
        }
    }
    return report;
}

CheckReport check_independence(std::uint64_t seed, int trials) {
    CheckReport report{"independence", 0, {}};
    std::mt19937_64 rng(seed);
    std::vector<StateTriple> factors;
    for (int f = 0; f < 3; ++f) {
        factors.push_back(random_triple(rng, "xy", 6));
    }
    const IndentedProduct product(factors);
    for (IndependenceCondition cond : {IndependenceCondition::OF, IndependenceCondition::I1, IndependenceCondition::I2,
                                       IndependenceCondition::I1Prime, IndependenceCondition::I2Prime,
                                       IndependenceCondition::I2DoublePrime}) {
        const IndependenceReport r = verify_independence(cond, product, trials, rng(), 6);
        report.checked += r.checked;
        for (const auto& v : r.violations) {
            report.failures.push_back(to_string(cond) + ": " + v);
        }
    }
    return report;
}

}  // namespace ncprob
