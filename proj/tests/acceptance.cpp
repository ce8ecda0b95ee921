// Runs the nine acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncprob/convolutions.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/fock.hpp"
#include "ncprob/json_io.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/random.hpp"

using namespace ncprob;

namespace {

struct Outcome {
    std::string summary;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 20) {
            failures.push_back(what);
        }
    }
};

Rational q(long long p, long long d = 1) { return Rational(p, d); }

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(NCPROB_FIXTURE_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<Monomial> monomials(const std::vector<std::string>& alphabets, int max_length) {
    std::vector<Monomial> out;
    std::vector<Monomial> layer{""};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Monomial> next;
        for (const auto& m : layer) {
            for (std::size_t f = 0; f < alphabets.size(); ++f) {
                for (std::size_t g = 0; g < alphabets[f].size(); ++g) {
                    next.push_back(m + encode_symbol(static_cast<int>(f), static_cast<int>(g)));
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Word to_word(const Monomial& m, const std::vector<std::string>& alphabets) {
    Word w;
    for (char s : m) {
        const int f = symbol_factor(s);
        const char g = alphabets[static_cast<std::size_t>(f)][static_cast<std::size_t>(symbol_gen(s))];
        if (!w.empty() && w.back().factor == f) {
            w.back().gens.push_back(g);
        } else {
            w.push_back({f, std::string(1, g)});
        }
    }
    return w;
}

std::string seq(const MomentSequence& m) {
    std::string out;
    for (const auto& x : m.moments()) {
        out += to_string(x) + " ";
    }
    return out;
}

Outcome associativity() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    const int fixtures = 200;
    long long words = 0;
    for (int trial = 0; trial < fixtures; ++trial) {
        // every 25th fixture uses two generators in the outer factors
        const std::vector<std::string> alphabets =
            trial % 25 == 0 ? std::vector<std::string>{"xy", "x", "xy"} : std::vector<std::string>{"x", "x", "x"};
        std::vector<StateTriple> factors;
        for (const auto& a : alphabets) {
            factors.push_back(random_triple(rng, a, 6));
        }
        const IndentedProduct left(factors, Bracketing::Left);
        const IndentedProduct right(factors, Bracketing::Right);
        for (const auto& m : monomials(alphabets, 6)) {
            ++words;
            for (Component c : {Component::Phi, Component::Psi, Component::Theta}) {
                o.expect(left.eval_encoded(c, m) == right.eval_encoded(c, m),
                         "fixture " + std::to_string(trial) + " " + to_string(c));
            }
        }
    }
    o.summary = std::to_string(fixtures) + " fixtures, 3 factors, " + std::to_string(words) + " words of length <= 6";
    return o;
}

Outcome convolution_associativity() {
    Outcome o;
    std::mt19937_64 rng(20240602);
    const int triples = 100;
    auto triple = [&] { return MeasureTriple{random_moments(rng, 8), random_moments(rng, 8), random_moments(rng, 8)}; };
    for (int trial = 0; trial < triples; ++trial) {
        const MeasureTriple a = triple();
        const MeasureTriple b = triple();
        const MeasureTriple c = triple();
        o.expect(indented_additive(indented_additive(a, b), c) == indented_additive(a, indented_additive(b, c)),
                 "indented trial " + std::to_string(trial));
        const MeasurePair p{a.mu, a.nu};
        const MeasurePair r{b.mu, b.nu};
        const MeasurePair s{c.mu, c.nu};
        o.expect(ofree_additive(ofree_additive(p, r), s) == ofree_additive(p, ofree_additive(r, s)),
                 "o-free trial " + std::to_string(trial));
    }
    o.summary = std::to_string(triples) + " random triples, degree 8, indented and o-free";
    return o;
}

Outcome dual_route() {
    Outcome o;
    std::mt19937_64 rng(20240603);
    int cases = 0;
    for (int degree : {8, 8, 8, 5, 3}) {
        for (ProductKind kind : all_product_kinds()) {
            std::vector<std::vector<MomentSequence>> inputs(degree == 8 ? 3 : 2);
            for (auto& f : inputs) {
                for (int s = 0; s < state_count(kind); ++s) {
                    f.push_back(random_moments(rng, degree));
                }
            }
            const auto oracle = convolve_moments(kind, inputs, degree);
            o.expect(derived_additive(kind, inputs) == oracle, to_string(kind) + " transform route, degree " +
                                                                   std::to_string(degree));
            o.expect(direct_additive(kind, inputs) == oracle, to_string(kind) + " closed form, degree " +
                                                                  std::to_string(degree));
            ++cases;
        }
    }
    // two free Bernoulli laws sum to the arcsine law on [-2, 2]: central binomial moments
    const MomentSequence bern(std::vector<Rational>{q(1), q(0), q(1), q(0), q(1), q(0), q(1), q(0), q(1)});
    const MomentSequence arcsine(std::vector<Rational>{q(1), q(0), q(2), q(0), q(6), q(0), q(20), q(0), q(70)});
    o.expect(derived_additive(ProductKind::Free, {{bern}, {bern}}).at(0) == arcsine, "free Bernoulli sum");
    o.expect(convolve_moments(ProductKind::Free, {{bern}, {bern}}, 8).at(0) == arcsine, "free Bernoulli words");
    o.summary = std::to_string(cases) + " random cases over all nine kinds, degree <= 8";
    return o;
}

Outcome cumulant_round_trip() {
    Outcome o;
    std::mt19937_64 rng(20240604);
    for (int trial = 0; trial < 4; ++trial) {
        const StateTriple x = random_triple(rng, "ab", 6);
        const CumulantTriple k = cumulants_from_moments(x, 6);
        const StateTriple back = moments_from_cumulants(k, 6);
        o.expect(back.phi == x.phi && back.psi == x.psi && back.theta == x.theta, "moments round trip");
        o.expect(cumulants_from_moments(back, 6) == k, "cumulants round trip");
        // second cumulants are covariances
        o.expect(k.ki.value("ab") == x.phi.value("ab") - x.phi.value("a") * x.phi.value("b"), "K^I_2");
        o.expect(k.kof.value("ba") == x.psi.value("ba") - x.psi.value("b") * x.psi.value("a"), "K^OF_2");
        o.expect(k.kaof.value("bb") == x.theta.value("bb") - x.theta.value("b") * x.theta.value("b"), "K^AOF_2");
        if (trial < 2) {
            o.expect(dot_cumulants(x, 6) == k, "dot-operation cumulants, fixture " + std::to_string(trial));
        }
    }
    o.summary = "4 two-generator fixtures at degree 6, dot interpolation on 2 of them";
    return o;
}

std::vector<Rational> boolean_cumulants_by_recursion(const MomentSequence& m, int n) {
    // m_k = sum_{j=1}^{k} b_j m_{k-j}
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Rational v = m[k];
        for (int j = 1; j < k; ++j) {
            v -= b[static_cast<std::size_t>(j)] * m[k - j];
        }
        b[static_cast<std::size_t>(k)] = v;
    }
    return b;
}

Outcome specialization() {
    Outcome o;
    std::mt19937_64 rng(20240605);
    const int n = 6;
    int cases = 0;
    for (int trial = 0; trial < 4; ++trial) {
        for (CumulantFamily f : all_cumulant_families()) {
            std::vector<MomentSequence> states;
            for (int s = 0; s < family_state_count(f); ++s) {
                states.push_back(random_moments(rng, n));
            }
            const auto k = specialize(f, states, n);
            o.expect(family_moments(f, k, n) == states, to_string(f) + " partition sum");
            ++cases;
            if (f == CumulantFamily::Free) {
                const PhiSeries phi = phi_transform(moments_to_F(states[0]));
                for (int j = 1; j <= n; ++j) {
                    o.expect(k[0][static_cast<std::size_t>(j)] == phi[j], "free cumulant vs phi coefficient");
                }
            }
            if (f == CumulantFamily::CFree) {
                const PhiSeries phi = cfree_phi_transform(moments_to_F(states[0]), moments_to_F(states[1]));
                for (int j = 1; j <= n; ++j) {
                    o.expect(k[0][static_cast<std::size_t>(j)] == phi[j], "c-free cumulant vs phi coefficient");
                }
            }
            if (f == CumulantFamily::Boolean) {
                o.expect(k[0] == boolean_cumulants_by_recursion(states[0], n), "Boolean recursion");
            }
        }
    }
    o.summary = std::to_string(cases) + " cases over 7 families, degree 6";
    return o;
}

Outcome clt() {
    Outcome o;
    const std::vector<std::vector<Rational>> params{
        {q(1), q(1), q(1)}, {q(1), q(1, 2), q(1, 3)}, {q(2), q(3, 2), q(0)}, {q(1, 2), q(2), q(2)}, {q(3), q(0), q(1)}};
    for (const auto& p : params) {
        const MeasureTriple t = kesten_triple(p[0], p[1], p[2], 8);
        const SingleCumulants c = single_variable_cumulants(t.lambda, t.mu, t.nu);
        for (int n = 1; n <= 8; ++n) {
            const auto i = static_cast<std::size_t>(n);
            o.expect(c.ki[i] == (n == 2 ? p[0] : q(0)), "K^I_" + std::to_string(n));
            o.expect(c.kof[i] == (n == 2 ? p[1] : q(0)), "K^OF_" + std::to_string(n));
            o.expect(c.kaof[i] == (n == 2 ? p[2] : q(0)), "K^AOF_" + std::to_string(n));
        }
        o.expect(ode_moments(c, q(1)) == t, "ODE route reproduces the closed form");
    }
    for (const Rational& b2 : {q(1), q(2, 3), q(5)}) {
        const MeasureTriple equal = kesten_triple(q(1), b2, b2, 6);
        o.expect(equal.mu[4] == 2 * b2 * b2 && equal.nu[4] == 2 * b2 * b2, "beta2 = gamma2 gives m4 = 2 beta^4");
        o.expect(equal.mu[6] == 5 * b2 * b2 * b2, "semicircle m6");
        const MeasureTriple arcsine = kesten_triple(q(1), b2, q(0), 6);
        o.expect(arcsine.mu[4] == q(3, 2) * b2 * b2, "gamma2 = 0 gives m4 = 3/2 beta^4");
        o.expect(arcsine.mu[6] == q(5, 2) * b2 * b2 * b2, "arcsine m6");
    }
    int rows = 0;
    for (const auto& p : params) {
        const CltReport r = clt_verify(p[0], p[1], p[2], 6, {4, 16, 64}, 6);
        rows += static_cast<int>(r.rows.size());
        for (const auto& f : r.failures) {
            o.expect(false, f);
        }
    }
    o.summary = "cumulants of 5 Kesten triples to degree 8, degenerate cases, " + std::to_string(rows) +
                " CLT rows over n = 4, 16, 64";
    return o;
}

Outcome fock() {
    Outcome o;
    const std::vector<MatrixStateModel> models{model_from_json(fixture("fock_bernoulli.json")),
                                               model_from_json(fixture("fock_two_gen.json")),
                                               model_from_json(fixture("fock_shifted.json"))};
    const int L = 6;
    const TruncatedFockSpace space(models, L);
    std::vector<StateTriple> triples;
    std::vector<std::string> alphabets;
    for (const auto& m : models) {
        triples.push_back(m.triple(L));
        alphabets.push_back(m.alphabet());
    }
    const IndentedProduct product(triples);
    int words = 0;
    for (const auto& m : monomials(alphabets, L)) {
        const Word w = to_word(m, alphabets);
        o.expect(space.J_indented(w) == product.eval(Component::Phi, w), "J^I word " + std::to_string(words));
        o.expect(space.J_ofree(w) == product.eval(Component::Psi, w), "J^OF word " + std::to_string(words));
        ++words;
    }
    o.summary = std::to_string(words) + " words of length <= 6 over 3 matrix fixtures (space dim " +
                std::to_string(space.size()) + ")";
    return o;
}

Outcome ode() {
    Outcome o;
    std::mt19937_64 rng(20240608);
    const int n = 8;
    for (int trial = 0; trial < 4; ++trial) {
        const MomentSequence l = random_moments(rng, n);
        const MomentSequence m = random_moments(rng, n);
        const MomentSequence v = random_moments(rng, n);
        const SingleCumulants k = single_variable_cumulants(l, m, v);
        const MeasureTriple at_one = ode_moments(k, q(1));
        o.expect(at_one == MeasureTriple{l, m, v}, "transport solution at t = 1: " + seq(at_one.lambda));
        o.expect(at_one == single_variable_moments(k), "partition sum");
        const OdeFlow a = ode_flow(k, OdeSystem::Transport);
        const OdeFlow b = ode_flow(k, OdeSystem::Mixed);
        o.expect(a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu, "mixed and transport systems");
    }
    o.summary = "4 random triples at degree 8, both ODE systems";
    return o;
}

Outcome partition_facts() {
    Outcome o;
    o.expect(enumerate(PartitionClass::NC, 3).size() == 5, "|NC(3)| = 5");
    o.expect(enumerate(PartitionClass::LNC, 3).size() == 13, "|LNC(3)| = 13");
    const PeaksBottoms pb = peaks_bottoms({1, 2, 6, 5, 4, 1, 3, 2, 4, 1, 3, 2, 5});
    o.expect(pb.peaks == std::set<int>{3, 7, 9, 11, 13}, "peaks {3,7,9,11,13}");
    o.expect(pb.bottoms == std::set<int>{1, 6, 8, 10, 12}, "bottoms {1,6,8,10,12}");
    const OrderedNCPartition p = partition_from_json(fixture("classified_partition.json"));
    const BlockClassification c = classify(p);
    o.expect(c.s1 == std::set<int>{3, 4, 5, 7}, "S1 = {V3,V4,V5,V7}");
    o.expect(c.s2 == std::set<int>{1, 2, 6}, "S2 = {V1,V2,V6}");
    o.expect(c.t2 == std::set<int>{1, 2, 3, 4, 6}, "T2 = {V1,V2,V3,V4,V6}");
    o.expect(c.t1 == std::set<int>{5, 7}, "T1 = {V5,V7}");
    const auto sigma = lnco_decompose(p).first;
    o.expect(sigma.ordered_blocks() ==
                 std::vector<Block>{p.block_at(1), p.block_at(2), p.block_at(5), p.block_at(6), p.block_at(7)},
             "sigma = (V1,V2,V5,V6,V7)");
    o.summary = "counts, peak/bottom sets and S/T classes";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"product associativity", associativity},
        {"convolution associativity", convolution_associativity},
        {"dual-route convolutions", dual_route},
        {"moment-cumulant round trip", cumulant_round_trip},
        {"specialization collapse", specialization},
        {"central limit theorem", clt},
        {"Fock space oracle", fock},
        {"ODE route", ode},
        {"partition facts", partition_facts},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = out.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("[%s] %zu %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    out.summary.c_str(), secs);
        for (const auto& f : out.failures) {
            std::printf("       %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
