#include <random>

#include "doctest.h"
#include "ncprob/convolutions.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"
#include "ncprob/random.hpp"
#include "support.hpp"

using namespace ncprob;
using testing_support::q;

namespace {

MomentSequence bernoulli(int n) {
    std::vector<Rational> m(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; k += 2) {
        m[static_cast<std::size_t>(k)] = 1;
    }
    return MomentSequence(m);
}

MomentSequence with_nonzero_mean(std::mt19937_64& rng, int n) {
    auto v = random_moments(rng, n).moments();
    if (v[1] == 0) {
        v[1] = q(1, 3);
    }
    return MomentSequence(v);
}

std::vector<LinearLetter> power_word(int n, int first, int second) {
    std::vector<LinearLetter> w;
    for (int i = 0; i < n; ++i) {
        w.push_back({first, q(0), {{"u", q(1)}}});
        w.push_back({second, q(0), {{"u", q(1)}}});
    }
    return w;
}

}  // namespace

TEST_CASE("single-variable additive convolutions of Bernoulli laws") {
    const MomentSequence b = bernoulli(6);
    const MomentSequence free = free_additive(b, b);
    CHECK(free.moments() == std::vector<Rational>{q(1), q(0), q(2), q(0), q(6), q(0), q(20)});
    CHECK(free_additive_phi(b, b) == free);
    // x + y with x, y Boolean independent Bernoulli laws: F = z - 2/z
    const MomentSequence boolean = boolean_additive(b, b);
    CHECK(boolean.moments() == std::vector<Rational>{q(1), q(0), q(2), q(0), q(4), q(0), q(8)});
    // F = (z - 1/z) - 1/(z - 1/z) for the monotone sum
    const MomentSequence mono = monotone_additive(b, b);
    CHECK(mono[2] == 2);
    CHECK(mono[4] == 5);
    CHECK(antimonotone_additive(b, b) == mono);
}

TEST_CASE("transform routes agree with word expansion") {
    std::mt19937_64 rng(21);
    for (ProductKind k : all_product_kinds()) {
        CAPTURE(to_string(k));
        std::vector<std::vector<MomentSequence>> inputs(2);
        for (auto& f : inputs) {
            for (int s = 0; s < state_count(k); ++s) {
                f.push_back(random_moments(rng, 6));
            }
        }
        const auto oracle = convolve_moments(k, inputs, 6);
        CHECK(derived_additive(k, inputs) == oracle);
        CHECK(direct_additive(k, inputs) == oracle);
    }
}

TEST_CASE("c-free routes and pair identities") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const MeasurePair p{random_moments(rng, 7), random_moments(rng, 7)};
        const MeasurePair r{random_moments(rng, 7), random_moments(rng, 7)};
        CHECK(cfree_additive(p, r) == cfree_additive_three_term(p, r));
        // o-free with nu = mu on the right reduces to c-free-type three-term data
        const MeasurePair o = ofree_additive(p, r);
        const MeasureTriple t = indented_additive({random_moments(rng, 7), p.mu, p.nu}, {random_moments(rng, 7), r.mu, r.nu});
        CHECK(t.mu == o.mu);
        CHECK(t.nu == o.nu);
    }
}

TEST_CASE("variance is additive for centred inputs") {
    std::mt19937_64 rng(23);
    auto centred = [&] {
        auto v = random_moments(rng, 5).moments();
        v[1] = 0;
        return MomentSequence(v);
    };
    const MeasureTriple a{centred(), centred(), centred()};
    const MeasureTriple b{centred(), centred(), centred()};
    const MeasureTriple s = indented_additive(a, b);
    CHECK(s.lambda[2] == a.lambda[2] + b.lambda[2]);
    CHECK(s.mu[2] == a.mu[2] + b.mu[2]);
    CHECK(s.nu[2] == a.nu[2] + b.nu[2]);
}

TEST_CASE("point masses shift every kind") {
    const MeasureTriple a{MomentSequence::point_mass(q(1), 6), MomentSequence::point_mass(q(1), 6),
                          MomentSequence::point_mass(q(1), 6)};
    const MeasureTriple b{MomentSequence::point_mass(q(2, 3), 6), MomentSequence::point_mass(q(2, 3), 6),
                          MomentSequence::point_mass(q(2, 3), 6)};
    const MeasureTriple s = indented_additive(a, b);
    CHECK(s.lambda == MomentSequence::point_mass(q(5, 3), 6));
    CHECK(s.mu == MomentSequence::point_mass(q(5, 3), 6));
    CHECK(s.nu == MomentSequence::point_mass(q(5, 3), 6));
}

TEST_CASE("Kesten triples") {
    const MeasureTriple k = kesten_triple(q(1), q(1), q(1), 8);
    CHECK(k.lambda.moments() == std::vector<Rational>{q(1), q(0), q(1), q(0), q(2), q(0), q(5), q(0), q(14)});
    const MeasureTriple arcsine = kesten_triple(q(2), q(2), q(0), 6);
    CHECK(arcsine.mu[4] == q(6));
    CHECK(arcsine.mu[6] == q(20));
    for (const auto& params : {std::vector<Rational>{q(1), q(1, 2), q(1, 3)}, std::vector<Rational>{q(3), q(0), q(2)},
                               std::vector<Rational>{q(1, 2), q(2), q(2)}}) {
        const MeasureTriple t = kesten_triple(params[0], params[1], params[2], 8);
        const SingleCumulants c = single_variable_cumulants(t.lambda, t.mu, t.nu);
        for (int n = 1; n <= 8; ++n) {
            CHECK(c.ki[static_cast<std::size_t>(n)] == (n == 2 ? params[0] : q(0)));
            CHECK(c.kof[static_cast<std::size_t>(n)] == (n == 2 ? params[1] : q(0)));
            CHECK(c.kaof[static_cast<std::size_t>(n)] == (n == 2 ? params[2] : q(0)));
        }
    }
}

TEST_CASE("central limit sums approach the Kesten triple") {
    const CltReport r = clt_verify(q(1), q(1, 2), q(1, 3), 6, {4, 16}, 6);
    CHECK(r.ok());
    CHECK_FALSE(r.rows.empty());
    CHECK(dilate(bernoulli(4), q(2))[4] == 16);
}

TEST_CASE("multiplicative convolutions agree with word expansion") {
    std::mt19937_64 rng(24);
    const int n = 5;
    const MomentSequence mu1 = with_nonzero_mean(rng, n);
    const MomentSequence nu1 = with_nonzero_mean(rng, n);
    const MomentSequence mu2 = with_nonzero_mean(rng, n);
    const MomentSequence nu2 = with_nonzero_mean(rng, n);
    const CPair p1{to_complex(mu1), to_complex(nu1)};
    const CPair p2{to_complex(mu2), to_complex(nu2)};
    auto f = [](const MomentSequence& m) { return MultiMomentFunctional::from_moments(m, 'u'); };

    const IndentedProduct cf({{f(mu1), f(nu1), f(nu1)}, {f(mu2), f(nu2), f(nu2)}});
    const CPair c = mult_cfree(p1, p2);
    CHECK(mult_cfree_eta(p1, p2) == c.mu);
    CHECK(mult_free(p1.nu, p2.nu) == c.nu);
    const IndentedProduct of({{f(mu1), f(mu1), f(nu1)}, {f(mu2), f(mu2), f(nu2)}});
    const CPair o = mult_ofree(p1, p2);
    for (int k = 1; k <= n; ++k) {
        CAPTURE(k);
        CHECK(c.mu[static_cast<std::size_t>(k)] == ComplexRational(cf.eval(Component::Phi, power_word(k, 0, 1))));
        CHECK(c.nu[static_cast<std::size_t>(k)] == ComplexRational(cf.eval(Component::Psi, power_word(k, 0, 1))));
        CHECK(o.mu[static_cast<std::size_t>(k)] == ComplexRational(of.eval(Component::Psi, power_word(k, 0, 1))));
        CHECK(o.nu[static_cast<std::size_t>(k)] == ComplexRational(of.eval(Component::Theta, power_word(k, 0, 1))));
    }
}

TEST_CASE("the point mass at one is a unit for multiplication") {
    std::mt19937_64 rng(25);
    const CMoments one(6, ComplexRational(1));
    const CMoments nu = to_complex(with_nonzero_mean(rng, 5));
    const CMoments mu = to_complex(random_moments(rng, 5));
    CHECK(mult_free(nu, one) == nu);
    const CPair c = mult_cfree({mu, nu}, {one, one});
    CHECK(c.mu == mu);
    CHECK(c.nu == nu);
    const CMoments centred = to_complex(MomentSequence(std::vector<Rational>{q(1), q(0), q(1), q(0), q(1), q(0)}));
    CHECK_THROWS_AS(mult_free(centred, nu), ZeroFirstMoment);
}
