#include <random>

#include "doctest.h"
#include "ncprob/errors.hpp"
#include "ncprob/random.hpp"
#include "ncprob/series.hpp"
#include "support.hpp"

using namespace ncprob;
using testing_support::q;

namespace {

MultiMomentFunctional single(std::mt19937_64& rng, char g, int n = 6) { return random_functional(rng, std::string(1, g), n); }

Word w(std::initializer_list<std::pair<int, const char*>> letters) {
    Word out;
    for (const auto& [f, g] : letters) {
        out.push_back({f, g});
    }
    return out;
}

}  // namespace

TEST_CASE("functional validation") {
    CHECK_THROWS_AS(MultiMomentFunctional("x", 2, {{"", q(1)}, {"x", q(0)}}), IncompleteTable);
    CHECK_THROWS(MultiMomentFunctional("x", 1, {{"", q(2)}, {"x", q(0)}}));
    const auto d = MultiMomentFunctional::delta("xy", 3);
    CHECK(d.value("") == 1);
    CHECK(d.value("xyx") == 0);
    CHECK_THROWS_AS(static_cast<void>(d.value("xyxy")), DegreeOverflow);
    CHECK(all_words("ab", 2) == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("length-one and length-two words") {
    std::mt19937_64 rng(1);
    const StateTriple a = random_triple(rng, "x", 4);
    const StateTriple b = random_triple(rng, "y", 4);
    const IndentedProduct p({a, b});
    for (Component c : {Component::Phi, Component::Psi, Component::Theta}) {
        CHECK(p.eval(c, w({{0, "xx"}})) == a.get(c).value("xx"));
        CHECK(p.eval(c, w({{1, "y"}})) == b.get(c).value("y"));
        CHECK(p.eval(c, w({{0, "x"}, {1, "yy"}})) == a.get(c).value("x") * b.get(c).value("yy"));
        CHECK(p.eval(c, w({{1, "y"}, {0, "x"}})) == a.get(c).value("x") * b.get(c).value("y"));
    }
}

TEST_CASE("equal inner states give the free product") {
    std::mt19937_64 rng(2);
    const auto f1 = single(rng, 'x');
    const auto f2 = single(rng, 'y');
    const IndentedProduct p({{f1, f1, f1}, {f2, f2, f2}});
    const auto x = [&](const char* s) { return f1.value(s); };
    const auto y = [&](const char* s) { return f2.value(s); };
    CHECK(p.eval(Component::Phi, w({{0, "x"}, {1, "y"}, {0, "xx"}})) == x("xxx") * y("y"));
    const Rational expected = x("xx") * y("y") * y("y") + x("x") * x("x") * y("yy") - x("x") * x("x") * y("y") * y("y");
    CHECK(p.eval(Component::Phi, w({{0, "x"}, {1, "y"}, {0, "x"}, {1, "y"}})) == expected);
}

TEST_CASE("delta inner states give the Boolean product") {
    std::mt19937_64 rng(3);
    const auto f1 = single(rng, 'x');
    const auto f2 = single(rng, 'y');
    const auto d1 = MultiMomentFunctional::delta("x", 6);
    const auto d2 = MultiMomentFunctional::delta("y", 6);
    const IndentedProduct p({{f1, d1, d1}, {f2, d2, d2}});
    CHECK(p.eval(Component::Phi, w({{0, "x"}, {1, "yy"}, {0, "x"}})) == f1.value("x") * f2.value("yy") * f1.value("x"));
    CHECK(p.eval(Component::Phi, w({{1, "y"}, {0, "xx"}, {1, "y"}, {0, "x"}})) ==
          f2.value("y") * f1.value("xx") * f2.value("y") * f1.value("x"));
}

TEST_CASE("c-free formula on a length-three word") {
    std::mt19937_64 rng(4);
    const auto phi1 = single(rng, 'x');
    const auto psi1 = single(rng, 'x');
    const auto phi2 = single(rng, 'y');
    const auto psi2 = single(rng, 'y');
    const Rational a1 = phi1.value("x");
    const Rational a2 = phi1.value("xx");
    const Rational a12 = phi1.value("xxx");
    const Rational expected =
        a12 * psi2.value("y") + a1 * a2 * (phi2.value("y") - psi2.value("y"));
    CHECK(cfree_eval(phi1, psi1, phi2, psi2, w({{0, "x"}, {1, "y"}, {0, "xx"}})) == expected);

    // psi = theta on every factor reduces the indented product to the c-free one
    const IndentedProduct p({{phi1, psi1, psi1}, {phi2, psi2, psi2}});
    for (const auto& m : testing_support::all_monomials({"x", "y"}, 5)) {
        const Word word = testing_support::to_word(m, {"x", "y"});
        CHECK(p.eval(Component::Phi, word) == cfree_eval(phi1, psi1, phi2, psi2, word));
    }
}

TEST_CASE("linear letters expand multilinearly") {
    std::mt19937_64 rng(5);
    const IndentedProduct p({random_triple(rng, "xy", 4), random_triple(rng, "x", 4)});
    const LinearLetter a{0, q(2), {{"x", q(1, 2)}, {"yx", q(-1)}}};
    const LinearLetter b{1, q(0), {{"x", q(3)}}};
    const Rational expected = q(2) * q(3) * p.eval(Component::Psi, w({{1, "x"}})) +
                              q(1, 2) * q(3) * p.eval(Component::Psi, w({{0, "x"}, {1, "x"}})) -
                              q(3) * p.eval(Component::Psi, w({{0, "yx"}, {1, "x"}}));
    CHECK(p.eval(Component::Psi, std::vector<LinearLetter>{a, b}) == expected);
}

TEST_CASE("left and right bracketing agree") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<StateTriple> factors{random_triple(rng, "x", 5), random_triple(rng, "xy", 5),
                                         random_triple(rng, "x", 5)};
        const IndentedProduct left(factors, Bracketing::Left);
        const IndentedProduct right(factors, Bracketing::Right);
        for (const auto& m : testing_support::all_monomials({"x", "xy", "x"}, 5)) {
            for (Component c : {Component::Phi, Component::Psi, Component::Theta}) {
                REQUIRE(left.eval_encoded(c, m) == right.eval_encoded(c, m));
            }
        }
    }
}

TEST_CASE("independence conditions hold on indented products") {
    std::mt19937_64 rng(7);
    const IndentedProduct p({random_triple(rng, "xy", 6), random_triple(rng, "x", 6), random_triple(rng, "xy", 6)});
    for (IndependenceCondition c : {IndependenceCondition::OF, IndependenceCondition::I1, IndependenceCondition::I2,
                                    IndependenceCondition::I1Prime, IndependenceCondition::I2Prime,
                                    IndependenceCondition::I2DoublePrime}) {
        CAPTURE(to_string(c));
        const IndependenceReport r = verify_independence(c, p, 150, 99, 6);
        CHECK(r.ok());
        CHECK(r.checked > 0);
        CHECK(r.vacuous > 0);
    }
    CHECK(parse_condition("I2''") == IndependenceCondition::I2DoublePrime);
    CHECK_THROWS_AS(parse_condition("I3"), ParseError);
}

TEST_CASE("word-expansion convolutions") {
    const MomentSequence bern(std::vector<Rational>{q(1), q(0), q(1), q(0), q(1)});
    const auto free = convolve_moments(ProductKind::Free, {{bern}, {bern}}, 4);
    CHECK(free.at(0)[2] == 2);
    CHECK(free.at(0)[4] == 6);

    for (ProductKind k : all_product_kinds()) {
        CAPTURE(to_string(k));
        std::vector<std::vector<MomentSequence>> inputs(2);
        for (int s = 0; s < state_count(k); ++s) {
            inputs[0].push_back(MomentSequence::point_mass(q(1, 2), 5));
            inputs[1].push_back(MomentSequence::point_mass(q(-2), 5));
        }
        for (const auto& m : convolve_moments(k, inputs, 5)) {
            CHECK(m == MomentSequence::point_mass(q(-3, 2), 5));
        }
    }

    std::mt19937_64 rng(8);
    auto centred = [&] {
        MomentSequence m = random_moments(rng, 4);
        auto v = m.moments();
        v[1] = 0;
        return MomentSequence(v);
    };
    const std::vector<MomentSequence> x{centred(), centred(), centred()};
    const std::vector<MomentSequence> y{centred(), centred(), centred()};
    const auto sum = convolve_moments(ProductKind::Indented, {x, y}, 4);
    for (int c = 0; c < 3; ++c) {
        CHECK(sum[static_cast<std::size_t>(c)][2] == x[static_cast<std::size_t>(c)][2] + y[static_cast<std::size_t>(c)][2]);
    }
}

TEST_CASE("product kind names") {
    for (ProductKind k : all_product_kinds()) {
        CHECK(parse_product_kind(to_string(k)) == k);
        CHECK(output_components(k).size() == static_cast<std::size_t>(state_count(k)));
    }
    CHECK_THROWS_AS(parse_product_kind("tensor"), ParseError);
}
