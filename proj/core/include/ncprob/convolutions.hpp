#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncprob/freeprod.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

struct MeasurePair {
    MomentSequence mu, nu;
    friend bool operator==(const MeasurePair&, const MeasurePair&) = default;
};

struct MeasureTriple {
    MomentSequence lambda, mu, nu;
    friend bool operator==(const MeasureTriple&, const MeasureTriple&) = default;
};

/// F_{a ⊞ b}, from F^{-1} = F_a^{-1} + F_b^{-1} - z.
FSeries free_sum_F(const FSeries& a, const FSeries& b);
/// F_X o F_a^{-1} o F_s + F_Y o F_b^{-1} o F_s - F_s with s = a ⊞ b.
FSeries three_term_F(const FSeries& x, const FSeries& a, const FSeries& y, const FSeries& b);

MomentSequence free_additive(const MomentSequence& nu1, const MomentSequence& nu2);
/// Free convolution through the sum of phi-transforms.
MomentSequence free_additive_phi(const MomentSequence& nu1, const MomentSequence& nu2);
MomentSequence boolean_additive(const MomentSequence& mu1, const MomentSequence& mu2);
/// mu1 ▷ mu2, F_{mu1} o F_{mu2}.
MomentSequence monotone_additive(const MomentSequence& mu1, const MomentSequence& mu2);
MomentSequence antimonotone_additive(const MomentSequence& mu1, const MomentSequence& mu2);

/// c-free convolution by addition of c-free phi-transforms.
MeasurePair cfree_additive(const MeasurePair& p1, const MeasurePair& p2);
/// The same convolution by the three-term F formula.
MeasurePair cfree_additive_three_term(const MeasurePair& p1, const MeasurePair& p2);
/// c-monotone: F = F_{mu1} o F_{nu2} + F_{mu2} - F_{nu2}, second component nu1 ▷ nu2.
MeasurePair cmonotone_additive(const MeasurePair& p1, const MeasurePair& p2);
/// c-anti-monotone: F = F_{mu1} + F_{mu2} o F_{nu1} - F_{nu1}, second component nu1 ◁ nu2.
MeasurePair cantimonotone_additive(const MeasurePair& p1, const MeasurePair& p2);

/// (mu1 _{nu1}⊞_{mu2} mu2, nu1 _{nu1}⊞_{mu2} nu2).
MeasurePair ofree_additive(const MeasurePair& p1, const MeasurePair& p2);
MeasureTriple indented_additive(const MeasureTriple& t1, const MeasureTriple& t2);

/// Convolution of the kind on single-variable inputs, folded from the left
/// through indented_additive; inputs[i] holds state_count(k) sequences.
std::vector<MomentSequence> derived_additive(ProductKind k, const std::vector<std::vector<MomentSequence>>& inputs);
/// The same convolution through the kind's own closed form.
std::vector<MomentSequence> direct_additive(ProductKind k, const std::vector<std::vector<MomentSequence>>& inputs);

/// Moments of the law scaled by c: m_k -> c^k m_k.
MomentSequence dilate(const MomentSequence& m, const Rational& c);

/// Kesten triple with (K_2^I, K_2^OF, K_2^AOF) = (alpha2, beta2, gamma2).
MeasureTriple kesten_triple(const Rational& alpha2, const Rational& beta2, const Rational& gamma2, int truncation);

struct CltRow {
    int n;
    Component component;
    int k;
    Rational moment;
    Rational kesten;
    [[nodiscard]] Rational abs_err() const { return abs(moment - kesten); }
};

struct CltReport {
    std::vector<std::string> failures;
    std::vector<CltRow> rows;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// n-fold indented convolution of the centred two-point triple scaled by 1/sqrt(n).
MeasureTriple clt_sum(const Rational& alpha2, const Rational& beta2, const Rational& gamma2, int n, int truncation);

/// Cumulant identities of the Kesten triple to degree `truncation`, and moment
/// error of the n-fold sums for n in `ns` (perfect squares) up to degree `max_degree`.
CltReport clt_verify(const Rational& alpha2, const Rational& beta2, const Rational& gamma2, int truncation,
                     const std::vector<int>& ns = {4, 16, 64}, int max_degree = 6);

/// Moments of nu1 ⊠ nu2 through T_{nu1} T_{nu2}.
CMoments mult_free(const CMoments& nu1, const CMoments& nu2);

struct CPair {
    CMoments mu, nu;
};

/// (mu1 _{nu1}⊠_{nu2} mu2, nu1 ⊠ nu2) from T_{(mu1,nu1)} T_{(mu2,nu2)}.
CPair mult_cfree(const CPair& p1, const CPair& p2);
/// The left component through the eta-composition formula.
CMoments mult_cfree_eta(const CPair& p1, const CPair& p2);
/// (mu1 _{nu1}⊠_{mu2} mu2, nu1 _{nu1}⊠_{mu2} nu2). Needs m_1(nu1), m_1(mu2) != 0.
CPair mult_ofree(const CPair& p1, const CPair& p2);

}  // namespace ncprob
