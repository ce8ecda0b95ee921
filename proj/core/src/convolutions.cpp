#include "ncprob/convolutions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

int common_truncation(const MomentSequence& a, const MomentSequence& b) {
    return std::min(a.truncation(), b.truncation());
}

MomentSequence delta0(int n) { return MomentSequence::point_mass(Rational(0), n); }

FSeries F(const MomentSequence& m) { return moments_to_F(m); }

MomentSequence M(const FSeries& f) { return F_to_moments(f); }

// F_outer o F_inner^{-1} o F_s
FSeries conjugated(const FSeries& outer, const FSeries& inner, const FSeries& s) {
    return compose(outer, compose(comp_inverse(inner), s));
}

MeasureTriple as_triple(ProductKind k, const std::vector<MomentSequence>& states) {
    if (static_cast<int>(states.size()) != state_count(k)) {
        throw std::invalid_argument("wrong number of input states for " + to_string(k));
    }
    const int n = states[0].truncation();
    const MomentSequence d = delta0(n);
    const auto& s0 = states[0];
    switch (k) {
        case ProductKind::Free: return {s0, s0, s0};
        case ProductKind::Boolean: return {s0, d, d};
        case ProductKind::Monotone: return {s0, s0, d};
        case ProductKind::AntiMonotone: return {s0, d, s0};
        case ProductKind::CFree: return {s0, states[1], states[1]};
        case ProductKind::CMonotone: return {s0, states[1], d};
        case ProductKind::CAntiMonotone: return {s0, d, states[1]};
        case ProductKind::OFree: return {s0, s0, states[1]};
        case ProductKind::Indented: return {s0, states[1], states[2]};
    }
    throw std::logic_error("unknown product kind");
}

const MomentSequence& pick(const MeasureTriple& t, Component c) {
    switch (c) {
        case Component::Phi: return t.lambda;
        case Component::Psi: return t.mu;
        case Component::Theta: return t.nu;
    }
    throw std::logic_error("unknown component");
}

CSeries eta_of(const CMoments& m) { return eta_from_moments(m); }

CSeries compose_c(const CSeries& outer, const CSeries& inner) { return outer.compose(inner); }

}  // namespace

FSeries free_sum_F(const FSeries& a, const FSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    return comp_inverse(add_sub(comp_inverse(a), comp_inverse(b), FSeries::identity(n)));
}

FSeries three_term_F(const FSeries& x, const FSeries& a, const FSeries& y, const FSeries& b) {
    const FSeries s = free_sum_F(a, b);
    return add_sub(conjugated(x, a, s), conjugated(y, b, s), s);
}

MomentSequence free_additive(const MomentSequence& nu1, const MomentSequence& nu2) {
    return M(free_sum_F(F(nu1), F(nu2)));
}

MomentSequence free_additive_phi(const MomentSequence& nu1, const MomentSequence& nu2) {
    return M(F_from_phi(phi_transform(F(nu1)) + phi_transform(F(nu2))));
}

MomentSequence boolean_additive(const MomentSequence& mu1, const MomentSequence& mu2) {
    return M(add_sub(F(mu1), F(mu2), FSeries::identity(common_truncation(mu1, mu2))));
}

MomentSequence monotone_additive(const MomentSequence& mu1, const MomentSequence& mu2) {
    return M(compose(F(mu1), F(mu2)));
}

MomentSequence antimonotone_additive(const MomentSequence& mu1, const MomentSequence& mu2) {
    return monotone_additive(mu2, mu1);
}

MeasurePair cfree_additive(const MeasurePair& p1, const MeasurePair& p2) {
    const FSeries f_nu = free_sum_F(F(p1.nu), F(p2.nu));
    const PhiSeries phi = cfree_phi_transform(F(p1.mu), F(p1.nu)) + cfree_phi_transform(F(p2.mu), F(p2.nu));
    return {M(F_from_cfree_phi(phi, f_nu)), M(f_nu)};
}

MeasurePair cfree_additive_three_term(const MeasurePair& p1, const MeasurePair& p2) {
    return {M(three_term_F(F(p1.mu), F(p1.nu), F(p2.mu), F(p2.nu))), free_additive(p1.nu, p2.nu)};
}

MeasurePair cmonotone_additive(const MeasurePair& p1, const MeasurePair& p2) {
    const FSeries f_nu2 = F(p2.nu);
    return {M(add_sub(compose(F(p1.mu), f_nu2), F(p2.mu), f_nu2)), monotone_additive(p1.nu, p2.nu)};
}

MeasurePair cantimonotone_additive(const MeasurePair& p1, const MeasurePair& p2) {
    const FSeries f_nu1 = F(p1.nu);
    return {M(add_sub(F(p1.mu), compose(F(p2.mu), f_nu1), f_nu1)), antimonotone_additive(p1.nu, p2.nu)};
}

MeasurePair ofree_additive(const MeasurePair& p1, const MeasurePair& p2) {
    const FSeries f_nu1 = F(p1.nu);
    const FSeries f_mu2 = F(p2.mu);
    const FSeries s = free_sum_F(f_nu1, f_mu2);
    return {M(conjugated(F(p1.mu), f_nu1, s)), M(conjugated(F(p2.nu), f_mu2, s))};
}

MeasureTriple indented_additive(const MeasureTriple& t1, const MeasureTriple& t2) {
    const FSeries a = F(t1.nu);
    const FSeries b = F(t2.mu);
    return {M(three_term_F(F(t1.lambda), a, F(t2.lambda), b)), M(three_term_F(F(t1.mu), a, b, b)),
            M(three_term_F(a, a, F(t2.nu), b))};
}

std::vector<MomentSequence> derived_additive(ProductKind k, const std::vector<std::vector<MomentSequence>>& inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("convolution needs at least one input");
    }
    MeasureTriple acc = as_triple(k, inputs[0]);
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        acc = indented_additive(acc, as_triple(k, inputs[i]));
    }
    std::vector<MomentSequence> out;
    for (Component c : output_components(k)) {
        out.push_back(pick(acc, c));
    }
    return out;
}

std::vector<MomentSequence> direct_additive(ProductKind k, const std::vector<std::vector<MomentSequence>>& inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("convolution needs at least one input");
    }
    for (const auto& in : inputs) {
        if (static_cast<int>(in.size()) != state_count(k)) {
            throw std::invalid_argument("wrong number of input states for " + to_string(k));
        }
    }
    std::vector<MomentSequence> acc = inputs[0];
    for (std::size_t i = 1; i < inputs.size(); ++i) {
        const auto& x = inputs[i];
        switch (k) {
            case ProductKind::Free: acc = {free_additive(acc[0], x[0])}; break;
            case ProductKind::Boolean: acc = {boolean_additive(acc[0], x[0])}; break;
            case ProductKind::Monotone: acc = {monotone_additive(acc[0], x[0])}; break;
            case ProductKind::AntiMonotone: acc = {antimonotone_additive(acc[0], x[0])}; break;
            case ProductKind::CFree: {
                const auto r = cfree_additive({acc[0], acc[1]}, {x[0], x[1]});
                acc = {r.mu, r.nu};
                break;
            }
            case ProductKind::CMonotone: {
                const auto r = cmonotone_additive({acc[0], acc[1]}, {x[0], x[1]});
                acc = {r.mu, r.nu};
                break;
            }
            case ProductKind::CAntiMonotone: {
                const auto r = cantimonotone_additive({acc[0], acc[1]}, {x[0], x[1]});
                acc = {r.mu, r.nu};
                break;
            }
            case ProductKind::OFree: {
                const auto r = ofree_additive({acc[0], acc[1]}, {x[0], x[1]});
                acc = {r.mu, r.nu};
                break;
            }
            case ProductKind::Indented: {
                const FSeries a = F(acc[2]);
                const FSeries b = F(x[1]);
                const FSeries s = free_sum_F(a, b);
                const MomentSequence lambda = M(three_term_F(F(acc[0]), a, F(x[0]), b));
                acc = {lambda, M(conjugated(F(acc[1]), a, s)), M(conjugated(F(x[2]), b, s))};
                break;
            }
        }
    }
    return acc;
}

MomentSequence dilate(const MomentSequence& m, const Rational& c) {
    std::vector<Rational> v(m.moments());
    Rational p(1);
    for (auto& x : v) {
        x *= p;
        p *= c;
    }
    return MomentSequence(std::move(v));
}

MeasureTriple kesten_triple(const Rational& alpha2, const Rational& beta2, const Rational& gamma2, int truncation) {
    const Rational s = beta2 + gamma2;
    // U = 1 + a2 * sum_{k>=1} binom(1/2, k) (-2)^k s^{k-1} w^{2k}
    auto make = [&](const Rational& a2) {
        Series u = Series::constant(Rational(1), truncation);
        Rational pow_s(1);
        Rational pow_m2(-2);
        for (int k = 1; 2 * k <= truncation; ++k) {
            u[2 * k] = a2 * binomial(Rational(1, 2), k) * pow_m2 * pow_s;
            pow_s *= s;
            pow_m2 *= -2;
        }
        return M(FSeries(std::move(u)));
    };
    return {make(alpha2), make(beta2), make(gamma2)};
}

MeasureTriple clt_sum(const Rational& alpha2, const Rational& beta2, const Rational& gamma2, int n, int truncation) {
    if (n < 1) {
        throw std::invalid_argument("clt needs n >= 1");
    }
    auto two_point = [&](const Rational& v) {
        std::vector<Rational> m(static_cast<std::size_t>(truncation) + 1);
        const Rational scaled = v / Rational(n);
        Rational p(1);
        for (int k = 0; k <= truncation; ++k) {
            if (k % 2 == 0) {
                m[static_cast<std::size_t>(k)] = p;
                p *= scaled;
            }
        }
        return MomentSequence(std::move(m));
    };
    const MeasureTriple x{two_point(alpha2), two_point(beta2), two_point(gamma2)};
    MeasureTriple acc = x;
    for (int i = 1; i < n; ++i) {
        acc = indented_additive(acc, x);
    }
    return acc;
}

CltReport clt_verify(const Rational& alpha2, const Rational& beta2, const Rational& gamma2, int truncation,
                     const std::vector<int>& ns, int max_degree) {
    CltReport report;
    const MeasureTriple kesten = kesten_triple(alpha2, beta2, gamma2, truncation);
    const SingleCumulants k = single_variable_cumulants(kesten.lambda, kesten.mu, kesten.nu);
    const Rational expected[3] = {alpha2, beta2, gamma2};
    const std::vector<Rational>* seqs[3] = {&k.ki, &k.kof, &k.kaof};
    const char* names[3] = {"K^I", "K^OF", "K^AOF"};
    for (int c = 0; c < 3; ++c) {
        for (int j = 1; j <= truncation; ++j) {
            const Rational want = j == 2 ? expected[c] : Rational(0);
            const Rational& got = (*seqs[c])[static_cast<std::size_t>(j)];
            if (got != want) {
                report.failures.push_back(std::string(names[c]) + "_" + std::to_string(j) + " = " + to_string(got) +
                                          ", expected " + to_string(want));
            }
        }
    }

    const int degree = std::min(max_degree, truncation);
    std::vector<MeasureTriple> sums;
    for (int n : ns) {
        sums.push_back(clt_sum(alpha2, beta2, gamma2, n, degree));
    }
    const Component comps[3] = {Component::Phi, Component::Psi, Component::Theta};
    for (Component c : comps) {
        for (int j = 1; j <= degree; ++j) {
            const Rational target = pick(kesten, c)[j];
            std::vector<Rational> errs;
            for (std::size_t i = 0; i < ns.size(); ++i) {
                CltRow row{ns[i], c, j, pick(sums[i], c)[j], target};
                errs.push_back(row.abs_err());
                report.rows.push_back(std::move(row));
            }
            const bool all_zero = std::all_of(errs.begin(), errs.end(), [](const Rational& e) { return e == 0; });
            if (all_zero) {
                continue;
            }
            for (std::size_t i = 1; i < errs.size(); ++i) {
                if (!(errs[i] < errs[i - 1])) {
                    report.failures.push_back("moment error of " + to_string(c) + " degree " + std::to_string(j) +
                                              " does not decrease from n = " + std::to_string(ns[i - 1]) +
                                              " to n = " + std::to_string(ns[i]));
                }
            }
        }
    }
    return report;
}

CMoments mult_free(const CMoments& nu1, const CMoments& nu2) {
    return moments_from_eta(eta_from_t(t_transform(nu1) * t_transform(nu2)));
}

CPair mult_cfree(const CPair& p1, const CPair& p2) {
    const CSeries t_nu = t_transform(p1.nu) * t_transform(p2.nu);
    const CSeries t_pair = t_transform(p1.mu, p1.nu) * t_transform(p2.mu, p2.nu);
    const CSeries eta_nu = eta_from_t(t_nu);
    return {moments_from_eta(eta_from_t(t_pair, eta_nu)), moments_from_eta(eta_nu)};
}

CMoments mult_cfree_eta(const CPair& p1, const CPair& p2) {
    const CSeries eta_nu = eta_of(mult_free(p1.nu, p2.nu));
    const CSeries a = compose_c(eta_of(p1.mu), compose_c(eta_inverse(eta_of(p1.nu)), eta_nu));
    const CSeries b = compose_c(eta_of(p2.mu), compose_c(eta_inverse(eta_of(p2.nu)), eta_nu));
    const CSeries q = a.shifted_down(1) * b.shifted_down(1) * eta_nu.shifted_down(1).reciprocal();
    return moments_from_eta(q.shifted_up(1));
}

CPair mult_ofree(const CPair& p1, const CPair& p2) {
    const CSeries s = eta_of(mult_free(p1.nu, p2.mu));
    const CSeries mu = compose_c(eta_of(p1.mu), compose_c(eta_inverse(eta_of(p1.nu)), s));
    const CSeries nu = compose_c(eta_of(p2.nu), compose_c(eta_inverse(eta_of(p2.mu)), s));
    return {moments_from_eta(mu), moments_from_eta(nu)};
}

}  // namespace ncprob
