#include "ncprob/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

// F(z) = z U(1/z) corresponds to f(w) = 1/F(1/w) = w / U(w); composition and
// inversion of F-transforms become ordinary composition and reversion of f.
Series to_local(const FSeries& f) { return f.u().reciprocal().shifted_up(1); }

FSeries from_local(const Series& g) { return FSeries(g.shifted_down(1).reciprocal()); }

CSeries one(int precision) { return CSeries::constant(ComplexRational(1), precision); }

// x(z) = z / (1 - eta(z)), precision N+1.
CSeries eta_x(const CSeries& eta) { return (one(eta.precision()) - eta).reciprocal().shifted_up(1); }

CSeries r_tilde(const CSeries& eta_num, const CSeries& eta_nu) {
    const CSeries ratio = eta_num * (one(eta_nu.precision()) - eta_nu).reciprocal();
    return ratio.compose(eta_x(eta_nu).reversion());
}

}  // namespace

MomentSequence::MomentSequence(std::vector<Rational> moments) : m_(std::move(moments)) {
    if (m_.empty() || m_[0] != 1) {
        throw std::invalid_argument("moment sequence must start with m_0 = 1");
    }
}

MomentSequence MomentSequence::point_mass(const Rational& a, int truncation) {
    std::vector<Rational> m(static_cast<std::size_t>(truncation) + 1);
    Rational p(1);
    for (auto& x : m) {
        x = p;
        p *= a;
    }
    return MomentSequence(std::move(m));
}

MomentSequence MomentSequence::truncated(int n) const {
    if (n > truncation()) {
        throw std::invalid_argument("cannot extend a moment sequence");
    }
    return MomentSequence(std::vector<Rational>(m_.begin(), m_.begin() + n + 1));
}

FSeries::FSeries(Series u) : u_(std::move(u)) {
    if (u_[0] != 1) {
        throw std::invalid_argument("F-transform must have leading term z");
    }
}

FSeries FSeries::identity(int truncation) { return FSeries(Series::constant(Rational(1), truncation)); }

FSeries FSeries::shift(const Rational& a, int truncation) {
    Series u = Series::constant(Rational(1), truncation);
    if (truncation >= 1) {
        u[1] = -a;
    }
    return FSeries(std::move(u));
}

FSeries add_sub(const FSeries& a, const FSeries& b, const FSeries& c) { return FSeries(a.u() + b.u() - c.u()); }

PhiSeries::PhiSeries(const std::vector<Rational>& r) : r_(r) {}

Series PhiSeries::in_w() const {
    if (r_.empty()) {
        throw std::invalid_argument("empty phi series");
    }
    return Series(r_);
}

PhiSeries operator+(const PhiSeries& a, const PhiSeries& b) {
    const std::size_t n = std::min(a.r_.size(), b.r_.size());
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = a.r_[i] + b.r_[i];
    }
    return PhiSeries(r);
}

PhiSeries operator-(const PhiSeries& a, const PhiSeries& b) {
    const std::size_t n = std::min(a.r_.size(), b.r_.size());
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = a.r_[i] - b.r_[i];
    }
    return PhiSeries(r);
}

FSeries moments_to_F(const MomentSequence& m) { return FSeries(Series(m.moments()).reciprocal()); }

MomentSequence F_to_moments(const FSeries& f) { return MomentSequence(f.u().reciprocal().coeffs()); }

FSeries compose(const FSeries& outer, const FSeries& inner) {
    return from_local(to_local(outer).compose(to_local(inner)));
}

FSeries comp_inverse(const FSeries& f) { return from_local(to_local(f).reversion()); }

PhiSeries phi_transform(const FSeries& f) {
    const Series v = comp_inverse(f).u();
    return PhiSeries(std::vector<Rational>(v.coeffs().begin() + 1, v.coeffs().end()));
}

PhiSeries cfree_phi_transform(const FSeries& f_mu, const FSeries& f_nu) {
    const FSeries inv = comp_inverse(f_nu);
    const Series d = inv.u() - compose(f_mu, inv).u();
    return PhiSeries(std::vector<Rational>(d.coeffs().begin() + 1, d.coeffs().end()));
}

FSeries F_from_phi(const PhiSeries& phi) {
    const Series inv = Series::constant(Rational(1), phi.truncation()) + phi.in_w().shifted_up(1);
    return comp_inverse(FSeries(inv));
}

FSeries F_from_cfree_phi(const PhiSeries& phi, const FSeries& f_nu) {
    const Series p = phi.in_w().compose(to_local(f_nu)).shifted_up(1);
    return FSeries(Series::constant(Rational(1), p.precision()) - p);
}

CMoments to_complex(const MomentSequence& m) { return {m.moments().begin(), m.moments().end()}; }

CSeries eta_from_moments(const CMoments& m) {
    if (m.empty() || !(m[0] == ComplexRational(1))) {
        throw std::invalid_argument("moment sequence must start with m_0 = 1");
    }
    const CSeries big_m(m);
    return one(big_m.precision()) - big_m.reciprocal();
}

CMoments moments_from_eta(const CSeries& eta) { return (one(eta.precision()) - eta).reciprocal().coeffs(); }

CSeries eta_inverse(const CSeries& eta) {
    if (eta.precision() < 1 || eta[1].is_zero()) {
        throw ZeroFirstMoment("eta-transform with vanishing first moment is not invertible");
    }
    return eta.reversion();
}

CSeries t_transform(const CMoments& mu, const CMoments& nu) {
    const std::size_t n = std::min(mu.size(), nu.size());
    const CSeries eta_mu = eta_from_moments(CMoments(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(n)));
    const CSeries eta_nu = eta_from_moments(CMoments(nu.begin(), nu.begin() + static_cast<std::ptrdiff_t>(n)));
    if (eta_nu.precision() < 1 || eta_nu[1].is_zero()) {
        throw ZeroFirstMoment("T-transform needs m_1(nu) != 0");
    }
    const CSeries y = r_tilde(eta_nu, eta_nu).reversion();
    const CSeries a = r_tilde(eta_mu, eta_nu).compose(y);
    return a.shifted_down(1) * y.shifted_down(1).reciprocal();
}

CSeries t_transform(const CMoments& nu) { return t_transform(nu, nu); }

CSeries eta_from_t(const CSeries& t_nu) {
    if (t_nu[0].is_zero()) {
        throw std::domain_error("T-transform with zero constant term");
    }
    CSeries one_plus_u = one(t_nu.precision());
    if (t_nu.precision() >= 1) {
        one_plus_u[1] = ComplexRational(1);
    }
    const CSeries g = (t_nu * one_plus_u).reciprocal().shifted_up(1);
    const CSeries s = g.reversion();
    return s * (one(s.precision()) + s).reciprocal();
}

CSeries eta_from_t(const CSeries& t_pair, const CSeries& eta_nu) {
    if (eta_nu.precision() < 1 || eta_nu[1].is_zero()) {
        throw ZeroFirstMoment("T-transform needs m_1(nu) != 0");
    }
    const CSeries r_nu = r_tilde(eta_nu, eta_nu);
    const CSeries r_pair = t_pair.compose(r_nu).shifted_up(1);
    const CSeries composed = r_pair.compose(eta_x(eta_nu));
    return (one(eta_nu.precision()) - eta_nu) * composed;
}

}  // namespace ncprob
