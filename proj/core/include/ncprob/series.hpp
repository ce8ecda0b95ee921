#pragma once

#include <vector>

#include "ncprob/power_series.hpp"
#include "ncprob/rational.hpp"

namespace ncprob {

using Series = PowerSeries<Rational>;
using CSeries = PowerSeries<ComplexRational>;

/// Moments m_0..m_N of a single-variable state, m_0 = 1.
class MomentSequence {
public:
    MomentSequence() : m_{Rational(1)} {}
    explicit MomentSequence(std::vector<Rational> moments);

    static MomentSequence point_mass(const Rational& a, int truncation);

    [[nodiscard]] int truncation() const { return static_cast<int>(m_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& moments() const { return m_; }
    const Rational& operator[](int k) const { return m_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] MomentSequence truncated(int n) const;

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
    std::vector<Rational> m_;
};

/// F(z) = z + c_0 + c_1 z^-1 + ... + c_{N-1} z^{-N+1}, stored as F(z) = z U(1/z)
/// with U = 1 + c_0 w + c_1 w^2 + ... of precision N.
class FSeries {
public:
    FSeries() : u_(Series::constant(Rational(1), 0)) {}
    explicit FSeries(Series u);

    /// F(z) = z at the given truncation.
    static FSeries identity(int truncation);
    /// F(z) = z - a, the transform of the point mass at a.
    static FSeries shift(const Rational& a, int truncation);

    [[nodiscard]] int truncation() const { return u_.precision(); }
    [[nodiscard]] const Series& u() const { return u_; }
    /// c_0, the constant term.
    [[nodiscard]] Rational constant() const { return u_.precision() >= 1 ? u_[1] : Rational(0); }
    /// c_j, the coefficient of z^-j (j >= 1, j <= N-1).
    [[nodiscard]] const Rational& tail(int j) const { return u_[j + 1]; }

    friend bool operator==(const FSeries&, const FSeries&) = default;

private:
    Series u_;
};

/// a + b - c, with the z terms cancelling to leave a single leading z.
FSeries add_sub(const FSeries& a, const FSeries& b, const FSeries& c);

/// phi(z) = R_1 + R_2 z^-1 + ... + R_N z^{-N+1}.
class PhiSeries {
public:
    PhiSeries() = default;
    /// R_1..R_N.
    explicit PhiSeries(const std::vector<Rational>& r);

    [[nodiscard]] int truncation() const { return static_cast<int>(r_.size()); }
    /// R_n for 1 <= n <= N.
    [[nodiscard]] const Rational& operator[](int n) const { return r_.at(static_cast<std::size_t>(n - 1)); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return r_; }
    /// phi as a power series in w = 1/z (precision N-1).
    [[nodiscard]] Series in_w() const;

    friend PhiSeries operator+(const PhiSeries& a, const PhiSeries& b);
    friend PhiSeries operator-(const PhiSeries& a, const PhiSeries& b);
    friend bool operator==(const PhiSeries&, const PhiSeries&) = default;

private:
    std::vector<Rational> r_;
};

FSeries moments_to_F(const MomentSequence& m);
MomentSequence F_to_moments(const FSeries& f);

/// outer(inner(z)); truncation is the smaller of the two.
FSeries compose(const FSeries& outer, const FSeries& inner);
FSeries comp_inverse(const FSeries& f);

/// F_nu(z) = z - phi(F_nu(z)); equivalently F_nu^{-1}(z) = z + phi(z).
PhiSeries phi_transform(const FSeries& f);
/// F_mu(z) = z - phi(F_nu(z)).
PhiSeries cfree_phi_transform(const FSeries& f_mu, const FSeries& f_nu);
FSeries F_from_phi(const PhiSeries& phi);
FSeries F_from_cfree_phi(const PhiSeries& phi, const FSeries& f_nu);

/// Moment data on the unit circle: m_k = integral of zeta^k, m_0 = 1.
using CMoments = std::vector<ComplexRational>;

CMoments to_complex(const MomentSequence& m);

/// eta(z) = 1 - z / G(1/z), precision N.
CSeries eta_from_moments(const CMoments& m);
CMoments moments_from_eta(const CSeries& eta);
/// Throws ZeroFirstMoment if the linear coefficient vanishes.
CSeries eta_inverse(const CSeries& eta);

/// T_(mu,nu)(z), precision N-1. Throws ZeroFirstMoment when m_1(nu) = 0.
CSeries t_transform(const CMoments& mu, const CMoments& nu);
CSeries t_transform(const CMoments& nu);
/// Recover eta_nu from T_nu.
CSeries eta_from_t(const CSeries& t_nu);
/// Recover eta_mu from T_(mu,nu) and eta_nu.
CSeries eta_from_t(const CSeries& t_pair, const CSeries& eta_nu);

}  // namespace ncprob
