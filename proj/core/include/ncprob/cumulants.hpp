#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncprob/convolutions.hpp"
#include "ncprob/freeprod.hpp"
#include "ncprob/polynomial.hpp"
#include "ncprob/power_series.hpp"

namespace ncprob {

enum class CumulantKind { I, OF, AOF };

std::string to_string(CumulantKind k);

/// Cumulants K_n(X_{w_1}, ..., X_{w_n}) on generator words w of length 1..truncation.
class CumulantTable {
public:
    CumulantTable() = default;
    /// Throws IncompleteTable if a word of length 1..truncation is missing.
    CumulantTable(std::string alphabet, int truncation, std::map<std::string, Rational> values);

    [[nodiscard]] const std::string& alphabet() const { return alphabet_; }
    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const std::map<std::string, Rational>& values() const { return values_; }
    /// Throws DegreeOverflow beyond the truncation.
    [[nodiscard]] const Rational& value(const std::string& word) const;

    friend bool operator==(const CumulantTable&, const CumulantTable&) = default;

private:
    std::string alphabet_;
    int truncation_ = 0;
    std::map<std::string, Rational> values_;
};

/// K^I(phi, psi, theta), K^OF(psi, theta), K^AOF(psi, theta).
struct CumulantTriple {
    CumulantTable ki, kof, kaof;
    [[nodiscard]] const CumulantTable& get(CumulantKind k) const;
    friend bool operator==(const CumulantTriple&, const CumulantTriple&) = default;
};

/// Moment of the word in the given state from the sum over LNC(n).
Rational moment_from_cumulants(Component c, const std::string& word, const CumulantTriple& k);
StateTriple moments_from_cumulants(const CumulantTriple& k, int n);
CumulantTriple cumulants_from_moments(const StateTriple& m, int n);

/// Single-variable cumulants; index j holds K_j, index 0 is unused.
struct SingleCumulants {
    std::vector<Rational> ki, kof, kaof;
    [[nodiscard]] int truncation() const { return static_cast<int>(ki.size()) - 1; }
};

SingleCumulants single_variable_cumulants(const MomentSequence& lambda, const MomentSequence& mu,
                                          const MomentSequence& nu);
MeasureTriple single_variable_moments(const SingleCumulants& k);

/// phi(N.X_1 ... N.X_n) for the state c as a polynomial in N.
Polynomial dot_moment(const StateTriple& x, Component c, const std::string& word);
/// Coefficient of N in dot_moment, read off an interpolation at N = 0..n.
Rational dot_cumulant(const StateTriple& x, Component c, const std::string& word);
CumulantTriple dot_cumulants(const StateTriple& x, int n);

enum class CumulantFamily { Free, Boolean, Monotone, AntiMonotone, CFree, CMonotone, CAntiMonotone };

CumulantFamily parse_cumulant_family(const std::string& name);
std::string to_string(CumulantFamily f);
std::vector<CumulantFamily> all_cumulant_families();
int family_state_count(CumulantFamily f);

/// Cumulants K_1..K_n of the family (index 0 unused) through indented cumulants
/// of the substituted triple. Two-state families return the cumulants of the
/// pair followed by the cumulants of the second state's own family.
std::vector<std::vector<Rational>> specialize(CumulantFamily f, const std::vector<MomentSequence>& states, int n);

/// m_1..m_n from the family's own partition sum (NC, interval, monotone or
/// anti-monotone partitions): outer blocks carry k_outer, inner blocks k_inner.
MomentSequence classical_moments(CumulantFamily f, const std::vector<Rational>& k_outer,
                                 const std::vector<Rational>& k_inner, int n);

/// Inverse of specialize through the classical partition sums.
std::vector<MomentSequence> family_moments(CumulantFamily f, const std::vector<std::vector<Rational>>& k, int n);

using TimeSeries = PowerSeries<Polynomial>;

/// F_rho(t, z) = z U_rho(t, 1/z) as series in w = 1/z with polynomial coefficients in t.
struct OdeFlow {
    TimeSeries lambda, mu, nu;
};

enum class OdeSystem {
    /// dF_mu = (B o F_nu) dF_mu/dz and dF_nu = (C o F_mu) dF_nu/dz.
    Transport,
    /// dF_mu = B o F_mu - C o F_mu + (C o F_mu) dF_mu/dz and its mirror.
    Mixed,
};

/// Solves the initial value problem F(0, z) = z for the cumulant data.
OdeFlow ode_flow(const SingleCumulants& k, OdeSystem system = OdeSystem::Transport);
MeasureTriple ode_moments(const SingleCumulants& k, const Rational& t, OdeSystem system = OdeSystem::Transport);

struct RecurrenceReport {
    int checked = 0;
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Compares d/dt of the dot moments with the interval-block sums, as
/// polynomials in t, on all words of length 1..n.
RecurrenceReport recurrence_check(const StateTriple& x, int n);

}  // namespace ncprob
