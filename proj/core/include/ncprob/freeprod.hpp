#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncprob/rational.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// A state on the free unital algebra over a finite alphabet, given by its values
/// on all words of length <= truncation. Generators are single characters.
class MultiMomentFunctional {
public:
    MultiMomentFunctional() = default;
    /// Throws IncompleteTable if a word of length <= truncation is missing, and
    /// std::invalid_argument if the empty word is not mapped to 1.
    MultiMomentFunctional(std::string alphabet, int truncation, std::map<std::string, Rational> values);

    /// The delta state: 1 on the empty word, 0 on every other word.
    static MultiMomentFunctional delta(std::string alphabet, int truncation);
    /// Single generator with the given moments.
    static MultiMomentFunctional from_moments(const MomentSequence& m, char gen = 'x');

    [[nodiscard]] const std::string& alphabet() const { return alphabet_; }
    [[nodiscard]] int truncation() const { return truncation_; }
    [[nodiscard]] const std::map<std::string, Rational>& values() const { return values_; }
    /// Throws DegreeOverflow beyond the truncation.
    [[nodiscard]] const Rational& value(const std::string& word) const;
    /// Moments of a single generator.
    [[nodiscard]] MomentSequence moments(char gen) const;

    friend bool operator==(const MultiMomentFunctional&, const MultiMomentFunctional&) = default;

private:
    std::string alphabet_;
    int truncation_ = 0;
    std::map<std::string, Rational> values_;
};

/// All words over `alphabet` of length <= n, shortest first, then lexicographic.
std::vector<std::string> all_words(const std::string& alphabet, int n);

enum class Component { Phi, Psi, Theta };

std::string to_string(Component c);

/// (phi, psi, theta) on the same algebra.
struct StateTriple {
    MultiMomentFunctional phi, psi, theta;

    StateTriple() = default;
    StateTriple(MultiMomentFunctional phi, MultiMomentFunctional psi, MultiMomentFunctional theta);
    [[nodiscard]] const MultiMomentFunctional& get(Component c) const;
};

/// Letter of a word in the free product: a generator word of one factor.
struct Letter {
    int factor;
    std::string gens;
};
using Word = std::vector<Letter>;

/// Letter given as scalar * 1 + sum of coefficient * generator word.
struct LinearLetter {
    int factor = 0;
    Rational scalar;
    std::map<std::string, Rational> terms;
};

/// Encoded monomial: each byte is factor * 8 + generator index.
using Monomial = std::string;
constexpr int kMaxFactors = 32;
constexpr int kMaxGenerators = 8;

inline char encode_symbol(int factor, int gen) { return static_cast<char>(factor * kMaxGenerators + gen); }
inline int symbol_factor(char s) { return static_cast<unsigned char>(s) / kMaxGenerators; }
inline int symbol_gen(char s) { return static_cast<unsigned char>(s) % kMaxGenerators; }

/// A linear functional on encoded monomials of a free product.
class StateFunctional {
public:
    virtual ~StateFunctional() = default;
    [[nodiscard]] virtual Rational value(std::string_view m) const = 0;
};
using StatePtr = std::shared_ptr<const StateFunctional>;

class FactorState final : public StateFunctional {
public:
    FactorState(MultiMomentFunctional f, int factor);
    [[nodiscard]] Rational value(std::string_view m) const override;
    [[nodiscard]] const MultiMomentFunctional& functional() const { return f_; }

private:
    MultiMomentFunctional f_;
    int factor_;
};

/// The c-free product (f_L, c_L) * (f_R, c_R), first component. Letters from
/// factors in `left_mask` belong to the left algebra. Values are memoized; the
/// cache is guarded so a single instance may be shared across threads.
class CFreeProductState final : public StateFunctional {
public:
    CFreeProductState(StatePtr f_left, StatePtr c_left, StatePtr f_right, StatePtr c_right, std::uint32_t left_mask);
    [[nodiscard]] Rational value(std::string_view m) const override;

private:
    StatePtr f_[2];
    StatePtr c_[2];
    std::uint32_t left_mask_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::string, Rational> memo_;
};

/// Components of an indented product together with the set of factors it covers.
struct ProductTriple {
    StatePtr phi, psi, theta;
    std::uint32_t mask = 0;

    [[nodiscard]] const StatePtr& get(Component c) const;
};

ProductTriple indented_product(const ProductTriple& left, const ProductTriple& right);

enum class Bracketing { Left, Right };

/// Indented product of finitely many factors; factor k owns factor id k.
class IndentedProduct {
public:
    explicit IndentedProduct(std::vector<StateTriple> factors, Bracketing bracketing = Bracketing::Left);

    [[nodiscard]] int size() const { return static_cast<int>(factors_.size()); }
    [[nodiscard]] const StateTriple& factor(int k) const { return factors_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const ProductTriple& states() const { return top_; }

    [[nodiscard]] Monomial encode(const Word& w) const;
    [[nodiscard]] Rational eval(Component c, const Word& w) const;
    [[nodiscard]] Rational eval(Component c, const std::vector<LinearLetter>& w) const;
    [[nodiscard]] Rational eval_encoded(Component c, std::string_view m) const;

private:
    std::vector<StateTriple> factors_;
    ProductTriple top_;
};

/// phi-component of the c-free product (phi1, psi1) * (phi2, psi2) on a word over factors 0 and 1.
Rational cfree_eval(const MultiMomentFunctional& phi1, const MultiMomentFunctional& psi1,
                    const MultiMomentFunctional& phi2, const MultiMomentFunctional& psi2, const Word& w);

Rational indented_eval(const std::vector<StateTriple>& factors, Component c, const Word& w);

enum class ProductKind { Free, Boolean, Monotone, AntiMonotone, CFree, CMonotone, CAntiMonotone, OFree, Indented };

ProductKind parse_product_kind(const std::string& name);
std::string to_string(ProductKind k);
std::vector<ProductKind> all_product_kinds();
/// Number of states each factor supplies: 1, 2 or 3.
int state_count(ProductKind k);
/// Components of the indented product that carry the kind's result, in the
/// order of the kind's own states.
std::vector<Component> output_components(ProductKind k);
/// Indented triple realizing the kind, inserting delta states where needed.
StateTriple substitute(ProductKind k, const std::vector<MultiMomentFunctional>& states);

/// Values of the kind's product states on w (one per output component).
std::vector<Rational> derived_product(ProductKind k, const std::vector<std::vector<MultiMomentFunctional>>& factors,
                                      const Word& w);

/// Moments of x_1 + ... + x_k under the kind's product, one sequence per output
/// component; inputs[i] holds state_count(k) moment sequences of factor i.
std::vector<MomentSequence> convolve_moments(ProductKind k, const std::vector<std::vector<MomentSequence>>& inputs,
                                             int n);

enum class IndependenceCondition { OF, I1, I2, I1Prime, I2Prime, I2DoublePrime };

IndependenceCondition parse_condition(const std::string& name);
std::string to_string(IndependenceCondition c);

struct IndependenceReport {
    int checked = 0;
    int vacuous = 0;
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Random centered words of length <= max_length; each asserted moment must vanish.
IndependenceReport verify_independence(IndependenceCondition c, const IndentedProduct& product, int trials,
                                       std::uint64_t seed, int max_length = 5);

}  // namespace ncprob
