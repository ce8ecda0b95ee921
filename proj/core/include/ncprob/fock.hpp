#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncprob/freeprod.hpp"
#include "ncprob/rational.hpp"

namespace ncprob {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int dim);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Three representations of a factor on C^dim with xi the first basis vector.
struct MatrixStateModel {
    int dim = 0;
    std::map<char, Matrix> pi, sigma, rho;

    /// Throws std::invalid_argument on shape mismatches or differing generator sets.
    void validate() const;
    [[nodiscard]] std::string alphabet() const;
    [[nodiscard]] const std::map<char, Matrix>& rep(Component c) const;
    /// <tau(w) xi, xi> for the representation of c, on all words up to `truncation`.
    [[nodiscard]] MultiMomentFunctional state(Component c, int truncation) const;
    [[nodiscard]] StateTriple triple(int truncation) const;
};

/// Free product Fock space C xi + sum of alternating tensors H_{i_1}^0 x ... x H_{i_n}^0,
/// cut at tensor length max_length. H_k^0 is spanned by basis vectors 1..dim-1 of factor k.
class TruncatedFockSpace {
public:
    /// (factor, basis index >= 1) per tensor slot; the empty tensor is xi.
    using Tensor = std::vector<std::pair<int, int>>;
    using Vector = std::map<Tensor, Rational>;

    enum class Subspace { Own, OFree, AntiOFree };

    TruncatedFockSpace(std::vector<MatrixStateModel> factors, int max_length);

    [[nodiscard]] int size() const { return static_cast<int>(basis_.size()); }
    [[nodiscard]] int max_length() const { return max_length_; }
    [[nodiscard]] int factor_count() const { return static_cast<int>(factors_.size()); }
    [[nodiscard]] const MatrixStateModel& factor(int k) const { return factors_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<Tensor>& basis() const { return basis_; }
    [[nodiscard]] int index(const Tensor& t) const;

    /// H_k, H^OF(k) or H^AOF(k) for a basis tensor.
    [[nodiscard]] static Subspace subspace(int k, const Tensor& t);

    /// lambda_k(A) v; components longer than max_length are dropped.
    [[nodiscard]] Vector apply_lambda(int k, const Matrix& a, const Vector& v) const;
    /// Matrix of lambda_k(A) in the basis order; column j is the image of basis j.
    [[nodiscard]] Matrix lambda_op(int k, const Matrix& a) const;

    /// J(a_1 ... a_n) xi; throws WordTooLong if the word has more generators than max_length.
    [[nodiscard]] Vector apply_indented(const Word& w) const;
    [[nodiscard]] Vector apply_ofree(const Word& w) const;
    [[nodiscard]] Rational J_indented(const Word& w) const;
    [[nodiscard]] Rational J_ofree(const Word& w) const;

private:
    [[nodiscard]] Vector apply_word(const Word& w, bool indented) const;

    std::vector<MatrixStateModel> factors_;
    int max_length_;
    std::vector<Tensor> basis_;
    std::map<Tensor, int> index_;
};

}  // namespace ncprob
