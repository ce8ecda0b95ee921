#include "ncprob/fock.hpp"

#include <functional>
#include <stdexcept>

#include "ncprob/errors.hpp"

namespace ncprob {

Matrix identity_matrix(int dim) {
    Matrix m(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i][i] = 1;
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    Matrix out(n, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

void MatrixStateModel::validate() const {
    if (dim < 1) {
        throw std::invalid_argument("model dimension must be positive");
    }
    for (const auto* rep : {&pi, &sigma, &rho}) {
        if (rep->size() != pi.size()) {
            throw std::invalid_argument("representations must share their generators");
        }
        for (const auto& [g, m] : *rep) {
            if (!pi.contains(g)) {
                throw std::invalid_argument("representations must share their generators");
            }
            if (static_cast<int>(m.size()) != dim) {
                throw std::invalid_argument(std::string("matrix of '") + g + "' has the wrong shape");
            }
            for (const auto& row : m) {
                if (static_cast<int>(row.size()) != dim) {
                    throw std::invalid_argument(std::string("matrix of '") + g + "' has the wrong shape");
                }
            }
        }
    }
}

std::string MatrixStateModel::alphabet() const {
    std::string out;
    for (const auto& [g, m] : pi) {
        out.push_back(g);
    }
    return out;
}

const std::map<char, Matrix>& MatrixStateModel::rep(Component c) const {
    switch (c) {
        case Component::Phi: return pi;
        case Component::Psi: return sigma;
        case Component::Theta: return rho;
    }
    throw std::logic_error("unknown component");
}

MultiMomentFunctional MatrixStateModel::state(Component c, int truncation) const {
    const auto& r = rep(c);
    std::map<std::string, Rational> values;
    for (const auto& w : all_words(alphabet(), truncation)) {
        // tau(w) xi, applying the last generator first.
        std::vector<Rational> v(static_cast<std::size_t>(dim));
        v[0] = 1;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Matrix& m = r.at(*it);
            std::vector<Rational> next(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                for (std::size_t j = 0; j < v.size(); ++j) {
                    next[i] += m[i][j] * v[j];
                }
            }
            v = std::move(next);
        }
        values[w] = v[0];
    }
    return {alphabet(), truncation, std::move(values)};
}

StateTriple MatrixStateModel::triple(int truncation) const {
    return {state(Component::Phi, truncation), state(Component::Psi, truncation), state(Component::Theta, truncation)};
}

TruncatedFockSpace::TruncatedFockSpace(std::vector<MatrixStateModel> factors, int max_length)
    : factors_(std::move(factors)), max_length_(max_length) {
    if (factors_.empty() || static_cast<int>(factors_.size()) > kMaxFactors) {
        throw std::invalid_argument("Fock space needs between 1 and 32 factors");
    }
    if (max_length_ < 0) {
        throw std::invalid_argument("negative tensor length");
    }
    for (const auto& f : factors_) {
        f.validate();
    }
    Tensor t;
    std::function<void()> grow = [&] {
        index_[t] = static_cast<int>(basis_.size());
        basis_.push_back(t);
        if (static_cast<int>(t.size()) == max_length_) {
            return;
        }
        for (int k = 0; k < factor_count(); ++k) {
            if (!t.empty() && t.back().first == k) {
                continue;
            }
            for (int b = 1; b < factor(k).dim; ++b) {
                t.emplace_back(k, b);
                grow();
                t.pop_back();
            }
        }
    };
    grow();
}

int TruncatedFockSpace::index(const Tensor& t) const {
    const auto it = index_.find(t);
    if (it == index_.end()) {
        throw std::out_of_range("tensor outside the truncated space");
    }
    return it->second;
}

TruncatedFockSpace::Subspace TruncatedFockSpace::subspace(int k, const Tensor& t) {
    if (t.empty() || (t.size() == 1 && t[0].first == k)) {
        return Subspace::Own;
    }
    const int lead = t[0].first == k ? t[1].first : t[0].first;
    return lead < k ? Subspace::OFree : Subspace::AntiOFree;
}

TruncatedFockSpace::Vector TruncatedFockSpace::apply_lambda(int k, const Matrix& a, const Vector& v) const {
    const int dim = factor(k).dim;
    Vector out;
    auto add = [&](Tensor t, const Rational& c) {
        if (c == 0 || static_cast<int>(t.size()) > max_length_) {
            return;
        }
        out[std::move(t)] += c;
    };
    for (const auto& [t, coef] : v) {
        if (coef == 0) {
            continue;
        }
        // A acts on the first slot if it lies in H_k^0, otherwise on xi_k prepended.
        const bool own = !t.empty() && t[0].first == k;
        const int col = own ? t[0].second : 0;
        const Tensor rest = own ? Tensor(t.begin() + 1, t.end()) : t;
        for (int row = 0; row < dim; ++row) {
            const Rational& x = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (x == 0) {
                continue;
            }
            if (row == 0) {
                add(rest, coef * x);
            } else {
                Tensor longer{{k, row}};
                longer.insert(longer.end(), rest.begin(), rest.end());
                add(std::move(longer), coef * x);
            }
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Matrix TruncatedFockSpace::lambda_op(int k, const Matrix& a) const {
    Matrix m(basis_.size(), std::vector<Rational>(basis_.size()));
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        for (const auto& [t, c] : apply_lambda(k, a, Vector{{basis_[j], Rational(1)}})) {
            m[static_cast<std::size_t>(index(t))][j] = c;
        }
    }
    return m;
}

TruncatedFockSpace::Vector TruncatedFockSpace::apply_word(const Word& w, bool indented) const {
    int symbols = 0;
    for (const auto& l : w) {
        if (l.factor < 0 || l.factor >= factor_count()) {
            throw std::invalid_argument("letter refers to a missing factor");
        }
        symbols += static_cast<int>(l.gens.size());
    }
    if (symbols > max_length_) {
        throw WordTooLong("word of length " + std::to_string(symbols) + " exceeds the Fock truncation " +
                          std::to_string(max_length_));
    }
    Vector v{{Tensor{}, Rational(1)}};
    for (auto letter = w.rbegin(); letter != w.rend(); ++letter) {
        const int k = letter->factor;
        const MatrixStateModel& f = factor(k);
        for (auto g = letter->gens.rbegin(); g != letter->gens.rend(); ++g) {
            // Split v along H_k, H^OF(k), H^AOF(k) and act with the matching representation.
            Vector parts[3];
            for (const auto& [t, c] : v) {
                parts[static_cast<int>(subspace(k, t))].emplace(t, c);
            }
            const Matrix* reps[3];
            if (indented) {
                reps[0] = &f.pi.at(*g);
                reps[1] = &f.sigma.at(*g);
                reps[2] = &f.rho.at(*g);
            } else {
                reps[0] = &f.sigma.at(*g);
                reps[1] = &f.sigma.at(*g);
                reps[2] = &f.rho.at(*g);
            }
            Vector next;
            for (int i = 0; i < 3; ++i) {
                for (const auto& [t, c] : apply_lambda(k, *reps[i], parts[i])) {
                    next[t] += c;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            v = std::move(next);
        }
    }
    return v;
}

TruncatedFockSpace::Vector TruncatedFockSpace::apply_indented(const Word& w) const { return apply_word(w, true); }

TruncatedFockSpace::Vector TruncatedFockSpace::apply_ofree(const Word& w) const { return apply_word(w, false); }

Rational TruncatedFockSpace::J_indented(const Word& w) const {
    const Vector v = apply_indented(w);
    const auto it = v.find(Tensor{});
    return it == v.end() ? Rational(0) : it->second;
}

Rational TruncatedFockSpace::J_ofree(const Word& w) const {
    const Vector v = apply_ofree(w);
    const auto it = v.find(Tensor{});
    return it == v.end() ? Rational(0) : it->second;
}

}  // namespace ncprob
