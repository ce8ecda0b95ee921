#include "ncprob/freeprod.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ncprob/errors.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/random.hpp"

namespace ncprob {

MultiMomentFunctional::MultiMomentFunctional(std::string alphabet, int truncation,
                                             std::map<std::string, Rational> values)
    : alphabet_(std::move(alphabet)), truncation_(truncation), values_(std::move(values)) {
    if (truncation_ < 0) {
        throw std::invalid_argument("negative truncation");
    }
    std::string sorted = alphabet_;
    std::sort(sorted.begin(), sorted.end());
    if (alphabet_.empty() || alphabet_.size() > static_cast<std::size_t>(kMaxGenerators) ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("alphabet must hold 1 to 8 distinct generators");
    }
    for (const auto& [w, v] : values_) {
        if (static_cast<int>(w.size()) > truncation_) {
            throw std::invalid_argument("word '" + w + "' exceeds the truncation");
        }
        if (w.find_first_not_of(alphabet_) != std::string::npos) {
            throw std::invalid_argument("word '" + w + "' uses letters outside the alphabet");
        }
    }
    for (const auto& w : all_words(alphabet_, truncation_)) {
        if (values_.find(w) == values_.end()) {
            throw IncompleteTable("no value for word '" + w + "'");
        }
    }
    if (values_.at("") != 1) {
        throw std::invalid_argument("a state maps the unit to 1");
    }
}

MultiMomentFunctional MultiMomentFunctional::delta(std::string alphabet, int truncation) {
    std::map<std::string, Rational> values;
    for (const auto& w : all_words(alphabet, truncation)) {
        values[w] = w.empty() ? Rational(1) : Rational(0);
    }
    return {std::move(alphabet), truncation, std::move(values)};
}

MultiMomentFunctional MultiMomentFunctional::from_moments(const MomentSequence& m, char gen) {
    std::map<std::string, Rational> values;
    for (int k = 0; k <= m.truncation(); ++k) {
        values[std::string(static_cast<std::size_t>(k), gen)] = m[k];
    }
    return {std::string(1, gen), m.truncation(), std::move(values)};
}

const Rational& MultiMomentFunctional::value(const std::string& word) const {
    if (static_cast<int>(word.size()) > truncation_) {
        throw DegreeOverflow("moment of degree " + std::to_string(word.size()) + " requested, truncation is " +
                             std::to_string(truncation_));
    }
    const auto it = values_.find(word);
    if (it == values_.end()) {
        throw std::invalid_argument("word '" + word + "' uses letters outside the alphabet");
    }
    return it->second;
}

MomentSequence MultiMomentFunctional::moments(char gen) const {
    std::vector<Rational> m;
    for (int k = 0; k <= truncation_; ++k) {
        m.push_back(value(std::string(static_cast<std::size_t>(k), gen)));
    }
    return MomentSequence(std::move(m));
}

std::vector<std::string> all_words(const std::string& alphabet, int n) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (int len = 1; len <= n; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (char c : alphabet) {
                out.push_back(out[i] + c);
            }
        }
        begin = end;
    }
    return out;
}

std::string to_string(Component c) {
    switch (c) {
        case Component::Phi: return "phi";
        case Component::Psi: return "psi";
        case Component::Theta: return "theta";
    }
    return "?";
}

StateTriple::StateTriple(MultiMomentFunctional phi_, MultiMomentFunctional psi_, MultiMomentFunctional theta_)
    : phi(std::move(phi_)), psi(std::move(psi_)), theta(std::move(theta_)) {
    if (phi.alphabet() != psi.alphabet() || phi.alphabet() != theta.alphabet()) {
        throw std::invalid_argument("states of a triple must share the alphabet");
    }
    if (phi.truncation() != psi.truncation() || phi.truncation() != theta.truncation()) {
        throw std::invalid_argument("states of a triple must share the truncation");
    }
}

const MultiMomentFunctional& StateTriple::get(Component c) const {
    switch (c) {
        case Component::Phi: return phi;
        case Component::Psi: return psi;
        case Component::Theta: return theta;
    }
    return phi;
}

FactorState::FactorState(MultiMomentFunctional f, int factor) : f_(std::move(f)), factor_(factor) {
    if (factor < 0 || factor >= kMaxFactors) {
        throw std::invalid_argument("factor id out of range");
    }
}

Rational FactorState::value(std::string_view m) const {
    std::string word;
    word.reserve(m.size());
    for (char s : m) {
        if (symbol_factor(s) != factor_) {
            throw std::logic_error("monomial does not belong to this factor");
        }
        word.push_back(f_.alphabet().at(static_cast<std::size_t>(symbol_gen(s))));
    }
    return f_.value(word);
}

CFreeProductState::CFreeProductState(StatePtr f_left, StatePtr c_left, StatePtr f_right, StatePtr c_right,
                                     std::uint32_t left_mask)
    : f_{std::move(f_left), std::move(f_right)}, c_{std::move(c_left), std::move(c_right)}, left_mask_(left_mask) {}

Rational CFreeProductState::value(std::string_view m) const {
    if (m.empty()) {
        return Rational(1);
    }
    const std::string key(m);
    {
        const std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
    }
    std::vector<std::string_view> runs;
    std::vector<int> side;
    std::size_t start = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const int s = ((left_mask_ >> symbol_factor(m[i])) & 1U) != 0 ? 0 : 1;
        if (i == 0 || s != side.back()) {
            if (i > 0) {
                runs.push_back(m.substr(start, i - start));
                start = i;
            }
            side.push_back(s);
        }
    }
    runs.push_back(m.substr(start));
    Rational result;
    const std::size_t n = runs.size();
    if (n == 1) {
        result = f_[side[0]]->value(runs[0]);
    } else {
        // Centre every letter b at c(b): the alternating centred product
        // factorizes, and the remaining terms are shorter words.
        std::vector<Rational> cv(n);
        result = 1;
        for (std::size_t k = 0; k < n; ++k) {
            cv[k] = c_[side[k]]->value(runs[k]);
            result *= f_[side[k]]->value(runs[k]) - cv[k];
        }
        const std::uint32_t full = (1U << n) - 1;
        for (std::uint32_t r = 0; r < full; ++r) {
            Rational coef(1);
            std::string sub;
            for (std::size_t k = 0; k < n && coef != 0; ++k) {
                if ((r >> k) & 1U) {
                    sub.append(runs[k]);
                } else {
                    coef *= -cv[k];
                }
            }
            if (coef != 0) {
                result -= coef * value(sub);
            }
        }
    }
    const std::unique_lock lock(mutex_);
    memo_.emplace(key, result);
    return result;
}

const StatePtr& ProductTriple::get(Component c) const {
    switch (c) {
        case Component::Phi: return phi;
        case Component::Psi: return psi;
        case Component::Theta: return theta;
    }
    return phi;
}

ProductTriple indented_product(const ProductTriple& left, const ProductTriple& right) {
    if ((left.mask & right.mask) != 0) {
        throw std::invalid_argument("indented product of overlapping factor sets");
    }
    using Key = std::tuple<const StateFunctional*, const StateFunctional*, const StateFunctional*,
                           const StateFunctional*>;
    std::vector<std::pair<Key, StatePtr>> made;
    auto cf = [&](const StatePtr& fl, const StatePtr& cl, const StatePtr& fr, const StatePtr& cr) {
        const Key key{fl.get(), cl.get(), fr.get(), cr.get()};
        for (const auto& [k, p] : made) {
            if (k == key) {
                return p;
            }
        }
        StatePtr p = std::make_shared<CFreeProductState>(fl, cl, fr, cr, left.mask);
        made.emplace_back(key, p);
        return p;
    };
    ProductTriple out;
    out.mask = left.mask | right.mask;
    out.phi = cf(left.phi, left.theta, right.phi, right.psi);
    out.psi = cf(left.psi, left.theta, right.psi, right.psi);
    out.theta = cf(left.theta, left.theta, right.theta, right.psi);
    return out;
}

namespace {

ProductTriple factor_triple(const StateTriple& t, int factor) {
    ProductTriple out;
    out.mask = 1U << factor;
    out.phi = std::make_shared<FactorState>(t.phi, factor);
    out.psi = t.psi == t.phi ? out.phi : std::make_shared<FactorState>(t.psi, factor);
    if (t.theta == t.phi) {
        out.theta = out.phi;
    } else if (t.theta == t.psi) {
        out.theta = out.psi;
    } else {
        out.theta = std::make_shared<FactorState>(t.theta, factor);
    }
    return out;
}

int generator_index(const std::string& alphabet, char g) {
    const auto pos = alphabet.find(g);
    if (pos == std::string::npos) {
        throw std::invalid_argument(std::string("unknown generator '") + g + "'");
    }
    return static_cast<int>(pos);
}

}  // namespace

IndentedProduct::IndentedProduct(std::vector<StateTriple> factors, Bracketing bracketing)
    : factors_(std::move(factors)) {
    if (factors_.empty() || factors_.size() > static_cast<std::size_t>(kMaxFactors)) {
        throw std::invalid_argument("an indented product needs 1 to 32 factors");
    }
    std::vector<ProductTriple> parts;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        parts.push_back(factor_triple(factors_[k], static_cast<int>(k)));
    }
    if (bracketing == Bracketing::Left) {
        top_ = parts.front();
        for (std::size_t k = 1; k < parts.size(); ++k) {
            top_ = indented_product(top_, parts[k]);
        }
    } else {
        top_ = parts.back();
        for (std::size_t k = parts.size() - 1; k-- > 0;) {
            top_ = indented_product(parts[k], top_);
        }
    }
}

Monomial IndentedProduct::encode(const Word& w) const {
    Monomial m;
    for (const auto& letter : w) {
        if (letter.factor < 0 || letter.factor >= size()) {
            throw std::invalid_argument("letter refers to a missing factor");
        }
        const std::string& alphabet = factor(letter.factor).phi.alphabet();
        for (char g : letter.gens) {
            m.push_back(encode_symbol(letter.factor, generator_index(alphabet, g)));
        }
    }
    return m;
}

Rational IndentedProduct::eval(Component c, const Word& w) const { return eval_encoded(c, encode(w)); }

Rational IndentedProduct::eval_encoded(Component c, std::string_view m) const { return top_.get(c)->value(m); }

Rational IndentedProduct::eval(Component c, const std::vector<LinearLetter>& w) const {
    Rational total;
    std::function<void(std::size_t, const Rational&, const Word&)> expand = [&](std::size_t i, const Rational& coef,
                                                                                Word acc) {
        if (i == w.size()) {
            total += coef * eval(c, acc);
            return;
        }
        const LinearLetter& l = w[i];
        if (l.scalar != 0) {
            expand(i + 1, coef * l.scalar, acc);
        }
        for (const auto& [gens, a] : l.terms) {
            if (a == 0) {
                continue;
            }
            Word next = acc;
            next.push_back({l.factor, gens});
            expand(i + 1, coef * a, std::move(next));
        }
    };
    expand(0, Rational(1), Word{});
    return total;
}

Rational cfree_eval(const MultiMomentFunctional& phi1, const MultiMomentFunctional& psi1,
                    const MultiMomentFunctional& phi2, const MultiMomentFunctional& psi2, const Word& w) {
    const CFreeProductState state(std::make_shared<FactorState>(phi1, 0), std::make_shared<FactorState>(psi1, 0),
                                  std::make_shared<FactorState>(phi2, 1), std::make_shared<FactorState>(psi2, 1),
                                  1U);
    Monomial m;
    for (const auto& letter : w) {
        if (letter.factor != 0 && letter.factor != 1) {
            throw std::invalid_argument("c-free evaluation takes letters from factors 0 and 1");
        }
        const std::string& alphabet = (letter.factor == 0 ? phi1 : phi2).alphabet();
        for (char g : letter.gens) {
            m.push_back(encode_symbol(letter.factor, generator_index(alphabet, g)));
        }
    }
    return state.value(m);
}

Rational indented_eval(const std::vector<StateTriple>& factors, Component c, const Word& w) {
    return IndentedProduct(factors).eval(c, w);
}

ProductKind parse_product_kind(const std::string& name) {
    std::string key;
    for (char ch : name) {
        if (ch != '-' && ch != '_') {
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    for (ProductKind k : all_product_kinds()) {
        if (to_string(k) == key) {
            return k;
        }
    }
    throw ParseError("unknown product kind '" + name + "'");
}

std::string to_string(ProductKind k) {
    switch (k) {
        case ProductKind::Free: return "free";
        case ProductKind::Boolean: return "boolean";
        case ProductKind::Monotone: return "monotone";
        case ProductKind::AntiMonotone: return "antimonotone";
        case ProductKind::CFree: return "cfree";
        case ProductKind::CMonotone: return "cmonotone";
        case ProductKind::CAntiMonotone: return "cantimonotone";
        case ProductKind::OFree: return "ofree";
        case ProductKind::Indented: return "indented";
    }
    return "?";
}

std::vector<ProductKind> all_product_kinds() {
    return {ProductKind::Free,      ProductKind::Boolean,       ProductKind::Monotone,
            ProductKind::AntiMonotone, ProductKind::CFree,      ProductKind::CMonotone,
            ProductKind::CAntiMonotone, ProductKind::OFree,     ProductKind::Indented};
}

int state_count(ProductKind k) {
    switch (k) {
        case ProductKind::Free:
        case ProductKind::Boolean:
        case ProductKind::Monotone:
        case ProductKind::AntiMonotone: return 1;
        case ProductKind::CFree:
        case ProductKind::CMonotone:
        case ProductKind::CAntiMonotone:
        case ProductKind::OFree: return 2;
        case ProductKind::Indented: return 3;
    }
    return 0;
}

std::vector<Component> output_components(ProductKind k) {
    switch (k) {
        case ProductKind::Free:
        case ProductKind::Boolean:
        case ProductKind::Monotone:
        case ProductKind::AntiMonotone: return {Component::Phi};
        case ProductKind::CFree:
        case ProductKind::CMonotone: return {Component::Phi, Component::Psi};
        case ProductKind::CAntiMonotone: return {Component::Phi, Component::Theta};
        case ProductKind::OFree: return {Component::Psi, Component::Theta};
        case ProductKind::Indented: return {Component::Phi, Component::Psi, Component::Theta};
    }
    return {};
}

StateTriple substitute(ProductKind k, const std::vector<MultiMomentFunctional>& s) {
    if (static_cast<int>(s.size()) != state_count(k)) {
        throw std::invalid_argument(to_string(k) + " takes " + std::to_string(state_count(k)) + " state(s) per factor");
    }
    const MultiMomentFunctional delta = MultiMomentFunctional::delta(s[0].alphabet(), s[0].truncation());
    switch (k) {
        case ProductKind::Free: return {s[0], s[0], s[0]};
        case ProductKind::Boolean: return {s[0], delta, delta};
        case ProductKind::Monotone: return {s[0], s[0], delta};
        case ProductKind::AntiMonotone: return {s[0], delta, s[0]};
        case ProductKind::CFree: return {s[0], s[1], s[1]};
        case ProductKind::CMonotone: return {s[0], s[1], delta};
        case ProductKind::CAntiMonotone: return {s[0], delta, s[1]};
        case ProductKind::OFree: return {s[0], s[0], s[1]};
        case ProductKind::Indented: return {s[0], s[1], s[2]};
    }
    throw std::logic_error("unhandled product kind");
}

std::vector<Rational> derived_product(ProductKind k, const std::vector<std::vector<MultiMomentFunctional>>& factors,
                                      const Word& w) {
    std::vector<StateTriple> triples;
    for (const auto& f : factors) {
        triples.push_back(substitute(k, f));
    }
    const IndentedProduct product(std::move(triples));
    std::vector<Rational> out;
    for (Component c : output_components(k)) {
        out.push_back(product.eval(c, w));
    }
    return out;
}

std::vector<MomentSequence> convolve_moments(ProductKind k, const std::vector<std::vector<MomentSequence>>& inputs,
                                             int n) {
    std::vector<StateTriple> triples;
    for (const auto& states : inputs) {
        std::vector<MultiMomentFunctional> fs;
        for (const auto& m : states) {
            if (m.truncation() < n) {
                throw DegreeOverflow("input moments are truncated below the requested degree");
            }
            fs.push_back(MultiMomentFunctional::from_moments(m.truncated(n)));
        }
        triples.push_back(substitute(k, fs));
    }
    const IndentedProduct product(std::move(triples));
    const int factors = product.size();
    std::vector<MomentSequence> out;
    for (Component c : output_components(k)) {
        std::vector<Rational> m(static_cast<std::size_t>(n) + 1);
        std::string word;
        std::function<void(int)> walk = [&](int depth) {
            m[static_cast<std::size_t>(depth)] += product.eval_encoded(c, word);
            if (depth == n) {
                return;
            }
            for (int f = 0; f < factors; ++f) {
                word.push_back(encode_symbol(f, 0));
                walk(depth + 1);
                word.pop_back();
            }
        };
        walk(0);
        out.emplace_back(std::move(m));
    }
    return out;
}

IndependenceCondition parse_condition(const std::string& name) {
    static const std::map<std::string, IndependenceCondition> table{
        {"OF", IndependenceCondition::OF},          {"I1", IndependenceCondition::I1},
        {"I2", IndependenceCondition::I2},          {"I1'", IndependenceCondition::I1Prime},
        {"I2'", IndependenceCondition::I2Prime},    {"I2''", IndependenceCondition::I2DoublePrime},
        {"I1p", IndependenceCondition::I1Prime},    {"I2p", IndependenceCondition::I2Prime},
        {"I2pp", IndependenceCondition::I2DoublePrime}};
    if (auto it = table.find(name); it != table.end()) {
        return it->second;
    }
    throw ParseError("unknown independence condition '" + name + "'");
}

std::string to_string(IndependenceCondition c) {
    switch (c) {
        case IndependenceCondition::OF: return "OF";
        case IndependenceCondition::I1: return "I1";
        case IndependenceCondition::I2: return "I2";
        case IndependenceCondition::I1Prime: return "I1'";
        case IndependenceCondition::I2Prime: return "I2'";
        case IndependenceCondition::I2DoublePrime: return "I2''";
    }
    return "?";
}

namespace {

enum class Centering { None, Phi, Psi, Theta };

LinearLetter random_letter(std::mt19937_64& rng, const StateTriple& t, int factor, int max_len, Centering centering) {
    LinearLetter l;
    l.factor = factor;
    const std::string& alphabet = t.phi.alphabet();
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<std::size_t> gen(0, alphabet.size() - 1);
    const int terms = count(rng);
    for (int i = 0; i < terms; ++i) {
        std::string w;
        const int L = len(rng);
        for (int j = 0; j < L; ++j) {
            w.push_back(alphabet[gen(rng)]);
        }
        l.terms[w] += random_rational(rng);
    }
    if (centering == Centering::None) {
        l.scalar = random_rational(rng);
        return l;
    }
    const MultiMomentFunctional& kappa =
        centering == Centering::Phi ? t.phi : (centering == Centering::Psi ? t.psi : t.theta);
    for (const auto& [w, a] : l.terms) {
        l.scalar -= a * kappa.value(w);
    }
    return l;
}

std::string describe(const std::vector<int>& seq, const std::vector<LinearLetter>& letters) {
    std::ostringstream os;
    os << "indices (";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        os << (i ? "," : "") << seq[i] + 1;
    }
    os << ") letters";
    for (const auto& l : letters) {
        os << " [" << to_string(l.scalar);
        for (const auto& [w, a] : l.terms) {
            os << " + " << to_string(a) << "*" << w;
        }
        os << "]";
    }
    return os.str();
}

}  // namespace

IndependenceReport verify_independence(IndependenceCondition cond, const IndentedProduct& product, int trials,
                                       std::uint64_t seed, int max_length) {
    IndependenceReport report;
    const int k = product.size();
    if (k < 2) {
        throw std::invalid_argument("independence checks need at least two factors");
    }
    int truncation = product.factor(0).phi.truncation();
    for (int f = 1; f < k; ++f) {
        truncation = std::min(truncation, product.factor(f).phi.truncation());
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length(1, std::max(1, std::min(max_length, truncation)));
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < trials; ++trial) {
        const int n = length(rng);
        std::vector<int> seq;
        while (static_cast<int>(seq.size()) < n) {
            const int f = pick(rng);
            if (seq.empty() || seq.back() != f) {
                seq.push_back(f);
            }
        }
        if (n == 1) {
            ++report.vacuous;
            continue;
        }
        const PeaksBottoms pb = peaks_bottoms(seq);
        std::vector<Centering> role(static_cast<std::size_t>(n), Centering::None);
        const bool primed = cond == IndependenceCondition::I1Prime || cond == IndependenceCondition::I2Prime ||
                            cond == IndependenceCondition::I2DoublePrime;
        int skip = 0;
        if (cond == IndependenceCondition::I2 || cond == IndependenceCondition::I2Prime) {
            skip = 1;
        } else if (cond == IndependenceCondition::I2DoublePrime) {
            skip = n;
        }
        for (int pos = 1; pos <= n; ++pos) {
            auto& r = role[static_cast<std::size_t>(pos - 1)];
            if (pos == skip) {
                r = Centering::Phi;
            } else if (pb.peaks.count(pos) != 0) {
                r = Centering::Psi;
            } else if (pb.bottoms.count(pos) != 0) {
                r = Centering::Theta;
            } else if (primed) {
                r = coin(rng) ? Centering::Psi : Centering::Theta;
            }
        }
        const int max_len = std::max(1, truncation / n);
        std::vector<LinearLetter> letters;
        for (int pos = 0; pos < n; ++pos) {
            const int f = seq[static_cast<std::size_t>(pos)];
            letters.push_back(random_letter(rng, product.factor(f), f, max_len, role[static_cast<std::size_t>(pos)]));
        }
        std::vector<Component> asserted;
        if (skip != 0) {
            asserted = {Component::Phi};
        } else {
            asserted = {Component::Psi, Component::Theta};
        }
        for (Component c : asserted) {
            ++report.checked;
            const Rational v = product.eval(c, letters);
            if (v != 0) {
                report.violations.push_back(to_string(cond) + ": " + to_string(c) + " = " + to_string(v) + " on " +
                                            describe(seq, letters));
            }
        }
    }
    return report;
}

}  // namespace ncprob
