#include "ncprob/cumulants.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "ncprob/errors.hpp"
#include "ncprob/partitions.hpp"

namespace ncprob {

namespace {

using Mask = std::uint32_t;
using TermKey = std::vector<std::pair<int, Mask>>;
using TermMap = std::map<TermKey, Rational>;

Mask block_mask(const Block& b) {
    Mask m = 0;
    for (int e : b) {
        m |= Mask{1} << (e - 1);
    }
    return m;
}

std::string restrict_word(const std::string& word, Mask m) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if ((m >> i) & 1U) {
            out.push_back(word[i]);
        }
    }
    return out;
}

// Aggregated LNC(n) sums: for each state, the weight 1/|pi|! collected over
// partitions with the same blocks and the same cumulant kind on each block.
struct LncTerms {
    TermMap phi, psi, theta;
};

const LncTerms& lnc_terms(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<LncTerms>> cache;
    const std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
        return *it->second;
    }
    auto terms = std::make_unique<LncTerms>();
    for_each_partition(PartitionClass::LNC, [&] {
        std::vector<int> g(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            g[static_cast<std::size_t>(i)] = i + 1;
        }
        return g;
    }(), [&](const OrderedNCPartition& p) {
        const BlockClassification cl = classify(p);
        const Rational weight = Rational(1) / factorial(p.size());
        TermKey kphi, kpsi, ktheta;
        for (int pos = 1; pos <= p.size(); ++pos) {
            const Mask m = block_mask(p.block_at(pos));
            const bool s1 = cl.s1.contains(pos);
            kpsi.emplace_back(static_cast<int>(s1 ? CumulantKind::OF : CumulantKind::AOF), m);
            ktheta.emplace_back(static_cast<int>(cl.t1.contains(pos) ? CumulantKind::OF : CumulantKind::AOF), m);
            const CumulantKind kp = cl.outer.contains(pos) ? CumulantKind::I : (s1 ? CumulantKind::OF : CumulantKind::AOF);
            kphi.emplace_back(static_cast<int>(kp), m);
        }
        for (auto* key : {&kphi, &kpsi, &ktheta}) {
            std::sort(key->begin(), key->end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        }
        terms->phi[kphi] += weight;
        terms->psi[kpsi] += weight;
        terms->theta[ktheta] += weight;
    });
    return *cache.emplace(n, std::move(terms)).first->second;
}

const TermMap& terms_for(const LncTerms& t, Component c) {
    switch (c) {
        case Component::Phi: return t.phi;
        case Component::Psi: return t.psi;
        case Component::Theta: return t.theta;
    }
    throw std::logic_error("unknown component");
}

using Lookup = std::function<Rational(CumulantKind, const std::string&)>;

Rational partition_sum(Component c, const std::string& word, const Lookup& k) {
    if (word.empty()) {
        return Rational(1);
    }
    Rational total;
    for (const auto& [key, weight] : terms_for(lnc_terms(static_cast<int>(word.size())), c)) {
        Rational prod = weight;
        for (const auto& [kind, mask] : key) {
            prod *= k(static_cast<CumulantKind>(kind), restrict_word(word, mask));
            if (prod == 0) {
                break;
            }
        }
        total += prod;
    }
    return total;
}

std::vector<int> iota1(int n) {
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = i + 1;
    }
    return g;
}

// Evaluates words over the indented product of k identical copies of x.
class DotEvaluator {
public:
    explicit DotEvaluator(StateTriple x) : x_(std::move(x)) {}

    Polynomial moment(Component c, const std::string& word) {
        const int n = static_cast<int>(word.size());
        if (n == 0) {
            return Polynomial(1);
        }
        // S_k: sum over surjections of the positions onto k ordered copies.
        std::vector<Rational> s(static_cast<std::size_t>(n) + 1);
        std::vector<int> gens;
        for (char ch : word) {
            const auto pos = x_.phi.alphabet().find(ch);
            if (pos == std::string::npos) {
                throw std::invalid_argument(std::string("unknown generator '") + ch + "'");
            }
            gens.push_back(static_cast<int>(pos));
        }
        for (int k = 1; k <= n; ++k) {
            const IndentedProduct& prod = product(k);
            Monomial m(static_cast<std::size_t>(n), '\0');
            std::vector<int> used(static_cast<std::size_t>(k), 0);
            int distinct = 0;
            std::function<void(int)> walk = [&](int i) {
                if (n - i < k - distinct) {
                    return;
                }
                if (i == n) {
                    s[static_cast<std::size_t>(k)] += prod.eval_encoded(c, m);
                    return;
                }
                for (int f = 0; f < k; ++f) {
                    m[static_cast<std::size_t>(i)] = encode_symbol(f, gens[static_cast<std::size_t>(i)]);
                    if (used[static_cast<std::size_t>(f)]++ == 0) {
                        ++distinct;
                    }
                    walk(i + 1);
                    if (--used[static_cast<std::size_t>(f)] == 0) {
                        --distinct;
                    }
                }
            };
            walk(0);
        }
        std::vector<Rational> xs, ys;
        for (int big_n = 0; big_n <= n; ++big_n) {
            Rational v;
            for (int k = 1; k <= std::min(n, big_n); ++k) {
                v += binomial(big_n, k) * s[static_cast<std::size_t>(k)];
            }
            xs.emplace_back(big_n);
            ys.push_back(std::move(v));
        }
        return Polynomial::interpolate(xs, ys);
    }

private:
    const IndentedProduct& product(int k) {
        while (static_cast<int>(products_.size()) < k) {
            const std::size_t copies = products_.size() + 1;
            products_.push_back(std::make_unique<IndentedProduct>(std::vector<StateTriple>(copies, x_)));
        }
        return *products_[static_cast<std::size_t>(k) - 1];
    }

    StateTriple x_;
    std::vector<std::unique_ptr<IndentedProduct>> products_;
};

Component component_of(CumulantKind k) {
    switch (k) {
        case CumulantKind::I: return Component::Phi;
        case CumulantKind::OF: return Component::Psi;
        case CumulantKind::AOF: return Component::Theta;
    }
    throw std::logic_error("unknown cumulant kind");
}

TimeSeries constant_series(const Series& s) {
    std::vector<Polynomial> c;
    for (const auto& x : s.coeffs()) {
        c.emplace_back(x);
    }
    return TimeSeries(std::move(c));
}

// -sum_{n>=1} K_n w^{n-1}
TimeSeries generating_series(const std::vector<Rational>& k) {
    const int n = static_cast<int>(k.size()) - 1;
    Series s(std::max(n - 1, 0));
    for (int j = 1; j <= n; ++j) {
        s[j - 1] = -k[static_cast<std::size_t>(j)];
    }
    return constant_series(s);
}

// 1 / F as a series in w.
TimeSeries local(const TimeSeries& u) { return u.reciprocal().shifted_up(1); }

// z dF/dz / z = U - w U'
TimeSeries z_derivative(const TimeSeries& u) {
    TimeSeries out = u;
    for (int k = 1; k <= u.precision(); ++k) {
        out[k] = u[k] * Polynomial(1 - k);
    }
    return out;
}

Series at_time(const TimeSeries& u, const Rational& t) {
    std::vector<Rational> c;
    for (const auto& p : u.coeffs()) {
        c.push_back(p(t));
    }
    return Series(std::move(c));
}

}  // namespace

std::string to_string(CumulantKind k) {
    switch (k) {
        case CumulantKind::I: return "I";
        case CumulantKind::OF: return "OF";
        case CumulantKind::AOF: return "AOF";
    }
    throw std::logic_error("unknown cumulant kind");
}

CumulantTable::CumulantTable(std::string alphabet, int truncation, std::map<std::string, Rational> values)
    : alphabet_(std::move(alphabet)), truncation_(truncation), values_(std::move(values)) {
    if (truncation_ < 0) {
        throw std::invalid_argument("negative truncation");
    }
    for (const auto& w : all_words(alphabet_, truncation_)) {
        if (!w.empty() && !values_.contains(w)) {
            throw IncompleteTable("cumulant table misses the word '" + w + "'");
        }
    }
}

const Rational& CumulantTable::value(const std::string& word) const {
    if (static_cast<int>(word.size()) > truncation_) {
        throw DegreeOverflow("cumulant of order " + std::to_string(word.size()) + " beyond truncation " +
                             std::to_string(truncation_));
    }
    const auto it = values_.find(word);
    if (it == values_.end()) {
        throw IncompleteTable("cumulant table misses the word '" + word + "'");
    }
    return it->second;
}

const CumulantTable& CumulantTriple::get(CumulantKind k) const {
    switch (k) {
        case CumulantKind::I: return ki;
        case CumulantKind::OF: return kof;
        case CumulantKind::AOF: return kaof;
    }
    throw std::logic_error("unknown cumulant kind");
}

Rational moment_from_cumulants(Component c, const std::string& word, const CumulantTriple& k) {
    return partition_sum(c, word, [&](CumulantKind kind, const std::string& w) { return k.get(kind).value(w); });
}

StateTriple moments_from_cumulants(const CumulantTriple& k, int n) {
    const std::string& alphabet = k.ki.alphabet();
    std::map<std::string, Rational> phi, psi, theta;
    for (const auto& w : all_words(alphabet, n)) {
        phi[w] = moment_from_cumulants(Component::Phi, w, k);
        psi[w] = moment_from_cumulants(Component::Psi, w, k);
        theta[w] = moment_from_cumulants(Component::Theta, w, k);
    }
    return {{alphabet, n, std::move(phi)}, {alphabet, n, std::move(psi)}, {alphabet, n, std::move(theta)}};
}

CumulantTriple cumulants_from_moments(const StateTriple& m, int n) {
    const std::string& alphabet = m.phi.alphabet();
    std::map<std::string, Rational> tables[3];
    const Lookup lookup = [&](CumulantKind kind, const std::string& w) {
        const auto& t = tables[static_cast<int>(kind)];
        const auto it = t.find(w);
        return it == t.end() ? Rational(0) : it->second;
    };
    for (const auto& w : all_words(alphabet, n)) {
        if (w.empty()) {
            continue;
        }
        // The one-block partition contributes K(w) with weight 1 to each state.
        for (CumulantKind kind : {CumulantKind::I, CumulantKind::OF, CumulantKind::AOF}) {
            const Component c = component_of(kind);
            tables[static_cast<int>(kind)][w] = m.get(c).value(w) - partition_sum(c, w, lookup);
        }
    }
    return {{alphabet, n, std::move(tables[0])}, {alphabet, n, std::move(tables[1])}, {alphabet, n, std::move(tables[2])}};
}

SingleCumulants single_variable_cumulants(const MomentSequence& lambda, const MomentSequence& mu,
                                          const MomentSequence& nu) {
    const int n = std::min({lambda.truncation(), mu.truncation(), nu.truncation()});
    const StateTriple x(MultiMomentFunctional::from_moments(lambda.truncated(n)),
                        MultiMomentFunctional::from_moments(mu.truncated(n)),
                        MultiMomentFunctional::from_moments(nu.truncated(n)));
    const CumulantTriple k = cumulants_from_moments(x, n);
    SingleCumulants out{std::vector<Rational>(static_cast<std::size_t>(n) + 1),
                        std::vector<Rational>(static_cast<std::size_t>(n) + 1),
                        std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
    for (int j = 1; j <= n; ++j) {
        const std::string w(static_cast<std::size_t>(j), 'x');
        out.ki[static_cast<std::size_t>(j)] = k.ki.value(w);
        out.kof[static_cast<std::size_t>(j)] = k.kof.value(w);
        out.kaof[static_cast<std::size_t>(j)] = k.kaof.value(w);
    }
    return out;
}

MeasureTriple single_variable_moments(const SingleCumulants& k) {
    const int n = k.truncation();
    std::map<std::string, Rational> t[3];
    for (int j = 1; j <= n; ++j) {
        const std::string w(static_cast<std::size_t>(j), 'x');
        t[0][w] = k.ki[static_cast<std::size_t>(j)];
        t[1][w] = k.kof[static_cast<std::size_t>(j)];
        t[2][w] = k.kaof[static_cast<std::size_t>(j)];
    }
    const CumulantTriple table{{"x", n, t[0]}, {"x", n, t[1]}, {"x", n, t[2]}};
    const StateTriple m = moments_from_cumulants(table, n);
    return {m.phi.moments('x'), m.psi.moments('x'), m.theta.moments('x')};
}

Polynomial dot_moment(const StateTriple& x, Component c, const std::string& word) {
    return DotEvaluator(x).moment(c, word);
}

Rational dot_cumulant(const StateTriple& x, Component c, const std::string& word) {
    return dot_moment(x, c, word).coefficient(1);
}

CumulantTriple dot_cumulants(const StateTriple& x, int n) {
    DotEvaluator dot(x);
    std::map<std::string, Rational> tables[3];
    for (const auto& w : all_words(x.phi.alphabet(), n)) {
        if (w.empty()) {
            continue;
        }
        for (CumulantKind kind : {CumulantKind::I, CumulantKind::OF, CumulantKind::AOF}) {
            tables[static_cast<int>(kind)][w] = dot.moment(component_of(kind), w).coefficient(1);
        }
    }
    const std::string& a = x.phi.alphabet();
    return {{a, n, std::move(tables[0])}, {a, n, std::move(tables[1])}, {a, n, std::move(tables[2])}};
}

CumulantFamily parse_cumulant_family(const std::string& name) {
    static const std::map<std::string, CumulantFamily> table{
        {"free", CumulantFamily::Free},
        {"boolean", CumulantFamily::Boolean},
        {"monotone", CumulantFamily::Monotone},
        {"antimonotone", CumulantFamily::AntiMonotone},
        {"cfree", CumulantFamily::CFree},
        {"cmonotone", CumulantFamily::CMonotone},
        {"cantimonotone", CumulantFamily::CAntiMonotone},
    };
    std::string key;
    for (char ch : name) {
        if (ch != '-' && ch != '_') {
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    const auto it = table.find(key);
    if (it == table.end()) {
        throw ParseError("unknown cumulant family '" + name + "'");
    }
    return it->second;
}

std::string to_string(CumulantFamily f) {
    switch (f) {
        case CumulantFamily::Free: return "free";
        case CumulantFamily::Boolean: return "boolean";
        case CumulantFamily::Monotone: return "monotone";
        case CumulantFamily::AntiMonotone: return "antimonotone";
        case CumulantFamily::CFree: return "cfree";
        case CumulantFamily::CMonotone: return "cmonotone";
        case CumulantFamily::CAntiMonotone: return "cantimonotone";
    }
    throw std::logic_error("unknown cumulant family");
}

std::vector<CumulantFamily> all_cumulant_families() {
    return {CumulantFamily::Free,   CumulantFamily::Boolean,   CumulantFamily::Monotone,
            CumulantFamily::AntiMonotone, CumulantFamily::CFree, CumulantFamily::CMonotone,
            CumulantFamily::CAntiMonotone};
}

int family_state_count(CumulantFamily f) {
    switch (f) {
        case CumulantFamily::CFree:
        case CumulantFamily::CMonotone:
        case CumulantFamily::CAntiMonotone: return 2;
        default: return 1;
    }
}

std::vector<std::vector<Rational>> specialize(CumulantFamily f, const std::vector<MomentSequence>& states, int n) {
    if (static_cast<int>(states.size()) != family_state_count(f)) {
        throw std::invalid_argument("wrong number of states for " + to_string(f));
    }
    for (const auto& s : states) {
        if (s.truncation() < n) {
            throw DegreeOverflow("moments are truncated below the requested degree");
        }
    }
    const MomentSequence d = MomentSequence::point_mass(Rational(0), n);
    const MomentSequence a = states[0].truncated(n);
    auto ki = [&](const MomentSequence& l, const MomentSequence& m, const MomentSequence& v) {
        return single_variable_cumulants(l, m, v).ki;
    };
    switch (f) {
        case CumulantFamily::Free: return {ki(a, a, a)};
        case CumulantFamily::Boolean: return {ki(a, d, d)};
        case CumulantFamily::Monotone: return {single_variable_cumulants(a, a, d).kof};
        case CumulantFamily::AntiMonotone: return {ki(a, d, a)};
        default: break;
    }
    const MomentSequence b = states[1].truncated(n);
    switch (f) {
        case CumulantFamily::CFree: return {ki(a, b, b), ki(b, b, b)};
        case CumulantFamily::CMonotone: return {ki(a, b, d), single_variable_cumulants(b, b, d).kof};
        case CumulantFamily::CAntiMonotone: return {ki(a, d, b), ki(b, d, b)};
        default: break;
    }
    throw std::logic_error("unknown cumulant family");
}

MomentSequence classical_moments(CumulantFamily f, const std::vector<Rational>& k_outer,
                                 const std::vector<Rational>& k_inner, int n) {
    if (static_cast<int>(k_outer.size()) <= n || static_cast<int>(k_inner.size()) <= n) {
        throw IncompleteTable("cumulant sequence shorter than the requested degree");
    }
    auto term = [&](const OrderedNCPartition& p) {
        const std::vector<int> parents = p.parents();
        Rational prod(1);
        for (int pos = 1; pos <= p.size(); ++pos) {
            const auto size = p.block_at(pos).size();
            prod *= parents[static_cast<std::size_t>(pos) - 1] == 0 ? k_outer[size] : k_inner[size];
        }
        return prod;
    };
    std::vector<Rational> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int j = 1; j <= n; ++j) {
        Rational total;
        const std::vector<int> ground = iota1(j);
        switch (f) {
            case CumulantFamily::Free:
            case CumulantFamily::CFree:
                for (const auto& blocks : noncrossing_partitions(ground)) {
                    std::vector<int> order(blocks.size());
                    for (std::size_t i = 0; i < order.size(); ++i) {
                        order[i] = static_cast<int>(i) + 1;
                    }
                    total += term(OrderedNCPartition(blocks, order));
                }
                break;
            case CumulantFamily::Boolean:
                for_each_partition(PartitionClass::I, ground,
                                   [&](const OrderedNCPartition& p) { total += term(p); });
                break;
            case CumulantFamily::Monotone:
            case CumulantFamily::CMonotone:
                for_each_partition(PartitionClass::M, ground,
                                   [&](const OrderedNCPartition& p) { total += term(p) / factorial(p.size()); });
                break;
            case CumulantFamily::AntiMonotone:
            case CumulantFamily::CAntiMonotone:
                for_each_partition(PartitionClass::AM, ground,
                                   [&](const OrderedNCPartition& p) { total += term(p) / factorial(p.size()); });
                break;
        }
        m[static_cast<std::size_t>(j)] = total;
    }
    return MomentSequence(std::move(m));
}

std::vector<MomentSequence> family_moments(CumulantFamily f, const std::vector<std::vector<Rational>>& k, int n) {
    if (static_cast<int>(k.size()) != family_state_count(f)) {
        throw std::invalid_argument("one cumulant sequence per state of the family expected");
    }
    if (k.size() == 1) {
        return {classical_moments(f, k[0], k[0], n)};
    }
    CumulantFamily base = CumulantFamily::Free;
    if (f == CumulantFamily::CMonotone) {
        base = CumulantFamily::Monotone;
    } else if (f == CumulantFamily::CAntiMonotone) {
        base = CumulantFamily::AntiMonotone;
    }
    return {classical_moments(f, k[0], k[1], n), classical_moments(base, k[1], k[1], n)};
}

OdeFlow ode_flow(const SingleCumulants& k, OdeSystem system) {
    const int n = k.truncation();
    const TimeSeries a = generating_series(k.ki);
    const TimeSeries b = generating_series(k.kof);
    const TimeSeries c = generating_series(k.kaof);
    OdeFlow flow{TimeSeries::constant(Polynomial(1), n), TimeSeries::constant(Polynomial(1), n),
                 TimeSeries::constant(Polynomial(1), n)};
    // The w^j coefficient of each right-hand side only involves coefficients below j.
    for (int j = 1; j <= n; ++j) {
        const TimeSeries f_mu = local(flow.mu);
        const TimeSeries f_nu = local(flow.nu);
        const TimeSeries c_mu = c.compose(f_mu);
        const TimeSeries b_nu = b.compose(f_nu);
        const TimeSeries d_lambda = ((a - c).compose(f_mu) + c_mu * z_derivative(flow.lambda)).shifted_up(1);
        TimeSeries d_mu, d_nu;
        if (system == OdeSystem::Transport) {
            d_mu = (b_nu * z_derivative(flow.mu)).shifted_up(1);
            d_nu = (c_mu * z_derivative(flow.nu)).shifted_up(1);
        } else {
            d_mu = ((b - c).compose(f_mu) + c_mu * z_derivative(flow.mu)).shifted_up(1);
            d_nu = ((c - b).compose(f_nu) + b_nu * z_derivative(flow.nu)).shifted_up(1);
        }
        flow.lambda[j] = d_lambda[j].integral();
        flow.mu[j] = d_mu[j].integral();
        flow.nu[j] = d_nu[j].integral();
    }
    return flow;
}

MeasureTriple ode_moments(const SingleCumulants& k, const Rational& t, OdeSystem system) {
    const OdeFlow flow = ode_flow(k, system);
    return {F_to_moments(FSeries(at_time(flow.lambda, t))), F_to_moments(FSeries(at_time(flow.mu, t))),
            F_to_moments(FSeries(at_time(flow.nu, t)))};
}

RecurrenceReport recurrence_check(const StateTriple& x, int n) {
    RecurrenceReport report;
    DotEvaluator dot(x);
    std::map<std::pair<int, std::string>, Polynomial> memo;
    auto moment = [&](Component c, const std::string& w) -> const Polynomial& {
        auto key = std::make_pair(static_cast<int>(c), w);
        auto it = memo.find(key);
        if (it == memo.end()) {
            it = memo.emplace(key, dot.moment(c, w)).first;
        }
        return it->second;
    };
    auto cumulant = [&](CumulantKind k, const std::string& w) {
        return Polynomial(moment(component_of(k), w).coefficient(1));
    };
    auto sub = [](const std::string& w, const Block& b) {
        std::string out;
        for (int e : b) {
            out.push_back(w[static_cast<std::size_t>(e) - 1]);
        }
        return out;
    };

    for (const auto& w : all_words(x.phi.alphabet(), n)) {
        const int len = static_cast<int>(w.size());
        if (len == 0) {
            continue;
        }
        Polynomial rhs[3];
        for (int a = 1; a <= len; ++a) {
            for (int b = a; b <= len; ++b) {
                const std::string left = w.substr(0, static_cast<std::size_t>(a) - 1);
                const std::string right = w.substr(static_cast<std::size_t>(b));
                std::vector<int> ground;
                for (int i = a; i <= b; ++i) {
                    ground.push_back(i);
                }
                for_each_partition(PartitionClass::NCIO, ground, [&](const OrderedNCPartition& p) {
                    const std::vector<Block> blocks = p.ordered_blocks();
                    const std::string last = sub(w, blocks.back());
                    Polynomial gaps_theta(1), gaps_psi(1);
                    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
                        gaps_theta *= moment(Component::Theta, sub(w, blocks[i]));
                        gaps_psi *= moment(Component::Psi, sub(w, blocks[i]));
                    }
                    const Polynomial split =
                        moment(Component::Phi, left) * moment(Component::Phi, right);
                    rhs[0] += (moment(Component::Phi, left + right) - split) * gaps_theta *
                                  cumulant(CumulantKind::OF, last) +
                              split * gaps_theta * cumulant(CumulantKind::I, last);
                    rhs[1] += moment(Component::Psi, left + right) * gaps_theta * cumulant(CumulantKind::OF, last);
                    rhs[2] += moment(Component::Theta, left + right) * gaps_psi * cumulant(CumulantKind::AOF, last);
                });
            }
        }
        const Component comps[3] = {Component::Phi, Component::Psi, Component::Theta};
        for (int i = 0; i < 3; ++i) {
            ++report.checked;
            if (!(moment(comps[i], w).derivative() == rhs[i])) {
                report.violations.push_back(to_string(comps[i]) + " on '" + w + "'");
            }
        }
    }
    return report;
}

}  // namespace ncprob
