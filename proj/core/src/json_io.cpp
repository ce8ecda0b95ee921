#include "ncprob/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ParseError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

Rational as_rational(const json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw ParseError("expected a rational string such as \"1/2\"");
}

std::vector<Rational> rational_list(const json& j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const auto& x : j) {
        out.push_back(as_rational(x));
    }
    return out;
}

json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) {
        a.push_back(to_string(x));
    }
    return a;
}

json series_json(int truncation, const std::vector<Rational>& coeffs) {
    return json{{"truncation", truncation}, {"coeffs", rationals_json(coeffs)}};
}

std::vector<Rational> series_coeffs(const json& j) {
    const int n = as_int(field(j, "truncation"), "truncation");
    std::vector<Rational> c = rational_list(field(j, "coeffs"));
    if (n < 0 || static_cast<int>(c.size()) != n + 1) {
        throw ParseError("coeffs must hold truncation + 1 entries");
    }
    return c;
}

MomentSequence moments_of(const json& j) {
    try {
        return MomentSequence(series_coeffs(j));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string alphabet_of(const json& j) {
    std::string out;
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (!j.is_array()) {
        throw ParseError("alphabet must be a list of one-character generators");
    }
    for (const auto& g : j) {
        if (!g.is_string() || g.get<std::string>().size() != 1) {
            throw ParseError("generators must be single characters");
        }
        out += g.get<std::string>();
    }
    return out;
}

json alphabet_json(const std::string& a) {
    json out = json::array();
    for (char c : a) {
        out.push_back(std::string(1, c));
    }
    return out;
}

std::map<std::string, Rational> word_values(const json& j) {
    if (!j.is_object()) {
        throw ParseError("values must be an object keyed by words");
    }
    std::map<std::string, Rational> out;
    for (const auto& [k, v] : j.items()) {
        out[k] = as_rational(v);
    }
    return out;
}

json values_json(const std::map<std::string, Rational>& v) {
    json out = json::object();
    for (const auto& [k, x] : v) {
        out[k] = to_string(x);
    }
    return out;
}

std::map<char, Matrix> matrices_of(const json& j, int dim) {
    if (!j.is_object()) {
        throw ParseError("representation must map generators to matrices");
    }
    std::map<char, Matrix> out;
    for (const auto& [g, m] : j.items()) {
        if (g.size() != 1) {
            throw ParseError("generators must be single characters");
        }
        if (!m.is_array() || static_cast<int>(m.size()) != dim) {
            throw ParseError("matrix of '" + g + "' must have dim rows");
        }
        Matrix mat;
        for (const auto& row : m) {
            auto r = rational_list(row);
            if (static_cast<int>(r.size()) != dim) {
                throw ParseError("matrix of '" + g + "' must have dim columns");
            }
            mat.push_back(std::move(r));
        }
        out[g[0]] = std::move(mat);
    }
    return out;
}

json matrices_json(const std::map<char, Matrix>& reps) {
    json out = json::object();
    for (const auto& [g, m] : reps) {
        json rows = json::array();
        for (const auto& r : m) {
            rows.push_back(rationals_json(r));
        }
        out[std::string(1, g)] = rows;
    }
    return out;
}

json functional_json(const MultiMomentFunctional& f) {
    return json{{"alphabet", alphabet_json(f.alphabet())},
                {"truncation", f.truncation()},
                {"values", values_json(f.values())}};
}

MultiMomentFunctional functional_of(const json& j) {
    try {
        return {alphabet_of(field(j, "alphabet")), as_int(field(j, "truncation"), "truncation"),
                word_values(field(j, "values"))};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

json table_json(const CumulantTable& t) {
    return json{{"alphabet", alphabet_json(t.alphabet())},
                {"truncation", t.truncation()},
                {"values", values_json(t.values())}};
}

CumulantTable table_of(const json& j) {
    try {
        return {alphabet_of(field(j, "alphabet")), as_int(field(j, "truncation"), "truncation"),
                word_values(field(j, "values"))};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

json set_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

}  // namespace

MomentSequence moments_from_json(const std::string& text) { return moments_of(parse(text)); }

std::string moments_to_json(const MomentSequence& m) { return series_json(m.truncation(), m.moments()).dump(); }

std::vector<MomentSequence> moment_list_from_json(const std::string& text) {
    const json j = parse(text);
    if (j.is_object()) {
        return {moments_of(j)};
    }
    if (!j.is_array()) {
        throw ParseError("expected a moment object or a list of them");
    }
    std::vector<MomentSequence> out;
    for (const auto& x : j) {
        out.push_back(moments_of(x));
    }
    return out;
}

std::string moment_list_to_json(const std::vector<MomentSequence>& ms) {
    json a = json::array();
    for (const auto& m : ms) {
        a.push_back(series_json(m.truncation(), m.moments()));
    }
    return a.dump();
}

std::string series_to_json(const Series& s) { return series_json(s.precision(), s.coeffs()).dump(); }

Series series_from_json(const std::string& text) { return Series(series_coeffs(parse(text))); }

MultiMomentFunctional functional_from_json(const std::string& text) { return functional_of(parse(text)); }

std::string functional_to_json(const MultiMomentFunctional& f) { return functional_json(f).dump(); }

StateTriple triple_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        if (j.is_array()) {
            if (j.size() != 3) {
                throw ParseError("a state triple needs exactly three functionals");
            }
            return {functional_of(j[0]), functional_of(j[1]), functional_of(j[2])};
        }
        return {functional_of(field(j, "phi")), functional_of(field(j, "psi")), functional_of(field(j, "theta"))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string triple_to_json(const StateTriple& t) {
    return json{{"phi", functional_json(t.phi)}, {"psi", functional_json(t.psi)}, {"theta", functional_json(t.theta)}}
        .dump();
}

OrderedNCPartition partition_from_json(const std::string& text) {
    const json j = parse(text);
    const int n = as_int(field(j, "n"), "n");
    std::vector<Block> blocks;
    const json& b = field(j, "blocks");
    if (!b.is_array()) {
        throw ParseError("blocks must be a list of lists");
    }
    for (const auto& block : b) {
        if (!block.is_array()) {
            throw ParseError("blocks must be a list of lists");
        }
        Block blk;
        for (const auto& e : block) {
            blk.push_back(as_int(e, "block element"));
        }
        blocks.push_back(std::move(blk));
    }
    std::vector<int> order;
    if (j.contains("order")) {
        for (const auto& o : j.at("order")) {
            order.push_back(as_int(o, "order entry"));
        }
    } else {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            order.push_back(static_cast<int>(i) + 1);
        }
    }
    try {
        OrderedNCPartition p(blocks, order);
        if (p.ground_size() != n || (n > 0 && (p.ground().front() != 1 || p.ground().back() != n))) {
            throw ParseError("blocks must cover 1..n");
        }
        return p;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string partition_to_json(const OrderedNCPartition& p) {
    return json{{"n", p.ground_size()}, {"blocks", p.blocks()}, {"order", p.order()}}.dump();
}

MatrixStateModel model_from_json(const std::string& text) {
    const json j = parse(text);
    MatrixStateModel m;
    m.dim = as_int(field(j, "dim"), "dim");
    m.pi = matrices_of(field(j, "pi"), m.dim);
    m.sigma = j.contains("sigma") ? matrices_of(j.at("sigma"), m.dim) : m.pi;
    m.rho = j.contains("rho") ? matrices_of(j.at("rho"), m.dim) : m.sigma;
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return m;
}

std::string model_to_json(const MatrixStateModel& m) {
    return json{{"dim", m.dim}, {"pi", matrices_json(m.pi)}, {"sigma", matrices_json(m.sigma)},
                {"rho", matrices_json(m.rho)}}
        .dump();
}

std::string cumulant_table_to_json(CumulantKind kind, const CumulantTable& t) {
    json j = table_json(t);
    j["kind"] = to_string(kind);
    return j.dump();
}

CumulantTable cumulant_table_from_json(const std::string& text) { return table_of(parse(text)); }

std::string cumulant_triple_to_json(const CumulantTriple& k) {
    return json{{"I", table_json(k.ki)}, {"OF", table_json(k.kof)}, {"AOF", table_json(k.kaof)}}.dump();
}

CumulantTriple cumulant_triple_from_json(const std::string& text) {
    const json j = parse(text);
    return {table_of(field(j, "I")), table_of(field(j, "OF")), table_of(field(j, "AOF"))};
}

std::string family_cumulants_to_json(CumulantFamily f, const std::vector<std::vector<Rational>>& k) {
    json lists = json::array();
    for (const auto& seq : k) {
        lists.push_back(rationals_json(std::vector<Rational>(seq.begin() + 1, seq.end())));
    }
    return json{{"family", to_string(f)}, {"cumulants", lists}}.dump();
}

std::pair<CumulantFamily, std::vector<std::vector<Rational>>> family_cumulants_from_json(const std::string& text) {
    const json j = parse(text);
    const json& name = field(j, "family");
    if (!name.is_string()) {
        throw ParseError("family must be a string");
    }
    const CumulantFamily f = parse_cumulant_family(name.get<std::string>());
    const json& lists = field(j, "cumulants");
    if (!lists.is_array() || static_cast<int>(lists.size()) != family_state_count(f)) {
        throw ParseError("cumulants must hold one list per state of the family");
    }
    std::vector<std::vector<Rational>> out;
    for (const auto& l : lists) {
        std::vector<Rational> seq{Rational(0)};
        for (auto& x : rational_list(l)) {
            seq.push_back(std::move(x));
        }
        if (!out.empty() && seq.size() != out.front().size()) {
            throw ParseError("cumulant lists must share their length");
        }
        out.push_back(std::move(seq));
    }
    return {f, std::move(out)};
}

std::string partition_list_to_json(const std::vector<OrderedNCPartition>& ps) {
    json a = json::array();
    for (const auto& p : ps) {
        a.push_back(json::parse(partition_to_json(p)));
    }
    return a.dump();
}

std::string classification_to_json(const OrderedNCPartition& p) {
    const BlockClassification c = classify(p);
    return json{{"partition", json::parse(partition_to_json(p))},
                {"S1", set_json(c.s1)},
                {"S2", set_json(c.s2)},
                {"T1", set_json(c.t1)},
                {"T2", set_json(c.t2)},
                {"outer", set_json(c.outer)},
                {"inner", set_json(c.inner)},
                {"monotone", is_monotone(p)},
                {"antimonotone", is_antimonotone(p)}}
        .dump();
}

std::string peaks_bottoms_to_json(const std::vector<int>& seq) {
    const PeaksBottoms pb = peaks_bottoms(seq);
    return json{{"sequence", seq}, {"peaks", set_json(pb.peaks)}, {"bottoms", set_json(pb.bottoms)}}.dump();
}

std::string check_reports_to_json(const std::vector<CheckReport>& reports) {
    json a = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        a.push_back(json{{"suite", r.name}, {"checked", r.checked}, {"ok", r.ok()}, {"failures", r.failures}});
        ok = ok && r.ok();
    }
    return json{{"ok", ok}, {"suites", a}}.dump(2);
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text << '\n';
}

}  // namespace ncprob
