#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncprob/checks.hpp"
#include "ncprob/convolutions.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"
#include "ncprob/json_io.hpp"
#include "ncprob/partitions.hpp"

using namespace ncprob;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;

struct ConvolveOpts {
    std::string kind;
    int degree = 0;
    std::string route = "transform";
    std::vector<std::string> inputs;
    std::string output = "-";
};

struct CumulantOpts {
    std::string kind = "indented";
    int degree = 0;
    bool inverse = false;
    std::string input = "-";
    std::string output = "-";
};

struct PartitionOpts {
    std::string cls = "LNC";
    int n = 0;
    bool count = false;
    bool render = false;
    std::string classify;
    std::string sequence;
};

struct CltOpts {
    std::string alpha2 = "1", beta2 = "1", gamma2 = "1";
    int degree = 6;
    std::vector<int> ns{4, 16, 64};
    bool cumulants = false;
};

struct VerifyOpts {
    std::string suite = "all";
    std::uint64_t seed = 1;
    int trials = 0;
};

std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            throw ParseError("bad sequence entry '" + item + "'");
        }
    }
    return out;
}

std::string csv_number(const Rational& r) {
    std::ostringstream out;
    out << std::setprecision(12) << to_double(r);
    return out.str();
}

int fail_with(const std::vector<CheckReport>& reports) {
    std::cerr << check_reports_to_json(reports) << '\n';
    return kExitCheckFailed;
}

int run_convolve(const ConvolveOpts& o) {
    const ProductKind kind = parse_product_kind(o.kind);
    if (o.inputs.size() < 2) {
        throw ParseError("convolve needs at least two input files");
    }
    std::vector<std::vector<MomentSequence>> inputs;
    int degree = o.degree;
    for (const auto& path : o.inputs) {
        auto factor = moment_list_from_json(read_text(path));
        if (static_cast<int>(factor.size()) != state_count(kind)) {
            throw ParseError("'" + path + "' must hold " + std::to_string(state_count(kind)) + " moment sequences for " +
                             to_string(kind));
        }
        for (const auto& m : factor) {
            if (o.degree == 0) {
                degree = degree == 0 ? m.truncation() : std::min(degree, m.truncation());
            } else if (m.truncation() < o.degree) {
                throw ParseError("'" + path + "' is truncated below degree " + std::to_string(o.degree));
            }
        }
        inputs.push_back(std::move(factor));
    }
    for (auto& factor : inputs) {
        for (auto& m : factor) {
            m = m.truncated(degree);
        }
    }
    std::vector<MomentSequence> out;
    if (o.route == "transform") {
        out = derived_additive(kind, inputs);
    } else if (o.route == "closed") {
        out = direct_additive(kind, inputs);
    } else if (o.route == "words") {
        out = convolve_moments(kind, inputs, degree);
    } else {
        throw ParseError("unknown route '" + o.route + "'");
    }
    write_text(o.output, moment_list_to_json(out));
    return 0;
}

int run_cumulants(const CumulantOpts& o) {
    const std::string text = read_text(o.input);
    if (o.kind == "indented") {
        if (o.inverse) {
            const CumulantTriple k = cumulant_triple_from_json(text);
            write_text(o.output, triple_to_json(moments_from_cumulants(k, o.degree > 0 ? o.degree : k.ki.truncation())));
        } else {
            const StateTriple x = triple_from_json(text);
            write_text(o.output, cumulant_triple_to_json(cumulants_from_moments(x, o.degree > 0 ? o.degree : x.phi.truncation())));
        }
        return 0;
    }
    if (o.inverse) {
        const auto [family, k] = family_cumulants_from_json(text);
        const int n = o.degree > 0 ? o.degree : static_cast<int>(k.front().size()) - 1;
        write_text(o.output, moment_list_to_json(family_moments(family, k, n)));
        return 0;
    }
    const CumulantFamily family = parse_cumulant_family(o.kind);
    const auto states = moment_list_from_json(text);
    if (static_cast<int>(states.size()) != family_state_count(family)) {
        throw ParseError(to_string(family) + " needs " + std::to_string(family_state_count(family)) +
                         " moment sequences");
    }
    int n = o.degree;
    for (const auto& m : states) {
        n = n == 0 ? m.truncation() : n;
        if (m.truncation() < n) {
            throw ParseError("input truncated below degree " + std::to_string(n));
        }
    }
    write_text(o.output, family_cumulants_to_json(family, specialize(family, states, n)));
    return 0;
}

int run_partitions(const PartitionOpts& o) {
    if (!o.sequence.empty()) {
        write_text("-", peaks_bottoms_to_json(parse_sequence(o.sequence)));
        return 0;
    }
    if (!o.classify.empty()) {
        write_text("-", classification_to_json(partition_from_json(read_text(o.classify))));
        return 0;
    }
    const PartitionClass cls = parse_partition_class(o.cls);
    if (o.n < 0 || o.n > 12) {
        throw ParseError("--n must lie in 0..12");
    }
    const auto all = enumerate(cls, o.n);
    if (o.count) {
        std::cout << all.size() << '\n';
        return 0;
    }
    if (o.render) {
        for (const auto& p : all) {
            std::cout << partition_to_json(p) << '\n' << render_ascii(p) << '\n';
        }
        return 0;
    }
    write_text("-", partition_list_to_json(all));
    return 0;
}

int run_clt(const CltOpts& o) {
    const Rational a2 = parse_rational(o.alpha2);
    const Rational b2 = parse_rational(o.beta2);
    const Rational g2 = parse_rational(o.gamma2);
    if (o.degree < 1) {
        throw ParseError("--degree must be positive");
    }
    if (o.cumulants) {
        const MeasureTriple k = kesten_triple(a2, b2, g2, o.degree);
        const SingleCumulants c = single_variable_cumulants(k.lambda, k.mu, k.nu);
        const Rational expected[3] = {a2, b2, g2};
        const std::vector<Rational>* seqs[3] = {&c.ki, &c.kof, &c.kaof};
        const char* names[3] = {"I", "OF", "AOF"};
        CheckReport report{"kesten-cumulants", 0, {}};
        std::cout << "kind,k,cumulant,cumulant_exact\n";
        for (int i = 0; i < 3; ++i) {
            for (int j = 1; j <= o.degree; ++j) {
                const Rational& v = (*seqs[i])[static_cast<std::size_t>(j)];
                std::cout << names[i] << ',' << j << ',' << csv_number(v) << ',' << to_string(v) << '\n';
                ++report.checked;
                if (v != (j == 2 ? expected[i] : Rational(0))) {
                    report.failures.push_back(std::string(names[i]) + " K_" + std::to_string(j) + " = " + to_string(v));
                }
            }
        }
        return report.ok() ? 0 : fail_with({report});
    }
    const CltReport r = clt_verify(a2, b2, g2, o.degree, o.ns, o.degree);
    std::cout << "n,component,k,moment,kesten,abs_err,moment_exact,kesten_exact,abs_err_exact\n";
    for (const auto& row : r.rows) {
        std::cout << row.n << ',' << to_string(row.component) << ',' << row.k << ',' << csv_number(row.moment) << ','
                  << csv_number(row.kesten) << ',' << csv_number(row.abs_err()) << ',' << to_string(row.moment) << ','
                  << to_string(row.kesten) << ',' << to_string(row.abs_err()) << '\n';
    }
    return r.ok() ? 0 : fail_with({CheckReport{"clt", static_cast<int>(r.rows.size()), r.failures}});
}

int run_verify(const VerifyOpts& o) {
    const auto trials = [&](int fallback) { return o.trials > 0 ? o.trials : fallback; };
    const bool all = o.suite == "all";
    std::vector<CheckReport> reports;
    if (all || o.suite == "associativity") {
        reports.push_back(check_associativity(o.seed, trials(20), 6));
    }
    if (all || o.suite == "convolution-associativity") {
        reports.push_back(check_convolution_associativity(o.seed, trials(20), 8));
    }
    if (all || o.suite == "dual-route") {
        reports.push_back(check_dual_route(o.seed, trials(1), 8));
    }
    if (all || o.suite == "independence") {
        reports.push_back(check_independence(o.seed, trials(200)));
    }
    if (reports.empty()) {
        throw ParseError("unknown suite '" + o.suite + "'");
    }
    const std::string json = check_reports_to_json(reports);
    std::cout << json << '\n';
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); }) ? 0
                                                                                                    : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Products, convolutions and cumulants of noncommutative probability states"};
    app.require_subcommand(1);

    ConvolveOpts conv;
    auto* convolve = app.add_subcommand("convolve", "Additive convolution of moment sequences");
    convolve->add_option("--kind", conv.kind, "free, boolean, monotone, antimonotone, cfree, cmonotone, "
                                               "cantimonotone, ofree or indented")
        ->required();
    convolve->add_option("--degree", conv.degree, "Truncation degree (default: smallest input truncation)");
    convolve->add_option("--route", conv.route, "transform, closed or words");
    convolve->add_option("-o,--output", conv.output, "Output file, - for stdout");
    convolve->add_option("inputs", conv.inputs, "One moment-list JSON file per factor, - for stdin")->required();

    CumulantOpts cum;
    auto* cumulants = app.add_subcommand("cumulants", "Moments to cumulants and back");
    cumulants->add_option("--kind", cum.kind, "indented, or a family: free, boolean, monotone, antimonotone, "
                                              "cfree, cmonotone, cantimonotone");
    cumulants->add_option("--degree", cum.degree, "Highest degree (default: input truncation)");
    cumulants->add_flag("--inverse", cum.inverse, "Read cumulants and write moments");
    cumulants->add_option("-o,--output", cum.output, "Output file, - for stdout");
    cumulants->add_option("input", cum.input, "Input JSON, - for stdin");

    PartitionOpts part;
    auto* partitions = app.add_subcommand("partitions", "Enumerate, count or classify partitions");
    partitions->add_option("--class", part.cls, "NC, LNC, M, AM, I, LNCO or NCIO");
    partitions->add_option("--n", part.n, "Ground set size");
    partitions->add_flag("--count", part.count, "Print the number of partitions only");
    partitions->add_flag("--render", part.render, "ASCII diagrams");
    partitions->add_option("--classify", part.classify, "Partition JSON file to classify");
    partitions->add_option("--sequence", part.sequence, "Comma-separated index sequence for peaks and bottoms");

    CltOpts clt;
    auto* clt_cmd = app.add_subcommand("clt", "Central limit experiment against the Kesten triple (CSV)");
    clt_cmd->add_option("--alpha2", clt.alpha2, "Variance in the indented state");
    clt_cmd->add_option("--beta2", clt.beta2, "Variance in the o-free state");
    clt_cmd->add_option("--gamma2", clt.gamma2, "Variance in the anti-o-free state");
    clt_cmd->add_option("--degree", clt.degree, "Highest moment compared");
    clt_cmd->add_option("--ns", clt.ns, "Numbers of summands (perfect squares)")->delimiter(',');
    clt_cmd->add_flag("--cumulants", clt.cumulants, "Print the cumulants of the limit instead");

    VerifyOpts ver;
    auto* verify = app.add_subcommand("verify", "Randomized property suites");
    verify->add_option("--suite", ver.suite,
                       "all, associativity, convolution-associativity, dual-route or independence");
    verify->add_option("--seed", ver.seed, "Random seed");
    verify->add_option("--trials", ver.trials, "Trials per suite (default depends on the suite)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (*convolve) {
            return run_convolve(conv);
        }
        if (*cumulants) {
            return run_cumulants(cum);
        }
        if (*partitions) {
            return run_partitions(part);
        }
        if (*clt_cmd) {
            return run_clt(clt);
        }
        return run_verify(ver);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": " << std::quoted(e.what()) << "}\n";
        return kExitParseError;
    }
}
