#pragma once

#include <string>
#include <vector>

#include "ncprob/checks.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/fock.hpp"
#include "ncprob/freeprod.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

// All readers throw ParseError on malformed input. Rationals are "p/q" strings;
// plain JSON integers are accepted on input.

/// {"truncation": N, "coeffs": ["1", "0", "1/2", ...]}
MomentSequence moments_from_json(const std::string& text);
std::string moments_to_json(const MomentSequence& m);
/// A list of moment objects, or a single one.
std::vector<MomentSequence> moment_list_from_json(const std::string& text);
std::string moment_list_to_json(const std::vector<MomentSequence>& ms);

std::string series_to_json(const Series& s);
Series series_from_json(const std::string& text);

/// {"alphabet": ["x"], "truncation": N, "values": {"": "1", "x": "0", ...}}
MultiMomentFunctional functional_from_json(const std::string& text);
std::string functional_to_json(const MultiMomentFunctional& f);
/// {"phi": {...}, "psi": {...}, "theta": {...}} or a list of three functionals.
StateTriple triple_from_json(const std::string& text);
std::string triple_to_json(const StateTriple& t);

/// {"n": 4, "blocks": [[1, 4], [2, 3]], "order": [2, 1]}
OrderedNCPartition partition_from_json(const std::string& text);
std::string partition_to_json(const OrderedNCPartition& p);

/// {"dim": 2, "pi": {"x": [["0", "1"], ["1", "0"]]}, "sigma": {...}, "rho": {...}}
MatrixStateModel model_from_json(const std::string& text);
std::string model_to_json(const MatrixStateModel& m);

/// {"kind": "OF", "alphabet": [...], "truncation": N, "values": {...}}
std::string cumulant_table_to_json(CumulantKind kind, const CumulantTable& t);
CumulantTable cumulant_table_from_json(const std::string& text);
/// {"I": table, "OF": table, "AOF": table}
std::string cumulant_triple_to_json(const CumulantTriple& k);
CumulantTriple cumulant_triple_from_json(const std::string& text);

/// {"family": "cfree", "cumulants": [["K1", ..., "Kn"], ...]}; in memory index 0 is unused.
std::string family_cumulants_to_json(CumulantFamily f, const std::vector<std::vector<Rational>>& k);
std::pair<CumulantFamily, std::vector<std::vector<Rational>>> family_cumulants_from_json(const std::string& text);

std::string partition_list_to_json(const std::vector<OrderedNCPartition>& ps);
/// Block classes are positions in the linear order.
std::string classification_to_json(const OrderedNCPartition& p);
std::string peaks_bottoms_to_json(const std::vector<int>& seq);

std::string check_reports_to_json(const std::vector<CheckReport>& reports);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace ncprob
