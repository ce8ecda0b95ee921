#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncprob {

/// Outcome of a randomized property suite; failures carry the witnessing input.
struct CheckReport {
    std::string name;
    int checked = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Left and right bracketing of three random factors over `alphabet` agree on
/// every word with at most `max_length` generators, in all three components.
CheckReport check_associativity(std::uint64_t seed, int trials, int max_length, const std::string& alphabet = "x");

/// Transform route, closed forms and word expansion give the same sums for
/// every product kind at the given degree, three factors each.
CheckReport check_dual_route(std::uint64_t seed, int trials, int degree);

/// (a b) c == a (b c) for the indented triple and o-free pair convolutions.
CheckReport check_convolution_associativity(std::uint64_t seed, int trials, int degree);

/// Every independence condition on random products of three factors.
CheckReport check_independence(std::uint64_t seed, int trials);

}  // namespace ncprob
