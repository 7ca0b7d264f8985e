#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isophase {

struct VerifyOptions {
    /// Random map pairs per kind (total and partial) for the edge-graph and
    /// correlation checks; random sets and witness cases for rado.
    std::uint64_t pairs = 10'000;
    std::uint64_t seed = 1;
    std::size_t max_m = 6;
    std::size_t max_n = 14;
    std::size_t workers = 0;
};

struct CheckTally {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckTally> checks;

    std::uint64_t checked() const;
    std::uint64_t violations() const;
    bool passed() const { return violations() == 0; }
};

/// Component classification, census identities, degree counts and overlap
/// inequalities on random total and partial pairs.
VerifyReport verify_edgegraph(const VerifyOptions& opts);
/// Overlap cardinalities against direct enumeration (m <= 4 resp. 3, n <= 6).
VerifyReport verify_cardinality(const VerifyOptions& opts);
/// Ratio >= 1, S majorant, T table sum and bounds, correlation bound.
VerifyReport verify_moments(const VerifyOptions& opts);
/// Ackermann round trips, edge preservation and extension witnesses.
VerifyReport verify_rado(const VerifyOptions& opts);

inline const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names{"edgegraph", "cardinality", "moments", "rado"};
    return names;
}

/// Runs one named suite or "all". Throws DomainError for an unknown name.
std::vector<VerifyReport> run_verify(const std::string& suite, const VerifyOptions& opts);

} // namespace isophase
