#pragma once

#include "isophase/isosearch.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isophase {

enum class Problem { embed, common };

std::string to_string(Problem p);
Problem parse_problem(const std::string& s);

/// Sweep definition. Either m_values (explicit) or m_offsets (added to the
/// rounded theoretical centre: 2 log2 n + 1 for embed, m_star for common).
struct ExperimentConfig {
    Problem problem = Problem::embed;
    std::vector<std::uint64_t> n_values;
    std::vector<std::int64_t> m_values;
    std::vector<std::int64_t> m_offsets;
    double p = 0.5;
    double q = 0.5;
    std::uint64_t trials = 200;
    std::uint64_t master_seed = 1;
    std::size_t workers = 0; ///< 0 selects default_workers()
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::string csv_path;
    std::string jsonl_path;

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
    /// embed with q != 1/2 lies outside the theorem's hypothesis.
    bool outside_hypothesis() const;
    /// The (n, m) cells in sweep order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells() const;
};

/// Reads a JSON object; unknown keys are rejected. Throws ConfigError.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);

/// splitmix64 fold of (master, n, m, t): h = mix(master), then h = mix(h ^ v)
/// for v = n, m, t in turn.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t m, std::uint64_t t);
/// Seeds of the two graphs of a trial: mix(h ^ 1) for x, mix(h ^ 2) for y.
std::uint64_t graph_seed(std::uint64_t trial, int which);

struct Estimate {
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
};

/// Wilson 95% interval (z = 1.96). With zero trials returns (0, 0, 1).
Estimate estimate_probability(std::uint64_t successes, std::uint64_t trials);

struct SweepRow {
    Problem problem = Problem::embed;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double p = 0.0;
    double q = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t unknowns = 0;
    double p_hat = 0.0; ///< successes / (trials - unknowns)
    double ci_low = 0.0;
    double ci_high = 1.0;
    double mean_nodes = 0.0;
    double wall_ms = 0.0;
    std::uint64_t master_seed = 0;

    std::uint64_t failures() const { return trials - successes - unknowns; }
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    /// (n, interpolated crossing) for every n with a crossing.
    std::vector<std::pair<std::uint64_t, double>> empirical_thresholds;
    /// Cells where unknowns exceed 5% of trials.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> invalid_cells;
    bool outside_hypothesis = false;

    bool invalid() const { return !invalid_cells.empty(); }
};

inline constexpr double kMaxUnknownFraction = 0.05;

SweepResult run_sweep(const ExperimentConfig& config);

/// First downward crossing of 1/2 in rows sorted by m, by linear interpolation.
std::optional<double> locate_empirical_threshold(const std::vector<SweepRow>& rows);

inline constexpr const char* kCsvHeader =
    "problem,n,m,p,q,trials,successes,unknowns,p_hat,ci_low,ci_high,mean_nodes,wall_ms,master_seed";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_jsonl(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_csv(std::istream& in);
std::vector<SweepRow> read_jsonl(std::istream& in);

/// Writes the files named in the config, if any. Throws Error on I/O failure.
void export_result(const SweepResult& result, const ExperimentConfig& config);

} // namespace isophase
