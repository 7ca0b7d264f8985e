#include "isophase/experiments.hpp"

#include "isophase/errors.hpp"
#include "isophase/graph.hpp"
#include "isophase/parallel.hpp"
#include "isophase/rng.hpp"
#include "isophase/thresholds.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace isophase {

namespace {

using json = nlohmann::json;

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s)
{
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("bad number: " + s);
    return v;
}

std::uint64_t parse_u64(const std::string& s)
{
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("bad integer: " + s);
    return v;
}

std::int64_t theory_centre(Problem problem, std::uint64_t n, double p, double q)
{
    if (problem == Problem::embed)
        return std::llround(2.0 * std::log2(static_cast<double>(n)) + 1.0);
    return std::llround(m_star(n, derive_params(p, q)).m_star);
}

enum class Verdict : std::uint8_t { success, failure, unknown };

struct TrialOutcome {
    Verdict verdict = Verdict::failure;
    std::uint64_t nodes = 0;
    double ms = 0.0;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, std::uint64_t n, std::uint64_t m, std::uint64_t t)
{
    const auto start = std::chrono::steady_clock::now();
    const auto seed = trial_seed(cfg.master_seed, n, m, t);
    const std::size_t nx = cfg.problem == Problem::embed ? m : n;
    const Graph x = sample_gnp({nx, cfg.p, graph_seed(seed, 1)});
    const Graph y = sample_gnp({n, cfg.q, graph_seed(seed, 2)});
    TrialOutcome out;
    SearchStatus status;
    if (cfg.problem == Problem::embed) {
        const auto res = embed_exists(x, y, cfg.node_budget);
        status = res.status;
        out.nodes = res.nodes;
    } else {
        const auto res = common_exists(x, y, m, cfg.node_budget);
        status = res.status;
        out.nodes = res.nodes;
    }
    out.verdict = status == SearchStatus::found ? Verdict::success
        : status == SearchStatus::exhausted_none ? Verdict::failure
                                                  : Verdict::unknown;
    out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

json row_to_json(const SweepRow& r)
{
    return json{{"problem", to_string(r.problem)},
                {"n", r.n},
                {"m", r.m},
                {"p", r.p},
                {"q", r.q},
                {"trials", r.trials},
                {"successes", r.successes},
                {"unknowns", r.unknowns},
                {"p_hat", r.p_hat},
                {"ci_low", r.ci_low},
                {"ci_high", r.ci_high},
                {"mean_nodes", r.mean_nodes},
                {"wall_ms", r.wall_ms},
                {"master_seed", r.master_seed}};
}

template <typename T>
T get_field(const json& j, const char* key)
{
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field ") + key + ": " + e.what());
    }
}

} // namespace

std::string to_string(Problem p) { return p == Problem::embed ? "embed" : "common"; }

Problem parse_problem(const std::string& s)
{
    if (s == "embed")
        return Problem::embed;
    if (s == "common")
        return Problem::common;
    throw ConfigError("problem must be embed or common, got " + s);
}

void ExperimentConfig::validate() const
{
    if (n_values.empty())
        throw ConfigError("n_values must not be empty");
    if (m_values.empty() == m_offsets.empty())
        throw ConfigError("give exactly one of m_values and m_offsets");
    if (trials < 1)
        throw ConfigError("trials must be at least 1");
    if (!(p > 0.0 && p < 1.0) || !(q > 0.0 && q < 1.0))
        throw ConfigError("p and q must lie strictly between 0 and 1");
    if (node_budget < 1)
        throw ConfigError("node_budget must be positive");
    for (auto n : n_values)
        if (n < 1 || n > kMaxVertices)
            throw ConfigError("n out of range: " + std::to_string(n));
    for (auto m : m_values)
        if (m < 0)
            throw ConfigError("m must be nonnegative");
    for (auto n : n_values)
        for (auto m : m_values)
            if (static_cast<std::uint64_t>(m) > n)
                throw ConfigError("m = " + std::to_string(m) + " exceeds n = " + std::to_string(n));
    if (!m_offsets.empty())
        for (auto n : n_values)
            if (n < 2)
                throw ConfigError("offsets need n >= 2");
}

bool ExperimentConfig::outside_hypothesis() const { return problem == Problem::embed && q != 0.5; }

std::vector<std::pair<std::uint64_t, std::uint64_t>> ExperimentConfig::cells() const
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (auto n : n_values) {
        std::set<std::uint64_t> ms;
        if (!m_values.empty()) {
            for (auto m : m_values)
                ms.insert(static_cast<std::uint64_t>(m));
        } else {
            const auto centre = theory_centre(problem, n, p, q);
            for (auto off : m_offsets) {
                const auto m = centre + off;
                if (m >= 1 && static_cast<std::uint64_t>(m) <= n)
                    ms.insert(static_cast<std::uint64_t>(m));
            }
        }
        for (auto m : ms)
            out.emplace_back(n, m);
    }
    return out;
}

ExperimentConfig parse_experiment_config(const std::string& json_text)
{
    static const std::set<std::string> known{"problem", "n_values", "m_values", "m_offsets", "p",
                                             "q", "trials", "master_seed", "workers", "node_budget",
                                             "csv", "jsonl"};
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw ConfigError("unknown config key: " + key);
    ExperimentConfig cfg;
    try {
        cfg.problem = parse_problem(j.at("problem").get<std::string>());
        cfg.n_values = j.at("n_values").get<std::vector<std::uint64_t>>();
        cfg.m_values = j.value("m_values", std::vector<std::int64_t>{});
        cfg.m_offsets = j.value("m_offsets", std::vector<std::int64_t>{});
        cfg.p = j.value("p", 0.5);
        cfg.q = j.value("q", 0.5);
        cfg.trials = j.value("trials", std::uint64_t{200});
        cfg.master_seed = j.value("master_seed", std::uint64_t{1});
        cfg.workers = j.value("workers", std::size_t{0});
        cfg.node_budget = j.value("node_budget", kDefaultNodeBudget);
        cfg.csv_path = j.value("csv", std::string{});
        cfg.jsonl_path = j.value("jsonl", std::string{});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config field: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_experiment_config(ss.str());
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n, std::uint64_t m, std::uint64_t t)
{
    std::uint64_t h = splitmix64_mix(master);
    for (auto v : {n, m, t})
        h = splitmix64_mix(h ^ v);
    return h;
}

std::uint64_t graph_seed(std::uint64_t trial, int which)
{
    return splitmix64_mix(trial ^ static_cast<std::uint64_t>(which));
}

Estimate estimate_probability(std::uint64_t successes, std::uint64_t trials)
{
    if (successes > trials)
        throw DomainError("successes exceed trials");
    if (trials == 0)
        return {};
    constexpr double z = 1.96;
    const double n = static_cast<double>(trials);
    const double ph = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (ph + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
    Estimate e;
    e.p_hat = ph;
    e.ci_low = std::clamp(centre - half, 0.0, ph);
    e.ci_high = std::clamp(centre + half, ph, 1.0);
    return e;
}

SweepResult run_sweep(const ExperimentConfig& config)
{
    config.validate();
    const auto cells = config.cells();
    const std::uint64_t trials = config.trials;
    const std::size_t units = cells.size() * trials;
    std::vector<TrialOutcome> outcomes(units);
    const std::size_t workers = config.workers == 0 ? default_workers() : config.workers;
    parallel_blocks(units, workers, units, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t u = begin; u < end; ++u) {
            const auto& [n, m] = cells[u / trials];
            outcomes[u] = run_trial(config, n, m, u % trials);
        }
    });

    SweepResult result;
    result.outside_hypothesis = config.outside_hypothesis();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        SweepRow row;
        row.problem = config.problem;
        row.n = cells[c].first;
        row.m = cells[c].second;
        row.p = config.p;
        row.q = config.q;
        row.trials = trials;
        row.master_seed = config.master_seed;
        double nodes = 0.0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto& o = outcomes[c * trials + t];
            row.successes += o.verdict == Verdict::success;
            row.unknowns += o.verdict == Verdict::unknown;
            nodes += static_cast<double>(o.nodes);
            row.wall_ms += o.ms;
        }
        row.mean_nodes = nodes / static_cast<double>(trials);
        const auto est = estimate_probability(row.successes, trials - row.unknowns);
        row.p_hat = est.p_hat;
        row.ci_low = est.ci_low;
        row.ci_high = est.ci_high;
        if (static_cast<double>(row.unknowns) > kMaxUnknownFraction * static_cast<double>(trials))
            result.invalid_cells.emplace_back(row.n, row.m);
        result.rows.push_back(row);
    }

    std::map<std::uint64_t, std::vector<SweepRow>> by_n;
    for (const auto& r : result.rows)
        by_n[r.n].push_back(r);
    for (const auto& [n, rows] : by_n)
        if (auto x = locate_empirical_threshold(rows))
            result.empirical_thresholds.emplace_back(n, *x);
    return result;
}

std::optional<double> locate_empirical_threshold(const std::vector<SweepRow>& rows)
{
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].m <= rows[i - 1].m)
            throw DomainError("rows must be sorted by increasing m");
        const double a = rows[i - 1].p_hat;
        const double b = rows[i].p_hat;
        if (a >= 0.5 && b < 0.5) {
            const double m0 = static_cast<double>(rows[i - 1].m);
            const double m1 = static_cast<double>(rows[i].m);
            return m0 + (a - 0.5) / (a - b) * (m1 - m0);
        }
    }
    return std::nullopt;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << kCsvHeader << '\n';
    for (const auto& r : rows)
        out << to_string(r.problem) << ',' << r.n << ',' << r.m << ',' << format_double(r.p) << ','
            << format_double(r.q) << ',' << r.trials << ',' << r.successes << ',' << r.unknowns << ','
            << format_double(r.p_hat) << ',' << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ','
            << format_double(r.mean_nodes) << ',' << format_double(r.wall_ms) << ',' << r.master_seed << '\n';
}

void write_jsonl(std::ostream& out, const std::vector<SweepRow>& rows)
{
    for (const auto& r : rows)
        out << row_to_json(r).dump() << '\n';
}

std::vector<SweepRow> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ParseError("missing or unexpected CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        if (f.size() != 14)
            throw ParseError("CSV row must have 14 fields");
        SweepRow r;
        try {
            r.problem = parse_problem(f[0]);
        } catch (const ConfigError& e) {
            throw ParseError(e.what());
        }
        r.n = parse_u64(f[1]);
        r.m = parse_u64(f[2]);
        r.p = parse_double(f[3]);
        r.q = parse_double(f[4]);
        r.trials = parse_u64(f[5]);
        r.successes = parse_u64(f[6]);
        r.unknowns = parse_u64(f[7]);
        r.p_hat = parse_double(f[8]);
        r.ci_low = parse_double(f[9]);
        r.ci_high = parse_double(f[10]);
        r.mean_nodes = parse_double(f[11]);
        r.wall_ms = parse_double(f[12]);
        r.master_seed = parse_u64(f[13]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<SweepRow> read_jsonl(std::istream& in)
{
    std::vector<SweepRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSONL line: ") + e.what());
        }
        SweepRow r;
        try {
            r.problem = parse_problem(get_field<std::string>(j, "problem"));
        } catch (const ConfigError& e) {
            throw ParseError(e.what());
        }
        r.n = get_field<std::uint64_t>(j, "n");
        r.m = get_field<std::uint64_t>(j, "m");
        r.p = get_field<double>(j, "p");
        r.q = get_field<double>(j, "q");
        r.trials = get_field<std::uint64_t>(j, "trials");
        r.successes = get_field<std::uint64_t>(j, "successes");
        r.unknowns = get_field<std::uint64_t>(j, "unknowns");
        r.p_hat = get_field<double>(j, "p_hat");
        r.ci_low = get_field<double>(j, "ci_low");
        r.ci_high = get_field<double>(j, "ci_high");
        r.mean_nodes = get_field<double>(j, "mean_nodes");
        r.wall_ms = get_field<double>(j, "wall_ms");
        r.master_seed = get_field<std::uint64_t>(j, "master_seed");
        rows.push_back(r);
    }
    return rows;
}

void export_result(const SweepResult& result, const ExperimentConfig& config)
{
    if (!config.csv_path.empty()) {
        std::ofstream out(config.csv_path);
        if (!out)
            throw Error("cannot write " + config.csv_path);
        write_csv(out, result.rows);
        if (!out)
            throw Error("write failed: " + config.csv_path);
    }
    if (!config.jsonl_path.empty()) {
        std::ofstream out(config.jsonl_path);
        if (!out)
            throw Error("cannot write " + config.jsonl_path);
        write_jsonl(out, result.rows);
        if (!out)
            throw Error("write failed: " + config.jsonl_path);
    }
}

} // namespace isophase
